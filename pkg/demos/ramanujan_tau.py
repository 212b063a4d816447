#!/usr/bin/env python3
"""Eight exact routes to the coefficients of the discriminant form.

Delta = q prod (1 - q^n)^24 = sum tau(n) q^n.  Besides reading tau(n) off
the product, the package computes it from weighted moments of the theta^8
coefficients f4 (weights r^8 and r^10), from the analogous f6 moments, from
H(11, .) values, and - for odd non-square n - from closed H(3, .) and
H(5, .) sums.  All routes agree exactly.
"""

from jacobiforms.representations import tau, tau_applicable_routes


def main():
    ns = (1, 2, 3, 5, 7, 11, 15, 21, 33)
    routes = ("direct", "via_f4", "via_f6", "via_h11", "via_h3_closed", "via_h5_closed")
    header = "  n" + "".join(f"{r:>15}" for r in routes)
    print(header)
    print("-" * len(header))
    for n in ns:
        applicable = tau_applicable_routes(n)
        cells = []
        for route in routes:
            cells.append(f"{tau(n, route):>15}" if route in applicable else f"{'-':>15}")
        print(f"{n:>3}" + "".join(cells))
    print()
    print("('-' marks closed routes whose side condition -- odd, non-square n --")
    print(" does not hold; the n*tau(n) moment variants agree as well.)")


if __name__ == "__main__":
    main()
