#!/usr/bin/env python3
"""A tour of the Cohen numbers H(r, N).

H(r, N) generalizes the Hurwitz class number (r = 1) and supplies the
Fourier coefficients of the index-1 Jacobi-Eisenstein series:

    e_{k,1}(n, r) = H(k-1, 4n - r^2) / zeta(3 - 2k).

Everything below is exact rational arithmetic.
"""

from fractions import Fraction

from jacobiforms.numtheory import cohen_h, cohen_h_via_l_values, rational_str, zeta_neg


def main():
    print("Hurwitz class numbers H(1, N) for N = 0..20:")
    print("  ", "  ".join(f"{n}:{rational_str(cohen_h(1, n))}" for n in range(21)))
    print()

    print("H(3, N) (all values non-positive; the weight-4 normalization")
    print("divides by zeta(-5) = -1/252):")
    for n in (0, 3, 4, 7, 8, 11, 12, 15, 16):
        h = cohen_h(3, n)
        print(f"  H(3,{n:>2}) = {rational_str(h):>8}   -> e-coefficient {rational_str(Fraction(h) / Fraction(zeta_neg(-5)))}")
    print()

    print("Two independent definitions of H(r, N) (mu-twisted divisor sum vs")
    print("a sum of imprimitive L-values over square divisors) agree:")
    agree = all(cohen_h(r, n) == cohen_h_via_l_values(r, n)
                for r in (1, 2, 3, 5) for n in range(101))
    print(f"  checked r in (1,2,3,5), N <= 100: {'all agree' if agree else 'DISAGREE'}")
    print()

    print("H vanishes exactly when (-1)^r N = 2, 3 mod 4:")
    row = ["0" if cohen_h(3, n) == 0 else "*" for n in range(1, 33)]
    print("  N = 1..32 (r = 3):", " ".join(row))
    print()

    print("Non-integral arguments give 0 by convention, so coefficient")
    print("formulas can pass (16n - r^2)/4 verbatim:")
    print(f"  H(3, 7/4) = {rational_str(cohen_h(3, Fraction(7, 4)))}")


if __name__ == "__main__":
    main()
