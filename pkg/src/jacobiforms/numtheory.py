"""Exact elementary and analytic number theory.

Everything here returns exact values: divisor sums, the Kronecker symbol,
Bernoulli numbers and polynomials, Dirichlet L-values at non-positive
integers via generalized Bernoulli numbers, and the Cohen numbers

    H(r, N) = L(1-r, chi_D) * sum_{d|f} mu(d) chi_D(d) d^(r-1) sigma_{2r-1}(f/d)

for (-1)^r N = D f^2 with D a fundamental discriminant (D = 1 allowed).
Rational values are `fractions.Fraction`; integer-valued results may come
back as plain `int`.  All functions are pure; the memo caches are the
thread-safe `functools.lru_cache`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rat = Union[int, Fraction]


def as_rational(x) -> Rat:
    """Coerce to an exact rational, collapsing Fractions with denominator 1."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def rational_str(x: Rat) -> str:
    """Canonical string form: "p/q", or "p" when the denominator is 1."""
    x = as_rational(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Rat:
    """Inverse of :func:`rational_str`."""
    return as_rational(Fraction(s))


# ---------------------------------------------------------------------------
# multiplicative functions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def factorize(n: int) -> tuple:
    """Prime factorization of n >= 1 by trial division, as ((p, e), ...)."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    p = 5
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        # wheel over 6k +- 1
        p += 2 if p % 6 == 5 else 4
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list:
    """Sorted list of the positive divisors of n >= 1."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def sigma(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n) = sum_{d|n} d^k, for n >= 1."""
    if n < 1:
        raise ValueError(f"sigma expects n >= 1, got {n}")
    result = 1
    for p, e in factorize(n):
        if k == 0:
            result *= e + 1
        else:
            result *= (p ** (k * (e + 1)) - 1) // (p**k - 1)
    return result


def sigma_rational(k: int, x: Rat) -> int:
    """sigma_k extended by 0 off the positive integers (sigma_3(n/2) idiom)."""
    x = as_rational(x)
    if not isinstance(x, int) or x < 1:
        return 0
    return sigma(k, x)


def mobius(n: int) -> int:
    """Moebius function: 0 on squareful n, else (-1)^(number of prime factors)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), completely multiplicative in n.

    Conventions: (a|0) = 1 iff |a| = 1; (a|-1) = -1 iff a < 0;
    (a|2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8.
    """
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 8 in (3, 5):
            result = -result
    # n odd positive: Jacobi symbol by reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# ---------------------------------------------------------------------------
# Bernoulli machinery and L-values
# ---------------------------------------------------------------------------

_bernoulli_cache = [Fraction(1), Fraction(-1, 2)]


def bernoulli(n: int) -> Rat:
    """Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError(f"bernoulli expects n >= 0, got {n}")
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        if m % 2:
            _bernoulli_cache.append(Fraction(0))
            continue
        # sum_{k=0}^{m} C(m+1, k) B_k = 0
        acc = sum(math.comb(m + 1, k) * _bernoulli_cache[k] for k in range(m))
        _bernoulli_cache.append(-acc / (m + 1))
    return as_rational(_bernoulli_cache[n])


def bernoulli_poly(n: int, x: Rat) -> Rat:
    """Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k)."""
    x = Fraction(x)
    acc = Fraction(0)
    xpow = Fraction(1)
    for k in range(n, -1, -1):
        acc += math.comb(n, k) * Fraction(bernoulli(k)) * xpow
        xpow *= x
    return as_rational(acc)


def zeta_neg(s: int) -> Rat:
    """Riemann zeta at a negative odd integer: zeta(1-2r) = -B_2r / 2r."""
    if s >= 0 or s % 2 == 0:
        raise ValueError(f"zeta_neg expects a negative odd integer, got {s}")
    two_r = 1 - s
    return as_rational(-Fraction(bernoulli(two_r)) / two_r)


def is_fundamental_discriminant(d: int) -> bool:
    """True for D = 1 and the discriminants of quadratic fields."""
    if d == 1:
        return True
    if d % 4 == 1:
        return mobius(abs(d)) != 0
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and mobius(abs(m)) != 0
    return False


@lru_cache(maxsize=None)
def gen_bernoulli(r: int, d: int) -> Rat:
    """Generalized Bernoulli number B_{r, chi_D} for fundamental D (or D = 1).

    B_{r,chi} = |D|^(r-1) * sum_{a=1..|D|} chi_D(a) B_r(a/|D|).
    """
    if r < 1:
        raise ValueError(f"gen_bernoulli expects r >= 1, got {r}")
    if not is_fundamental_discriminant(d):
        raise ValueError(f"{d} is not a fundamental discriminant")
    m = abs(d)
    acc = Fraction(0)
    for a in range(1, m + 1):
        chi = kronecker(d, a)
        if chi:
            acc += chi * Fraction(bernoulli_poly(r, Fraction(a, m)))
    return as_rational(m ** (r - 1) * acc)


def l_value_neg(r: int, d: int) -> Rat:
    """L(1-r, chi_D) = -B_{r,chi_D}/r; for D = 1 this is zeta(1-r)."""
    return as_rational(-Fraction(gen_bernoulli(r, d)) / r)


# ---------------------------------------------------------------------------
# discriminant decomposition and Cohen numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscDecomp:
    """delta = D*f^2 with D fundamental (or 1) and f >= 1."""

    d: int
    f: int


def fund_disc_decomp(delta: int) -> DiscDecomp:
    """Split delta = 0,1 mod 4 (delta != 0) as D*f^2, D fundamental or 1."""
    if delta == 0 or delta % 4 in (2, 3):
        raise ValueError(f"{delta} is not a discriminant (need 0,1 mod 4, nonzero)")
    sign = 1 if delta > 0 else -1
    core = sign  # squarefree kernel, with sign
    f = 1
    for p, e in factorize(abs(delta)):
        f *= p ** (e // 2)
        if e % 2:
            core *= p
    if core % 4 == 1:
        return DiscDecomp(core, f)
    # kernel = 2,3 mod 4: the fundamental discriminant is 4*kernel
    return DiscDecomp(4 * core, f // 2)


@lru_cache(maxsize=None)
def _cohen_h_int(r: int, n: int) -> Rat:
    if n == 0:
        return zeta_neg(1 - 2 * r)
    dn = n if r % 2 == 0 else -n
    if dn % 4 in (2, 3):
        return 0
    dec = fund_disc_decomp(dn)
    acc = sum(
        mobius(d) * kronecker(dec.d, d) * d ** (r - 1) * sigma(2 * r - 1, dec.f // d)
        for d in divisors(dec.f)
    )
    return as_rational(Fraction(l_value_neg(r, dec.d)) * acc)


def cohen_h(r: int, n: Rat) -> Rat:
    """Cohen number H(r, N) for rational N >= 0 (0 on non-integral N).

    N = 0 gives zeta(1-2r); (-1)^r N = 2,3 mod 4 gives 0; otherwise the
    L-value times the mu-twisted divisor sum over the conductor.  Negative N
    raises, since every caller in this package feeds N >= 0 by construction.
    """
    if r < 1:
        raise ValueError(f"cohen_h expects r >= 1, got {r}")
    n = as_rational(n)
    if n < 0:
        raise ValueError(f"cohen_h expects N >= 0, got {n}")
    if not isinstance(n, int):
        return 0
    return _cohen_h_int(r, n)


def cohen_h_via_l_values(r: int, n: int) -> Rat:
    """The companion definition H(r,N) = sum_{d^2 | N} h(r, N/d^2).

    Here h(r, M) is the negative-argument value of the possibly imprimitive
    L-series attached to chi_{(-1)^r M}: with (-1)^r M = D f^2,

        h(r, M) = L(1-r, chi_D) * f^(2r-1) * prod_{p | f} (1 - chi_D(p) p^(-r)),

    and h vanishes unless (-1)^r M = 0, 1 mod 4.  Kept as an independent
    route for cross-checking :func:`cohen_h`.
    """
    if n == 0:
        return zeta_neg(1 - 2 * r)
    acc = Fraction(0)
    for d in range(1, math.isqrt(n) + 1):
        if n % (d * d):
            continue
        m = n // (d * d)
        dm = m if r % 2 == 0 else -m
        if dm % 4 in (2, 3):
            continue
        dec = fund_disc_decomp(dm)
        val = Fraction(l_value_neg(r, dec.d)) * dec.f ** (2 * r - 1)
        for p, _ in factorize(dec.f):
            val *= 1 - Fraction(kronecker(dec.d, p), p**r)
        acc += val
    return as_rational(acc)
