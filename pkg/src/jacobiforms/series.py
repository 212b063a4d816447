"""Exact truncated series in one and two variables.

QSeries is a series in q^(1/s) with rational coefficients: a map t -> c
meaning c * q^(t/s), together with a precision P (coefficients are certified
for all exponents t/s < P/s; larger ones are truncated).  FJExp is the
two-variable analogue, a Fourier-Jacobi expansion sum c * q^(t/s) zeta^(r/w)
whose zeta-part is a finite Laurent polynomial for every q-power.

Negative exponents are allowed in both variables.  Binary operations align
the scales by lcm and take the minimum precision, corrected downward when an
operand has terms with negative q-exponent; nothing is ever emitted beyond
the certified window.

CycloElt represents an exact element of Q[x]/Phi_K(x) (x a primitive K-th
root of unity) and only appears in torsion-point specialization, where the
root-of-unity phases live before they cancel to rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from jacobiforms.numtheory import Rat, as_rational, divisors, parse_rational, rational_str

RatLike = Union[int, Fraction]


class InexactDivision(ArithmeticError):
    """Raised when a series quotient fails exact Laurent division.

    `q_exponent` is the q-order at which the division first failed; for the
    quotients this package constructs, failure means the inputs were wrong
    (the true quotient is not a weak Jacobi form).
    """

    def __init__(self, q_exponent: Fraction):
        self.q_exponent = q_exponent
        super().__init__(f"inexact Laurent division at q-order {q_exponent}")


class NonRationalResult(ArithmeticError):
    """Raised when a specialized series has a genuinely irrational coefficient."""

    def __init__(self, exponent: Fraction, value: "CycloElt"):
        self.exponent = exponent
        self.value = value
        super().__init__(
            f"non-rational coefficient at q-exponent {exponent} "
            f"(conductor {value.conductor}); use cyclotomic=True for the "
            f"cyclotomic-valued variant"
        )


def _sqrt_upper(x: Fraction) -> Fraction:
    """A rational upper bound for sqrt(x), x >= 0."""
    if x <= 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    r = math.isqrt(n * d)
    if r * r == n * d:
        return Fraction(r, d)
    return Fraction(r + 1, d)


def _floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


# ---------------------------------------------------------------------------
# one-variable series
# ---------------------------------------------------------------------------

class QSeries:
    """Truncated series sum_t c_t q^(t/qscale), certified for t < prec."""

    __slots__ = ("qscale", "prec", "terms")

    def __init__(self, qscale: int, prec: int, terms: dict):
        if qscale < 1:
            raise ValueError("qscale must be a positive integer")
        self.qscale = qscale
        self.prec = prec
        clean = {}
        for t, c in terms.items():
            c = as_rational(c)
            if c == 0:
                continue
            if t >= prec:
                raise ValueError(f"term q^({t}/{qscale}) at or beyond precision {prec}")
            clean[t] = c
        self.terms = clean

    # -- construction helpers ------------------------------------------------

    @classmethod
    def one(cls, prec_exp: RatLike) -> "QSeries":
        p = Fraction(prec_exp)
        return cls(p.denominator, p.numerator, {0: 1})

    @classmethod
    def zero(cls, prec_exp: RatLike) -> "QSeries":
        p = Fraction(prec_exp)
        return cls(p.denominator, p.numerator, {})

    @classmethod
    def from_exponents(cls, pairs, prec_exp: RatLike) -> "QSeries":
        """Build from (exponent, coefficient) pairs with rational exponents."""
        pairs = [(Fraction(e), as_rational(c)) for e, c in pairs]
        p = Fraction(prec_exp)
        s = p.denominator
        for e, _ in pairs:
            s = math.lcm(s, e.denominator)
        terms: dict = {}
        for e, c in pairs:
            t = e.numerator * (s // e.denominator)
            terms[t] = terms.get(t, 0) + c
        return cls(s, p.numerator * (s // p.denominator), terms)

    # -- basic queries ---------------------------------------------------------

    @property
    def prec_exponent(self) -> Fraction:
        return Fraction(self.prec, self.qscale)

    def is_zero(self) -> bool:
        return not self.terms

    def lowest_exponent(self) -> Optional[Fraction]:
        if not self.terms:
            return None
        return Fraction(min(self.terms), self.qscale)

    def coefficient(self, exponent: RatLike) -> Rat:
        """Coefficient at q^exponent; raises beyond the certified window."""
        e = Fraction(exponent)
        if e >= self.prec_exponent:
            raise ValueError(f"exponent {e} is beyond certified precision {self.prec_exponent}")
        t = e * self.qscale
        if t.denominator != 1:
            return 0
        return self.terms.get(t.numerator, 0)

    def coefficients(self) -> list:
        """Sorted list of (exponent, coefficient) pairs."""
        return [(Fraction(t, self.qscale), c) for t, c in sorted(self.terms.items())]

    # -- scale and precision management ---------------------------------------

    def rescaled(self, s: int) -> "QSeries":
        """Same series on a finer scale; s must be a multiple of qscale."""
        if s == self.qscale:
            return self
        if s % self.qscale:
            raise ValueError("new scale must be a multiple of the old one")
        k = s // self.qscale
        return QSeries(s, self.prec * k, {t * k: c for t, c in self.terms.items()})

    def normalized(self) -> "QSeries":
        """Reduce to the minimal scale representing the same certified data.

        The precision bound participates in the gcd so that no certified
        information is lost; the result is idempotent.
        """
        g = math.gcd(self.qscale, self.prec)
        for t in self.terms:
            g = math.gcd(g, t)
            if g == 1:
                return self
        if g == 1:
            return self
        return QSeries(self.qscale // g, self.prec // g, {t // g: c for t, c in self.terms.items()})

    def truncated(self, prec_exp: RatLike) -> "QSeries":
        bound = Fraction(prec_exp)
        if bound >= self.prec_exponent:
            return self
        new_p = _floor_frac(bound * self.qscale)
        return QSeries(self.qscale, new_p, {t: c for t, c in self.terms.items() if t < new_p})

    def _aligned(self, other: "QSeries"):
        s = math.lcm(self.qscale, other.qscale)
        return self.rescaled(s), other.rescaled(s)

    # -- ring operations --------------------------------------------------------

    def __neg__(self) -> "QSeries":
        return QSeries(self.qscale, self.prec, {t: -c for t, c in self.terms.items()})

    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries(self.qscale, self.prec, {0: other} if other else {})
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._aligned(other)
        prec = min(a.prec, b.prec)
        terms = {t: c for t, c in a.terms.items() if t < prec}
        for t, c in b.terms.items():
            if t < prec:
                terms[t] = terms.get(t, 0) + c
        return QSeries(a.qscale, prec, terms)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        return self + (-other if isinstance(other, QSeries) else -as_rational(other))

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QSeries(self.qscale, self.prec, {})
            return QSeries(self.qscale, self.prec, {t: c * other for t, c in self.terms.items()})
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self._aligned(other)
        lo_a = min(a.terms) if a.terms else 0
        lo_b = min(b.terms) if b.terms else 0
        prec = min(a.prec + min(lo_b, 0), b.prec + min(lo_a, 0))
        out: dict = {}
        for t1, c1 in a.terms.items():
            for t2, c2 in b.terms.items():
                t = t1 + t2
                if t >= prec:
                    continue
                out[t] = out.get(t, 0) + c1 * c2
        return QSeries(a.qscale, prec, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = QSeries(self.qscale, self.prec, {0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse as a Laurent series in q^(1/s)."""
        if not self.terms:
            raise ZeroDivisionError("cannot invert a series with zero lowest coefficient")
        lo = min(self.terms)
        c0 = Fraction(self.terms[lo])
        shifted = {t - lo: c for t, c in self.terms.items()}
        n_coeffs = self.prec - lo  # inverse of the unit part is certified below this
        inv = {0: 1 / c0}
        # recurrence: b_t = -(sum_{0<i<=t} a_i b_{t-i}) / a_0
        keys = sorted(k for k in shifted if 0 < k < n_coeffs)
        for t in range(1, n_coeffs):
            acc = 0
            for i in keys:
                if i > t:
                    break
                b = inv.get(t - i)
                if b:
                    acc += shifted[i] * b
            if acc:
                inv[t] = -acc / c0
        out_prec = self.prec - 2 * lo
        return QSeries(self.qscale, out_prec, {t - lo: c for t, c in inv.items() if t - lo < out_prec})

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    def substituted(self, c: int) -> "QSeries":
        """q -> q^c for a positive integer c."""
        if c < 1:
            raise ValueError("substitution exponent must be a positive integer")
        return QSeries(self.qscale, self.prec * c, {t * c: v for t, v in self.terms.items()})

    def shifted(self, delta: RatLike) -> "QSeries":
        """Multiply by the exact monomial q^delta."""
        d = Fraction(delta)
        s = math.lcm(self.qscale, d.denominator)
        a = self.rescaled(s)
        off = d.numerator * (s // d.denominator)
        return QSeries(s, a.prec + off, {t + off: c for t, c in a.terms.items()})

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.qscale == b.qscale and a.prec == b.prec and a.terms == b.terms

    __hash__ = None

    def mismatch(self, other: "QSeries"):
        """First differing (exponent, self-coeff, other-coeff) on the common
        certified window, or None when the series agree there."""
        a, b = self._aligned(other)
        window = min(a.prec, b.prec)
        for t in sorted(set(a.terms) | set(b.terms)):
            if t >= window:
                break
            ca, cb = a.terms.get(t, 0), b.terms.get(t, 0)
            if ca != cb:
                return (Fraction(t, a.qscale), ca, cb)
        return None

    def agrees_with(self, other: "QSeries") -> bool:
        return self.mismatch(other) is None

    # -- serialization ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "qscale": self.qscale,
            "prec": self.prec,
            "terms": [[t, rational_str(c)] for t, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "QSeries":
        return cls(data["qscale"], data["prec"], {t: parse_rational(c) for t, c in data["terms"]})

    # -- display --------------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return f"O(q^{_exp_str(self.prec_exponent)})"
        parts = []
        for t, c in sorted(self.terms.items()):
            parts.append(_signed_term(c, _q_power(Fraction(t, self.qscale)), first=not parts))
        parts.append(f" + O(q^{_exp_str(self.prec_exponent)})")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QSeries(qscale={self.qscale}, prec={self.prec}, {len(self.terms)} terms)"


def _exp_str(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"({e})"


def _q_power(e: Fraction) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "q"
    return f"q^{_exp_str(e)}"


def _zeta_power(e: Fraction) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "zeta"
    return f"zeta^{_exp_str(e)}"


def _signed_term(c: Rat, power: str, first: bool) -> str:
    c = as_rational(c)
    sign = "-" if c < 0 else "+"
    mag = -c if c < 0 else c
    body = power if (mag == 1 and power) else (rational_str(mag) + ("*" + power if power else ""))
    if first:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


# ---------------------------------------------------------------------------
# cyclotomic coefficients
# ---------------------------------------------------------------------------

def _poly_div_exact_int(num: list, den: list) -> list:
    """Exact division of integer polynomials (coefficients low to high)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q, r = divmod(c, den[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num):
        raise ArithmeticError("nonzero remainder in polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _poly_div_exact_int(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _root_power_rows(k: int) -> tuple:
    """x^j mod Phi_k for j in range(k), as coefficient tuples."""
    phi = cyclotomic_poly(k)
    deg = len(phi) - 1
    rows = []
    row = [Fraction(0)] * deg
    row[0] = Fraction(1)
    for _ in range(k):
        rows.append(tuple(row))
        carry = row[deg - 1]
        row = [Fraction(0)] + row[: deg - 1]
        if carry:
            for i in range(deg):
                row[i] -= carry * phi[i]
    return tuple(rows)


class CycloElt:
    """Element of Q[x]/Phi_K(x) in the power basis, x = exp(2 pi i / K)."""

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor: int, coords):
        self.conductor = conductor
        coords = tuple(Fraction(c) for c in coords)
        deg = len(cyclotomic_poly(conductor)) - 1
        if len(coords) != deg:
            raise ValueError(f"expected {deg} coordinates for conductor {conductor}")
        self.coords = coords

    @classmethod
    def zero(cls, conductor: int) -> "CycloElt":
        deg = len(cyclotomic_poly(conductor)) - 1
        return cls(conductor, (Fraction(0),) * deg)

    @classmethod
    def from_root_power(cls, conductor: int, j: int, coeff: RatLike = 1) -> "CycloElt":
        """coeff * exp(2 pi i j / K)."""
        row = _root_power_rows(conductor)[j % conductor]
        c = Fraction(coeff)
        return cls(conductor, tuple(c * x for x in row))

    @classmethod
    def from_rational(cls, conductor: int, value: RatLike) -> "CycloElt":
        return cls.from_root_power(conductor, 0, value)

    def __add__(self, other: "CycloElt") -> "CycloElt":
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")
        return CycloElt(self.conductor, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CycloElt") -> "CycloElt":
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")
        return CycloElt(self.conductor, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, scalar) -> "CycloElt":
        c = Fraction(scalar)
        return CycloElt(self.conductor, tuple(c * x for x in self.coords))

    __rmul__ = __mul__

    def times_root(self, j: int) -> "CycloElt":
        """Multiply by exp(2 pi i j / K)."""
        rows = _root_power_rows(self.conductor)
        deg = len(self.coords)
        out = [Fraction(0)] * deg
        for i, c in enumerate(self.coords):
            if not c:
                continue
            row = rows[(i + j) % self.conductor]
            for t in range(deg):
                out[t] += c * row[t]
        return CycloElt(self.conductor, out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Rat:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return as_rational(self.coords[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElt):
            return NotImplemented
        return self.conductor == other.conductor and self.coords == other.coords

    __hash__ = None

    def __repr__(self) -> str:
        return f"CycloElt({self.conductor}, {list(self.coords)})"


class CycloSeries:
    """A q-series with CycloElt coefficients (specialization intermediate)."""

    __slots__ = ("conductor", "qscale", "prec", "terms")

    def __init__(self, conductor: int, qscale: int, prec: int, terms: dict):
        self.conductor = conductor
        self.qscale = qscale
        self.prec = prec
        self.terms = {t: c for t, c in terms.items() if not c.is_zero()}

    @property
    def prec_exponent(self) -> Fraction:
        return Fraction(self.prec, self.qscale)

    def times_root(self, numer: int, denom: int) -> "CycloSeries":
        """Multiply every coefficient by exp(2 pi i numer/denom)."""
        if self.conductor % denom:
            raise ValueError(f"denominator {denom} does not divide conductor {self.conductor}")
        j = numer * (self.conductor // denom)
        return CycloSeries(
            self.conductor, self.qscale, self.prec,
            {t: c.times_root(j) for t, c in self.terms.items()},
        )

    def to_qseries(self) -> QSeries:
        out = {}
        for t, c in sorted(self.terms.items()):
            if not c.is_rational():
                raise NonRationalResult(Fraction(t, self.qscale), c)
            out[t] = c.rational_value()
        return QSeries(self.qscale, self.prec, out)


# ---------------------------------------------------------------------------
# two-variable Fourier-Jacobi expansions
# ---------------------------------------------------------------------------

class FJExp:
    """Truncated Fourier-Jacobi expansion sum c * q^(t/qscale) zeta^(r/zscale).

    `weight`, `index` and `cone_slack` are optional metadata.  cone_slack = b
    certifies |r/zscale| <= 2*sqrt((t/qscale)*index) + b on all Fourier
    support (b = 0 is the holomorphic cone, b = index the weak-form cone);
    it is what makes torsion-point specialization precision certifiable.
    """

    __slots__ = ("qscale", "zscale", "qprec", "terms", "weight", "index", "cone_slack")

    def __init__(self, qscale: int, zscale: int, qprec: int, terms: dict,
                 weight=None, index=None, cone_slack=None):
        if qscale < 1 or zscale < 1:
            raise ValueError("scales must be positive integers")
        self.qscale = qscale
        self.zscale = zscale
        self.qprec = qprec
        clean = {}
        for (t, r), c in terms.items():
            c = as_rational(c)
            if c == 0:
                continue
            if t >= qprec:
                raise ValueError(f"term at q^({t}/{qscale}) at or beyond precision {qprec}")
            clean[(t, r)] = c
        self.terms = clean
        self.weight = None if weight is None else as_rational(weight)
        self.index = None if index is None else as_rational(index)
        self.cone_slack = None if cone_slack is None else as_rational(cone_slack)

    # -- construction ----------------------------------------------------------

    @classmethod
    def one(cls, prec_exp: RatLike) -> "FJExp":
        p = Fraction(prec_exp)
        return cls(p.denominator, 1, p.numerator, {(0, 0): 1}, weight=0, index=0, cone_slack=0)

    @classmethod
    def zero(cls, prec_exp: RatLike) -> "FJExp":
        p = Fraction(prec_exp)
        return cls(p.denominator, 1, p.numerator, {}, weight=None, index=None, cone_slack=0)

    @classmethod
    def from_qseries(cls, qs: QSeries) -> "FJExp":
        lo = qs.lowest_exponent()
        slack = 0 if (lo is None or lo >= 0) else None
        return cls(qs.qscale, 1, qs.prec, {(t, 0): c for t, c in qs.terms.items()},
                   weight=None, index=0, cone_slack=slack)

    def with_meta(self, weight=None, index=None, cone_slack=None) -> "FJExp":
        """Copy with metadata replaced (None leaves a field unchanged)."""
        return FJExp(
            self.qscale, self.zscale, self.qprec, self.terms,
            weight=self.weight if weight is None else weight,
            index=self.index if index is None else index,
            cone_slack=self.cone_slack if cone_slack is None else cone_slack,
        )

    # -- queries -----------------------------------------------------------------

    @property
    def prec_exponent(self) -> Fraction:
        return Fraction(self.qprec, self.qscale)

    def is_zero(self) -> bool:
        return not self.terms

    def lowest_q_exponent(self) -> Optional[Fraction]:
        if not self.terms:
            return None
        return Fraction(min(t for t, _ in self.terms), self.qscale)

    def coefficient(self, q_exp: RatLike, z_exp: RatLike) -> Rat:
        e = Fraction(q_exp)
        if e >= self.prec_exponent:
            raise ValueError(f"exponent {e} is beyond certified precision {self.prec_exponent}")
        t = e * self.qscale
        r = Fraction(z_exp) * self.zscale
        if t.denominator != 1 or r.denominator != 1:
            return 0
        return self.terms.get((t.numerator, r.numerator), 0)

    def q_slice(self, q_exp: RatLike) -> dict:
        """The zeta-Laurent polynomial at one q-power, as {z-exponent: coeff}."""
        e = Fraction(q_exp)
        if e >= self.prec_exponent:
            raise ValueError(f"exponent {e} is beyond certified precision {self.prec_exponent}")
        t = e * self.qscale
        if t.denominator != 1:
            return {}
        tn = t.numerator
        return {Fraction(r, self.zscale): c for (t2, r), c in self.terms.items() if t2 == tn}

    def cone_violations(self) -> list:
        """Stored terms violating 4*(t/s)*index >= (r/w)^2 - tolerated slack.

        With cone_slack = 0 this is the holomorphicity test; the index must
        be set.  Returns a list of ((q_exp, z_exp), coeff).
        """
        if self.index is None:
            raise ValueError("index metadata required for cone checks")
        m = Fraction(self.index)
        b = Fraction(self.cone_slack or 0)
        out = []
        for (t, r), c in sorted(self.terms.items()):
            x = Fraction(t, self.qscale)
            rr = Fraction(r, self.zscale)
            # |r/w| <= 2 sqrt(x m) + b  <=>  (|r/w| - b)^2 <= 4 x m when |r/w| > b
            excess = abs(rr) - b
            if excess > 0 and excess * excess > 4 * x * m:
                out.append(((x, rr), c))
        return out

    # -- scale and precision management -------------------------------------------

    def rescaled(self, s: int, w: int) -> "FJExp":
        if s % self.qscale or w % self.zscale:
            raise ValueError("new scales must be multiples of the old ones")
        ks, kw = s // self.qscale, w // self.zscale
        if ks == 1 and kw == 1:
            return self
        return FJExp(s, w, self.qprec * ks,
                     {(t * ks, r * kw): c for (t, r), c in self.terms.items()},
                     weight=self.weight, index=self.index, cone_slack=self.cone_slack)

    def normalized(self) -> "FJExp":
        gs = math.gcd(self.qscale, self.qprec)
        gw = self.zscale
        for t, r in self.terms:
            gs = math.gcd(gs, t)
            gw = math.gcd(gw, r)
            if gs == 1 and gw == 1:
                return self
        if gs == 1 and gw == 1:
            return self
        return FJExp(self.qscale // gs, self.zscale // gw, self.qprec // gs,
                     {(t // gs, r // gw): c for (t, r), c in self.terms.items()},
                     weight=self.weight, index=self.index, cone_slack=self.cone_slack)

    def q_truncated(self, prec_exp: RatLike) -> "FJExp":
        bound = Fraction(prec_exp)
        if bound >= self.prec_exponent:
            return self
        new_p = _floor_frac(bound * self.qscale)
        return FJExp(self.qscale, self.zscale, new_p,
                     {(t, r): c for (t, r), c in self.terms.items() if t < new_p},
                     weight=self.weight, index=self.index, cone_slack=self.cone_slack)

    def _aligned(self, other: "FJExp"):
        s = math.lcm(self.qscale, other.qscale)
        w = math.lcm(self.zscale, other.zscale)
        return self.rescaled(s, w), other.rescaled(s, w)

    # -- ring operations --------------------------------------------------------------

    def __neg__(self) -> "FJExp":
        return FJExp(self.qscale, self.zscale, self.qprec,
                     {k: -c for k, c in self.terms.items()},
                     weight=self.weight, index=self.index, cone_slack=self.cone_slack)

    def __add__(self, other) -> "FJExp":
        if isinstance(other, QSeries):
            other = FJExp.from_qseries(other)
        if not isinstance(other, FJExp):
            return NotImplemented
        a, b = self._aligned(other)
        prec = min(a.qprec, b.qprec)
        terms = {k: c for k, c in a.terms.items() if k[0] < prec}
        for k, c in b.terms.items():
            if k[0] < prec:
                terms[k] = terms.get(k, 0) + c
        weight = a.weight if a.weight == b.weight else None
        index = a.index if a.index == b.index else None
        slack = None
        if a.cone_slack is not None and b.cone_slack is not None and index is not None:
            slack = max(a.cone_slack, b.cone_slack)
        return FJExp(a.qscale, a.zscale, prec, terms, weight=weight, index=index, cone_slack=slack)

    __radd__ = __add__

    def __sub__(self, other) -> "FJExp":
        if isinstance(other, QSeries):
            other = FJExp.from_qseries(other)
        return self + (-other)

    def __rsub__(self, other) -> "FJExp":
        return (-self) + other

    def __mul__(self, other) -> "FJExp":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return FJExp(self.qscale, self.zscale, self.qprec, {},
                             weight=self.weight, index=self.index, cone_slack=self.cone_slack)
            return FJExp(self.qscale, self.zscale, self.qprec,
                         {k: c * other for k, c in self.terms.items()},
                         weight=self.weight, index=self.index, cone_slack=self.cone_slack)
        if isinstance(other, QSeries):
            other = FJExp.from_qseries(other)
        if not isinstance(other, FJExp):
            return NotImplemented
        a, b = self._aligned(other)
        lo_a = min((t for t, _ in a.terms), default=0)
        lo_b = min((t for t, _ in b.terms), default=0)
        prec = min(a.qprec + min(lo_b, 0), b.qprec + min(lo_a, 0))
        out: dict = {}
        for (t1, r1), c1 in a.terms.items():
            for (t2, r2), c2 in b.terms.items():
                t = t1 + t2
                if t >= prec:
                    continue
                key = (t, r1 + r2)
                out[key] = out.get(key, 0) + c1 * c2
        weight = None if (a.weight is None or b.weight is None) else a.weight + b.weight
        index = None if (a.index is None or b.index is None) else a.index + b.index
        slack = None
        if a.cone_slack is not None and b.cone_slack is not None:
            slack = a.cone_slack + b.cone_slack
        return FJExp(a.qscale, a.zscale, prec, out, weight=weight, index=index, cone_slack=slack)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FJExp":
        if n < 0:
            raise ValueError("negative powers of Fourier-Jacobi expansions are not supported")
        result = FJExp.one(self.prec_exponent)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divide(self, den: "FJExp") -> "FJExp":
        """Exact quotient: per q-order, the residual zeta-polynomial must be
        exactly divisible by the denominator's lowest one."""
        a, b = self._aligned(den)
        if not b.terms:
            raise ZeroDivisionError("division by the zero expansion")
        d_lo = min(t for t, _ in b.terms)
        b0 = {r: c for (t, r), c in b.terms.items() if t == d_lo}
        if not a.terms:
            return FJExp(a.qscale, a.zscale, a.qprec - d_lo, {},
                         weight=None, index=None, cone_slack=None)
        n_lo = min(t for t, _ in a.terms)
        out_prec = min(a.qprec - d_lo, b.qprec - 2 * d_lo + n_lo)
        rem = dict(a.terms)
        quot: dict = {}
        while rem:
            t_min = min(t for t, _ in rem)
            q_order = t_min - d_lo
            if q_order >= out_prec:
                break
            block = {r: c for (t, r), c in rem.items() if t == t_min}
            try:
                q_block = _laurent_div_exact(block, b0)
            except InexactDivision:
                raise InexactDivision(Fraction(t_min, a.qscale)) from None
            for r, c in q_block.items():
                quot[(q_order, r)] = c
            # subtract q_block * den from the remainder
            for rq, qc in q_block.items():
                for (t2, r2), c2 in b.terms.items():
                    key = (q_order + t2, rq + r2)
                    v = rem.get(key, 0) - qc * c2
                    if v:
                        rem[key] = v
                    else:
                        rem.pop(key, None)
        weight = None if (a.weight is None or b.weight is None) else a.weight - b.weight
        index = None if (a.index is None or b.index is None) else a.index - b.index
        return FJExp(a.qscale, a.zscale, out_prec,
                     {k: c for k, c in quot.items() if k[0] < out_prec},
                     weight=weight, index=index, cone_slack=None)

    def __truediv__(self, other) -> "FJExp":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, QSeries):
            return self * other.inverse()
        if isinstance(other, FJExp):
            return self.divide(other)
        return NotImplemented

    # -- Jacobi-form operators -------------------------------------------------------

    def eval_z0(self) -> QSeries:
        """Restriction to z = 0: sum the zeta-coefficients per q-power."""
        out: dict = {}
        for (t, _), c in self.terms.items():
            out[t] = out.get(t, 0) + c
        return QSeries(self.qscale, self.qprec, out)

    def ud(self, d: int) -> "FJExp":
        """The operator z -> d*z; the index is multiplied by d^2."""
        if d < 1:
            raise ValueError("U_d expects a positive integer")
        if d == 1:
            return self
        return FJExp(self.qscale, self.zscale, self.qprec,
                     {(t, d * r): c for (t, r), c in self.terms.items()},
                     weight=self.weight,
                     index=None if self.index is None else d * d * self.index,
                     cone_slack=None if self.cone_slack is None else d * self.cone_slack)

    def vl(self, l: int, k: Optional[int] = None) -> "FJExp":
        """Index-raising Hecke-type operator V_l at weight k.

        New coefficient at (n, r): sum over d | gcd(n, r, l) of
        d^(k-1) * a(n*l/d^2, r/d), with gcd(0, 0, l) = l.  Requires integral
        scales; the result is certified for n < ceil(prec / l).
        """
        if l < 1:
            raise ValueError("V_l expects a positive integer")
        if k is None:
            if self.weight is None or Fraction(self.weight).denominator != 1:
                raise ValueError("V_l needs an integral weight (pass k explicitly)")
            k = int(self.weight)
        a = self.normalized()
        if a.qscale != 1 or a.zscale != 1:
            raise ValueError("V_l requires integral q- and zeta-scales")
        if l == 1:
            return a
        new_prec = (a.qprec + l - 1) // l
        out: dict = {}
        for d in divisors(l):
            dd = d * d
            mult = d ** (k - 1)
            for (n1, r1), c in a.terms.items():
                num = n1 * dd
                if num % l:
                    continue
                n = num // l
                if n >= new_prec or (d > 1 and n % d):
                    continue
                key = (n, d * r1)
                out[key] = out.get(key, 0) + mult * c
        return FJExp(1, 1, new_prec, out,
                     weight=self.weight,
                     index=None if self.index is None else l * self.index,
                     cone_slack=0 if self.cone_slack == 0 else None)

    # -- evaluation and specialization ---------------------------------------------------

    def _unknown_tail_bound(self, coef_tau: Fraction, coef_z: Fraction, shift: Fraction) -> Fraction:
        """Lower bound for coef_tau*x + coef_z*(r/w) + shift over the unknown
        region x >= prec_exponent, using the certified support cone."""
        x0 = self.prec_exponent
        if coef_z == 0:
            return coef_tau * x0 + shift
        if self.index is None or self.cone_slack is None:
            raise ValueError(
                "cannot certify output precision: the expansion carries no "
                "support-cone metadata (index and cone_slack)"
            )
        m = Fraction(self.index)
        b = Fraction(self.cone_slack)
        ad = abs(Fraction(coef_z))
        c = Fraction(coef_tau)
        if m == 0:
            # cone degenerates to |r/w| <= b
            return c * x0 - ad * b + shift
        xstar = (ad / c) * (ad / c) * m
        if x0 <= xstar:
            return -(ad * ad * m) / c - ad * b + shift
        return c * x0 - ad * (2 * _sqrt_upper(x0 * m) + b) + shift

    def eval_linear(self, tau_mult: int, z_mult: RatLike) -> QSeries:
        """The one-variable series of (tau, z) -> (c*tau, d*tau): each term
        c q^(t/s) zeta^(r/w) contributes at q-exponent c*(t/s) + d*(r/w)."""
        if tau_mult < 1:
            raise ValueError("tau multiplier must be a positive integer")
        d = Fraction(z_mult)
        bound = self._unknown_tail_bound(Fraction(tau_mult), d, Fraction(0))
        pairs = []
        for (t, r), c in self.terms.items():
            e = tau_mult * Fraction(t, self.qscale) + d * Fraction(r, self.zscale)
            if e < bound:
                pairs.append((e, c))
        return QSeries.from_exponents(pairs, bound)

    def specialize(self, lam: RatLike, mu: RatLike, index: Optional[RatLike] = None,
                   cyclotomic: bool = False):
        """Pull back along z = lam*tau + mu, including the index-m automorphy
        prefactor q^(m lam^2) e^(2 pi i m lam mu).

        Each term c q^(t/s) zeta^(r/w) lands at q-exponent
        t/s + (r/w) lam + m lam^2 with phase e^(2 pi i mu (r/w + m lam)).
        Phases accumulate exactly as cyclotomic integers; the result converts
        to a QSeries when every coefficient is rational, otherwise it raises
        NonRationalResult (or returns the CycloSeries when cyclotomic=True).
        """
        m = Fraction(index) if index is not None else (
            None if self.index is None else Fraction(self.index))
        if m is None:
            raise ValueError("an index is required to specialize (none in metadata)")
        lam = Fraction(lam)
        mu = Fraction(mu)
        shift = m * lam * lam
        bound = self._unknown_tail_bound(Fraction(1), lam, shift) if lam else self.prec_exponent
        entries = []
        conductor = 1
        for (t, r), c in self.terms.items():
            rz = Fraction(r, self.zscale)
            e = Fraction(t, self.qscale) + rz * lam + shift
            if e >= bound:
                continue
            angle = mu * (rz + m * lam)
            angle -= _floor_frac(angle)
            conductor = math.lcm(conductor, angle.denominator)
            entries.append((e, angle, c))
        if conductor > 48:
            raise ValueError(f"phase conductor {conductor} exceeds the supported cap 48")
        scale = bound.denominator
        for e, _, _ in entries:
            scale = math.lcm(scale, e.denominator)
        prec = _floor_frac(bound * scale)
        acc: dict = {}
        for e, angle, c in entries:
            t = e.numerator * (scale // e.denominator)
            j = int(angle * conductor)
            elt = CycloElt.from_root_power(conductor, j, c)
            acc[t] = acc[t] + elt if t in acc else elt
        result = CycloSeries(conductor, scale, prec, acc)
        if cyclotomic:
            return result
        return result.to_qseries()

    # -- comparison ----------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FJExp):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return (a.qscale == b.qscale and a.zscale == b.zscale and a.qprec == b.qprec
                and a.terms == b.terms and a.weight == b.weight and a.index == b.index)

    __hash__ = None

    def mismatch(self, other: "FJExp"):
        """First differing (q-exp, z-exp, self-coeff, other-coeff) on the
        common certified q-window, or None."""
        a, b = self._aligned(other)
        window = min(a.qprec, b.qprec)
        for (t, r) in sorted(set(a.terms) | set(b.terms)):
            if t >= window:
                continue
            ca, cb = a.terms.get((t, r), 0), b.terms.get((t, r), 0)
            if ca != cb:
                return (Fraction(t, a.qscale), Fraction(r, a.zscale), ca, cb)
        return None

    def agrees_with(self, other: "FJExp") -> bool:
        return self.mismatch(other) is None

    # -- serialization ----------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "qscale": self.qscale,
            "zscale": self.zscale,
            "prec": self.qprec,
            "terms": [[t, r, rational_str(c)] for (t, r), c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FJExp":
        return cls(data["qscale"], data["zscale"], data["prec"],
                   {(t, r): parse_rational(c) for t, r, c in data["terms"]})

    # -- display ---------------------------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return f"O(q^{_exp_str(self.prec_exponent)})"
        by_q: dict = {}
        for (t, r), c in self.terms.items():
            by_q.setdefault(t, {})[r] = c
        parts = []
        for t in sorted(by_q):
            qpow = _q_power(Fraction(t, self.qscale))
            body = _zeta_polynomial_str(by_q[t], self.zscale)
            if not qpow:
                parts.append(body)
            elif body == "1":
                parts.append(qpow)
            else:
                parts.append(f"{qpow}*({body})")
        return " + ".join(parts) + f" + O(q^{_exp_str(self.prec_exponent)})"

    def __repr__(self) -> str:
        return (f"FJExp(qscale={self.qscale}, zscale={self.zscale}, qprec={self.qprec}, "
                f"{len(self.terms)} terms, weight={self.weight}, index={self.index})")


def _zeta_polynomial_str(coeffs: dict, zscale: int) -> str:
    """Display a zeta-Laurent polynomial, grouping r with -r when symmetric."""
    done = set()
    parts = []
    for r in sorted(coeffs, key=lambda r: (-abs(r), -r)):
        if r in done:
            continue
        c = coeffs[r]
        if r != 0 and coeffs.get(-r) == c:
            done.update((r, -r))
            parts.append(_signed_term(c, f"zeta^(+-{Fraction(abs(r), zscale)})", first=not parts))
        else:
            done.add(r)
            parts.append(_signed_term(c, _zeta_power(Fraction(r, zscale)), first=not parts))
    return "".join(parts) if parts else "0"


def _laurent_div_exact(num: dict, den: dict) -> dict:
    """Exact division in the Laurent polynomial ring Q[z, 1/z].

    Inputs map exponent -> coefficient; raises InexactDivision(0) when the
    quotient does not exist.
    """
    if not den:
        raise ZeroDivisionError("Laurent division by zero")
    if not num:
        return {}
    nmin, dmin = min(num), min(den)
    dmax = max(den)
    dlead = Fraction(den[dmax])
    qmin = nmin - dmin
    rem = dict(num)
    quot: dict = {}
    while rem:
        rmax = max(rem)
        qdeg = rmax - dmax
        if qdeg < qmin:
            raise InexactDivision(Fraction(0))
        coef = Fraction(rem[rmax]) / dlead
        quot[qdeg] = as_rational(coef)
        for rd, dc in den.items():
            key = qdeg + rd
            v = rem.get(key, 0) - coef * dc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return quot


# ---------------------------------------------------------------------------
# precision planning helpers
# ---------------------------------------------------------------------------

def prec_for_specialize(target: RatLike, index: RatLike, lam: RatLike, slack: RatLike) -> int:
    """Input q-precision (in whole q-units) sufficient for `specialize` at
    z = lam*tau + mu to be certified below `target`."""
    lam = abs(Fraction(lam))
    if lam == 0:
        return math.ceil(Fraction(target))
    m, b, w = Fraction(index), Fraction(slack), Fraction(target)
    y = lam * _sqrt_upper(m) + _sqrt_upper(w + lam * b)
    return _floor_frac(y * y) + 2


def prec_for_eval_linear(target: RatLike, index: RatLike, tau_mult: int,
                         z_mult: RatLike, slack: RatLike) -> int:
    """Input q-precision sufficient for `eval_linear(tau_mult, z_mult)` to be
    certified below `target`."""
    d = abs(Fraction(z_mult))
    c = Fraction(tau_mult)
    if d == 0:
        return math.ceil(Fraction(target) / c)
    m, b, w = Fraction(index), Fraction(slack), Fraction(target)
    y = (d * _sqrt_upper(m) + _sqrt_upper(d * d * m + c * (w + d * b))) / c
    return _floor_frac(y * y) + 2
