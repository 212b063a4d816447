"""Exact arithmetic of Jacobi forms: Fourier-Jacobi expansions, Cohen numbers,
Jacobi-Eisenstein series, theta-constant powers and representation counts.

All coefficients are exact rationals; nothing in this package rounds.
"""

from jacobiforms.numtheory import (
    Rat,
    bernoulli,
    bernoulli_poly,
    cohen_h,
    divisors,
    fund_disc_decomp,
    gen_bernoulli,
    kronecker,
    l_value_neg,
    mobius,
    parse_rational,
    rational_str,
    sigma,
    zeta_neg,
)
from jacobiforms.series import CycloElt, FJExp, InexactDivision, NonRationalResult, QSeries

__version__ = "0.1.0"
