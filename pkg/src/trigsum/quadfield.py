"""Real quadratic field computations for primes p = 1 (mod 4).

Ties together three views of Q(sqrt(p)): the fundamental unit from the Pell
machinery in `ntheory`, the class number recovered from the Dirichlet
sine-product formula, and the residue/non-residue sine-product ratio R that
satisfies R -+ 1/R = eps^h -+ eps^{-h}.

Unit powers are kept exact: eps^n is stored as an integer pair (X, Y) with
eps^n = (X + Y*sqrt(p))/2, so the closed sides of the ratio identities are
exact integers (or exact integer multiples of sqrt(p)).
"""

from fractions import Fraction
from typing import NamedTuple, Tuple

import gmpy2

from .errors import ConsistencyError, DomainError
from .ntheory import PellUnit, is_prime, kronecker_symbol, pell_fundamental_unit
from .precision import (
    DEFAULT_PRECISION,
    check_precision,
    round_to,
    sin_pi_raw,
    working,
)

__all__ = [
    "QuadFieldData",
    "dirichlet_class_number",
    "residue_sine_ratio",
    "unit_power",
    "unit_combination_exact",
    "unit_combination",
    "quadfield_data",
]


class QuadFieldData(NamedTuple):
    p: int
    epsilon: PellUnit
    h: int


def _check_p(p: int) -> None:
    if p < 5 or p % 4 != 1 or not is_prime(p):
        raise DomainError("p must be a prime congruent to 1 mod 4")


def _residue_split(p: int) -> Tuple[list, list]:
    """Quadratic residues and non-residues of p in (0, p/2), by squaring."""
    squares = {(x * x) % p for x in range(1, p)}
    half = (p + 1) // 2
    residues = [r for r in range(1, half) if r in squares]
    nonresidues = [n for n in range(1, half) if n not in squares]
    return residues, nonresidues


def dirichlet_class_number(p: int, P: int = DEFAULT_PRECISION) -> int:
    """Class number h of Q(sqrt(p)) from eps^{2h} = prod sin(j pi/p)^{-(j|p)}.

    Evaluated in log space: h = sum_j -(j|p) log sin(j pi/p) / (2 log eps).
    The pre-rounding value must sit within 1e-8 of an integer, else a
    ConsistencyError is raised.
    """
    _check_p(p)
    check_precision(P)
    x, y, half, _ = pell_fundamental_unit(p)
    with working(P):
        acc = gmpy2.mpfr(0)
        for j in range(1, p):
            acc -= kronecker_symbol(j, p) * gmpy2.log(sin_pi_raw(Fraction(j, p)))
        eps = (x + y * gmpy2.sqrt(p)) / 2
        value = acc / (2 * gmpy2.log(eps))
        h = int(gmpy2.rint(value))
        if abs(value - h) > gmpy2.mpfr("1e-8"):
            raise ConsistencyError(
                "Dirichlet value %s is not near an integer for p=%d" % (value, p)
            )
    if h < 1:
        raise ConsistencyError("class number must be positive, got %d" % h)
    return h


def residue_sine_ratio(p: int, P: int = DEFAULT_PRECISION):
    """R = prod over non-residues sin(n pi/p) / prod over residues sin(r pi/p).

    Both products run over 0 < n, r < p/2.
    """
    _check_p(p)
    check_precision(P)
    residues, nonresidues = _residue_split(p)
    with working(P):
        num = gmpy2.mpfr(1)
        for n in nonresidues:
            num *= sin_pi_raw(Fraction(n, p))
        den = gmpy2.mpfr(1)
        for r in residues:
            den *= sin_pi_raw(Fraction(r, p))
        ratio = num / den
    return round_to(ratio, P)


def unit_power(p: int, n: int) -> Tuple[int, int, int]:
    """Exact (X, Y, norm) with eps^n = (X + Y*sqrt(p))/2 and X^2-pY^2 = 4*norm."""
    _check_p(p)
    if n < 0:
        raise DomainError("n must be nonnegative")
    x, y, _, norm = pell_fundamental_unit(p)
    X, Y = 2, 0  # eps^0 = 1
    for _ in range(n):
        X, Y = (X * x + p * Y * y) // 2, (X * y + Y * x) // 2
    return X, Y, norm**n if n else 1


def unit_combination_exact(
    p: int, sign: str, h: int = None
) -> Tuple[int, int]:
    """eps^h +- eps^{-h} as an exact pair (a, b) meaning a + b*sqrt(p).

    One of the two components is always zero: the combination collapses to
    either the integer X or the multiple Y*sqrt(p) depending on the sign of
    the norm of eps^h.  The class number is computed if not supplied.
    """
    if sign not in ("plus", "minus"):
        raise DomainError("sign must be 'plus' or 'minus'")
    if h is None:
        h = dirichlet_class_number(p)
    X, Y, norm_h = unit_power(p, h)
    # eps^{-h} = norm_h * (X - Y*sqrt(p))/2
    s = 1 if sign == "plus" else -1
    a = X * (1 + s * norm_h) // 2
    b = Y * (1 - s * norm_h) // 2
    return a, b


def unit_combination(p: int, sign: str, P: int = DEFAULT_PRECISION, h: int = None):
    """eps^h +- eps^{-h} as an HPReal at precision P."""
    check_precision(P)
    a, b = unit_combination_exact(p, sign, h)
    with working(P):
        value = a + b * gmpy2.sqrt(p)
    return round_to(value, P)


def quadfield_data(p: int, P: int = DEFAULT_PRECISION) -> QuadFieldData:
    """Bundle (p, fundamental unit, class number) for reporting."""
    _check_p(p)
    return QuadFieldData(p=p, epsilon=pell_fundamental_unit(p), h=dirichlet_class_number(p, P))
