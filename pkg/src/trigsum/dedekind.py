"""Dedekind sums, their modified relatives, and reciprocal root-of-unity sums.

Everything here is a building block for the identity catalog: the classical
sawtooth/Dedekind sum in exact rational arithmetic, its cotangent
representation, the character-twisted sums S_{a,b}(h,k|mu) and
T_{a,b}(h,k|mu), and a small engine for sums of products of
1/(zeta^e +- 1)^power over consecutive indices.

Singularities are excluded *exactly*: every cotangent/tangent argument is a
`Fraction`, and every root-of-unity factor is reduced to a single exponent
over its cyclotomic order so the +-1 test is an integer congruence.  A
`SingularTerm` escaping from validated parameters indicates a constraint bug,
not a numerical accident.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Sequence, Tuple

import gmpy2

from .errors import DomainError, SingularTerm
from .ntheory import mod_inverse
from .precision import (
    DEFAULT_PRECISION,
    check_precision,
    cot_pi_raw,
    is_root_one_or_minus_one,
    root_of_unity_table,
    round_to,
    tan_pi_raw,
    working,
)

__all__ = [
    "RootFactor",
    "sawtooth",
    "dedekind_sum_exact",
    "dedekind_sum_cot",
    "complex_recip_sum",
    "modified_S_definition",
    "modified_S_cot",
    "modified_T_cot",
]


def sawtooth(x) -> Fraction:
    """The sawtooth ((x)): x - floor(x) - 1/2 for non-integer x, else 0."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum_exact(h: int, k: int) -> Fraction:
    """s(h,k) = sum_{n=1}^{k-1} ((n/k))((hn/k)), exactly.

    The two sawtooth factors are (2n-k)/2k and (2r-k)/2k with r = hn mod k,
    so the whole sum is an integer divided by 4k^2.
    """
    if k < 1:
        raise DomainError("k must be a positive integer")
    if gcd(h, k) != 1:
        raise DomainError("h and k must be coprime")
    num = 0
    for n in range(1, k):
        r = (h * n) % k
        if r:
            num += (2 * n - k) * (2 * r - k)
    return Fraction(num, 4 * k * k)


def dedekind_sum_cot(h: int, k: int, P: int = DEFAULT_PRECISION):
    """The cotangent form (1/4k) sum cot(pi n/k) cot(pi h n/k)."""
    if k < 2:
        raise DomainError("k must be at least 2")
    if gcd(h, k) != 1:
        raise DomainError("h and k must be coprime")
    check_precision(P)
    with working(P):
        acc = gmpy2.mpfr(0)
        for n in range(1, k):
            acc += cot_pi_raw(Fraction(n, k)) * cot_pi_raw(Fraction(h * n, k))
        acc /= 4 * k
    return round_to(acc, P)


class RootFactor(NamedTuple):
    """One denominator factor (zeta_order^{step*j + shift} + delta)^power."""

    order: int
    step: int
    shift: int = 0
    delta: int = -1
    power: int = 1


def _check_factor(f: RootFactor) -> None:
    if f.order < 1:
        raise DomainError("factor order must be a positive integer")
    if f.delta not in (-1, 1):
        raise DomainError("factor delta must be -1 or +1")
    if f.power < 1:
        raise DomainError("factor power must be a positive integer")


def _recip_sum_ambient(factors, upper, start, numerator):
    factors = [f if isinstance(f, RootFactor) else RootFactor(*f) for f in factors]
    tables = {}
    for f in factors:
        _check_factor(f)
        if f.order not in tables:
            tables[f.order] = root_of_unity_table(f.order)
    if numerator is not None:
        n_order, n_step, n_shift = numerator
        if n_order < 1:
            raise DomainError("numerator order must be a positive integer")
        if n_order not in tables:
            tables[n_order] = root_of_unity_table(n_order)
    total = gmpy2.mpc(0)
    for j in range(start, upper + 1):
        den = gmpy2.mpc(1)
        for f in factors:
            e = (f.step * j + f.shift) % f.order
            hit = is_root_one_or_minus_one(e, f.order)
            if hit is not None and hit == -f.delta:
                raise SingularTerm(
                    "denominator factor vanishes at index %d" % j,
                    argument=Fraction(e, f.order),
                    index=j,
                )
            base = tables[f.order][e] + f.delta
            den *= base if f.power == 1 else base**f.power
        if numerator is None:
            total += 1 / den
        else:
            total += tables[n_order][(n_step * j + n_shift) % n_order] / den
    return total


def complex_recip_sum(
    factors: Sequence[Tuple],
    upper: int,
    *,
    start: int = 1,
    numerator: Optional[Tuple[int, int, int]] = None,
    P: Optional[int] = None,
):
    """Sum over j = start..upper of zeta^{..}/prod (zeta^{..} + delta)^power.

    `factors` is a sequence of RootFactor tuples; `numerator` is an optional
    (order, step, shift) root-of-unity triple.  With P=None the sum is taken
    in the ambient gmpy2 context (for callers already inside working());
    otherwise it runs at P guard-bits precision and is rounded to P.
    """
    if P is None:
        return _recip_sum_ambient(factors, upper, start, numerator)
    check_precision(P)
    with working(P):
        total = _recip_sum_ambient(factors, upper, start, numerator)
    return round_to(total, P)


def _check_modified_params(alpha: int, beta: int, h: int, k: int, mu: int) -> None:
    if h < 2 or k < 2:
        raise DomainError("h and k must be at least 2")
    if gcd(h, k) != 1:
        raise DomainError("h and k must be coprime")
    if mu < 1:
        raise DomainError("mu must be a positive integer")
    if alpha < 0 or beta < 0:
        raise DomainError("alpha and beta must be nonnegative")


def modified_S_definition(
    alpha: int, beta: int, h: int, k: int, P: int = DEFAULT_PRECISION
):
    """The defining sum over j mod hk of e^{2 pi i j(a/h+b/k)} ((j/hk))((j h'/k)).

    h' is the inverse of h mod k.  This is the slow O(hk) oracle for the
    cotangent form (identity I40); the value is real up to rounding whenever
    the parameters are admissible, and the full complex value is returned so
    the leak can be inspected.
    """
    _check_modified_params(alpha, beta, h, k, 1)
    if alpha < 1 or gcd(alpha, h) != 1:
        raise DomainError("alpha must be a positive integer coprime to h")
    if beta < 1 or gcd(beta, k) != 1:
        raise DomainError("beta must be a positive integer coprime to k")
    check_precision(P)
    hp = mod_inverse(h, k)
    order = h * k
    e0 = (alpha * k + beta * h) % order
    with working(P):
        table = root_of_unity_table(order)
        total = gmpy2.mpc(0)
        for j in range(1, order):
            s2 = sawtooth(Fraction(j * hp, k))
            if not s2:
                continue
            s1 = sawtooth(Fraction(j, order))
            total += table[(j * e0) % order] * gmpy2.mpq(s1 * s2)
    return round_to(total, P)


def _modified_sum(alpha, beta, h, k, mu, P, kernel):
    _check_modified_params(alpha, beta, h, k, mu)
    check_precision(P)
    with working(P):
        acc = gmpy2.mpfr(0)
        for j in range(1, k):
            arg = Fraction(mu * ((j + beta) * h + alpha * k), h * k)
            acc += kernel(arg) * cot_pi_raw(Fraction(j * h, k))
        acc /= 4 * k
    return round_to(acc, P)


def modified_S_cot(
    alpha: int, beta: int, h: int, k: int, mu: int = 1, P: int = DEFAULT_PRECISION
):
    """S_{a,b}(h,k|mu) = (1/4k) sum_j cot(mu(j/k+a/h+b/k)pi) cot(jh pi/k).

    Admissibility (which parameter combinations are pole-free) is the caller's
    concern; every argument is pole-checked exactly and a SingularTerm is
    raised with the offending index if a hypothesis was violated.
    """
    return _modified_sum(alpha, beta, h, k, mu, P, cot_pi_raw)


def modified_T_cot(
    alpha: int, beta: int, h: int, k: int, mu: int = 1, P: int = DEFAULT_PRECISION
):
    """T_{a,b}(h,k|mu): as modified_S_cot with tan in place of the first cot."""
    return _modified_sum(alpha, beta, h, k, mu, P, tan_pi_raw)
