"""Arbitrary-precision trigonometry at exact rational multiples of pi.

Angles enter as ``fractions.Fraction`` multiples of pi and are reduced
exactly (mod 2, then folded into [0, 1/4]) before any floating-point work,
so period/symmetry relations hold bitwise and poles are detected exactly,
never via overflow.  Values rational in closed form (sin(pi/6) = 1/2 and
friends) are returned as exact binary constants.

Precision P is the bit precision of returned values; internally everything
runs with GUARD_BITS extra bits and is rounded once at the end.  The
summation tolerance tau(N) = N * 2^(32 - P) is what those guard bits buy:
direct sums of N such terms stay far inside it.
"""

import functools
from fractions import Fraction
from typing import Optional, Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .errors import DomainError, SingularTerm

GUARD_BITS = 32
MIN_PRECISION = 64
DEFAULT_PRECISION = 256
DEFAULT_TOL = "1e-50"

RationalLike = Union[int, Fraction]

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

# closed-form points on the canonical half period [0, 1/2]:
# the only rational values a sine takes at rational angles
_SIN_EXACT = {
    Fraction(0): mpq(0),
    Fraction(1, 6): mpq(1, 2),
    Fraction(1, 2): mpq(1),
}


def check_precision(precision: int) -> int:
    if precision < MIN_PRECISION:
        raise DomainError(f"precision must be at least {MIN_PRECISION} bits")
    return precision


def working(precision: int):
    """Context with guard bits, for evaluator loops; round once on exit."""
    return gmpy2.context(precision=check_precision(precision) + GUARD_BITS)


def round_to(value, precision: int):
    """Round an mpfr/mpc from working precision down to the target."""
    with gmpy2.context(precision=precision):
        return +value


def tau(n_terms: int, precision: int = DEFAULT_PRECISION) -> mpfr:
    """Error budget for a direct sum of n_terms evaluated terms."""
    if n_terms < 0:
        raise DomainError("n_terms must be nonnegative")
    with gmpy2.context(precision=precision):
        return mpfr(max(n_terms, 1)) * mpfr(2) ** (GUARD_BITS - precision)


def _mod(x: Fraction, period: int) -> Fraction:
    return Fraction(x.numerator % (period * x.denominator), x.denominator)


def sin_pi_raw(r: RationalLike) -> mpfr:
    """sin(pi*r) in the caller's active gmpy2 context (no final rounding)."""
    x = _mod(Fraction(r), 2)
    sign = 1
    if x >= 1:
        x -= 1
        sign = -1
    if x > _HALF:
        x = 1 - x
    exact = _SIN_EXACT.get(x)
    if exact is not None:
        return mpfr(sign * exact)
    pi = gmpy2.const_pi()
    if x > _QUARTER:
        v = gmpy2.cos(pi * mpfr(mpq(x.numerator, x.denominator) - mpq(1, 2)))
    else:
        v = gmpy2.sin(pi * mpfr(mpq(x.numerator, x.denominator)))
    return -v if sign < 0 else v


def cos_pi_raw(r: RationalLike) -> mpfr:
    return sin_pi_raw(Fraction(r) + _HALF)


def sin_pi(r: RationalLike, precision: int = DEFAULT_PRECISION) -> mpfr:
    with working(precision):
        v = sin_pi_raw(r)
    return round_to(v, precision)


def cos_pi(r: RationalLike, precision: int = DEFAULT_PRECISION) -> mpfr:
    with working(precision):
        v = cos_pi_raw(r)
    return round_to(v, precision)


def tan_pi_raw(r: RationalLike) -> mpfr:
    x = _mod(Fraction(r), 1)
    if x == _HALF:
        raise SingularTerm("tan(pi*x) pole at half-integer x", argument=x)
    if x == 0:
        return mpfr(0)
    if x == _QUARTER:
        return mpfr(1)
    if x == 3 * _QUARTER:
        return mpfr(-1)
    return sin_pi_raw(x) / cos_pi_raw(x)


def cot_pi_raw(r: RationalLike) -> mpfr:
    x = _mod(Fraction(r), 1)
    if x == 0:
        raise SingularTerm("cot(pi*x) pole at integer x", argument=x)
    if x == _HALF:
        return mpfr(0)
    if x == _QUARTER:
        return mpfr(1)
    if x == 3 * _QUARTER:
        return mpfr(-1)
    return cos_pi_raw(x) / sin_pi_raw(x)


def csc_pi_raw(r: RationalLike) -> mpfr:
    x = _mod(Fraction(r), 2)
    if x == 0 or x == 1:
        raise SingularTerm("csc(pi*x) pole at integer x", argument=x)
    num, den = x.numerator, x.denominator
    if den == 2:
        return mpfr(1) if num == 1 else mpfr(-1)
    if den == 6:
        return mpfr(2) if num in (1, 5) else mpfr(-2)
    return 1 / sin_pi_raw(x)


def sec_pi_raw(r: RationalLike) -> mpfr:
    x = _mod(Fraction(r), 2)
    if x.denominator == 2:
        raise SingularTerm("sec(pi*x) pole at half-integer x", argument=x)
    if x == 0:
        return mpfr(1)
    if x == 1:
        return mpfr(-1)
    if x.denominator == 3:
        return mpfr(2) if x.numerator in (1, 5) else mpfr(-2)
    return 1 / cos_pi_raw(x)


def tan_pi(r: RationalLike, precision: int = DEFAULT_PRECISION) -> mpfr:
    with working(precision):
        v = tan_pi_raw(r)
    return round_to(v, precision)


def cot_pi(r: RationalLike, precision: int = DEFAULT_PRECISION) -> mpfr:
    with working(precision):
        v = cot_pi_raw(r)
    return round_to(v, precision)


def csc_pi(r: RationalLike, precision: int = DEFAULT_PRECISION) -> mpfr:
    with working(precision):
        v = csc_pi_raw(r)
    return round_to(v, precision)


def sec_pi(r: RationalLike, precision: int = DEFAULT_PRECISION) -> mpfr:
    with working(precision):
        v = sec_pi_raw(r)
    return round_to(v, precision)


def is_root_one_or_minus_one(n: int, k: int) -> Optional[int]:
    """+1 / -1 when e^(2*pi*i*n/k) is that real unit, else None.

    Pure integer test; this is the singularity guard for root-of-unity
    denominators.
    """
    if k < 1:
        raise DomainError("k must be a positive integer")
    m = n % k
    if m == 0:
        return 1
    if k % 2 == 0 and m == k // 2:
        return -1
    return None


def root_of_unity_raw(n: int, k: int) -> mpc:
    """e^(2*pi*i*n/k) in the caller's active context."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    t = Fraction(2 * (n % k), k)
    return mpc(cos_pi_raw(t), sin_pi_raw(t))


def root_of_unity(n: int, k: int, precision: int = DEFAULT_PRECISION) -> mpc:
    with working(precision):
        v = root_of_unity_raw(n, k)
    return round_to(v, precision)


@functools.lru_cache(maxsize=256)
def _root_table_cached(k: int, ctx_precision: int):
    with gmpy2.context(precision=ctx_precision):
        return tuple(root_of_unity_raw(n, k) for n in range(k))


def root_of_unity_table(k: int):
    """All k-th roots of unity at the active context's precision.

    Indexed by exponent mod k; cached per (k, precision) since evaluator
    loops hit the same table thousands of times.
    """
    return _root_table_cached(k, gmpy2.get_context().precision)


def decimal_str(x) -> str:
    """Round-trippable decimal form of an mpfr (or of mpc as 're+imj').

    Built from the exact digit expansion; gmpy2's __format__ is not relied
    on.  Zero prints as plain "0".
    """
    if isinstance(x, mpc):
        re = decimal_str(x.real)
        im = decimal_str(x.imag)
        joiner = "" if im.startswith("-") else "+"
        return f"{re}{joiner}{im}j"
    if not isinstance(x, mpfr):
        x = gmpy2.mpfr(x, 64)
    if gmpy2.is_nan(x) or gmpy2.is_infinite(x):
        return str(x)
    if gmpy2.is_zero(x):
        return "0"
    n_digits = int(x.precision * 0.30103) + 3
    mant, exp, _ = x.digits(10, n_digits)
    sign = ""
    if mant.startswith("-"):
        sign, mant = "-", mant[1:]
    return f"{sign}{mant[0]}.{mant[1:]}e{exp - 1:+03d}"
