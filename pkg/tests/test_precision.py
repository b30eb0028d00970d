"""High-precision trig layer: pinned exact points, symmetry contracts,
and cross-checks against an independent multiprecision library (mpmath).
"""

import random
from fractions import Fraction

import gmpy2
import mpmath
import pytest
from gmpy2 import mpfr

from trigsum.errors import DomainError, SingularTerm
from trigsum.precision import (
    DEFAULT_PRECISION,
    GUARD_BITS,
    cos_pi,
    cot_pi,
    csc_pi,
    decimal_str,
    is_root_one_or_minus_one,
    root_of_unity,
    root_of_unity_table,
    sec_pi,
    sin_pi,
    tan_pi,
    tau,
    working,
)

F = Fraction


def as_mpf(x):
    return mpmath.mpf(str(decimal_str(x)))


# --------------------------------------------------------- exact points

def test_sin_exact_points():
    assert sin_pi(F(1, 2)) == 1
    assert sin_pi(F(1, 6)) == mpfr("0.5")
    assert sin_pi(0) == 0
    assert sin_pi(F(5, 6)) == mpfr("0.5")
    assert sin_pi(F(7, 6)) == mpfr("-0.5")
    assert sin_pi(3) == 0
    assert sin_pi(F(-1, 2)) == -1


def test_cos_exact_points():
    assert cos_pi(F(1, 2)) == 0
    assert cos_pi(0) == 1
    assert cos_pi(1) == -1
    assert cos_pi(F(1, 3)) == mpfr("0.5")
    assert cos_pi(F(2, 3)) == mpfr("-0.5")


def test_tan_cot_exact_points():
    assert tan_pi(0) == 0
    assert tan_pi(F(1, 4)) == 1
    assert tan_pi(F(3, 4)) == -1
    assert cot_pi(F(1, 4)) == 1
    assert cot_pi(F(3, 4)) == -1
    assert cot_pi(F(1, 2)) == 0


def test_csc_sec_exact_points():
    assert csc_pi(F(1, 2)) == 1
    assert csc_pi(F(3, 2)) == -1
    assert csc_pi(F(1, 6)) == 2
    assert csc_pi(F(5, 6)) == 2
    assert csc_pi(F(7, 6)) == -2
    assert sec_pi(0) == 1
    assert sec_pi(1) == -1
    assert sec_pi(F(1, 3)) == 2
    assert sec_pi(F(2, 3)) == -2


def test_poles_detected_exactly():
    with pytest.raises(SingularTerm):
        cot_pi(0)
    with pytest.raises(SingularTerm):
        cot_pi(2)
    with pytest.raises(SingularTerm):
        tan_pi(F(1, 2))
    with pytest.raises(SingularTerm):
        csc_pi(1)
    with pytest.raises(SingularTerm):
        sec_pi(F(3, 2))
    try:
        cot_pi(F(7, 7))
    except SingularTerm as exc:
        assert exc.argument == 0


def test_min_precision_enforced():
    with pytest.raises(DomainError):
        sin_pi(F(1, 7), 32)


# ------------------------------------------------------------- symmetry

def test_bitwise_symmetries():
    rng = random.Random(20260816)
    for _ in range(500):
        den = rng.randrange(2, 10**4)
        num = rng.randrange(1, den)
        r = F(num, den)
        s = sin_pi(r)
        assert sin_pi(1 - r) == s  # bitwise
        with gmpy2.context(precision=DEFAULT_PRECISION):
            neg = -s
        assert sin_pi(-r) == neg
        assert sin_pi(r + 2) == s
        assert cos_pi(-r) == cos_pi(r)


def test_pythagorean_within_tau4():
    rng = random.Random(17)
    bound = tau(4, DEFAULT_PRECISION)
    for _ in range(500):
        den = rng.randrange(2, 10**4)
        num = rng.randrange(1, den)
        r = F(num, den)
        s = sin_pi(r)
        c = cos_pi(r)
        with working(DEFAULT_PRECISION):
            err = abs(s * s + c * c - 1)
        assert err <= bound, r


def test_reciprocal_and_quotient_definitions():
    rng = random.Random(99)
    for _ in range(200):
        den = rng.randrange(3, 500)
        num = rng.randrange(1, den)
        r = F(num, den)
        with working(DEFAULT_PRECISION):
            if r % 1 != 0:
                assert abs(csc_pi(r) * sin_pi(r) - 1) < mpfr(2) ** -250
            if r % 1 != 0 and 2 * r % 1 != 0:
                assert abs(tan_pi(r) * cot_pi(r) - 1) < mpfr(2) ** -250
            if 2 * r % 1 != 0:
                assert abs(sec_pi(r) * cos_pi(r) - 1) < mpfr(2) ** -250


def test_precision_doubling():
    rng = random.Random(7)
    for _ in range(60):
        den = rng.randrange(2, 3000)
        num = rng.randrange(1, den)
        r = F(num, den)
        for P in (64, 128, 256):
            lo = sin_pi(r, P)
            hi = sin_pi(r, 2 * P)
            assert abs(mpfr(lo, 2 * P) - hi) <= mpfr(2) ** -(P - 64)


# ------------------------------------------------- mpmath cross-checks

def test_against_mpmath():
    mpmath.mp.prec = DEFAULT_PRECISION + 40
    rng = random.Random(31337)
    cases = [(F(n, d)) for d in (7, 12, 360, 997) for n in range(1, d, max(1, d // 9))]
    cases += [F(rng.randrange(1, 10**4), 10**4) for _ in range(40)]
    for r in cases:
        x = mpmath.mpf(r.numerator) / r.denominator
        assert abs(as_mpf(sin_pi(r)) - mpmath.sinpi(x)) < mpmath.mpf(2) ** -250
        assert abs(as_mpf(cos_pi(r)) - mpmath.cospi(x)) < mpmath.mpf(2) ** -250
        if 2 * r % 1 != 0:
            assert abs(as_mpf(tan_pi(r)) - mpmath.sinpi(x) / mpmath.cospi(x)) < mpmath.mpf(2) ** -245
        if r % 1 != 0:
            assert abs(as_mpf(cot_pi(r)) - mpmath.cospi(x) / mpmath.sinpi(x)) < mpmath.mpf(2) ** -240


# ------------------------------------------------------ roots of unity

def test_root_of_unity_pinned():
    i = root_of_unity(1, 4)
    assert i.real == 0 and i.imag == 1
    one = root_of_unity(17, 17)
    assert one.real == 1 and one.imag == 0
    w = root_of_unity(1, 3)
    assert w.real == mpfr("-0.5")
    with working(DEFAULT_PRECISION):
        assert abs(w.imag - gmpy2.sqrt(3) / 2) < mpfr(2) ** -250


def test_root_exponent_reduced_mod_k():
    for k in (3, 5, 8, 12):
        for n in range(-2 * k, 2 * k + 1):
            a = root_of_unity(n, k)
            b = root_of_unity(n % k, k)
            assert a == b  # bitwise, thanks to exact reduction


def test_root_power_closes():
    for k in range(1, 65):
        z = root_of_unity(1, k)
        with working(DEFAULT_PRECISION):
            w = z**k
            assert abs(w - 1) <= tau(k, DEFAULT_PRECISION)


def test_root_table():
    with working(DEFAULT_PRECISION):
        table = root_of_unity_table(12)
        assert len(table) == 12
        for n in range(12):
            assert table[n] == root_of_unity_table(12)[n]
    for n in range(12):
        with working(DEFAULT_PRECISION):
            expect = root_of_unity_raw_like(n, 12)
            assert table[n] == expect


def root_of_unity_raw_like(n, k):
    from trigsum.precision import root_of_unity_raw

    return root_of_unity_raw(n, k)


def test_is_root_one_or_minus_one():
    assert is_root_one_or_minus_one(6, 3) == 1
    assert is_root_one_or_minus_one(2, 4) == -1
    assert is_root_one_or_minus_one(1, 3) is None
    assert is_root_one_or_minus_one(0, 5) == 1
    assert is_root_one_or_minus_one(-3, 6) == -1


# -------------------------------------------------------- serialization

def test_decimal_str_roundtrip():
    vals = [sin_pi(F(1, 7)), cos_pi(F(3, 11)), mpfr(0), mpfr("-0.00123", 200)]
    for v in vals:
        s = decimal_str(v)
        if v == 0:
            assert s == "0"
        else:
            assert mpfr(s, v.precision + 8) == v or abs(mpfr(s, 300) - v) < abs(v) * mpfr(2) ** -(v.precision - 1)


def test_decimal_str_complex():
    z = root_of_unity(1, 3)
    s = decimal_str(z)
    assert s.endswith("j")
    assert "+" in s or "-" in s


def test_tau_scaling():
    t1 = tau(1, 256)
    t10 = tau(10, 256)
    with working(256):
        assert abs(t10 / t1 - 10) < 1e-30
    assert tau(1, 128) > tau(1, 256)
