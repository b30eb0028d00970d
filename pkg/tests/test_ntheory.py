"""Integer-layer tests: pinned values plus independent oracles.

The pinned values were worked out by hand (or against the cosine-sum /
Euler-criterion oracles below) before the implementations were written.
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigsum.errors import DomainError
from trigsum.ntheory import (
    FareyFraction,
    PellUnit,
    chi4,
    divisors,
    euler_phi,
    factorize,
    farey_sequence,
    is_prime,
    kronecker_symbol,
    mertens_odd,
    mobius,
    mobius_table,
    mod_inverse,
    pell_fundamental_unit,
    ramanujan_sum,
)


# ---------------------------------------------------------------- factorize

def test_factorize_pinned():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(9975) == [(3, 1), (5, 2), (7, 1), (19, 1)]
    assert factorize(2) == [(2, 1)]
    assert factorize(97) == [(97, 1)]


def test_factorize_rejects_nonpositive():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(-6)


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_roundtrip(n):
    fac = factorize(n)
    prod = 1
    for p, e in fac:
        assert e >= 1
        assert is_prime(p)
        prod *= p**e
    assert prod == n
    assert [p for p, _ in fac] == sorted({p for p, _ in fac})


# ------------------------------------------------------------------ mobius

def test_mobius_pinned():
    assert mobius(1) == 1
    assert mobius(9) == 0
    assert mobius(15) == 1
    assert mobius(2) == -1
    assert mobius(30) == -1


def test_mobius_divisor_sums():
    # sum_{d | n} mu(d) vanishes except at n = 1
    for n in range(1, 2001):
        total = sum(mobius(d) for d in divisors(n))
        assert total == (1 if n == 1 else 0), n


def test_mobius_table_matches_pointwise():
    table = mobius_table(5000)
    for n in range(1, 5001):
        assert table[n] == mobius(n), n


@given(st.integers(min_value=1, max_value=300), st.integers(min_value=1, max_value=300))
def test_mobius_multiplicative(m, n):
    if math.gcd(m, n) == 1:
        assert mobius(m * n) == mobius(m) * mobius(n)


def test_mertens_odd_pinned():
    assert mertens_odd(1) == 1
    assert mertens_odd(5) == -1
    # 1 - 1 - 1 - 1 + 0 - 1 - 1 + 1 over q = 1, 3, 5, 7, 9, 11, 13, 15
    assert mertens_odd(15) == -3


def test_mertens_odd_matches_direct_sum():
    for q_max in range(1, 500):
        direct = sum(mobius(q) for q in range(1, q_max + 1, 2))
        assert mertens_odd(q_max) == direct


# ----------------------------------------------------------- ramanujan_sum

def test_ramanujan_pinned():
    assert ramanujan_sum(5, 1) == -1
    assert ramanujan_sum(1, 7) == 1
    assert ramanujan_sum(6, 3) == -2
    assert ramanujan_sum(4, 2) == -2
    assert ramanujan_sum(9, 0) == euler_phi(9)


def test_ramanujan_matches_cosine_sum():
    # independent oracle: the defining exponential sum, at double precision
    for q in range(1, 50):
        for n in range(0, 30):
            direct = sum(
                math.cos(2 * math.pi * a * n / q)
                for a in range(1, q + 1)
                if math.gcd(a, q) == 1
            )
            assert abs(direct - ramanujan_sum(q, n)) < 1e-9, (q, n)


def test_ramanujan_negative_n():
    for q in (5, 6, 12):
        for n in range(1, 10):
            assert ramanujan_sum(q, -n) == ramanujan_sum(q, n)


# ------------------------------------------------------- kronecker / chi4

def test_kronecker_pinned():
    assert kronecker_symbol(1, 13) == 1
    assert kronecker_symbol(2, 13) == -1
    assert kronecker_symbol(6, 13) == -1
    assert kronecker_symbol(0, 13) == 0
    assert kronecker_symbol(13, 13) == 0


def test_kronecker_euler_criterion():
    # for odd prime p: (j | p) = j^((p-1)/2) mod p
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        for j in range(0, 2 * p):
            e = pow(j, (p - 1) // 2, p)
            expected = 0 if e == 0 else (1 if e == 1 else -1)
            assert kronecker_symbol(j, p) == expected, (j, p)


def test_kronecker_even_modulus():
    # (j | 2) is 0 on evens, +1 for j = +-1 mod 8, -1 for j = +-3 mod 8
    assert kronecker_symbol(2, 2) == 0
    assert kronecker_symbol(1, 2) == 1
    assert kronecker_symbol(7, 2) == 1
    assert kronecker_symbol(3, 2) == -1
    assert kronecker_symbol(5, 2) == -1
    for j in range(1, 60):
        for d1 in range(1, 30):
            for d2 in (2, 4, 8):
                assert (
                    kronecker_symbol(j, d1 * d2)
                    == kronecker_symbol(j, d1) * kronecker_symbol(j, d2)
                )


def test_chi4_pinned():
    assert chi4(1) == 1
    assert chi4(3) == -1
    assert chi4(8) == 0
    assert chi4(-3) == 1
    assert chi4(-1) == -1


def test_chi4_multiplicative():
    for m in range(1, 100, 2):
        for n in range(1, 100, 2):
            assert chi4(m * n) == chi4(m) * chi4(n)


def test_chi4_matches_kronecker_minus4():
    # chi4 is the character attached to discriminant -4 (positive arguments)
    for n in range(1, 200):
        assert chi4(n) == kronecker_symbol(-4, n)


# ------------------------------------------------------------- mod_inverse

def test_mod_inverse_pinned():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(2, 3) == 2
    assert mod_inverse(11, 26) == 19


def test_mod_inverse_property():
    for k in range(2, 80):
        for h in range(1, 2 * k):
            if math.gcd(h, k) == 1:
                inv = mod_inverse(h, k)
                assert 1 <= inv < k
                assert (h * inv) % k == 1


def test_mod_inverse_rejects():
    with pytest.raises(DomainError):
        mod_inverse(2, 4)
    with pytest.raises(DomainError):
        mod_inverse(1, 1)


# ------------------------------------------------------------------- farey

def test_farey_pinned():
    assert list(farey_sequence(1)) == [FareyFraction(1, 1)]
    assert [str(f) for f in farey_sequence(3)] == ["1/3", "1/2", "2/3", "1/1"]
    assert len(list(farey_sequence(5))) == 10


def test_farey_structure():
    for q_max in range(1, 501, 49):
        seq = list(farey_sequence(q_max))
        # count is the totient summatory function
        assert len(seq) == sum(euler_phi(q) for q in range(1, q_max + 1))
        prev = Fraction(0)
        for f in seq:
            assert math.gcd(f.a, f.q) == 1
            assert 1 <= f.q <= q_max
            cur = f.as_fraction()
            assert cur > prev
            prev = cur
        assert prev == 1
        # unimodular neighbor relation
        for f, g in zip(seq, seq[1:]):
            assert g.a * f.q - f.a * g.q == 1


# -------------------------------------------------------------------- pell

def test_pell_pinned():
    assert pell_fundamental_unit(5) == PellUnit(1, 1, True, -1)
    assert pell_fundamental_unit(13) == PellUnit(3, 1, True, -1)
    # (8 + 2 sqrt 17)/2 = 4 + sqrt 17
    assert pell_fundamental_unit(17) == PellUnit(8, 2, False, -1)
    assert pell_fundamental_unit(29) == PellUnit(5, 1, True, -1)
    assert pell_fundamental_unit(41) == PellUnit(64, 10, False, -1)


def test_pell_norm_and_minimality():
    primes = [p for p in range(5, 300) if is_prime(p) and p % 4 == 1]
    for p in primes:
        unit = pell_fundamental_unit(p)
        assert unit.x > 0 and unit.y > 0
        assert unit.x * unit.x - p * unit.y * unit.y == 4 * unit.norm
        assert unit.half == (unit.x % 2 == 1)
        if unit.half:
            assert unit.y % 2 == 1
        # nothing smaller solves x^2 - p y^2 = +-4 (exhaustive below y)
        for y in range(1, unit.y):
            for target in (4, -4):
                sq = target + p * y * y
                if sq > 0:
                    x = math.isqrt(sq)
                    assert x * x != sq, (p, x, y)


def test_pell_norm_is_minus_one_for_these_primes():
    # classical: for primes p = 1 mod 4 the fundamental unit has norm -1
    for p in (5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113, 421):
        assert pell_fundamental_unit(p).norm == -1


def test_pell_large_base_solution():
    # p = 421 has an enormous minimal solution; must return quickly
    unit = pell_fundamental_unit(421)
    assert unit.x * unit.x - 421 * unit.y * unit.y == 4 * unit.norm


def test_pell_rejects():
    for bad in (4, 7, 9, 15, 21):
        with pytest.raises(DomainError):
            pell_fundamental_unit(bad)


# ---------------------------------------------------------------- is_prime

@settings(max_examples=300)
@given(st.integers(min_value=-10, max_value=20000))
def test_is_prime_against_factorize(n):
    if n < 2:
        assert not is_prime(n)
    else:
        assert is_prime(n) == (factorize(n) == [(n, 1)])
