"""Exact integer number theory: factorization, multiplicative functions,
Farey fractions, and fundamental units of real quadratic fields.

Everything here runs on Python integers and fractions.Fraction only - no
floating point - so results feed the exact sides of identity checks.
"""

import math
import threading
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Tuple

import gmpy2

from .errors import ConsistencyError, DomainError


class FareyFraction(NamedTuple):
    """Reduced fraction a/q with 0 < a <= q."""

    a: int
    q: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, self.q)

    def __str__(self) -> str:
        return f"{self.a}/{self.q}"


class PellUnit(NamedTuple):
    """Fundamental unit (x + y*sqrt(p))/2 of Q(sqrt(p)), p prime = 1 mod 4.

    Satisfies x^2 - p*y^2 = 4*norm with norm in {+1, -1}.  ``half`` is True
    when x and y are both odd (the unit genuinely lives in half-integers).
    """

    x: int
    y: int
    half: bool
    norm: int


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, exponent), ...], p ascending.

    Plain trial division; intended for the modest operands that appear in
    identity parameters, not for cryptographic sizes.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    # remaining factors are coprime to 6; step through 6k+-1
    d = 5
    while d * d <= n:
        for q in (d, d + 2):
            if n % q == 0:
                e = 0
                while n % q == 0:
                    n //= q
                    e += 1
                out.append((q, e))
        d += 6
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def divisors(n: int) -> List[int]:
    """All positive divisors of n >= 1, ascending."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Moebius function: (-1)^omega(n) on squarefree n, else 0."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    result = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        result = -result
    return result


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError("n must be a positive integer")
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


# Sieved Moebius table, grown on demand.  mertens_odd and the Farey-scan
# code both walk long ranges of q, so per-value factorization would be the
# wrong tool there.
_MU: List[int] = [0, 1]
_MU_LOCK = threading.Lock()


def _ensure_mobius_table(limit: int) -> List[int]:
    with _MU_LOCK:
        if limit < len(_MU):
            return _MU
        n = max(limit, 2 * (len(_MU) - 1))
        mu = [0] * (n + 1)
        mu[1] = 1
        primes: List[int] = []
        composite = bytearray(n + 1)
        for i in range(2, n + 1):
            if not composite[i]:
                primes.append(i)
                mu[i] = -1
            for p in primes:
                ip = i * p
                if ip > n:
                    break
                composite[ip] = 1
                if i % p == 0:
                    mu[ip] = 0
                    break
                mu[ip] = -mu[i]
        _MU[:] = mu
        return _MU


def mobius_table(limit: int) -> List[int]:
    """List t with t[n] = mobius(n) for 1 <= n <= limit (t[0] unused)."""
    if limit < 1:
        raise DomainError("limit must be a positive integer")
    return _ensure_mobius_table(limit)[: limit + 1]


def mertens_odd(limit: int) -> int:
    """Sum of mobius(q) over odd q with 1 <= q <= limit."""
    if limit < 1:
        raise DomainError("limit must be a positive integer")
    mu = _ensure_mobius_table(limit)
    return sum(mu[q] for q in range(1, limit + 1, 2))


def ramanujan_sum(q: int, n: int) -> int:
    """c_q(n): sum of e^(2*pi*i*a*n/q) over 1 <= a <= q with gcd(a, q) = 1.

    Computed exactly as sum_{d | gcd(n, q)} d * mobius(q / d); the n = 0
    case degenerates to Euler phi of q.
    """
    if q < 1:
        raise DomainError("q must be a positive integer")
    g = math.gcd(abs(n), q)
    return sum(d * mobius(q // d) for d in divisors(g))


def kronecker_symbol(j: int, d: int) -> int:
    """Kronecker symbol (j | d) for d >= 1.

    Handles even d via the standard 2-adic rule ((j|2) from j mod 8) and the
    odd part with the binary Jacobi reciprocity loop.
    """
    if d < 1:
        raise DomainError("d must be a positive integer")
    result = 1
    if d % 2 == 0:
        if j % 2 == 0:
            return 0
        t = 0
        while d % 2 == 0:
            d //= 2
            t += 1
        if t % 2 == 1 and j % 8 in (3, 5):
            result = -result
    a = j % d
    while a:
        while a % 2 == 0:
            a //= 2
            if d % 8 in (3, 5):
                result = -result
        a, d = d, a
        if a % 4 == 3 and d % 4 == 3:
            result = -result
        a %= d
    return result if d == 1 else 0


def chi4(n: int) -> int:
    """Nonprincipal character mod 4: 0 on evens, +1 at 1 mod 4, -1 at 3 mod 4."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def mod_inverse(h: int, k: int) -> int:
    """Inverse of h modulo k >= 2, as the representative in [1, k-1]."""
    if k < 2:
        raise DomainError("k must be at least 2")
    if math.gcd(h, k) != 1:
        raise DomainError("h must be coprime to k")
    return pow(h, -1, k)


def farey_sequence(limit: int) -> Iterator[FareyFraction]:
    """Yield the Farey fractions of order ``limit`` in (0, 1], ascending.

    Uses the mediant next-term recurrence, so each step is O(1); 0/1 is
    skipped and the stream ends at 1/1.
    """
    if limit < 1:
        raise DomainError("limit must be a positive integer")
    a, b, c, d = 0, 1, 1, limit
    while True:
        k = (limit + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        yield FareyFraction(a, b)
        if a == b:
            return


def _pell_pm4_base(p: int) -> Tuple[int, int, int]:
    """Minimal (x, y, norm) with x^2 - p*y^2 = norm in {+1, -1}, x, y > 0.

    Continued-fraction expansion of sqrt(p): the convergent just before the
    period closes gives the minimal solution, with norm (-1)^period.
    """
    a0 = math.isqrt(p)
    num, den = 0, 1
    a = a0
    h_prev, h_cur = 1, a0
    k_prev, k_cur = 0, 1
    period = 0
    while True:
        period += 1
        num = a * den - num
        den = (p - num * num) // den
        if den == 1:
            break
        a = (a0 + num) // den
        h_prev, h_cur = h_cur, a * h_cur + h_prev
        k_prev, k_cur = k_cur, a * k_cur + k_prev
    norm = 1 if period % 2 == 0 else -1
    if h_cur * h_cur - p * k_cur * k_cur != norm:
        raise ConsistencyError(f"continued-fraction unit failed for p={p}")
    return h_cur, k_cur, norm


def _half_unit_cube_root(p: int, x1: int, y1: int) -> Tuple[int, int]:
    """Odd (u, v) with ((u + v*sqrt(p))/2)^3 = x1 + y1*sqrt(p), or (0, 0).

    When the fundamental unit of the full ring of integers is a half-integer
    eta, the minimal integer-coordinate unit is eta^3; invert that cube
    exactly.  A float estimate locates the candidate, integer arithmetic
    confirms it.
    """
    norm1 = x1 * x1 - p * y1 * y1
    bits = max(128, x1.bit_length() + 64)
    with gmpy2.context(precision=bits):
        eps = x1 + y1 * gmpy2.sqrt(p)
        eta = gmpy2.cbrt(eps)
        # conj(eta) = norm(eta)/eta and norm(eta)^3 = norm(eps)
        u = gmpy2.mpz(gmpy2.rint(eta + norm1 / eta))
        v = gmpy2.mpz(gmpy2.rint((eta - norm1 / eta) / gmpy2.sqrt(p)))
    u, v = int(u), int(v)
    if u <= 0 or v <= 0 or u % 2 == 0 or v % 2 == 0:
        return 0, 0
    # ((u + v sqrt p)/2)^3 = (u(u^2 + 3 p v^2) + v(3 u^2 + p v^2) sqrt p)/8
    if u * (u * u + 3 * p * v * v) == 8 * x1 and v * (3 * u * u + p * v * v) == 8 * y1:
        return u, v
    return 0, 0


def pell_fundamental_unit(p: int) -> PellUnit:
    """Fundamental unit of the ring of integers of Q(sqrt(p)), p prime = 1 mod 4.

    Returned as (x, y, half, norm) encoding (x + y*sqrt(p))/2 with
    x^2 - p*y^2 = 4*norm.  The minimal integer solution of X^2 - p*Y^2 = +-1
    comes from the continued fraction of sqrt(p); the genuine fundamental
    unit is either that solution or its exact cube root in half-integers.
    """
    if p < 5 or p % 4 != 1 or not is_prime(p):
        raise DomainError("p must be a prime congruent to 1 mod 4")
    x1, y1, norm1 = _pell_pm4_base(p)
    u, v = _half_unit_cube_root(p, x1, y1)
    if u:
        x, y = u, v
    else:
        x, y = 2 * x1, 2 * y1
    norm4 = x * x - p * y * y
    if norm4 not in (4, -4):
        raise ConsistencyError(f"unit normalization failed for p={p}")
    return PellUnit(x, y, x % 2 == 1, norm4 // 4)
