"""Character-weighted Farey sine scan and its growth diagnostics.

`farey_chi_sine_sum` accumulates, over odd moduli q, the blocks

    chi(q) * sum of chi(a) sin(pi a / (2 q))  over odd a < q coprime to q,

chi being the nonprincipal character mod 4.  The running total W(Q)
satisfies the exact relation 2 W(Q) + 1 = M_odd(Q), the Mertens-type sum of
the Mobius function over odd arguments; `rh_table` tracks that relation
incrementally (column `residual`) while the interesting open question is
the growth of |W(Q)| itself.  `bound_ratio` reports |W|/sqrt(Q) and
`growth_fit` estimates alpha in |W(Q)| ~ C * Q**alpha from a table.

Two interchangeable kernels compute the per-q block in IEEE doubles: a
compiled extension and a pure-Python mirror with identical summation order,
so they agree bit-for-bit up to libm.  Import picks the compiled one when
available (`ACTIVE_KERNEL` / `KERNEL_NAME`).  mode="highprec" bypasses both
and sums with guarded mpfr precision for tolerance-grade residuals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from statistics import StatisticsError, linear_regression
from typing import Iterable, List, NamedTuple, Sequence, Tuple

import gmpy2
from gmpy2 import mpfr

from .errors import DomainError
from .ntheory import mobius_table
from .precision import (
    DEFAULT_PRECISION,
    check_precision,
    round_to,
    sin_pi_raw,
    working,
)

__all__ = [
    "ACTIVE_KERNEL",
    "KERNEL_NAME",
    "RhRow",
    "chi_sine_block",
    "farey_chi_sine_sum",
    "growth_fit",
    "rh_table",
]


class RhRow(NamedTuple):
    Q: int
    W: object  # float in fast mode, mpfr in highprec mode
    M_odd: int
    residual: object
    bound_ratio: object


def _chi_sine_block_py(q: int) -> float:
    """One odd-q block in IEEE doubles; mirrors the compiled kernel exactly
    (same term order, same per-term expression)."""
    acc = 0.0
    step = math.pi / (2.0 * q)
    for a in range(1, q, 2):
        if math.gcd(a, q) == 1:
            if a % 4 == 1:
                acc += math.sin(a * step)
            else:
                acc -= math.sin(a * step)
    if q % 4 == 1:
        return acc
    return -acc


try:
    from ._fareyscan import chi_sine_block as _chi_sine_block_native

    ACTIVE_KERNEL = _chi_sine_block_native
    KERNEL_NAME = "compiled"
except ImportError:  # extension is optional; the mirror is always present
    ACTIVE_KERNEL = _chi_sine_block_py
    KERNEL_NAME = "python"

chi_sine_block = ACTIVE_KERNEL


def _chi_sine_block_mpfr(q: int) -> mpfr:
    """The same block at the ambient mpfr precision."""
    acc = mpfr(0)
    for a in range(1, q, 2):
        if math.gcd(a, q) == 1:
            t = sin_pi_raw(Fraction(a, 2 * q))
            acc += t if a % 4 == 1 else -t
    return -acc if q % 4 == 3 else acc


def _check_q(Q) -> int:
    if isinstance(Q, bool) or not isinstance(Q, int):
        raise DomainError("Q must be an integer")
    if Q < 3:
        raise DomainError("Q must be at least 3")
    return Q


def farey_chi_sine_sum(Q: int, mode: str = "fast", precision: int = DEFAULT_PRECISION):
    """W(Q): blocks accumulated over odd q in [3, Q], ascending."""
    _check_q(Q)
    if mode == "fast":
        acc = 0.0
        for q in range(3, Q + 1, 2):
            acc += ACTIVE_KERNEL(q)
        return acc
    if mode != "highprec":
        raise DomainError("mode must be 'fast' or 'highprec'")
    check_precision(precision)
    with working(precision):
        acc = mpfr(0)
        for q in range(3, Q + 1, 2):
            acc += _chi_sine_block_mpfr(q)
    return round_to(acc, precision)


def rh_table(
    checkpoints: Iterable[int],
    mode: str = "fast",
    precision: int = DEFAULT_PRECISION,
) -> List[RhRow]:
    """One row per checkpoint Q, accumulated in a single ascending pass.

    W and M_odd advance together over odd q, so a dense table costs the
    same as its largest entry.  residual = |2 W + 1 - M_odd| measures the
    exact relation; bound_ratio = |W| / sqrt(Q).
    """
    qs = list(checkpoints)
    for v in qs:
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError("checkpoints must be integers")
    if not qs:
        return []
    if qs[0] < 3:
        raise DomainError("checkpoints must be at least 3")
    if any(b <= a for a, b in zip(qs, qs[1:])):
        raise DomainError("checkpoints must be strictly increasing")
    if mode not in ("fast", "highprec"):
        raise DomainError("mode must be 'fast' or 'highprec'")

    mob = mobius_table(qs[-1])
    rows: List[RhRow] = []
    if mode == "fast":
        w = 0.0
        m_odd = mob[1]
        q = 3
        for Q in qs:
            while q <= Q:
                w += ACTIVE_KERNEL(q)
                m_odd += mob[q]
                q += 2
            residual = abs(2.0 * w + 1.0 - m_odd)
            rows.append(RhRow(Q, w, m_odd, residual, abs(w) / math.sqrt(Q)))
        return rows

    check_precision(precision)
    with working(precision):
        w = mpfr(0)
        m_odd = mob[1]
        q = 3
        for Q in qs:
            while q <= Q:
                w += _chi_sine_block_mpfr(q)
                m_odd += mob[q]
                q += 2
            residual = abs(2 * w + 1 - m_odd)
            ratio = abs(w) / gmpy2.sqrt(Q)
            rows.append(
                RhRow(
                    Q,
                    round_to(w, precision),
                    m_odd,
                    round_to(residual, precision),
                    round_to(ratio, precision),
                )
            )
    return rows


def growth_fit(rows: Sequence[RhRow]) -> Tuple[float, float]:
    """(C, alpha) least-squares fit of |W(Q)| ~ C * Q**alpha.

    Rows with W = 0 carry no log-scale information and are skipped.
    """
    xs = []
    ys = []
    for r in rows:
        w = abs(float(r.W))
        if w != 0.0:
            xs.append(math.log(r.Q))
            ys.append(math.log(w))
    if len(xs) < 2:
        raise DomainError("need at least two rows with nonzero W")
    try:
        alpha, intercept = linear_regression(xs, ys)
    except StatisticsError:
        raise DomainError("need at least two distinct Q values") from None
    return math.exp(intercept), alpha
