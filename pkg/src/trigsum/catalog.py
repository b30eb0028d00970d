"""The identity catalog: finite trigonometric sums paired with closed forms.

Every entry couples a *direct* evaluator (term-by-term summation of the
defining finite sum) with a *closed* evaluator (the claimed equal value:
exact rational where possible, otherwise built from roots of unity, cosecant
squares, or quadratic units).  `verify` runs both sides at guarded precision
and compares against a term-count-aware tolerance; `sweep` does that over
every admissible parameter tuple up to a bound.

Parameter validation is strict and names the violated constraint in the
`DomainError` message ("k must be odd", "mu must divide p + q", ...), so the
command line can surface it verbatim.  All evaluator arithmetic happens in
the ambient gmpy2 context set up by the caller; the public functions wrap
themselves in `working(precision)` and round once on the way out.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Tuple

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .dedekind import RootFactor, complex_recip_sum, dedekind_sum_exact, sawtooth
from .errors import DomainError, SingularTerm
from .ntheory import chi4, factorize, is_prime, mertens_odd, mobius, mod_inverse
from .precision import (
    DEFAULT_PRECISION,
    check_precision,
    cot_pi_raw,
    csc_pi_raw,
    is_root_one_or_minus_one,
    root_of_unity_table,
    round_to,
    sec_pi_raw,
    sin_pi_raw,
    tan_pi_raw,
    tau,
    working,
)
from .quadfield import _residue_split, unit_combination_exact

__all__ = [
    "Identity",
    "IdentityReport",
    "get_identity",
    "list_identities",
    "validate_params",
    "eval_direct",
    "eval_closed",
    "verify",
    "sweep",
    "search_pair_families",
    "iter_pair_families",
]


class Identity(NamedTuple):
    """A catalog entry; `direct`/`closed` map a ParamSet to (value, nterms)."""

    ident: str
    kind: str  # "real" | "rational" | "complex_real" | "complex"
    param_names: Tuple[str, ...]
    summary: str
    validate: Callable
    direct: Callable
    closed: Callable
    grid: Callable
    note: str = ""


class IdentityReport(NamedTuple):
    ident: str
    params: dict
    lhs: object
    rhs: object
    abs_err: object
    tol: object
    imag_leak: object
    passed: bool


_REGISTRY: Dict[str, Identity] = {}


def _register(ident, kind, names, summary, validate, direct, closed, grid, note=""):
    _REGISTRY[ident] = Identity(
        ident, kind, tuple(names), summary, validate, direct, closed, grid, note
    )


# ---------------------------------------------------------------------------
# cached trig at the ambient precision
#
# Sweeps revisit the same rational angles constantly (the reduced fraction of
# mu*((j+beta)h+alpha*k)/hk has only ~2hk possible values across a whole
# (alpha, beta, mu) grid), so one memo layer keyed by (angle, precision) cuts
# the dominant cost.  lru_cache never caches the SingularTerm raises.
# ---------------------------------------------------------------------------


def _prec() -> int:
    return gmpy2.get_context().precision


@lru_cache(maxsize=1 << 18)
def _sin_at(x: Fraction, prec: int):
    return sin_pi_raw(x)


@lru_cache(maxsize=1 << 18)
def _csc_at(x: Fraction, prec: int):
    return csc_pi_raw(x)


@lru_cache(maxsize=1 << 18)
def _cot_at(x: Fraction, prec: int):
    return cot_pi_raw(x)


@lru_cache(maxsize=1 << 18)
def _tan_at(x: Fraction, prec: int):
    return tan_pi_raw(x)


def _sin(num, den):
    return _sin_at(Fraction(num, den), _prec())


def _csc(num, den):
    return _csc_at(Fraction(num, den), _prec())


def _cot(num, den):
    return _cot_at(Fraction(num, den), _prec())


def _tan(num, den):
    return _tan_at(Fraction(num, den), _prec())


def _sec(num, den):
    return sec_pi_raw(Fraction(num, den))


def _unit_recip(e: int, order: int, delta: int):
    """1/(zeta_order^e + delta) with the pole excluded by integer congruence."""
    e %= order
    hit = is_root_one_or_minus_one(e, order)
    if hit is not None and hit == -delta:
        raise SingularTerm(
            "root-of-unity denominator vanishes", argument=Fraction(e, order)
        )
    return 1 / (root_of_unity_table(order)[e] + delta)


# ---------------------------------------------------------------------------
# validation helpers
# ---------------------------------------------------------------------------


def _check_keys(params, names):
    for name in names:
        if name not in params:
            raise DomainError("missing parameter '%s'" % name)
    for key in params:
        if key not in names:
            raise DomainError("unexpected parameter '%s'" % key)


def _as_int(params, name):
    v = params[name]
    if isinstance(v, bool) or not isinstance(v, int):
        raise DomainError("%s must be an integer" % name)
    return v


def _v_single(name, minimum, parity=None):
    def validate(params):
        _check_keys(params, (name,))
        v = _as_int(params, name)
        if v < minimum:
            raise DomainError("%s must be at least %d" % (name, minimum))
        if parity == "odd" and v % 2 == 0:
            raise DomainError("%s must be odd" % name)
        if parity == "even" and v % 2:
            raise DomainError("%s must be even" % name)
        return {name: v}

    return validate


def _v_pair_gcd(kname, jname, k_check, j_check, halves):
    """Validator for the (n|k, j) families with a coprimality hypothesis."""

    def validate(params):
        _check_keys(params, (kname, jname))
        k = _as_int(params, kname)
        j = _as_int(params, jname)
        k_check(k)
        j_check(j)
        if halves:
            if math.gcd(j // 2, k // 2) != 1:
                raise DomainError(
                    "%s/2 and %s/2 must be coprime" % (jname, kname)
                )
        elif math.gcd(j, k) != 1:
            raise DomainError("%s and %s must be coprime" % (jname, kname))
        return {kname: k, jname: j}

    return validate


def _odd_at_least(name, lo):
    def check(v):
        if v < lo:
            raise DomainError("%s must be at least %d" % (name, lo))
        if v % 2 == 0:
            raise DomainError("%s must be odd" % name)

    return check


def _even_at_least(name, lo):
    def check(v):
        if v < lo:
            raise DomainError("%s must be at least %d" % (name, lo))
        if v % 2:
            raise DomainError("%s must be even" % name)

    return check


def _two_mod_four(name):
    def check(v):
        if v < 2 or v % 4 != 2:
            raise DomainError("%s must be congruent to 2 mod 4" % name)

    return check


def _at_least(name, lo):
    def check(v):
        if v < lo:
            raise DomainError("%s must be at least %d" % (name, lo))

    return check


def _zero_mod_four(name):
    def check(v):
        if v < 4 or v % 4:
            raise DomainError("%s must be divisible by 4" % name)

    return check


def _v_coprime_tuple(names, minima):
    def validate(params):
        _check_keys(params, names)
        vals = []
        for name, lo in zip(names, minima):
            v = _as_int(params, name)
            if v < lo:
                raise DomainError("%s must be at least %d" % (name, lo))
            vals.append(v)
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if math.gcd(vals[i], vals[j]) != 1:
                    raise DomainError(
                        "%s and %s must be coprime" % (names[i], names[j])
                    )
        return dict(zip(names, vals))

    return validate


def _v_modified(*, odd, mu, alpha, beta):
    """Validator factory for the S/T cotangent-tangent families.

    `mu` is True/False; `alpha` and `beta` are None, "pos" (1..m-1 coprime)
    or "zero" ({0} union the positive coprime range).
    """
    names = ["h", "k"]
    if mu:
        names.append("mu")
    if alpha:
        names.append("alpha")
    if beta:
        names.append("beta")
    lo = 3 if odd else 2

    def _character(name, mode, v, modulus, modname):
        if mode == "pos":
            if not 1 <= v < modulus:
                raise DomainError("%s must be in [1, %s-1]" % (name, modname))
        elif not 0 <= v < modulus:
            raise DomainError("%s must be in [0, %s-1]" % (name, modname))
        if v and math.gcd(v, modulus) != 1:
            raise DomainError("%s and %s must be coprime" % (name, modname))

    def validate(params):
        _check_keys(params, names)
        h = _as_int(params, "h")
        k = _as_int(params, "k")
        for name, v in (("h", h), ("k", k)):
            if v < lo:
                raise DomainError("%s must be at least %d" % (name, lo))
            if odd and v % 2 == 0:
                raise DomainError("%s must be odd" % name)
        if math.gcd(h, k) != 1:
            raise DomainError("h and k must be coprime")
        out = {"h": h, "k": k}
        if mu:
            m = _as_int(params, "mu")
            if m < (3 if odd else 1):
                raise DomainError("mu must be at least %d" % (3 if odd else 1))
            if odd and m % 2 == 0:
                raise DomainError("mu must be odd")
            if math.gcd(m, h * k) != 1:
                raise DomainError("h, k, mu must be pairwise coprime")
            out["mu"] = m
        if alpha:
            a = _as_int(params, "alpha")
            _character("alpha", alpha, a, h, "h")
            out["alpha"] = a
        if beta:
            b = _as_int(params, "beta")
            _character("beta", beta, b, k, "k")
            out["beta"] = b
        return out

    return validate


# ---------------------------------------------------------------------------
# grid builders (mirror the validators; sweep() sorts the result)
# ---------------------------------------------------------------------------


def _g_single(name, start, step=1):
    def grid(bound):
        for v in range(start, bound + 1, step):
            yield {name: v}

    return grid


def _g_pair(kname, k_iter, jname, j_iter, accept):
    def grid(bound):
        for k in k_iter(bound):
            for j in j_iter(bound):
                if accept(k, j):
                    yield {kname: k, jname: j}

    return grid


def _evens(lo):
    return lambda bound: range(lo, bound + 1, 2)


def _odds(lo):
    return lambda bound: range(lo, bound + 1, 2)


def _ints(lo):
    return lambda bound: range(lo, bound + 1)


def _fours(bound):
    return range(4, bound + 1, 4)


def _two_mod_four_range(bound):
    return range(2, bound + 1, 4)


def _g_coprime_tuple(names, minima):
    def grid(bound):
        def rec(i, acc):
            if i == len(names):
                yield dict(zip(names, acc))
                return
            for v in range(minima[i], bound + 1):
                if all(math.gcd(v, w) == 1 for w in acc):
                    yield from rec(i + 1, acc + [v])

        yield from rec(0, [])

    return grid


def _char_range(modulus, mode):
    vals = [a for a in range(1, modulus) if math.gcd(a, modulus) == 1]
    return [0] + vals if mode == "zero" else vals


def _g_modified(*, odd, mu, alpha, beta):
    lo = 3 if odd else 2
    step = 2 if odd else 1

    def grid(bound):
        for h in range(lo, bound + 1, step):
            for k in range(lo, bound + 1, step):
                if math.gcd(h, k) != 1:
                    continue
                if mu:
                    mus = [
                        m
                        for m in range(3 if odd else 1, bound + 1, step)
                        if math.gcd(m, h * k) == 1
                    ]
                else:
                    mus = [None]
                alphas = _char_range(h, alpha) if alpha else [None]
                betas = _char_range(k, beta) if beta else [None]
                for m in mus:
                    for a in alphas:
                        for b in betas:
                            ps = {"h": h, "k": k}
                            if mu:
                                ps["mu"] = m
                            if alpha:
                                ps["alpha"] = a
                            if beta:
                                ps["beta"] = b
                            yield ps

    return grid


# ---------------------------------------------------------------------------
# direct/closed evaluators
# ---------------------------------------------------------------------------


def _d_csc_square(ps):
    n = ps["n"]
    acc = mpfr(0)
    for k in range(1, n):
        s = _csc(k, n)
        acc += s * s
    return acc, n - 1


def _alternating(k, upper, fn):
    acc = mpfr(0)
    for j in range(1, upper + 1):
        t = fn(2 * j - 1, 2 * k)
        acc += t if j % 2 else -t
    return acc, upper


def _half_sign(k, offset):
    """(-1)^{(k+offset)/2} for odd k."""
    return -1 if ((k + offset) // 2) % 2 else 1


@lru_cache(maxsize=4096)
def _coprime_odd_residues(k):
    return tuple(l for l in range(1, k, 2) if math.gcd(l, k) == 1)


def _quotient_summand(j, t, den):
    """sin((j-1)t pi/den) sin((j+1)t pi/den) / (sin^2(t pi/den) sin^2(jt pi/den))."""
    a = _sin((j - 1) * t, den)
    b = _sin((j + 1) * t, den)
    c = _sin(t, den)
    d = _sin(j * t, den)
    return (a * b) / (c * c * d * d)


def _d_quotient_range(ps, ts, den):
    j = ps["j"]
    acc = mpfr(0)
    count = 0
    for t in ts:
        acc += _quotient_summand(j, t, den)
        count += 1
    return acc, count


def _squarefree_kernel_product(k, quad):
    """k^2/s * prod_{p | k} (1 - 1/p^2), or the character-twisted variant."""
    out = Fraction(k * k, quad)
    for p, _ in factorize(k):
        out *= 1 - Fraction(1, p * p)
    return out


def _d_sine_quotient_alt(ps):
    k = ps["k"]
    acc = mpfr(0)
    count = 0
    for j in range(1, (k - 1) // 2 + 1):
        t = _sin(2 * j, k) / _sin(j, k)
        acc += t if j % 2 else -t
        count += 1
    return acc, count


def _d_tilde_sine(q):
    acc = mpfr(0)
    for l in _coprime_odd_residues(q):
        t = _sin(l, 2 * q)
        acc += t if ((l - 1) // 2) % 2 == 0 else -t
    return acc, len(_coprime_odd_residues(q))


def _cot_pair_sum(x, y, modulus):
    """sum_{n=1}^{modulus-1} cot(pi n x / modulus) cot(pi n y / modulus)."""
    acc = mpfr(0)
    for n in range(1, modulus):
        acc += _cot(n * x, modulus) * _cot(n * y, modulus)
    return acc


def _sum_first_kernel(h, k, mu, alpha, beta, first, second):
    """sum_{j=1}^{k-1} first(mu((j+beta)h+alpha k)/hk) second(jh/k)."""
    acc = mpfr(0)
    for j in range(1, k):
        acc += first(mu * ((j + beta) * h + alpha * k), h * k) * second(j * h, k)
    return acc


def _cross_sum(h, k, mu, alpha, beta, first, second):
    """sum_{j=1}^{mu} first(k(jh+alpha mu)/(mu h)) second(h(jk+beta mu)/(mu k))."""
    acc = mpfr(0)
    for j in range(1, mu + 1):
        acc += first(k * (j * h + alpha * mu), mu * h) * second(
            h * (j * k + beta * mu), mu * k
        )
    return acc


def _modified_definition_ambient(alpha, beta, h, k):
    """Defining exponential-sawtooth sum for S_{alpha,beta}(h,k), ambient."""
    hp = mod_inverse(h, k)
    order = h * k
    e0 = (alpha * k + beta * h) % order
    table = root_of_unity_table(order)
    total = mpc(0)
    count = 0
    for j in range(1, order):
        s2 = sawtooth(Fraction(j * hp, k))
        if not s2:
            continue
        s1 = sawtooth(Fraction(j, order))
        total += table[(j * e0) % order] * mpq(s1 * s2)
        count += 1
    return total, count


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_register(
    "I00",
    "real",
    ("n",),
    "full-range cosecant-squared sum equals (n^2-1)/3",
    _v_single("n", 2),
    _d_csc_square,
    lambda ps: (Fraction(ps["n"] ** 2 - 1, 3), 1),
    _g_single("n", 2),
)

_register(
    "I01",
    "real",
    ("k",),
    "alternating half-range sine sum collapses to a half-unit",
    _v_single("k", 3, "odd"),
    lambda ps: _alternating(ps["k"], (ps["k"] - 1) // 2, _sin),
    lambda ps: (Fraction(_half_sign(ps["k"], 1), 2), 1),
    _g_single("k", 3, 2),
)

_register(
    "I02",
    "real",
    ("k",),
    "alternating half-range cosecant sum",
    _v_single("k", 3, "odd"),
    lambda ps: _alternating(ps["k"], (ps["k"] - 1) // 2, _csc),
    lambda ps: (Fraction(ps["k"] + _half_sign(ps["k"], 1), 2), 1),
    _g_single("k", 3, 2),
)

_register(
    "A01",
    "real",
    ("k",),
    "alternating full-range sine sum vanishes",
    _v_single("k", 3, "odd"),
    lambda ps: _alternating(ps["k"], ps["k"], _sin),
    lambda ps: (Fraction(0), 1),
    _g_single("k", 3, 2),
)

_register(
    "A02",
    "real",
    ("k",),
    "alternating full-range cosecant sum equals k",
    _v_single("k", 3, "odd"),
    lambda ps: _alternating(ps["k"], ps["k"], _csc),
    lambda ps: (Fraction(ps["k"]), 1),
    _g_single("k", 3, 2),
)

_register(
    "I03",
    "real",
    ("n", "j"),
    "neighbour-sine quotient sum over k < n/2 equals (n^2-4)/12",
    _v_pair_gcd("n", "j", _even_at_least("n", 2), _two_mod_four("j"), True),
    lambda ps: _d_quotient_range(ps, range(1, ps["n"] // 2), ps["n"]),
    lambda ps: (Fraction(ps["n"] ** 2 - 4, 12), 1),
    _g_pair(
        "n",
        _evens(2),
        "j",
        lambda b: _two_mod_four_range(b),
        lambda n, j: math.gcd(j // 2, n // 2) == 1,
    ),
)

_register(
    "I04",
    "real",
    ("n", "j"),
    "odd-argument neighbour-sine quotient sum equals n^2/4",
    _v_pair_gcd("n", "j", _even_at_least("n", 2), _two_mod_four("j"), True),
    lambda ps: _d_quotient_range(
        ps, (2 * k + 1 for k in range(ps["n"] // 2)), 2 * ps["n"]
    ),
    lambda ps: (Fraction(ps["n"] ** 2, 4), 1),
    _g_pair(
        "n",
        _evens(2),
        "j",
        lambda b: _two_mod_four_range(b),
        lambda n, j: math.gcd(j // 2, n // 2) == 1,
    ),
)

_register(
    "I05",
    "real",
    ("n", "j"),
    "odd-argument quotient sum for odd n equals (n^2-1)/3",
    _v_pair_gcd("n", "j", _odd_at_least("n", 1), _even_at_least("j", 2), False),
    lambda ps: _d_quotient_range(
        ps, (2 * k + 1 for k in range((ps["n"] - 3) // 2 + 1)), 2 * ps["n"]
    ),
    lambda ps: (Fraction(ps["n"] ** 2 - 1, 3), 1),
    _g_pair("n", _odds(1), "j", _evens(2), lambda n, j: math.gcd(j, n) == 1),
)

_register(
    "I06",
    "real",
    ("n", "j"),
    "odd-argument quotient sum with full angles vanishes",
    _v_pair_gcd("n", "j", _odd_at_least("n", 1), _at_least("j", 1), False),
    lambda ps: _d_quotient_range(
        ps, (2 * k + 1 for k in range((ps["n"] - 3) // 2 + 1)), ps["n"]
    ),
    lambda ps: (Fraction(0), 1),
    _g_pair("n", _odds(1), "j", _ints(1), lambda n, j: math.gcd(j, n) == 1),
)

_register(
    "I07",
    "real",
    ("k",),
    "coprime-restricted alternating sine sum equals a Mobius half-unit",
    _v_single("k", 3, "odd"),
    lambda ps: _d_tilde_sine(ps["k"]),
    lambda ps: (Fraction(_half_sign(ps["k"], -1) * mobius(ps["k"]), 2), 1),
    _g_single("k", 3, 2),
)


def _c_I08(ps):
    k = ps["k"]
    out = Fraction(k, 2)
    for p, _ in factorize(k):
        out *= Fraction(p - 1, p) if p % 4 == 1 else Fraction(p + 1, p)
    return out, 1


def _d_I08(ps):
    k = ps["k"]
    acc = mpfr(0)
    for l in _coprime_odd_residues(k):
        t = _csc(l, 2 * k)
        acc += t if ((l - 1) // 2) % 2 == 0 else -t
    return acc, len(_coprime_odd_residues(k))


_register(
    "I08",
    "real",
    ("k",),
    "coprime-restricted alternating cosecant sum, Euler-product value",
    _v_single("k", 3, "odd"),
    _d_I08,
    _c_I08,
    _g_single("k", 3, 2),
)


def _d_coprime_quotient(ps, residues, den):
    j = ps["j"]
    acc = mpfr(0)
    for l in residues:
        acc += _quotient_summand(j, l, den)
    return acc, len(residues)


_register(
    "I09",
    "real",
    ("k", "j"),
    "coprime-restricted quotient sum equals k^2/3 times prod (1-1/p^2)",
    _v_pair_gcd("k", "j", _odd_at_least("k", 3), _even_at_least("j", 2), False),
    lambda ps: _d_coprime_quotient(ps, _coprime_odd_residues(ps["k"]), 2 * ps["k"]),
    lambda ps: (_squarefree_kernel_product(ps["k"], 3), 1),
    _g_pair("k", _odds(3), "j", _evens(2), lambda k, j: math.gcd(j, k) == 1),
)

_register(
    "I10",
    "real",
    ("k", "j"),
    "even-modulus coprime quotient sum, same squarefree kernel value",
    _v_pair_gcd("k", "j", _even_at_least("k", 2), _two_mod_four("j"), True),
    lambda ps: _d_coprime_quotient(ps, _coprime_odd_residues(ps["k"]), 2 * ps["k"]),
    lambda ps: (_squarefree_kernel_product(ps["k"], 3), 1),
    _g_pair(
        "k",
        _evens(2),
        "j",
        lambda b: _two_mod_four_range(b),
        lambda k, j: math.gcd(j // 2, k // 2) == 1,
    ),
)

_register(
    "I11",
    "real",
    ("k", "j"),
    "quarter-range coprime quotient sum equals k^2/12 times prod (1-1/p^2)",
    _v_pair_gcd("k", "j", _zero_mod_four("k"), _two_mod_four("j"), True),
    lambda ps: _d_coprime_quotient(
        ps,
        [l for l in range(1, ps["k"] // 2) if math.gcd(l, ps["k"]) == 1],
        ps["k"],
    ),
    lambda ps: (_squarefree_kernel_product(ps["k"], 12), 1),
    _g_pair(
        "k",
        lambda b: _fours(b),
        "j",
        lambda b: _two_mod_four_range(b),
        lambda k, j: math.gcd(j // 2, k // 2) == 1,
    ),
)

_register(
    "I12",
    "real",
    ("k", "j"),
    "coprime quotient sum with full angles vanishes",
    _v_pair_gcd("k", "j", _odd_at_least("k", 3), _at_least("j", 1), False),
    lambda ps: _d_coprime_quotient(ps, _coprime_odd_residues(ps["k"]), ps["k"]),
    lambda ps: (Fraction(0), 1),
    _g_pair("k", _odds(3), "j", _ints(1), lambda k, j: math.gcd(j, k) == 1),
)


def _d_I13(ps):
    Q = ps["Q"]
    acc = mpfr(0)
    count = 0
    for q in range(3, Q + 1, 2):
        s, n = _d_tilde_sine(q)
        acc += chi4(q) * s
        count += n
    return acc, count


_register(
    "I13",
    "real",
    ("Q",),
    "character-weighted sine sums accumulate to a Mertens-type count",
    _v_single("Q", 3),
    _d_I13,
    lambda ps: (Fraction(mertens_odd(ps["Q"]) - 1, 2), 1),
    _g_single("Q", 3),
)

_register(
    "I14",
    "real",
    ("k",),
    "alternating double-angle sine quotient sum equals 1",
    _v_single("k", 3, "odd"),
    _d_sine_quotient_alt,
    lambda ps: (Fraction(1), 1),
    _g_single("k", 3, 2),
)


def _v_I15(params):
    _check_keys(params, ("n", "m", "a"))
    n = _as_int(params, "n")
    m = _as_int(params, "m")
    a = _as_int(params, "a")
    for name, v in (("n", n), ("m", m)):
        if v < 3:
            raise DomainError("%s must be at least 3" % name)
        if v % 2 == 0:
            raise DomainError("%s must be odd" % name)
    if not 1 <= a <= (n * m - 1) // 2:
        raise DomainError("a must be in [1, (n*m-1)/2]")
    if a % m == 0:
        raise DomainError("m must not divide a")
    return {"n": n, "m": m, "a": a}


def _d_I15(ps):
    n, m, a = ps["n"], ps["m"], ps["a"]
    k = n * m

    def ratio(t):
        return _sin(2 * t, k) / _sin(t, k)

    acc = ratio(a)
    count = 1
    for j in range(1, (n - 1) // 2 + 1):
        term = ratio(m * j - a) + ratio(m * j + a)
        acc -= term if j % 2 else -term
        count += 2
    return acc, count


def _g_I15(bound):
    for n in range(3, bound + 1, 2):
        for m in range(3, bound + 1, 2):
            for a in range(1, min(bound, (n * m - 1) // 2) + 1):
                if a % m:
                    yield {"n": n, "m": m, "a": a}


_register(
    "I15",
    "real",
    ("n", "m", "a"),
    "double-angle quotient unfolds over a composite modulus",
    _v_I15,
    _d_I15,
    lambda ps: (Fraction(0), 1),
    _g_I15,
)


def _v_I16(params):
    _check_keys(params, ("k", "pairs"))
    k = _as_int(params, "k")
    if k < 5 or k % 4 != 1:
        raise DomainError("k must be congruent to 1 mod 4 and at least 5")
    pairs = params["pairs"]
    if isinstance(pairs, (str, bytes)) or not hasattr(pairs, "__iter__"):
        raise DomainError("pairs must be a sequence of (a, b) pairs")
    clean = []
    for item in pairs:
        pair = tuple(item)
        if len(pair) != 2:
            raise DomainError("pairs must be a sequence of (a, b) pairs")
        a, b = pair
        if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
            raise DomainError("pair entries must be integers")
        if not a > b >= 1:
            raise DomainError("each pair needs a > b >= 1")
        clean.append((a, b))
    if len(clean) != (k - 1) // 4:
        raise DomainError("pairs must contain (k-1)/4 pairs")
    residues = []
    for a, b in clean:
        residues += [a + b, a - b, k - a - b, k - a + b]
    if sorted(residues) != list(range(1, k)):
        raise DomainError("pair residues must tile 1..k-1 exactly")
    return {"k": k, "pairs": tuple(sorted(clean))}


def _d_I16(ps):
    k = ps["k"]
    acc = mpfr(0)
    for a, b in ps["pairs"]:
        term = (
            _sin(2 * a, k) * _sin(2 * b, k) / (_sin(a, k) * _sin(b, k))
        )
        acc += term if (a + b) % 2 == 0 else -term
    return acc, len(ps["pairs"])


_register(
    "I16",
    "real",
    ("k", "pairs"),
    "signed sine-quotient pair family sums to -1",
    _v_I16,
    _d_I16,
    lambda ps: (Fraction(-1), 1),
    lambda bound: iter(()),
    note="no parameter sweep: supply pair families explicitly or via search_pair_families(k)",
)


def _v_I17(params):
    _check_keys(params, ("p", "sign"))
    p = _as_int(params, "p")
    if p < 5 or p % 4 != 1 or not is_prime(p):
        raise DomainError("p must be a prime congruent to 1 mod 4")
    sign = params["sign"]
    if sign not in ("plus", "minus"):
        raise DomainError("sign must be 'plus' or 'minus'")
    return {"p": p, "sign": sign}


def _d_I17(ps):
    p = ps["p"]
    residues, nonresidues = _residue_split(p)
    num = mpfr(1)
    den = mpfr(1)
    for x in nonresidues:
        num *= _sin(x, p)
    for r in residues:
        den *= _sin(r, p)
    ratio = num / den
    inv = 1 / ratio
    value = ratio + inv if ps["sign"] == "plus" else ratio - inv
    return value, p - 1


def _c_I17(ps):
    a, b = unit_combination_exact(ps["p"], ps["sign"])
    if b == 0:
        return Fraction(a), 1
    return a + b * gmpy2.sqrt(ps["p"]), 1


def _g_I17(bound):
    for p in range(5, bound + 1, 4):
        if is_prime(p):
            for sign in ("minus", "plus"):
                yield {"p": p, "sign": sign}


_register(
    "I17",
    "real",
    ("p", "sign"),
    "residue/non-residue sine products combine to a Pell unit power",
    _v_I17,
    _d_I17,
    _c_I17,
    _g_I17,
)


def _v_I18(params):
    _check_keys(params, ("k", "m"))
    k = _as_int(params, "k")
    m = _as_int(params, "m")
    if k < 2:
        raise DomainError("k must be at least 2")
    if not 1 <= m < k:
        raise DomainError("m must be in [1, k-1]")
    if math.gcd(m, k) != 1:
        raise DomainError("m and k must be coprime")
    return {"k": k, "m": m}


def _g_I18(bound):
    for k in range(2, bound + 1):
        for m in range(1, k):
            if math.gcd(m, k) == 1:
                yield {"k": k, "m": m}


def _mk_I18(power, with_numerator, closed_of_k):
    def direct(ps):
        k, m = ps["k"], ps["m"]
        numerator = (k, m, 0) if with_numerator else None
        v = complex_recip_sum(
            [RootFactor(k, m, 0, -1, power)], k - 1, numerator=numerator
        )
        return v, k - 1

    def closed(ps):
        return closed_of_k(ps["k"]), 1

    return direct, closed


for _ident, _power, _with_num, _closed in (
    ("I18a", 1, False, lambda k: Fraction(-(k - 1), 2)),
    ("I18b", 1, True, lambda k: Fraction(k - 1, 2)),
    ("I18c", 2, False, lambda k: Fraction(-(k - 1) * (k - 5), 12)),
    ("I18d", 2, True, lambda k: Fraction(-(k - 1) * (k + 1), 12)),
    ("I18e", 3, False, lambda k: Fraction((k - 1) * (k - 3), 8)),
):
    _d, _c = _mk_I18(_power, _with_num, _closed)
    _register(
        _ident,
        "complex_real",
        ("k", "m"),
        "reciprocal root-of-unity power sum, polynomial value (variant %s)"
        % _ident[-1],
        _v_I18,
        _d,
        _c,
        _g_I18,
    )


def _d_I19(ps):
    p, q = ps["p"], ps["q"]
    s1 = complex_recip_sum([RootFactor(p, 1), RootFactor(p, q)], p - 1)
    s2 = complex_recip_sum([RootFactor(q, 1), RootFactor(q, p)], q - 1)
    return q * s1 + p * s2, p + q - 2


_register(
    "I19",
    "complex_real",
    ("p", "q"),
    "two-modulus reciprocal sum with a symmetric quadratic value",
    _v_coprime_tuple(("p", "q"), (2, 2)),
    _d_I19,
    lambda ps: (
        Fraction(
            -(
                ps["p"] ** 2
                + ps["q"] ** 2
                - 9 * ps["p"] * ps["q"]
                + 3 * ps["p"]
                + 3 * ps["q"]
                + 1
            ),
            12,
        ),
        1,
    ),
    _g_coprime_tuple(("p", "q"), (2, 2)),
)


def _d_I20(ps):
    p, q, mu = ps["p"], ps["q"], ps["mu"]
    s1 = complex_recip_sum([RootFactor(q, p), RootFactor(q, mu)], q - 1)
    s2 = complex_recip_sum([RootFactor(p, q), RootFactor(p, mu)], p - 1)
    s3 = complex_recip_sum([RootFactor(mu, p), RootFactor(mu, q)], mu - 1)
    return p * mu * s1 + q * mu * s2 + p * q * s3, p + q + mu - 3


def _c_I20(ps):
    p, q, mu = ps["p"], ps["q"], ps["mu"]
    return (
        Fraction(p * q * mu)
        - Fraction(p * p + q * q + mu * mu, 12)
        - Fraction(p * q + q * mu + p * mu, 4),
        1,
    )


_register(
    "I20",
    "complex_real",
    ("p", "q", "mu"),
    "three-modulus reciprocal sum with a symmetric cubic value",
    _v_coprime_tuple(("p", "q", "mu"), (1, 1, 1)),
    _d_I20,
    _c_I20,
    _g_coprime_tuple(("p", "q", "mu"), (1, 1, 1)),
)


def _d_I21(ps):
    p, q, mu = ps["p"], ps["q"], ps["mu"]
    return _cot_pair_sum(p, mu, q), q - 1


def _c_I21(ps):
    p, q, mu = ps["p"], ps["q"], ps["mu"]
    s = complex_recip_sum([RootFactor(q, p), RootFactor(q, mu)], q - 1)
    return q - 1 - 4 * s, q - 1


_register(
    "I21",
    "complex_real",
    ("p", "q", "mu"),
    "cotangent pair sum rewritten through reciprocal root sums",
    _v_coprime_tuple(("p", "q", "mu"), (1, 2, 1)),
    _d_I21,
    _c_I21,
    _g_coprime_tuple(("p", "q", "mu"), (1, 2, 1)),
)


def _d_I22(ps):
    p, q, mu = ps["p"], ps["q"], ps["mu"]
    acc = (
        p * mu * _cot_pair_sum(p, mu, q)
        + q * mu * _cot_pair_sum(q, mu, p)
        + p * q * _cot_pair_sum(p, q, mu)
    )
    return acc, p + q + mu - 3


_register(
    "I22",
    "real",
    ("p", "q", "mu"),
    "three-way cotangent pair sums with a cubic defect",
    _v_coprime_tuple(("p", "q", "mu"), (2, 2, 2)),
    _d_I22,
    lambda ps: (
        Fraction(ps["p"] ** 2 + ps["q"] ** 2 + ps["mu"] ** 2, 3)
        - ps["p"] * ps["q"] * ps["mu"],
        1,
    ),
    _g_coprime_tuple(("p", "q", "mu"), (2, 2, 2)),
)


def _v_I23(params):
    _check_keys(params, ("p", "q", "mu"))
    p = _as_int(params, "p")
    q = _as_int(params, "q")
    mu = _as_int(params, "mu")
    for name, v in (("p", p), ("q", q), ("mu", mu)):
        if v < 1:
            raise DomainError("%s must be at least 1" % name)
    if math.gcd(p, q) != 1:
        raise DomainError("p and q must be coprime")
    if (p + q) % mu:
        raise DomainError("mu must divide p + q")
    return {"p": p, "q": q, "mu": mu}


def _g_I23(bound):
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            if math.gcd(p, q) != 1:
                continue
            for mu in range(1, bound + 1):
                if (p + q) % mu == 0:
                    yield {"p": p, "q": q, "mu": mu}


_register(
    "I23",
    "real",
    ("p", "q", "mu"),
    "two-way cotangent pair sums under a divisibility constraint",
    _v_I23,
    lambda ps: (
        ps["p"] * _cot_pair_sum(ps["p"], ps["mu"], ps["q"])
        + ps["q"] * _cot_pair_sum(ps["q"], ps["mu"], ps["p"]),
        ps["p"] + ps["q"] - 2,
    ),
    lambda ps: (
        Fraction(ps["p"] ** 2 + ps["q"] ** 2 + ps["mu"] ** 2, 3 * ps["mu"])
        + Fraction(
            ps["p"] * ps["q"] * (ps["mu"] ** 2 - 6 * ps["mu"] + 2), 3 * ps["mu"]
        ),
        1,
    ),
    _g_I23,
)


def _v_I38(params):
    _check_keys(params, ("h", "k"))
    h = _as_int(params, "h")
    k = _as_int(params, "k")
    if h < 1 or k < 1:
        raise DomainError("h and k must be at least 1")
    if math.gcd(h, k) != 1:
        raise DomainError("h and k must be coprime")
    return {"h": h, "k": k}


_register(
    "I38",
    "rational",
    ("h", "k"),
    "Dedekind sum reciprocity, exact rational arithmetic",
    _v_I38,
    lambda ps: (
        dedekind_sum_exact(ps["h"], ps["k"]) + dedekind_sum_exact(ps["k"], ps["h"]),
        ps["h"] + ps["k"] - 2,
    ),
    lambda ps: (
        Fraction(-1, 4)
        + (
            Fraction(ps["h"], ps["k"])
            + Fraction(1, ps["h"] * ps["k"])
            + Fraction(ps["k"], ps["h"])
        )
        / 12,
        1,
    ),
    lambda bound: (
        {"h": h, "k": k}
        for h in range(1, bound + 1)
        for k in range(1, bound + 1)
        if math.gcd(h, k) == 1
    ),
)


def _v_I39(params):
    _check_keys(params, ("h", "k"))
    h = _as_int(params, "h")
    k = _as_int(params, "k")
    if h < 1:
        raise DomainError("h must be at least 1")
    if k < 2:
        raise DomainError("k must be at least 2")
    if math.gcd(h, k) != 1:
        raise DomainError("h and k must be coprime")
    return {"h": h, "k": k}


def _d_I39(ps):
    h, k = ps["h"], ps["k"]
    return _cot_pair_sum(1, h, k) / (4 * k), k - 1


_register(
    "I39",
    "real",
    ("h", "k"),
    "cotangent form of the Dedekind sum matches the sawtooth form",
    _v_I39,
    _d_I39,
    lambda ps: (dedekind_sum_exact(ps["h"], ps["k"]), ps["k"] - 1),
    lambda bound: (
        {"h": h, "k": k}
        for h in range(1, bound + 1)
        for k in range(2, bound + 1)
        if math.gcd(h, k) == 1
    ),
)


def _d_I40(ps):
    return _modified_definition_ambient(ps["alpha"], ps["beta"], ps["h"], ps["k"])


def _c_I40(ps):
    h, k = ps["h"], ps["k"]
    acc = _sum_first_kernel(h, k, 1, ps["alpha"], ps["beta"], _cot, _cot)
    return acc / (4 * k), k - 1


_register(
    "I40",
    "complex_real",
    ("h", "k", "alpha", "beta"),
    "twisted Dedekind sum: defining exponential sum equals its cotangent form",
    _v_modified(odd=False, mu=False, alpha="pos", beta="pos"),
    _d_I40,
    _c_I40,
    _g_modified(odd=False, mu=False, alpha="pos", beta="pos"),
)


def _e0(ps):
    return ps["mu"] * (ps["beta"] * ps["h"] + ps["alpha"] * ps["k"])


def _d_I24(ps):
    h, k = ps["h"], ps["k"]
    return _sum_first_kernel(h, k, ps["mu"], ps["alpha"], ps["beta"], _cot, _cot), k - 1


def _c_I24(ps):
    h, k, mu, alpha = ps["h"], ps["k"], ps["mu"], ps["alpha"]
    d1 = _unit_recip(_e0(ps), h * k, -1)
    w1 = _unit_recip(mu * alpha * k, h, -1)
    s = complex_recip_sum(
        [RootFactor(h * k, mu * h, _e0(ps), -1), RootFactor(k, h, 0, -1)], k - 1
    )
    return 2 * d1 - 2 * k * w1 - 4 * s, k + 1


_register(
    "I24",
    "complex_real",
    ("h", "k", "mu", "alpha", "beta"),
    "twisted cotangent sum rewritten through reciprocal root sums",
    _v_modified(odd=False, mu=True, alpha="pos", beta="pos"),
    _d_I24,
    _c_I24,
    _g_modified(odd=False, mu=True, alpha="pos", beta="pos"),
)


def _d_I25(ps):
    return (
        _cross_sum(ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"], _cot, _cot),
        ps["mu"],
    )


def _c_I25(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    w1 = _unit_recip(alpha * k * mu, h, -1)
    x1 = _unit_recip(beta * h * mu, k, -1)
    s = complex_recip_sum(
        [
            RootFactor(h * mu, k * h, alpha * k * mu, -1),
            RootFactor(k * mu, h * k, beta * h * mu, -1),
        ],
        mu,
    )
    return -mu * (1 + 2 * w1 + 2 * x1) - 4 * s, mu + 2


_register(
    "I25",
    "complex_real",
    ("h", "k", "mu", "alpha", "beta"),
    "cross-modulus cotangent product sum via reciprocal root sums",
    _v_modified(odd=False, mu=True, alpha="pos", beta="pos"),
    _d_I25,
    _c_I25,
    _g_modified(odd=False, mu=True, alpha="pos", beta="pos"),
)


def _d_I26(ps):
    h, k, mu = ps["h"], ps["k"], ps["mu"]
    alpha, beta = ps["alpha"], ps["beta"]
    e0 = _e0(ps)
    s1 = complex_recip_sum(
        [RootFactor(h * k, mu * h, e0, -1), RootFactor(k, h, 0, -1)], k - 1
    )
    s2 = complex_recip_sum(
        [RootFactor(h * k, mu * k, e0, -1), RootFactor(h, k, 0, -1)], h - 1
    )
    s3 = complex_recip_sum(
        [
            RootFactor(h * mu, k * h, alpha * k * mu, -1),
            RootFactor(k * mu, h * k, beta * h * mu, -1),
        ],
        mu,
    )
    return h * mu * s1 + k * mu * s2 + h * k * s3, (k - 1) + (h - 1) + mu


def _c_I26(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    w1 = _unit_recip(mu * alpha * k, h, -1)
    x1 = _unit_recip(mu * beta * h, k, -1)
    d1 = _unit_recip(_e0(ps), h * k, -1)
    return (
        -h * k * mu * (w1 + x1)
        + mpq(mu * (2 * mu + k + h), 2) * d1
        + (mu * mu) * d1 * d1,
        3,
    )


_register(
    "I26",
    "complex",
    ("h", "k", "mu", "alpha", "beta"),
    "three reciprocal root sums against the pole terms of their generator",
    _v_modified(odd=False, mu=True, alpha="pos", beta="pos"),
    _d_I26,
    _c_I26,
    _g_modified(odd=False, mu=True, alpha="pos", beta="pos"),
)


def _d_I27(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    s1 = _sum_first_kernel(h, k, mu, alpha, beta, _cot, _cot)
    s2 = _sum_first_kernel(k, h, mu, beta, alpha, _cot, _cot)
    return h * mu * s1 + k * mu * s2, (k - 1) + (h - 1)


def _c_I27(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    c = _csc(mu * (alpha * k + beta * h), h * k)
    cross = _cross_sum(h, k, mu, alpha, beta, _cot, _cot)
    return (mu * mu) * c * c - h * k * mu - h * k * cross, mu + 1


_register(
    "I27",
    "real",
    ("h", "k", "mu", "alpha", "beta"),
    "reciprocity for twisted cotangent sums (cosecant defect)",
    _v_modified(odd=False, mu=True, alpha="pos", beta="pos"),
    _d_I27,
    _c_I27,
    _g_modified(odd=False, mu=True, alpha="pos", beta="pos"),
)


def _d_I28(ps):
    h, k, alpha, beta = ps["h"], ps["k"], ps["alpha"], ps["beta"]
    s1 = _sum_first_kernel(h, k, 1, alpha, beta, _cot, _cot)
    s2 = _sum_first_kernel(k, h, 1, beta, alpha, _cot, _cot)
    return h * s1 + k * s2, (k - 1) + (h - 1)


def _c_I28(ps):
    h, k, alpha, beta = ps["h"], ps["k"], ps["alpha"], ps["beta"]
    c = _csc(alpha * k + beta * h, h * k)
    return c * c - h * k - h * k * _cot(k * alpha, h) * _cot(h * beta, k), 2


_register(
    "I28",
    "real",
    ("h", "k", "alpha", "beta"),
    "untwisted instance of the cotangent reciprocity",
    _v_modified(odd=False, mu=False, alpha="pos", beta="pos"),
    _d_I28,
    _c_I28,
    _g_modified(odd=False, mu=False, alpha="pos", beta="pos"),
)


def _d_I29(ps):
    h, k = ps["h"], ps["k"]
    return _sum_first_kernel(h, k, ps["mu"], ps["alpha"], ps["beta"], _tan, _cot), k - 1


def _c_I29(ps):
    h, k, mu, alpha = ps["h"], ps["k"], ps["mu"], ps["alpha"]
    d1 = _unit_recip(_e0(ps), h * k, 1)
    w1 = _unit_recip(mu * alpha * k, h, 1)
    s = complex_recip_sum(
        [RootFactor(h * k, mu * h, _e0(ps), 1), RootFactor(k, h, 0, -1)], k - 1
    )
    return 2 * d1 - 2 * k * w1 - 4 * s, k + 1


_register(
    "I29",
    "complex_real",
    ("h", "k", "mu", "alpha", "beta"),
    "twisted tangent-cotangent sum via reciprocal root sums",
    _v_modified(odd=True, mu=True, alpha="zero", beta="zero"),
    _d_I29,
    _c_I29,
    _g_modified(odd=True, mu=True, alpha="zero", beta="zero"),
)


def _d_I30(ps):
    return (
        _cross_sum(ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"], _tan, _tan),
        ps["mu"],
    )


def _c_I30(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    w1 = _unit_recip(alpha * k * mu, h, 1)
    x1 = _unit_recip(beta * h * mu, k, 1)
    s = complex_recip_sum(
        [
            RootFactor(h * mu, k * h, alpha * k * mu, 1),
            RootFactor(k * mu, h * k, beta * h * mu, 1),
        ],
        mu,
    )
    return mu * (2 * w1 + 2 * x1 - 1) - 4 * s, mu + 2


_register(
    "I30",
    "complex_real",
    ("h", "k", "mu", "alpha", "beta"),
    "cross-modulus tangent product sum via reciprocal root sums",
    _v_modified(odd=True, mu=True, alpha="zero", beta="zero"),
    _d_I30,
    _c_I30,
    _g_modified(odd=True, mu=True, alpha="zero", beta="zero"),
)


def _d_I31(ps):
    h, k, mu = ps["h"], ps["k"], ps["mu"]
    alpha, beta = ps["alpha"], ps["beta"]
    e0 = _e0(ps)
    s1 = complex_recip_sum(
        [RootFactor(h * k, mu * h, e0, 1), RootFactor(k, h, 0, -1)], k - 1
    )
    s2 = complex_recip_sum(
        [RootFactor(h * k, mu * k, e0, 1), RootFactor(h, k, 0, -1)], h - 1
    )
    s3 = complex_recip_sum(
        [
            RootFactor(h * mu, k * h, alpha * k * mu, 1),
            RootFactor(k * mu, h * k, beta * h * mu, 1),
        ],
        mu,
    )
    return h * mu * s1 + k * mu * s2 - h * k * s3, (k - 1) + (h - 1) + mu


def _c_I31(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    w1 = _unit_recip(mu * alpha * k, h, 1)
    x1 = _unit_recip(mu * beta * h, k, 1)
    d1 = _unit_recip(_e0(ps), h * k, 1)
    return (
        -h * k * mu * (w1 + x1)
        + mpq(mu * (2 * mu + k + h), 2) * d1
        - (mu * mu) * d1 * d1,
        3,
    )


_register(
    "I31",
    "complex",
    ("h", "k", "mu", "alpha", "beta"),
    "tangent-side analogue of the three-sum pole identity",
    _v_modified(odd=True, mu=True, alpha="zero", beta="zero"),
    _d_I31,
    _c_I31,
    _g_modified(odd=True, mu=True, alpha="zero", beta="zero"),
)


def _d_I32(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    s1 = _sum_first_kernel(h, k, mu, alpha, beta, _tan, _cot)
    s2 = _sum_first_kernel(k, h, mu, beta, alpha, _tan, _cot)
    return h * mu * s1 + k * mu * s2, (k - 1) + (h - 1)


def _c_I32(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    c = _sec(mu * (alpha * k + beta * h), h * k)
    cross = _cross_sum(h, k, mu, alpha, beta, _tan, _tan)
    return -(mu * mu) * c * c + h * k * mu + h * k * cross, mu + 1


_register(
    "I32",
    "real",
    ("h", "k", "mu", "alpha", "beta"),
    "reciprocity for twisted tangent sums (secant defect)",
    _v_modified(odd=True, mu=True, alpha="zero", beta="zero"),
    _d_I32,
    _c_I32,
    _g_modified(odd=True, mu=True, alpha="zero", beta="zero"),
)


def _d_I33(ps):
    h, k, mu = ps["h"], ps["k"], ps["mu"]
    s1 = _sum_first_kernel(h, k, mu, 0, 0, _tan, _cot)
    s2 = _sum_first_kernel(k, h, mu, 0, 0, _tan, _cot)
    cross = _cross_sum(h, k, mu, 0, 0, _tan, _tan)
    return h * mu * s1 + k * mu * s2 - h * k * cross, (k - 1) + (h - 1) + mu


_register(
    "I33",
    "real",
    ("h", "k", "mu"),
    "plain tangent-cotangent three-sum balance",
    _v_modified(odd=True, mu=True, alpha=None, beta=None),
    _d_I33,
    lambda ps: (Fraction(ps["mu"] * (ps["h"] * ps["k"] - ps["mu"])), 1),
    _g_modified(odd=True, mu=True, alpha=None, beta=None),
)


def _d_I34(ps):
    h, k, mu, alpha = ps["h"], ps["k"], ps["mu"], ps["alpha"]
    s1 = _sum_first_kernel(h, k, mu, alpha, 0, _tan, _cot)
    s2 = _sum_first_kernel(k, h, mu, 0, alpha, _tan, _cot)
    cross = _cross_sum(h, k, mu, alpha, 0, _tan, _tan)
    return h * mu * s1 + k * mu * s2 - h * k * cross, (k - 1) + (h - 1) + mu


def _c_I34(ps):
    h, k, mu, alpha = ps["h"], ps["k"], ps["mu"], ps["alpha"]
    c = _sec(mu * alpha, h)
    return h * k * mu - (mu * mu) * c * c, 1


_register(
    "I34",
    "real",
    ("h", "k", "mu", "alpha"),
    "one-character tangent-cotangent three-sum balance",
    _v_modified(odd=True, mu=True, alpha="zero", beta=None),
    _d_I34,
    _c_I34,
    _g_modified(odd=True, mu=True, alpha="zero", beta=None),
)


def _d_I35a(ps):
    h, k = ps["h"], ps["k"]
    return _sum_first_kernel(h, k, ps["mu"], ps["alpha"], ps["beta"], _cot, _tan), k - 1


def _c_I35a(ps):
    h, k, mu, alpha = ps["h"], ps["k"], ps["mu"], ps["alpha"]
    w1 = _unit_recip(mu * alpha * k, h, -1)
    d1 = _unit_recip(_e0(ps), h * k, -1)
    s = complex_recip_sum(
        [RootFactor(h * k, mu * h, _e0(ps), -1), RootFactor(k, h, 0, 1)], k - 1
    )
    return 2 * k * w1 - 2 * d1 - 4 * s, k + 1


_register(
    "I35a",
    "complex_real",
    ("h", "k", "mu", "alpha", "beta"),
    "mixed cotangent-tangent sum via reciprocal root sums (first modulus)",
    _v_modified(odd=True, mu=True, alpha="pos", beta="zero"),
    _d_I35a,
    _c_I35a,
    _g_modified(odd=True, mu=True, alpha="pos", beta="zero"),
)


def _d_I35b(ps):
    h, k = ps["h"], ps["k"]
    return (
        _sum_first_kernel(k, h, ps["mu"], ps["beta"], ps["alpha"], _tan, _tan),
        h - 1,
    )


def _c_I35b(ps):
    h, k, mu, beta = ps["h"], ps["k"], ps["mu"], ps["beta"]
    x1 = _unit_recip(mu * beta * h, k, 1)
    d1 = _unit_recip(_e0(ps), h * k, 1)
    s = complex_recip_sum(
        [RootFactor(h * k, mu * k, _e0(ps), 1), RootFactor(h, k, 0, 1)], h - 1
    )
    return 2 * h * x1 - 2 * d1 - 4 * s, h + 1


_register(
    "I35b",
    "complex_real",
    ("h", "k", "mu", "alpha", "beta"),
    "mixed tangent-tangent sum via reciprocal root sums (second modulus)",
    _v_modified(odd=True, mu=True, alpha="pos", beta="zero"),
    _d_I35b,
    _c_I35b,
    _g_modified(odd=True, mu=True, alpha="pos", beta="zero"),
)


def _d_I35c(ps):
    return (
        _cross_sum(ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"], _cot, _tan),
        ps["mu"],
    )


def _c_I35c(ps):
    h, k, mu, alpha, beta = ps["h"], ps["k"], ps["mu"], ps["alpha"], ps["beta"]
    w1 = _unit_recip(alpha * k * mu, h, -1)
    x1 = _unit_recip(beta * h * mu, k, 1)
    s = complex_recip_sum(
        [
            RootFactor(h * mu, k * h, alpha * k * mu, -1),
            RootFactor(k * mu, h * k, beta * h * mu, 1),
        ],
        mu,
    )
    return mu * (1 + 2 * w1 - 2 * x1) - 4 * s, mu + 2


_register(
    "I35c",
    "complex_real",
    ("h", "k", "mu", "alpha", "beta"),
    "mixed cross-modulus cotangent-tangent sum via reciprocal root sums",
    _v_modified(odd=True, mu=True, alpha="pos", beta="zero"),
    _d_I35c,
    _c_I35c,
    _g_modified(odd=True, mu=True, alpha="pos", beta="zero"),
)


def _d_I36(ps):
    h, k, mu = ps["h"], ps["k"], ps["mu"]
    alpha, beta = ps["alpha"], ps["beta"]
    e0 = _e0(ps)
    s1 = complex_recip_sum(
        [RootFactor(h * k, mu * h, e0, -1), RootFactor(k, h, 0, 1)], k - 1
    )
    s2 = complex_recip_sum(
        [RootFactor(h * k, mu * k, e0, 1), RootFactor(h, k, 0, 1)], h - 1
    )
    s3 = complex_recip_sum(
        [
            RootFactor(h * mu, k * h, alpha * k * mu, -1),
            RootFactor(k * mu, h * k, beta * h * mu, 1),
        ],
        mu,
    )
    return h * mu * s1 - k * mu * s2 + h * k * s3, (k - 1) + (h - 1) + mu


def _c_I36(ps):
    h, k, mu = ps["h"], ps["k"], ps["mu"]
    w1 = _unit_recip(mu * ps["alpha"] * k, h, -1)
    x1 = _unit_recip(mu * ps["beta"] * h, k, 1)
    dm = _unit_recip(_e0(ps), h * k, -1)
    dp = _unit_recip(_e0(ps), h * k, 1)
    return (
        h * k * mu * (w1 - x1) - mpq(h * mu, 2) * dm + mpq(k * mu, 2) * dp,
        4,
    )


_register(
    "I36",
    "complex",
    ("h", "k", "mu", "alpha", "beta"),
    "mixed-sign three-sum pole identity",
    _v_modified(odd=True, mu=True, alpha="pos", beta="zero"),
    _d_I36,
    _c_I36,
    _g_modified(odd=True, mu=True, alpha="pos", beta="zero"),
)


def _d_I37(ps):
    h, k, mu = ps["h"], ps["k"], ps["mu"]
    alpha, beta = ps["alpha"], ps["beta"]
    s1 = _sum_first_kernel(h, k, mu, alpha, beta, _cot, _tan)
    s2 = _sum_first_kernel(k, h, mu, beta, alpha, _tan, _tan)
    s3 = _cross_sum(h, k, mu, alpha, beta, _cot, _tan)
    return h * mu * s1 - k * mu * s2 + h * k * s3, (k - 1) + (h - 1) + mu


_register(
    "I37",
    "real",
    ("h", "k", "mu", "alpha", "beta"),
    "mixed three-sum combination collapses to h*k*mu",
    _v_modified(odd=True, mu=True, alpha="pos", beta="zero"),
    _d_I37,
    lambda ps: (Fraction(ps["h"] * ps["k"] * ps["mu"]), 1),
    _g_modified(odd=True, mu=True, alpha="pos", beta="zero"),
)


# re-register in the documented order: the S/T family (I24..I37) comes after
# I38/I39/I40 in the listing, which the insertion order above already honours
# for everything except the three Dedekind rows, inserted before I24.
_ORDER = [
    "I00", "I01", "I02", "A01", "A02",
    "I03", "I04", "I05", "I06", "I07", "I08", "I09", "I10", "I11", "I12",
    "I13", "I14", "I15", "I16", "I17",
    "I18a", "I18b", "I18c", "I18d", "I18e",
    "I19", "I20", "I21", "I22", "I23",
    "I38", "I39", "I40",
    "I24", "I25", "I26", "I27", "I28", "I29", "I30", "I31", "I32", "I33",
    "I34", "I35a", "I35b", "I35c", "I36", "I37",
]
_REGISTRY = {ident: _REGISTRY[ident] for ident in _ORDER}


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def get_identity(ident) -> Identity:
    try:
        return _REGISTRY[ident]
    except (KeyError, TypeError):
        raise DomainError("unknown identity %r" % (ident,)) from None


def list_identities() -> List[str]:
    return list(_REGISTRY)


def validate_params(ident, params) -> dict:
    idy = get_identity(ident)
    if not hasattr(params, "keys"):
        raise DomainError("params must be a mapping of parameter names")
    canonical = idy.validate(dict(params))
    return {name: canonical[name] for name in idy.param_names}


def eval_direct(ident, params, precision: int = DEFAULT_PRECISION):
    """Term-by-term value of the identity's defining sum."""
    idy = get_identity(ident)
    ps = validate_params(ident, params)
    check_precision(precision)
    with working(precision):
        value, _ = idy.direct(ps)
    return round_to(value, precision)


def eval_closed(ident, params, precision: int = DEFAULT_PRECISION):
    """The claimed closed-form value; exact Fraction where possible."""
    idy = get_identity(ident)
    ps = validate_params(ident, params)
    check_precision(precision)
    with working(precision):
        value, _ = idy.closed(ps)
    return round_to(value, precision)


def _leq(x, bound) -> bool:
    if isinstance(x, (int, Fraction)):
        return mpq(x) <= bound
    return x <= bound


def verify(
    ident, params, precision: int = DEFAULT_PRECISION, tol=None
) -> IdentityReport:
    """Evaluate both sides and compare within a term-count-aware tolerance."""
    idy = get_identity(ident)
    ps = validate_params(ident, params)
    check_precision(precision)
    with working(precision):
        direct_value, n_direct = idy.direct(ps)
        closed_value, n_closed = idy.closed(ps)
        nterms = n_direct + n_closed
        tol_value = tau(nterms, precision) if tol is None else mpfr(tol)
        if idy.kind == "rational":
            lhs, rhs = direct_value, closed_value
            abs_err = abs(lhs - rhs)
            imag = Fraction(0)
        elif idy.kind == "complex":
            lhs, rhs = mpc(direct_value), mpc(closed_value)
            abs_err = abs(lhs - rhs)
            imag = mpfr(0)
        else:
            lhs, li = _split_real(direct_value)
            rhs, ri = _split_real(closed_value)
            imag = li if li >= ri else ri
            abs_err = abs(lhs - rhs)
        passed = bool(_leq(abs_err, tol_value) and _leq(imag, tol_value))
        lhs = _round_kept(lhs, precision)
        rhs = _round_kept(rhs, precision)
        abs_err = _round_kept(abs_err, precision)
        imag = _round_kept(imag, precision)
    return IdentityReport(
        idy.ident, ps, lhs, rhs, abs_err, round_to(tol_value, precision), imag, passed
    )


def _split_real(value):
    if isinstance(value, mpc):
        return value.real, abs(value.imag)
    return value, mpfr(0)


def _round_kept(value, precision):
    """Round mpfr/mpc report fields; leave exact rationals exact."""
    if isinstance(value, (int, Fraction)):
        return value if isinstance(value, Fraction) else Fraction(value)
    return round_to(value, precision)


def _verify_task(task):
    ident, params, precision, tol = task
    return verify(ident, params, precision, tol)


def sweep(
    ident,
    bound: int,
    precision: int = DEFAULT_PRECISION,
    tol=None,
    jobs: int = 1,
) -> List[IdentityReport]:
    """Verify every admissible parameter tuple with all parameters <= bound.

    Enumeration is lexicographic in the identity's parameter order and the
    report list is identical whatever `jobs` is; workers only parallelise.
    """
    idy = get_identity(ident)
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise DomainError("bound must be a positive integer")
    grids = sorted(
        idy.grid(bound), key=lambda ps: tuple(ps[n] for n in idy.param_names)
    )
    if jobs is None or jobs <= 1 or len(grids) < 4:
        return [verify(ident, ps, precision, tol) for ps in grids]
    tasks = [(ident, ps, precision, tol) for ps in grids]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(tasks) // (jobs * 8))
        return list(pool.map(_verify_task, tasks, chunksize=chunk))


# ---------------------------------------------------------------------------
# pair families for the signed sine-quotient identity
# ---------------------------------------------------------------------------


def _check_family_modulus(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 5 or k % 4 != 1:
        raise DomainError("k must be congruent to 1 mod 4 and at least 5")


def _labelings(k, x, y):
    """The two (a, b) pairs whose four residues tile {x, k-x, y, k-y}."""
    if (x - y) % 2 == 0:
        combos = ((x, y), (k - x, k - y))
    else:
        combos = ((x, k - y), (k - x, y))
    out = []
    for s, d in combos:
        hi, lo = (s, d) if s > d else (d, s)
        out.append(((hi + lo) // 2, (hi - lo) // 2))
    return out


def iter_pair_families(k: int) -> Iterator[List[Tuple[int, int]]]:
    """Yield every admissible pair family for modulus k, depth-first.

    The family count grows superexponentially in k (two labelings per
    quadruple on top of a perfect matching of the (k-1)/2 complement
    classes), so large k should be consumed lazily.
    """
    _check_family_modulus(k)

    def extend(remaining, chosen):
        if not remaining:
            yield sorted(chosen)
            return
        x = remaining[0]
        for i in range(1, len(remaining)):
            rest = remaining[1:i] + remaining[i + 1 :]
            for ab in _labelings(k, x, remaining[i]):
                yield from extend(rest, chosen + [ab])

    yield from extend(tuple(range(1, (k + 1) // 2)), [])


def search_pair_families(k: int) -> List[List[Tuple[int, int]]]:
    """All pair families for modulus k, canonically ordered."""
    return sorted(iter_pair_families(k))
