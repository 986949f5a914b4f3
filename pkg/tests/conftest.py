"""Shared generators and independent evaluators for the test suite.

The series evaluators here deliberately re-derive values from the raw
monomial semantics (unrolling periodic parts term by term) instead of
calling the library's closed-form evaluation, so they can serve as
brute-force oracles for the canonical-form algebra.
"""

from __future__ import annotations

import random

from dioid import EPS, TOP, ZMAX, Monomial, from_rows, make_series
from dioid import zmax
from dioid.series import Series

# ---------------------------------------------------------------------------
# max-plus randomness
# ---------------------------------------------------------------------------


def rand_scalar(rng: random.Random, lo: int = -9, hi: int = 9, p_eps: float = 0.15,
                p_top: float = 0.1):
    u = rng.random()
    if u < p_eps:
        return EPS
    if u < p_eps + p_top:
        return TOP
    return rng.randint(lo, hi)


def rand_matrix(rng: random.Random, rows: int, cols: int, **kw):
    return from_rows(
        ZMAX, [[rand_scalar(rng, **kw) for _ in range(cols)] for _ in range(rows)]
    )


# ---------------------------------------------------------------------------
# gamma-series randomness
# ---------------------------------------------------------------------------


def rand_series(rng: random.Random, periodic_bias: float = 0.6,
                coeff_lo: int = -9, coeff_hi: int = 9, exp_hi: int = 6) -> Series:
    """Random canonical series produced through the public canonicalizer."""
    n_trans = rng.randint(0, 2)
    transient = [
        Monomial(rng.randint(coeff_lo, coeff_hi), rng.randint(0, exp_hi))
        for _ in range(n_trans)
    ]
    if rng.random() < periodic_bias:
        n_pat = rng.randint(1, 2)
        pattern = [
            Monomial(rng.randint(coeff_lo, coeff_hi), rng.randint(0, exp_hi))
            for _ in range(n_pat)
        ]
        period = Monomial(rng.randint(1, 8), rng.randint(1, 4))
        return make_series(transient, pattern, period)
    if not transient:
        transient = [Monomial(rng.randint(coeff_lo, coeff_hi), rng.randint(0, exp_hi))]
    return make_series(transient)


def rand_positive_series(rng: random.Random) -> Series:
    """Random series whose monomials all have t >= 1 and n >= 1 (star regime)."""
    transient = [
        Monomial(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(rng.randint(0, 2))
    ]
    if rng.random() < 0.5:
        pattern = [Monomial(rng.randint(1, 9), rng.randint(1, 5))]
        period = Monomial(rng.randint(1, 8), rng.randint(1, 4))
        return make_series(transient, pattern, period)
    if not transient:
        transient = [Monomial(rng.randint(1, 9), rng.randint(1, 5))]
    return make_series(transient)


# ---------------------------------------------------------------------------
# independent series evaluation (unrolled monomial semantics)
# ---------------------------------------------------------------------------


def unroll(s: Series, up_to: int) -> list[Monomial]:
    """All monomials of s with exponent <= up_to, periodic part expanded."""
    assert not s.all_top
    out = list(s.transient)
    if s.period is not None:
        tau, nu = s.period.coeff, s.period.exp
        for m in s.pattern:
            k = 0
            while m.exp + k * nu <= up_to:
                out.append(Monomial(m.coeff + k * tau, m.exp + k * nu))
                k += 1
    return out


def eval_monomials(monos: list[Monomial], j: int):
    best = EPS
    for m in monos:
        if m.exp <= j:
            best = zmax.oplus(best, m.coeff)
    return best


def eval_series(s: Series, j: int):
    if s.all_top:
        return TOP
    return eval_monomials(unroll(s, j), j)
