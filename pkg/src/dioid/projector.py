"""Projector onto the solutions of  A (x) X <= X <= B (.) X.

``project`` maps X0 to the greatest Y below X0 that satisfies both
inequalities.  It is sound whenever the scalar associativity condition

    b %% (a (x) x)  =  (b %% a) (x) x

holds for every entry b of the meet-closure of B: this is automatic over
max-plus scalars and holds over gamma-series exactly when the entries of B
are monomials (or eps/top), because the dual product by a proper
multi-step series is not even well defined.  ``check_hypothesis`` decides
that condition; ``project`` refuses to run without it, since the computed
point is only guaranteed maximal under the condition.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import series as gseries
from . import zmax
from .errors import DioidError, HypothesisError, ShapeError
from .matrices import (
    Matrix,
    dual_residual,
    interval_bounds,
    interval_join,
    kleene_star,
    left_residual,
    mat_leq,
    mat_odot,
    mat_oplus,
    mat_otimes,
    mat_wedge,
    wedge_closure,
)

_ZMAX_TRIPLES_OK: dict[int, bool] = {}


@dataclass(frozen=True)
class ProjectorProblem:
    """A constraint pair (A, B) with a reference point X0, all one element type."""

    a: Matrix
    b: Matrix
    x0: Matrix

    def __post_init__(self) -> None:
        _validate_shapes(self.a, self.b, self.x0)

    def solve(self) -> Matrix:
        return project(self.a, self.b, self.x0)


def _validate_shapes(a: Matrix, b: Matrix, x0: Matrix) -> None:
    if a.rows != a.cols or b.rows != b.cols:
        raise ShapeError("projector: A and B must be square")
    if a.rows != b.rows:
        raise ShapeError(f"projector: A is {a.rows}x{a.cols} but B is {b.rows}x{b.cols}")
    if x0.rows != a.rows:
        raise ShapeError(f"projector: X0 has {x0.rows} rows, expected {a.rows}")
    if a.semiring is not b.semiring or a.semiring is not x0.semiring:
        raise ShapeError("projector: A, B, X0 must share one element type")


def _zmax_triples_hold(span: int) -> bool:
    cached = _ZMAX_TRIPLES_OK.get(span)
    if cached is not None:
        return cached
    values = [zmax.EPS, zmax.TOP] + list(range(-span, span + 1))
    ok = all(
        zmax.dualres(b, zmax.otimes(a, x)) == zmax.otimes(zmax.dualres(b, a), x)
        for b, a, x in itertools.product(values, repeat=3)
    )
    _ZMAX_TRIPLES_OK[span] = ok
    return ok


def _series_entry_ok(entry) -> bool:
    return gseries.GAMMA.odot_left_ok(entry)


def _series_sample_holds(entries, samples: int) -> bool:
    rng = random.Random(0xD101D + samples)
    monos = [
        gseries.from_monomials([gseries.Monomial(rng.randint(-6, 6), rng.randint(0, 5))])
        for _ in range(max(samples, 1))
    ]
    picks = [e for e in entries if not gseries.is_top(e) and not gseries.is_eps(e)]
    for b in picks[:8]:
        for a, x in zip(monos[::2], monos[1::2]):
            lhs = gseries.mono_dualres(b, gseries.s_otimes(a, x))
            rhs = gseries.s_otimes(gseries.mono_dualres(b, a), x)
            if lhs != rhs:
                return False
    return True


def check_hypothesis(b: Matrix, a: Matrix | None = None, samples: int = 32) -> bool:
    """Decide the scalar associativity condition for the entries of B.

    Over max-plus scalars the condition is exhaustively verified on the
    extreme tags plus a symmetric range of finite values (it always holds).
    Over gamma-series it holds iff every entry is a monomial, eps or top;
    when it does, randomly sampled monomial pairs re-verify the identity.
    The ``a`` operand does not influence the decision: the condition
    quantifies over all scalars, not just the entries of a particular A.
    """
    sr = b.semiring
    if sr.kind == "maxplus":
        return _zmax_triples_hold(3)
    if sr.kind == "series":
        if not all(_series_entry_ok(e) for e in b.entries):
            return False
        return samples <= 0 or _series_sample_holds(b.entries, samples)
    if sr.kind == "interval":
        lo, hi = interval_bounds(b)
        return check_hypothesis(lo, None, samples) and check_hypothesis(hi, None, samples)
    raise DioidError(f"check_hypothesis: unsupported element type {sr!r}")


def membership(a: Matrix, b: Matrix, x: Matrix, deep: bool = False) -> bool:
    """True iff A (x) X <= X and X <= B (.) X.

    With ``deep=True`` the answer is cross-checked against the fixed-point
    characterisations X = A* (x) X and X = B_* (.) X.
    """
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows or x.rows != a.rows:
        raise ShapeError("membership: inconsistent shapes")
    ok = mat_leq(mat_otimes(a, x), x) and mat_leq(x, mat_odot(b, x))
    if deep:
        via_star = mat_otimes(kleene_star(a), x) == x
        via_closure = mat_odot(wedge_closure(b), x) == x
        if (via_star and via_closure) != ok:
            raise DioidError("membership: closure cross-check disagrees with the direct test")
    return ok


def projector_matrix(a: Matrix, b: Matrix) -> Matrix:
    """The closed constraint matrix (B_* %% A*)* whose residual is the projector."""
    g = dual_residual(wedge_closure(b), kleene_star(a))
    return kleene_star(g)


def project(a: Matrix, b: Matrix, x0: Matrix) -> Matrix:
    """Greatest Y <= X0 with A (x) Y <= Y <= B (.) Y.

    Works over every supported element type, including interval lifts
    (where the boundwise residual corrections are built into the interval
    operations).  Raises ``HypothesisError`` when the soundness condition
    on B fails.
    """
    _validate_shapes(a, b, x0)
    if not check_hypothesis(b, a):
        raise HypothesisError(
            "projector: the associativity condition fails for B "
            "(over series all entries must be monomials, eps or top)"
        )
    return left_residual(projector_matrix(a, b), x0)


def interval_project(a: Matrix, b: Matrix, x0: Matrix) -> Matrix:
    """Interval projector via the explicit two-bound formula.

    With G = B_lo* %% A_lo* and H = G (+) (B_hi* %% A_hi*):

        upper = H* \\ X0_hi
        lower = (G* \\ X0_lo) ^ upper

    This agrees with running ``project`` directly over interval elements.
    """
    _validate_shapes(a, b, x0)
    sr = a.semiring
    if sr.kind != "interval":
        raise ShapeError("interval_project: operands must be interval matrices")
    if not check_hypothesis(b, a):
        raise HypothesisError(
            "projector: the associativity condition fails for a bound of B"
        )
    a_lo, a_hi = interval_bounds(a)
    b_lo, b_hi = interval_bounds(b)
    x_lo, x_hi = interval_bounds(x0)
    g_lo = dual_residual(wedge_closure(b_lo), kleene_star(a_lo))
    g_hi = dual_residual(wedge_closure(b_hi), kleene_star(a_hi))
    upper_star = kleene_star(mat_oplus(g_lo, g_hi))
    lower_star = kleene_star(g_lo)
    upper = left_residual(upper_star, x_hi)
    lower = mat_wedge(left_residual(lower_star, x_lo), upper)
    return interval_join(sr, lower, upper)
