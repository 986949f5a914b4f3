"""Dense matrices over any supported semiring element type.

Every operation is a pure function; matrices are immutable and carry the
operation table (``semiring``) of their element type, so the same code
serves max-plus scalars, gamma-series and the interval lifts of both.

Conventions:

* ``mat_otimes``:  (A (x) X)_ij = max_k a_ik (x) x_kj
* ``mat_odot``:    (A (.) X)_ij = min_k a_ik (.) x_kj
* ``left_residual(A, B)``:  greatest X with A (x) X <= B,
  entrywise  min_k  a_ki \\ b_kj
* ``right_residual(C, A)``: greatest X with X (x) A <= C,
  entrywise  min_k  c_ik / a_jk
* ``dual_residual(A, X)``:  smallest Y with A (.) Y >= X,
  entrywise  max_k  a_ki %% x_kj
* ``kleene_star``:   A* = E (+) A (+) A^2 (+) ... (identity E: unit
  diagonal, eps elsewhere)
* ``wedge_closure``: B_* = E° (^) B (^) B°2 (^) ... (dual identity E°:
  unit diagonal, top elsewhere)

Shape mismatches raise; there is no broadcasting.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DivergenceWarning, SeriesDomainError, ShapeError


@dataclass(frozen=True)
class Matrix:
    """Immutable dense rectangular matrix in row-major order."""

    semiring: Any
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise ShapeError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"expected {self.rows * self.cols} entries for a "
                f"{self.rows}x{self.cols} matrix, got {len(self.entries)}"
            )

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)
        ]

    def __repr__(self) -> str:
        sr = self.semiring
        body = "; ".join(
            " ".join(sr.format(self.at(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def from_rows(semiring, rows: Sequence[Sequence]) -> Matrix:
    if not rows or not rows[0]:
        raise ShapeError("a matrix needs at least one row and one column")
    cols = len(rows[0])
    if any(len(r) != cols for r in rows):
        raise ShapeError("all rows must have the same length")
    return Matrix(semiring, len(rows), cols, tuple(x for r in rows for x in r))


def filled(semiring, rows: int, cols: int, value) -> Matrix:
    return Matrix(semiring, rows, cols, (value,) * (rows * cols))


def eps_matrix(semiring, rows: int, cols: int) -> Matrix:
    return filled(semiring, rows, cols, semiring.eps)


def top_matrix(semiring, rows: int, cols: int) -> Matrix:
    return filled(semiring, rows, cols, semiring.top)


def identity(semiring, n: int) -> Matrix:
    return Matrix(
        semiring,
        n,
        n,
        tuple(semiring.one if i == j else semiring.eps for i in range(n) for j in range(n)),
    )


def dual_identity(semiring, n: int) -> Matrix:
    return Matrix(
        semiring,
        n,
        n,
        tuple(semiring.one if i == j else semiring.top for i in range(n) for j in range(n)),
    )


def _require_same_shape(a: Matrix, b: Matrix, what: str) -> None:
    if a.rows != b.rows or a.cols != b.cols:
        raise ShapeError(
            f"{what}: shapes {a.rows}x{a.cols} and {b.rows}x{b.cols} differ"
        )
    if a.semiring is not b.semiring:
        raise ShapeError(f"{what}: operands live over different semirings")


def mat_oplus(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise least upper bound."""
    _require_same_shape(a, b, "mat_oplus")
    op = a.semiring.oplus
    return Matrix(a.semiring, a.rows, a.cols, tuple(map(op, a.entries, b.entries)))


def mat_wedge(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise greatest lower bound."""
    _require_same_shape(a, b, "mat_wedge")
    op = a.semiring.wedge
    return Matrix(a.semiring, a.rows, a.cols, tuple(map(op, a.entries, b.entries)))


def mat_leq(a: Matrix, b: Matrix) -> bool:
    """True when a (+) b = b entrywise."""
    _require_same_shape(a, b, "mat_leq")
    leq = a.semiring.leq
    return all(map(leq, a.entries, b.entries))


def mat_otimes(a: Matrix, x: Matrix) -> Matrix:
    """Semiring matrix product."""
    if a.cols != x.rows:
        raise ShapeError(f"mat_otimes: inner dimensions {a.cols} and {x.rows} differ")
    if a.semiring is not x.semiring:
        raise ShapeError("mat_otimes: operands live over different semirings")
    sr = a.semiring
    out = []
    for i in range(a.rows):
        for j in range(x.cols):
            acc = sr.eps
            for k in range(a.cols):
                acc = sr.oplus(acc, sr.otimes(a.at(i, k), x.at(k, j)))
            out.append(acc)
    return Matrix(sr, a.rows, x.cols, tuple(out))


def mat_odot(a: Matrix, x: Matrix) -> Matrix:
    """Dual matrix product (min of dual products along the inner index)."""
    if a.cols != x.rows:
        raise ShapeError(f"mat_odot: inner dimensions {a.cols} and {x.rows} differ")
    if a.semiring is not x.semiring:
        raise ShapeError("mat_odot: operands live over different semirings")
    sr = a.semiring
    out = []
    for i in range(a.rows):
        for j in range(x.cols):
            acc = sr.top
            for k in range(a.cols):
                acc = sr.wedge(acc, sr.odot(a.at(i, k), x.at(k, j)))
            out.append(acc)
    return Matrix(sr, a.rows, x.cols, tuple(out))


def left_residual(a: Matrix, b: Matrix) -> Matrix:
    """Greatest X with A (x) X <= B."""
    if a.rows != b.rows:
        raise ShapeError(f"left_residual: row counts {a.rows} and {b.rows} differ")
    if a.semiring is not b.semiring:
        raise ShapeError("left_residual: operands live over different semirings")
    sr = a.semiring
    out = []
    for i in range(a.cols):
        for j in range(b.cols):
            acc = sr.top
            for k in range(a.rows):
                acc = sr.wedge(acc, sr.lres(a.at(k, i), b.at(k, j)))
            out.append(acc)
    return Matrix(sr, a.cols, b.cols, tuple(out))


def right_residual(c: Matrix, a: Matrix) -> Matrix:
    """Greatest X with X (x) A <= C."""
    if c.cols != a.cols:
        raise ShapeError(f"right_residual: column counts {c.cols} and {a.cols} differ")
    if c.semiring is not a.semiring:
        raise ShapeError("right_residual: operands live over different semirings")
    sr = c.semiring
    out = []
    for i in range(c.rows):
        for j in range(a.rows):
            acc = sr.top
            for k in range(c.cols):
                acc = sr.wedge(acc, sr.rres(a.at(j, k), c.at(i, k)))
            out.append(acc)
    return Matrix(sr, c.rows, a.rows, tuple(out))


def dual_residual(a: Matrix, x: Matrix) -> Matrix:
    """Smallest Y with A (.) Y >= X."""
    if a.rows != x.rows:
        raise ShapeError(f"dual_residual: row counts {a.rows} and {x.rows} differ")
    if a.semiring is not x.semiring:
        raise ShapeError("dual_residual: operands live over different semirings")
    sr = a.semiring
    out = []
    for i in range(a.cols):
        for j in range(x.cols):
            acc = sr.eps
            for k in range(a.rows):
                acc = sr.oplus(acc, sr.dualres(a.at(k, i), x.at(k, j)))
            out.append(acc)
    return Matrix(sr, a.cols, x.cols, tuple(out))


def _require_square(a: Matrix, what: str) -> None:
    if a.rows != a.cols:
        raise ShapeError(f"{what}: requires a square matrix, got {a.rows}x{a.cols}")


def kleene_star(a: Matrix) -> Matrix:
    """A* = E (+) A (+) A^2 (+) ... by Gauss-Jordan elimination.

    One pass per pivot, closing the pivot's diagonal entry with the scalar
    star; over max-plus scalars a circuit of positive weight saturates the
    entries it reaches to top.
    """
    _require_square(a, "kleene_star")
    sr = a.semiring
    n = a.rows
    m = [list(row) for row in a.to_rows()]
    for k in range(n):
        skk = sr.star(m[k][k])
        for i in range(n):
            ik = sr.otimes(m[i][k], skk)
            if ik == sr.eps:
                continue
            row_k = m[k]
            row_i = m[i]
            for j in range(n):
                row_i[j] = sr.oplus(row_i[j], sr.otimes(ik, row_k[j]))
    for i in range(n):
        m[i][i] = sr.oplus(m[i][i], sr.one)
    return Matrix(sr, n, n, tuple(x for row in m for x in row))


def wedge_closure(b: Matrix, cap: int | None = None) -> Matrix:
    """B_* = E° (^) B (^) B°2 (^) ... iterated to the fixpoint.

    Entries still moving at the iteration cap sit on a strictly improving
    dual circuit, so their infinite meet is the bottom element: they are
    reported as eps and a ``DivergenceWarning`` is emitted.
    """
    _require_square(b, "wedge_closure")
    sr = b.semiring
    if sr.kind == "interval":
        lo = wedge_closure(_bound_matrix(b, 0), cap)
        hi = wedge_closure(_bound_matrix(b, 1), cap)
        return _join_bounds(sr, lo, hi)
    for idx, entry in enumerate(b.entries):
        if not sr.odot_left_ok(entry):
            raise SeriesDomainError(
                f"wedge_closure: entry ({idx // b.cols + 1},{idx % b.cols + 1}) "
                "is not a monomial, eps or top"
            )
    n = b.rows
    if cap is None:
        cap = max(2 * n * n, 4)
    c = dual_identity(sr, n)
    last_change = [0] * (n * n)
    for it in range(1, cap + 1):
        nxt = mat_wedge(c, mat_odot(c, b))
        if nxt == c:
            return c
        for idx, (old, new) in enumerate(zip(c.entries, nxt.entries)):
            if old != new:
                last_change[idx] = it
        c = nxt
    entries = tuple(
        sr.eps if last_change[idx] > cap - n else val for idx, val in enumerate(c.entries)
    )
    warnings.warn(
        "wedge_closure: entries on a strictly improving dual circuit were "
        "saturated to eps at the iteration cap",
        DivergenceWarning,
        stacklevel=2,
    )
    return Matrix(sr, n, n, entries)


def _bound_matrix(a: Matrix, side: int) -> Matrix:
    sr = a.semiring
    pick = sr.lower if side == 0 else sr.upper
    return Matrix(sr.base, a.rows, a.cols, tuple(pick(x) for x in a.entries))


def _join_bounds(sr, lo: Matrix, hi: Matrix) -> Matrix:
    _require_same_shape(lo, hi, "_join_bounds")
    return Matrix(
        sr, lo.rows, lo.cols, tuple(sr.make(x, y) for x, y in zip(lo.entries, hi.entries))
    )


def interval_bounds(a: Matrix) -> tuple[Matrix, Matrix]:
    """Split an interval matrix into its lower- and upper-bound matrices."""
    if a.semiring.kind != "interval":
        raise ShapeError("interval_bounds: matrix is not over an interval semiring")
    return _bound_matrix(a, 0), _bound_matrix(a, 1)


def interval_join(semiring, lo: Matrix, hi: Matrix) -> Matrix:
    """Assemble an interval matrix from ordered bound matrices."""
    if semiring.kind != "interval":
        raise ShapeError("interval_join: target semiring is not an interval lift")
    if lo.semiring is not semiring.base or hi.semiring is not semiring.base:
        raise ShapeError("interval_join: bound matrices must live over the base semiring")
    return _join_bounds(semiring, lo, hi)


def negate_transpose(a: Matrix) -> Matrix:
    """Conjugate-transpose a_ij -> -a_ji with eps and top exchanged.

    Defined for element types with a conjugation (max-plus scalars and
    their interval lift); it turns left residuation into a dual product.
    """
    sr = a.semiring
    conj = getattr(sr, "conj", None)
    if conj is None:
        raise ShapeError(f"negate_transpose: no conjugation over {sr!r}")
    out = tuple(conj(a.at(j, i)) for i in range(a.cols) for j in range(a.rows))
    return Matrix(sr, a.cols, a.rows, out)


def dual_power(b: Matrix, k: int) -> Matrix:
    """k-th dual power, with the dual identity as the zeroth power."""
    _require_square(b, "dual_power")
    acc = dual_identity(b.semiring, b.rows)
    for _ in range(k):
        acc = mat_odot(b, acc)
    return acc
