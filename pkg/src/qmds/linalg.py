"""Exact dense linear algebra over GF(q^2).

Matrices are lightweight row-major containers of element indices; all the
work happens in module functions via fraction-free Gaussian elimination
(exact in a field, so plain elimination with pivots normalized to one).
Pivot choice is deterministic: the first nonzero entry scanning down the
column, so identical inputs give identical reduced forms and kernels.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatch,
    NoSubfieldSolution,
    PreconditionViolated,
    SingularMatrix,
)
from .gf import Field


class Matrix:
    """A rows x cols grid of field element indices.

    Treat instances as immutable; operations always return fresh objects.
    Zero-row matrices are legal (kernels of injective maps, generators of
    zero-dimensional codes) and carry an explicit column count.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: list[list[int]], cols: int | None = None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            widths = {len(row) for row in self.data}
            if len(widths) != 1:
                raise DimensionMismatch("ragged rows")
            self.cols = widths.pop()
            if cols is not None and cols != self.cols:
                raise DimensionMismatch("explicit cols disagrees with data")
        else:
            if cols is None:
                raise DimensionMismatch("zero-row matrix needs an explicit column count")
            self.cols = cols
        q2 = field.q2
        for row in self.data:
            for x in row:
                if not 0 <= x < q2:
                    raise DimensionMismatch(f"entry {x} outside field of size {q2}")

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    def row(self, i: int) -> list[int]:
        return list(self.data[i])

    def col(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over GF({self.field.q2}))"


def transpose(m: Matrix) -> Matrix:
    return Matrix(m.field, [[m.data[i][j] for i in range(m.rows)] for j in range(m.cols)], cols=m.rows)


def stack(top: Matrix, bottom: Matrix) -> Matrix:
    if top.field is not bottom.field or top.cols != bottom.cols:
        raise DimensionMismatch("stack needs matching fields and widths")
    return Matrix(top.field, top.data + bottom.data, cols=top.cols)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.field is not b.field:
        raise DimensionMismatch("mixed fields")
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.cols} columns against {b.rows} rows")
    f = a.field
    add, mul = f.add, f.mul
    bt = [[b.data[i][j] for i in range(b.rows)] for j in range(b.cols)]
    out = []
    for arow in a.data:
        orow = []
        for bcol in bt:
            acc = 0
            for x, y in zip(arow, bcol):
                if x and y:
                    acc = add(acc, mul(x, y))
            orow.append(acc)
        out.append(orow)
    return Matrix(f, out, cols=b.cols)


def mat_vec(m: Matrix, v: list[int]) -> list[int]:
    if len(v) != m.cols:
        raise DimensionMismatch("vector length mismatch")
    f = m.field
    add, mul = f.add, f.mul
    out = []
    for row in m.data:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return out


def _eliminate(m: Matrix):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    f = m.field
    add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
    rows = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        if piv != 1:
            s = inv(piv)
            rows[r] = [mul(s, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = neg(rows[i][c])
                rows[i] = [add(x, mul(fac, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    rows, pivots = _eliminate(m)
    return Matrix(m.field, rows, cols=m.cols), pivots


def rank(m: Matrix) -> int:
    return len(_eliminate(m)[1])


def nullspace(m: Matrix) -> Matrix:
    """A basis of the right kernel, one vector per row (possibly none)."""
    f = m.field
    rows, pivots = _eliminate(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [0] * m.cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(rows[r][fc])
        basis.append(v)
    return Matrix(f, basis, cols=m.cols)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    aug = Matrix(m.field, [m.data[i] + Matrix.identity(m.field, n).data[i] for i in range(n)], cols=2 * n)
    rows, pivots = _eliminate(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix(m.field, [row[n:] for row in rows], cols=n)


def entrywise_frobenius(m: Matrix) -> Matrix:
    frob = m.field.frobenius_q
    return Matrix(m.field, [[frob(x) for x in row] for row in m.data], cols=m.cols)


def row_equivalent(a: Matrix, b: Matrix) -> bool:
    """Same row space; ranks of a, b and the stack must agree."""
    if a.field is not b.field or a.cols != b.cols:
        raise DimensionMismatch("row equivalence needs matching shapes")
    ra = rank(a)
    rb = rank(b)
    return ra == rb == rank(stack(a, b))


def row_space_contains(outer: Matrix, inner: Matrix) -> bool:
    """Every row of inner lies in the row space of outer."""
    if outer.field is not inner.field or outer.cols != inner.cols:
        raise DimensionMismatch("containment needs matching shapes")
    return rank(stack(outer, inner)) == rank(outer)


def subfield_nullvector(m: Matrix) -> list[int]:
    """The kernel vector of an (n-1) x n rank n-1 matrix, scaled into GF(q).

    Such a vector exists exactly when the entrywise q-th power of the
    matrix is row equivalent to the matrix itself; both that and the shape
    and rank conditions are enforced here.  The kernel is a line, so the
    GF(q) representative is pinned down by scaling the first nonzero
    coordinate to 1.
    """
    if m.rows != m.cols - 1:
        raise PreconditionViolated(f"shape {m.rows}x{m.cols}, want (n-1) x n")
    if rank(m) != m.rows:
        raise PreconditionViolated("matrix does not have full row rank")
    if not row_equivalent(entrywise_frobenius(m), m):
        raise PreconditionViolated("conjugated matrix is not row equivalent to the original")
    ns = nullspace(m)
    assert ns.rows == 1
    f = m.field
    v = ns.data[0]
    first = next(x for x in v if x)
    s = f.inv(first)
    v = [f.mul(s, x) for x in v]
    if all(f.in_subfield(x) for x in v):
        return v
    # unreachable when the preconditions hold; scan scalings before giving up
    for lam in range(1, f.q2):
        w = [f.mul(lam, x) for x in v]
        if all(f.in_subfield(x) for x in w):
            return w
    raise NoSubfieldSolution("kernel line has no GF(q) representative")
