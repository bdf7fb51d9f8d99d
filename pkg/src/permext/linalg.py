"""Exact row reduction, kernels and square matrices over ``QQ`` and ``GF(p)``.

Rectangular arrays are plain sequences of rows.  Functions taking such
arrays accept an optional ``field``; when omitted it is inferred from the
entries and mixed fields raise :class:`FieldMismatchError`.  Square
matrices used as group elements are :class:`Matrix` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionError, FieldMismatchError
from .fields import FieldSpec, Scalar, infer_field

__all__ = [
    "Matrix",
    "rref",
    "rank",
    "kernel_basis",
    "relation_space",
    "solve",
    "columns_to_rows",
    "span_contains",
    "is_zero_vector",
    "vec_add",
    "vec_sub",
    "vec_scale",
]


def _normalize(rows, field):
    rows = [list(r) for r in rows]
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionError("ragged array")
    if field is None:
        field = infer_field(x for r in rows for x in r)
    return [[field.coerce(x) for x in r] for r in rows], field


def rref(rows: Sequence[Sequence], field: Optional[FieldSpec] = None):
    """Reduced row-echelon form.

    Returns ``(reduced_rows, rank, pivot_columns)``.  Pivots are chosen as
    the first nonzero entry scanning each column top to bottom, columns left
    to right.
    """
    a, field = _normalize(rows, field)
    if not a:
        return [], 0, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = field.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(rows: Sequence[Sequence], field: Optional[FieldSpec] = None) -> int:
    return rref(rows, field)[1]


def kernel_basis(rows: Sequence[Sequence], field: Optional[FieldSpec] = None) -> list[tuple]:
    """Basis of ``{c : rows . c = 0}``, one vector per free column."""
    a, r, pivots = rref(rows, field)
    if not a:
        return []
    field = field or infer_field(x for row in a for x in row)
    ncols = len(a[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        c = [field.zero] * ncols
        c[f] = field.one
        for i, p in enumerate(pivots):
            c[p] = -a[i][f]
        basis.append(tuple(c))
    return basis


def columns_to_rows(columns: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in zip(*columns)]


def relation_space(vectors: Sequence[Sequence], field: Optional[FieldSpec] = None) -> list[tuple]:
    """Basis of all coefficient vectors ``c`` with ``sum(c[i] * vectors[i]) == 0``."""
    if not vectors:
        raise DimensionError("relation space of an empty family")
    return kernel_basis(columns_to_rows(vectors), field)


def solve(rows: Sequence[Sequence], rhs: Sequence, field: Optional[FieldSpec] = None):
    """One solution ``c`` of ``rows . c = rhs`` (free variables set to 0), or None."""
    if len(rows) != len(rhs):
        raise DimensionError("right-hand side length does not match row count")
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    a, _, pivots = rref(aug, field)
    ncols = len(aug[0]) - 1
    if pivots and pivots[-1] == ncols:
        return None
    field = field or infer_field(x for row in a for x in row)
    c = [field.zero] * ncols
    for i, p in enumerate(pivots):
        c[p] = a[i][ncols]
    return tuple(c)


def span_contains(vectors: Sequence[Sequence], v: Sequence, field: Optional[FieldSpec] = None) -> bool:
    if not vectors:
        return is_zero_vector(v)
    return solve(columns_to_rows(vectors), v, field) is not None


def is_zero_vector(v) -> bool:
    return not any(v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


@dataclass(frozen=True)
class Matrix:
    """Immutable square matrix over an exact field.

    ``m @ v`` applies the matrix to a coordinate tuple, ``m @ k`` multiplies
    matrices.
    """

    field: FieldSpec
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(self.field.coerce(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("Matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: FieldSpec, columns) -> "Matrix":
        return cls(field, columns_to_rows(columns))

    @classmethod
    def diagonal(cls, field: FieldSpec, entries) -> "Matrix":
        n = len(entries)
        return cls(field, [[entries[i] if i == j else field.zero for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def columns(self) -> list[tuple]:
        return [tuple(c) for c in zip(*self.rows)]

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} and {other.field} matrices")
        if other.n != self.n:
            raise DimensionError(f"{self.n}x{self.n} and {other.n}x{other.n} matrices")

    def apply(self, v) -> tuple:
        if len(v) != self.n:
            raise DimensionError(f"vector of length {len(v)} for {self.n}x{self.n} matrix")
        v = [self.field.coerce(x) for x in v]
        zero = self.field.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, v):
                s = s + a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            cols = other.columns
            return Matrix(self.field, columns_to_rows([self.apply(c) for c in cols]))
        if isinstance(other, (tuple, list)):
            return self.apply(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix(self.field, [[c * x for x in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.columns)

    def __pow__(self, e: int) -> "Matrix":
        if e < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroDivisionError("singular matrix")
            return inv ** (-e)
        result = Matrix.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def rank(self) -> int:
        return rref(self.rows, self.field)[1]

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.field, self.n)

    def det(self) -> Scalar:
        a = [list(r) for r in self.rows]
        n = self.n
        det = self.field.one
        for c in range(n):
            pr = next((i for i in range(c, n) if a[i][c]), None)
            if pr is None:
                return self.field.zero
            if pr != c:
                a[c], a[pr] = a[pr], a[c]
                det = -det
            det = det * a[c][c]
            inv = self.field.one / a[c][c]
            for i in range(c + 1, n):
                if a[i][c]:
                    f = a[i][c] * inv
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return det

    def inverse(self) -> Optional["Matrix"]:
        """Exact inverse, or None when singular."""
        n = self.n
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        red, _, pivots = rref(aug, self.field)
        if pivots[:n] != list(range(n)):
            return None
        return Matrix(self.field, [r[n:] for r in red])

    def solve(self, b) -> Optional[tuple]:
        """Unique solution of ``self @ x == b``, or None when singular."""
        inv = self.inverse()
        return None if inv is None else inv.apply(b)

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(x) for x in r] for r in self.rows]

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.field.format(x) for x in r) + "]" for r in self.rows)
        return f"Matrix({self.field}, [{body}])"
