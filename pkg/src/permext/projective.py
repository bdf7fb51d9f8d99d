"""Point sets in projective space and their extension to PGL(V).

A point is a one-dimensional subspace stored through a representative
whose first nonzero coordinate is 1.  Elements of PGL(V) are plain
:class:`~permext.linalg.Matrix` values read up to a nonzero scalar;
compare them with :func:`pgl_equal`.

Three kinds of finite point sets admit an extension of every permutation:
independent sets, m-simplices, and (only in characteristic 3) harmonic
quadruples ``<x>, <y>, <x+y>, <x-y>``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import DimensionError, FieldMismatchError, NotCollinearError, NotSimplexError
from .fields import FieldSpec, Scalar
from .linalg import Matrix, columns_to_rows, rank, rref, solve, vec_scale, vec_sub
from .linear import map_from_bases
from .permutations import Permutation, star_transpositions
from .verdicts import HarmonicChar3, Independent, NotHomogeneous, ProjClass, Simplex

__all__ = [
    "ProjPoint",
    "ProjSet",
    "PglElement",
    "normalize_rep",
    "is_independent",
    "is_simplex",
    "simplex_normal_form",
    "is_harmonic",
    "projective_map",
    "extend_permutation_projective",
    "is_fully_extendable_projective",
    "classify_projective",
    "normalize_lift",
    "unique_simplex_map",
    "pgl_equal",
    "pgl_normalize",
    "apply_to_point",
    "induced_permutation",
]

PglElement = Matrix


def normalize_rep(field: FieldSpec, v) -> tuple:
    v = field.vector(v)
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("the zero vector does not determine a projective point")
    inv = field.one / lead
    return tuple(inv * x for x in v)


@dataclass(frozen=True)
class ProjPoint:
    field: FieldSpec
    rep: tuple

    def __post_init__(self):
        object.__setattr__(self, "rep", normalize_rep(self.field, self.rep))

    @property
    def dim(self) -> int:
        return len(self.rep)

    def contains(self, v) -> bool:
        """True iff ``v`` is a nonzero vector of this line."""
        v = self.field.vector(v)
        return any(v) and normalize_rep(self.field, v) == self.rep

    def __repr__(self):
        return "<" + ",".join(self.field.format(x) for x in self.rep) + ">"


@dataclass(frozen=True)
class ProjSet:
    """Ordered set of distinct points; accepts points or nonzero vectors."""

    field: FieldSpec
    points: tuple

    def __post_init__(self):
        pts = tuple(
            p if isinstance(p, ProjPoint) else ProjPoint(self.field, p) for p in self.points
        )
        if not pts:
            raise DimensionError("a ProjSet needs at least one point")
        if any(p.field != self.field for p in pts):
            raise FieldMismatchError("points over different fields")
        dims = {p.dim for p in pts}
        if len(dims) != 1:
            raise DimensionError(f"points of differing dimensions {sorted(dims)}")
        if dims.pop() < 2:
            raise DimensionError("vector spaces of dimension < 2 are not supported")
        if len(set(pts)) != len(pts):
            seen = set()
            for i, p in enumerate(pts):
                if p in seen:
                    raise ValueError(f"duplicate point at position {i}")
                seen.add(p)
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return self.points[0].dim

    @property
    def reps(self) -> list[tuple]:
        return [p.rep for p in self.points]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def rank(self) -> int:
        return rank(columns_to_rows(self.reps), self.field)

    def index(self, point) -> int:
        if not isinstance(point, ProjPoint):
            point = ProjPoint(self.field, point)
        return self.points.index(point)


def _as_permutation(sigma) -> Permutation:
    return sigma if isinstance(sigma, Permutation) else Permutation(sigma)


def is_independent(P: ProjSet) -> bool:
    return P.rank == len(P)


def is_simplex(P: ProjSet) -> Optional[int]:
    """``m`` if P is an m-simplex (``2 <= m <= dim``), else None."""
    m = len(P) - 1
    if not 2 <= m <= P.dim:
        return None
    if is_independent(P):
        return None
    for sub in itertools.combinations(P.reps, m):
        if rank(columns_to_rows(sub), P.field) != m:
            return None
    return m


def simplex_normal_form(P: ProjSet) -> list[tuple]:
    """Vectors ``x_i`` in the first m points whose sum lies in the last point."""
    m = is_simplex(P)
    if m is None:
        raise NotSimplexError(f"{list(P.points)} is not a simplex")
    reps = P.reps
    coeffs = solve(columns_to_rows(reps[:m]), reps[m], P.field)
    return [vec_scale(c, r) for c, r in zip(coeffs, reps[:m])]


def is_harmonic(P: ProjSet):
    """Independent ``(x, y)`` with ``P == {<x>, <y>, <x+y>, <x-y>}``, or None."""
    if len(P) != 4:
        return None
    reps = P.reps
    field = P.field
    for a, b, c in itertools.permutations(range(4), 3):
        (d,) = set(range(4)) - {a, b, c}
        pair = [reps[a], reps[b]]
        if rank(columns_to_rows(pair), field) != 2:
            continue
        coeffs = solve(columns_to_rows(pair), reps[c], field)
        if coeffs is None or not all(coeffs):
            continue
        x = vec_scale(coeffs[0], reps[a])
        y = vec_scale(coeffs[1], reps[b])
        diff = vec_sub(x, y)
        if any(diff) and P.points[d].contains(diff):
            return x, y
    return None


class _RatioForest:
    """Union-find over unknown scalars with ``mu[x] == weight[x] * mu[parent[x]]``."""

    def __init__(self, size: int, one: Scalar):
        self.one = one
        self.parent = list(range(size))
        self.weight = [one] * size

    def find(self, x: int):
        if self.parent[x] == x:
            return x, self.one
        root, w = self.find(self.parent[x])
        self.weight[x] = self.weight[x] * w
        self.parent[x] = root
        return root, self.weight[x]

    def relate(self, x: int, y: int, ratio: Scalar) -> bool:
        """Impose ``mu[x] == ratio * mu[y]``; False on contradiction."""
        rx, wx = self.find(x)
        ry, wy = self.find(y)
        if rx == ry:
            return wx == ratio * wy
        self.parent[rx] = ry
        self.weight[rx] = ratio * wy / wx
        return True


def projective_map(
    field: FieldSpec,
    src: Sequence[tuple],
    dst: Sequence[tuple],
    n: int,
    free_scalar: Optional[Callable[[int], Scalar]] = None,
) -> Optional[Matrix]:
    """A matrix sending each ``<src[i]>`` onto ``<dst[i]>``, or None.

    The images of a maximal independent subfamily ``B`` of ``src`` are
    scaled by unknowns ``mu_b``; every other point fixes ratios between the
    unknowns on its support.  ``free_scalar(root)`` chooses the value of
    each unconstrained class of unknowns (default 1).
    """
    if len(src) != len(dst):
        raise DimensionError("point families of different sizes")
    _, r, basis = rref(columns_to_rows(src), field)
    src_b = [src[i] for i in basis]
    dst_b = [dst[i] for i in basis]
    if rank(columns_to_rows(dst_b), field) != r:
        return None
    src_rows = columns_to_rows(src_b)
    dst_rows = columns_to_rows(dst_b)
    forest = _RatioForest(r, field.one)
    in_basis = set(basis)
    for i in range(len(src)):
        if i in in_basis:
            continue
        a = solve(src_rows, src[i], field)
        c = solve(dst_rows, dst[i], field)
        if c is None:
            return None
        support = [t for t in range(r) if a[t]]
        if support != [t for t in range(r) if c[t]]:
            return None
        t0 = support[0]
        base = c[t0] / a[t0]
        for t in support[1:]:
            if not forest.relate(t, t0, (c[t] / a[t]) / base):
                return None
    roots = {}
    mus = []
    for t in range(r):
        root, w = forest.find(t)
        if root not in roots:
            roots[root] = field.one if free_scalar is None else field.coerce(free_scalar(root))
            if not roots[root]:
                raise ValueError("free scalars must be nonzero")
        mus.append(w * roots[root])
    return map_from_bases(field, src_b, [vec_scale(mu, v) for mu, v in zip(mus, dst_b)], n)


def extend_permutation_projective(
    P: ProjSet, sigma, free_scalar: Optional[Callable[[int], Scalar]] = None
) -> Optional[Matrix]:
    """A matrix whose induced map sends ``P[i]`` to ``P[sigma(i)]``, or None."""
    sigma = _as_permutation(sigma)
    if len(sigma) != len(P):
        raise DimensionError(f"permutation of size {len(sigma)} for a set of {len(P)} points")
    reps = P.reps
    return projective_map(P.field, reps, sigma.apply_to(reps), P.dim, free_scalar)


def is_fully_extendable_projective(P: ProjSet):
    """``(True, None)`` if every permutation of P extends, else ``(False, witness)``."""
    if len(P) < 2:
        raise ValueError("classification needs at least two elements")
    for t in star_transpositions(len(P)):
        if extend_permutation_projective(P, t) is None:
            return False, t
    return True, None


def classify_projective(P: ProjSet) -> ProjClass:
    if len(P) < 2:
        raise ValueError("classification needs at least two elements")
    if is_independent(P):
        return Independent(len(P))
    m = is_simplex(P)
    if m is not None:
        return Simplex(m)
    if P.field.characteristic == 3 and is_harmonic(P) is not None:
        return HarmonicChar3()
    ok, witness = is_fully_extendable_projective(P)
    if ok:
        raise RuntimeError(f"every transposition of {P} extends but the set has no homogeneous shape")
    return NotHomogeneous(witness)


def pgl_equal(a: Matrix, b: Matrix) -> bool:
    """True iff ``b == c * a`` for a nonzero scalar ``c``."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} and {b.field} matrices")
    if a.n != b.n:
        raise DimensionError("matrices of different sizes")
    i, j = next((i, j) for i, row in enumerate(a.rows) for j, x in enumerate(row) if x)
    c = b.rows[i][j] / a.rows[i][j]
    return bool(c) and b == a.scale(c)


def pgl_normalize(a: Matrix) -> Matrix:
    """The scalar multiple of ``a`` whose first nonzero entry is 1."""
    lead = next(x for row in a.rows for x in row if x)
    return a.scale(a.field.one / lead)


def normalize_lift(u: Matrix, x, y) -> Matrix:
    """``a^-1 * u`` where ``u(x) == a * y``; it maps x to y exactly."""
    x = u.field.vector(x)
    y = u.field.vector(y)
    if not any(x) or not any(y):
        raise ValueError("x and y must be nonzero")
    ux = u.apply(x)
    j = next(j for j, v in enumerate(y) if v)
    a = ux[j] / y[j]
    if not a or ux != vec_scale(a, y):
        raise NotCollinearError(f"u(x) is not a multiple of y")
    return u.scale(u.field.one / a)


def unique_simplex_map(src: ProjSet, dst: ProjSet) -> Matrix:
    """The PGL element sending ``src[i]`` to ``dst[i]`` for two n-simplices."""
    for name, P in (("source", src), ("target", dst)):
        if is_simplex(P) != P.dim:
            raise NotSimplexError(f"{name} is not an n-simplex in dimension {P.dim}")
    if src.field != dst.field:
        raise FieldMismatchError("simplices over different fields")
    if src.dim != dst.dim:
        raise DimensionError("simplices in different dimensions")
    s = Matrix.from_columns(src.field, simplex_normal_form(src))
    d = Matrix.from_columns(dst.field, simplex_normal_form(dst))
    return d @ s.inverse()


def apply_to_point(a: Matrix, point: ProjPoint) -> ProjPoint:
    return ProjPoint(point.field, a.apply(point.rep))


def induced_permutation(a: Matrix, P: ProjSet) -> Optional[Permutation]:
    """The permutation ``a`` induces on P, or None if it does not preserve P."""
    lookup = {p: i for i, p in enumerate(P.points)}
    images = []
    for p in P.points:
        j = lookup.get(apply_to_point(a, p))
        if j is None:
            return None
        images.append(j)
    return Permutation(images)
