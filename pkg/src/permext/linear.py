"""Extending permutations of finite vector sets to linear automorphisms.

A bijection ``x_i -> y_i`` between two families of vectors is the
restriction of an invertible linear map exactly when both families satisfy
the same linear relations.  For a permutation of a set the two families
have the same span, so equality of relation spaces reduces to a single
rank comparison, and the map is assembled from a maximal independent
subfamily.

Sets all of whose permutations extend are independent sets and the sets
``x_1, ..., x_m, -(x_1 + ... + x_m)`` with independent ``x_i``;
:func:`classify_linear` recognises both shapes directly and
:func:`is_fully_extendable_linear` decides the same question by testing
the transpositions ``(0 i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    DimensionError,
    NoExtensionError,
    NotSpanningError,
    SizeLimitError,
)
from .fields import FieldSpec
from .linalg import Matrix, columns_to_rows, rank, rref
from .permutations import MAX_ENUMERATION_SIZE, Permutation, all_permutations, star_transpositions
from .verdicts import BasisPlusNegativeSum, Independent, LinearClass, NotHomogeneous

__all__ = [
    "VectorSet",
    "complete_to_basis",
    "map_from_bases",
    "extend_permutation_linear",
    "is_fully_extendable_linear",
    "classify_linear",
    "alpha_extension",
    "group_of_set",
]


@dataclass(frozen=True)
class VectorSet:
    """An ordered set of distinct vectors of ``field^dim`` (``dim >= 2``)."""

    field: FieldSpec
    vectors: tuple

    def __post_init__(self):
        vecs = tuple(self.field.vector(v) for v in self.vectors)
        if not vecs:
            raise DimensionError("a VectorSet needs at least one vector")
        dims = {len(v) for v in vecs}
        if len(dims) != 1:
            raise DimensionError(f"vectors of differing lengths {sorted(dims)}")
        if dims.pop() < 2:
            raise DimensionError("vector spaces of dimension < 2 are not supported")
        if len(set(vecs)) != len(vecs):
            seen = set()
            for i, v in enumerate(vecs):
                if v in seen:
                    raise ValueError(f"duplicate vector at position {i}")
                seen.add(v)
        object.__setattr__(self, "vectors", vecs)

    @property
    def dim(self) -> int:
        return len(self.vectors[0])

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def column_rows(self) -> list[list]:
        """The ``dim x k`` array whose columns are the vectors."""
        return columns_to_rows(self.vectors)

    @property
    def rank(self) -> int:
        return rank(self.column_rows(), self.field)

    def pivot_indices(self) -> list[int]:
        """Indices of the maximal independent subfamily picked in input order."""
        return rref(self.column_rows(), self.field)[2]

    def spans(self) -> bool:
        return self.rank == self.dim

    def index(self, v) -> int:
        return self.vectors.index(tuple(v))


def _as_permutation(sigma) -> Permutation:
    return sigma if isinstance(sigma, Permutation) else Permutation(sigma)


def complete_to_basis(field: FieldSpec, vectors: Sequence[tuple], n: int) -> list[tuple]:
    """Standard basis vectors, taken greedily in index order, completing
    the independent family ``vectors`` to a basis of ``field^n``."""
    chosen = list(vectors)
    extra = []
    r = len(chosen)
    for j in range(n):
        if r == n:
            break
        e = tuple(field.one if i == j else field.zero for i in range(n))
        if rank(columns_to_rows(chosen + [e]), field) > r:
            chosen.append(e)
            extra.append(e)
            r += 1
    return extra


def map_from_bases(field: FieldSpec, src: Sequence[tuple], dst: Sequence[tuple], n: int) -> Matrix:
    """The automorphism sending ``src[i]`` to ``dst[i]``, where both families
    are independent.

    Each family is completed to a basis by :func:`complete_to_basis` and
    the completion of ``src`` is sent to that of ``dst``.  When the spans
    agree the completions coincide, so the map fixes them.
    """
    s = Matrix.from_columns(field, list(src) + complete_to_basis(field, src, n))
    d = Matrix.from_columns(field, list(dst) + complete_to_basis(field, dst, n))
    s_inv = s.inverse()
    if s_inv is None or not d.is_invertible():
        raise ValueError("families passed to map_from_bases must be independent")
    return d @ s_inv


def extend_permutation_linear(X: VectorSet, sigma) -> Optional[Matrix]:
    """An invertible ``u`` with ``u(x_i) == x_sigma(i)`` for all i, or None."""
    sigma = _as_permutation(sigma)
    if len(sigma) != len(X):
        raise DimensionError(f"permutation of size {len(sigma)} for a set of {len(X)} vectors")
    ys = sigma.apply_to(X.vectors)
    cols = X.column_rows()
    _, r, pivots = rref(cols, X.field)
    # R(X) == R(Y) iff the row spaces of the two coordinate arrays agree.
    if rank(cols + columns_to_rows(ys), X.field) != r:
        return None
    src = [X.vectors[i] for i in pivots]
    dst = [ys[i] for i in pivots]
    return map_from_bases(X.field, src, dst, X.dim)


def _require_pair(X):
    if len(X) < 2:
        raise ValueError("classification needs at least two elements")


def is_fully_extendable_linear(X: VectorSet):
    """``(True, None)`` if every permutation of X extends, else ``(False, witness)``.

    Only the transpositions ``(0 i)`` are tested; they generate the full
    symmetric group and the extendable permutations form a subgroup.
    """
    _require_pair(X)
    for t in star_transpositions(len(X)):
        if extend_permutation_linear(X, t) is None:
            return False, t
    return True, None


def classify_linear(X: VectorSet) -> LinearClass:
    _require_pair(X)
    k = len(X)
    r = X.rank
    if r == k:
        return Independent(r)
    if k == r + 1:
        zero = tuple(X.field.zero for _ in range(X.dim))
        total = zero
        for v in X:
            total = tuple(a + b for a, b in zip(total, v))
        if total == zero and all(
            rank(columns_to_rows(sub), X.field) == r for sub in itertools.combinations(X.vectors, r)
        ):
            return BasisPlusNegativeSum(r)
    ok, witness = is_fully_extendable_linear(X)
    if ok:
        raise RuntimeError(f"every transposition of {X} extends but the set has no homogeneous shape")
    return NotHomogeneous(witness)


def alpha_extension(X: VectorSet, sigma) -> Matrix:
    """The unique automorphism extending ``sigma`` on a spanning set X."""
    sigma = _as_permutation(sigma)
    if not X.spans():
        raise NotSpanningError(f"set of rank {X.rank} does not span a space of dimension {X.dim}")
    u = extend_permutation_linear(X, sigma)
    if u is None:
        raise NoExtensionError(f"{sigma} does not extend to an automorphism", sigma)
    return u


def group_of_set(X: VectorSet, cap: int = MAX_ENUMERATION_SIZE) -> list[Matrix]:
    """All ``alpha_extension(X, s)``, in lexicographic order of ``s``."""
    if len(X) > cap:
        raise SizeLimitError(f"|X| = {len(X)} exceeds the enumeration cap {cap}")
    if not X.spans():
        raise NotSpanningError(f"set of rank {X.rank} does not span a space of dimension {X.dim}")
    ok, witness = is_fully_extendable_linear(X)
    if not ok:
        raise NoExtensionError(f"{witness} does not extend", witness)
    return [alpha_extension(X, s) for s in all_permutations(len(X), cap)]
