"""Symmetric-group representations attached to fully extendable sets.

Groups are presented by generator matrices (:class:`MatrixGroupGens`).
The ``verify_corollary*`` functions take such a presentation, check the
hypotheses under which a linear (resp. projective) representation of S_m
must come from a homogeneous set, and when they hold, check that the
orbit really has one of the permitted shapes and that the group is the one
the orbit induces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionError, FieldMismatchError, SizeLimitError
from .fields import FieldSpec, PrimeField
from .linalg import Matrix, rref, span_contains, vec_sub
from .linear import VectorSet, alpha_extension, classify_linear, group_of_set
from .permutations import Permutation, all_permutations, closure
from .projective import (
    ProjPoint,
    ProjSet,
    apply_to_point,
    classify_projective,
    extend_permutation_projective,
    pgl_equal,
    pgl_normalize,
    unique_simplex_map,
)
from .verdicts import BasisPlusNegativeSum, HarmonicChar3, Independent, Simplex

__all__ = [
    "MatrixGroupGens",
    "InvariantScan",
    "CorollaryReport",
    "standard_negsum_rep",
    "coxeter_check",
    "generate_group",
    "orbit",
    "is_faithful_on",
    "spin",
    "invariant_subspace_scan",
    "verify_corollary1",
    "verify_corollary2",
    "projectivize_group_equality",
]

DEFAULT_GROUP_CAP = 40320
DEFAULT_ORBIT_CAP = 10**4


@dataclass(frozen=True)
class MatrixGroupGens:
    field: FieldSpec
    dim: int
    gens: tuple

    def __post_init__(self):
        gens = tuple(self.gens)
        if not gens:
            raise ValueError("at least one generator is required")
        for g in gens:
            if g.field != self.field:
                raise FieldMismatchError(f"generator over {g.field}, expected {self.field}")
            if g.n != self.dim:
                raise DimensionError(f"{g.n}x{g.n} generator in dimension {self.dim}")
            if not g.is_invertible():
                raise ValueError("generators must be invertible")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, gens: Sequence[Matrix]) -> "MatrixGroupGens":
        gens = list(gens)
        if not gens:
            raise ValueError("at least one generator is required")
        return cls(gens[0].field, gens[0].n, tuple(gens))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)


def standard_negsum_rep(n: int, field: FieldSpec) -> MatrixGroupGens:
    """Coxeter generators of S_{n+1} permuting ``e_1, ..., e_n, -(e_1+...+e_n)``.

    The first ``n - 1`` generators swap adjacent basis vectors; the last
    fixes ``e_1..e_{n-1}`` and sends ``e_n`` to ``-(e_1 + ... + e_n)``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    one, zero = field.one, field.zero
    basis = [tuple(one if i == j else zero for i in range(n)) for j in range(n)]
    gens = []
    for i in range(n - 1):
        cols = list(basis)
        cols[i], cols[i + 1] = cols[i + 1], cols[i]
        gens.append(Matrix.from_columns(field, cols))
    cols = list(basis)
    cols[n - 1] = tuple(-one for _ in range(n))
    gens.append(Matrix.from_columns(field, cols))
    return MatrixGroupGens(field, n, tuple(gens))


def _gens(gens) -> MatrixGroupGens:
    return gens if isinstance(gens, MatrixGroupGens) else MatrixGroupGens.of(gens)


def coxeter_check(gens, projective: bool = False) -> bool:
    """Check the Coxeter relations of type A on the generator sequence.

    With ``projective=True`` each relation need only hold up to a scalar.
    """
    gens = _gens(gens)
    s = list(gens)
    ident = gens.identity()

    def trivial(m):
        return pgl_equal(ident, m) if projective else m == ident

    for i, a in enumerate(s):
        if not trivial(a @ a):
            return False
        for j in range(i + 1, len(s)):
            power = 3 if j == i + 1 else 2
            if not trivial((a @ s[j]) ** power):
                return False
    return True


def generate_group(gens, cap: int = DEFAULT_GROUP_CAP, projective: bool = False) -> list[Matrix]:
    """All elements of the generated group (breadth-first order).

    Projective elements are represented by their :func:`pgl_normalize` form.
    """
    gens = _gens(gens)
    if projective:
        return closure(
            [pgl_normalize(g) for g in gens],
            lambda a, b: pgl_normalize(a @ b),
            pgl_normalize(gens.identity()),
            cap,
        )
    return closure(list(gens), lambda a, b: a @ b, gens.identity(), cap)


def _act(g: Matrix, x):
    return apply_to_point(g, x) if isinstance(x, ProjPoint) else g.apply(x)


def orbit(gens, seed, cap: int = DEFAULT_ORBIT_CAP) -> list:
    """Breadth-first orbit of a nonzero vector or of a :class:`ProjPoint`."""
    gens = _gens(gens)
    if not isinstance(seed, ProjPoint):
        seed = gens.field.vector(seed)
        if not any(seed):
            raise ValueError("seed must be nonzero")
    return closure(list(gens), lambda x, g: _act(g, x), seed, cap)


def _fixes_pointwise(g: Matrix, X) -> bool:
    return all(_act(g, x) == x for x in X)


def is_faithful_on(gens, X, group_cap: int = DEFAULT_GROUP_CAP) -> bool:
    """True iff only the identity of the generated group fixes every element of X.

    When X holds :class:`ProjPoint` values the group is taken in PGL.
    """
    X = list(X)
    projective = isinstance(X[0], ProjPoint)
    group = generate_group(gens, group_cap, projective)
    return _faithful(group, X, projective)


def _faithful(group, X, projective) -> bool:
    ident = Matrix.identity(group[0].field, group[0].n)
    fixing = [g for g in group if _fixes_pointwise(g, X)]
    if projective:
        return all(pgl_equal(ident, g) for g in fixing)
    return all(g == ident for g in fixing)


def spin(gens, v) -> list[tuple]:
    """Reduced basis of the smallest subspace containing ``v`` and stable
    under every generator."""
    gens = _gens(gens)
    field = gens.field
    basis = [field.vector(v)]
    queue = list(basis)
    while queue:
        w = queue.pop()
        for g in gens:
            gw = g.apply(w)
            if not span_contains(basis, gw, field):
                basis.append(gw)
                queue.append(gw)
    red, r, _ = rref(basis, field)
    return [tuple(row) for row in red[:r]]


@dataclass(frozen=True)
class InvariantScan:
    """Outcome of :func:`invariant_subspace_scan`.

    ``basis`` spans a proper invariant subspace, or is None.  ``complete``
    is True when a None answer is a proof that no such subspace exists.
    """

    basis: Optional[tuple]
    complete: bool

    @property
    def found(self) -> bool:
        return self.basis is not None


def _lines(field: PrimeField, n: int):
    for v in field.vectors(n):
        lead = next((x for x in v if x), None)
        if lead is not None and lead.value == 1:
            yield v


def _rational_seeds(gens: MatrixGroupGens, extra):
    field, n = gens.field, gens.dim
    basis = [tuple(field.one if i == j else field.zero for i in range(n)) for j in range(n)]
    seeds = list(basis)
    for e in basis:
        for g in gens:
            seeds.append(vec_sub(g.apply(e), e))
        try:
            orb = orbit(gens, e, DEFAULT_ORBIT_CAP)
        except SizeLimitError:
            continue
        total = tuple(sum(col, field.zero) for col in zip(*orb))
        seeds.append(total)
    seeds.extend(field.vector(s) for s in extra)
    return [s for s in seeds if any(s)]


def invariant_subspace_scan(gens, seeds: Sequence = ()) -> InvariantScan:
    """Search for a proper nonzero subspace stable under every generator.

    Over GF(p) every line is spun, so a negative answer is definitive.  Over
    Q only the heuristic seeds (standard basis vectors, ``g e_i - e_i``,
    orbit sums of ``e_i`` and the caller's ``seeds``) are spun, and a
    negative answer carries ``complete=False``.
    """
    gens = _gens(gens)
    n = gens.dim
    if isinstance(gens.field, PrimeField):
        candidates, complete = _lines(gens.field, n), True
    else:
        candidates, complete = _rational_seeds(gens, seeds), False
    for v in candidates:
        w = spin(gens, v)
        if len(w) < n:
            return InvariantScan(tuple(w), True)
    return InvariantScan(None, complete)


@dataclass
class CorollaryReport:
    which: int
    field: str
    dim: int
    m: int
    hypotheses: dict
    orbit: list
    conclusion: Optional[dict] = None
    status: str = "inapplicable"

    @property
    def hypotheses_hold(self) -> bool:
        return self.hypotheses["hold"]

    @property
    def exit_code(self) -> int:
        return {"verified": 0, "inapplicable": 4, "violation": 5}[self.status]

    def to_dict(self) -> dict:
        return {
            "corollary": self.which,
            "field": self.field,
            "dim": self.dim,
            "m": self.m,
            "orbit": self.orbit,
            "hypotheses": self.hypotheses,
            "conclusion": self.conclusion,
            "status": self.status,
        }


def _fmt_vec(field, v):
    return [field.format(x) for x in v]


def _hypotheses(gens, m, seed, projective, group_cap, orbit_cap):
    group = generate_group(gens, group_cap, projective)
    relations = coxeter_check(gens, projective)
    iso = relations and len(gens) == m - 1 and len(group) == math.factorial(m)
    X = orbit(gens, seed, orbit_cap)
    scan = invariant_subspace_scan(gens)
    faithful = _faithful(group, X, projective)
    hyp = {
        "coxeter_relations": relations,
        "generator_count": len(gens),
        "group_order": len(group),
        "isomorphic_to_symmetric_group": iso,
        "orbit_size": len(X),
        "orbit_size_ok": len(X) == m and len(X) >= 2,
        "faithful": faithful,
        "invariant_subspace": None if scan.basis is None else [_fmt_vec(gens.field, v) for v in scan.basis],
        "invariant_scan_complete": scan.complete,
    }
    hyp["hold"] = bool(iso and hyp["orbit_size_ok"] and faithful and scan.basis is None)
    return group, X, hyp


def _restriction(g: Matrix, X) -> Optional[Permutation]:
    lookup = {x: i for i, x in enumerate(X)}
    images = [lookup.get(_act(g, x)) for x in X]
    if any(i is None for i in images):
        return None
    return Permutation(images)


def verify_corollary1(
    gens,
    m: int,
    seed,
    group_cap: int = DEFAULT_GROUP_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
) -> CorollaryReport:
    """Check a linear representation of S_m against the homogeneous-set shapes.

    Hypotheses: the generators satisfy the Coxeter relations of S_m and
    generate a group of order m!; the orbit of ``seed`` has m >= 2 elements
    and the action on it is faithful; no proper invariant subspace exists.
    Conclusion: the orbit is a basis or a basis plus its negated sum, and
    every group element is the unique extension of the permutation it
    induces on the orbit.
    """
    gens = _gens(gens)
    field, n = gens.field, gens.dim
    group, X, hyp = _hypotheses(gens, m, seed, False, group_cap, orbit_cap)
    report = CorollaryReport(1, str(field), n, m, hyp, [_fmt_vec(field, x) for x in X])
    if not hyp["hold"]:
        return report
    VX = VectorSet(field, X)
    verdict = classify_linear(VX)
    shape_ok = (isinstance(verdict, Independent) and len(X) == n) or (
        isinstance(verdict, BasisPlusNegativeSum) and verdict.m == n
    )
    equal = False
    if shape_ok:
        restrictions = [_restriction(g, X) for g in group]
        equal = (
            all(s is not None for s in restrictions)
            and len(set(restrictions)) == len(group)
            and all(alpha_extension(VX, s) == g for s, g in zip(restrictions, group))
        )
    report.conclusion = {
        "verdict": verdict.name,
        "verdict_m": getattr(verdict, "m", getattr(verdict, "rank", None)),
        "shape_ok": shape_ok,
        "group_equals_induced_group": equal,
    }
    report.status = "verified" if shape_ok and equal else "violation"
    return report


def verify_corollary2(
    gens,
    m: int,
    seed,
    group_cap: int = DEFAULT_GROUP_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
) -> CorollaryReport:
    """Projective counterpart of :func:`verify_corollary1`.

    The generators are read in PGL: relations, orbit and faithfulness are
    all taken up to scalars.  Conclusion: the orbit is a maximal independent
    set, an n-simplex, or a harmonic quadruple in characteristic 3, and if
    it is not independent the group equals the group of unique extensions
    of its permutations.
    """
    gens = _gens(gens)
    field, n = gens.field, gens.dim
    if not isinstance(seed, ProjPoint):
        seed = ProjPoint(field, seed)
    group, X, hyp = _hypotheses(gens, m, seed, True, group_cap, orbit_cap)
    report = CorollaryReport(2, str(field), n, m, hyp, [_fmt_vec(field, x.rep) for x in X])
    if not hyp["hold"]:
        return report
    P = ProjSet(field, X)
    verdict = classify_projective(P)
    shape_ok = (
        (isinstance(verdict, Independent) and len(P) == n)
        or (isinstance(verdict, Simplex) and verdict.m == n)
        or isinstance(verdict, HarmonicChar3)
    )
    equal = None
    if shape_ok and not isinstance(verdict, Independent):
        induced = []
        for s in all_permutations(len(P)):
            target = ProjSet(field, s.apply_to(P.points))
            if isinstance(verdict, Simplex):
                induced.append(unique_simplex_map(P, target))
            else:
                induced.append(extend_permutation_projective(P, s))
        equal = (
            None not in induced
            and len(induced) == len(group)
            and all(any(pgl_equal(g, h) for h in induced) for g in group)
            and all(any(pgl_equal(g, h) for g in group) for h in induced)
        )
    report.conclusion = {
        "verdict": verdict.name,
        "verdict_m": getattr(verdict, "m", getattr(verdict, "rank", None)),
        "shape_ok": shape_ok,
        "group_equals_induced_group": equal,
    }
    report.status = "verified" if shape_ok and equal is not False else "violation"
    return report


def projectivize_group_equality(X: VectorSet) -> bool:
    """Whether the projective images of the ``alpha_extension`` matrices of a
    spanning basis-plus-negated-sum set are exactly the unique extensions
    of the permutations of its n-simplex of points."""
    verdict = classify_linear(X)
    if not (isinstance(verdict, BasisPlusNegativeSum) and verdict.m == X.dim):
        raise ValueError(f"expected a spanning basis-plus-negated-sum set, got {verdict.name}")
    linear_group = group_of_set(X)
    P = ProjSet(X.field, X.vectors)
    induced = [
        unique_simplex_map(P, ProjSet(X.field, s.apply_to(P.points)))
        for s in all_permutations(len(P))
    ]
    return len(linear_group) == len(induced) and all(
        any(pgl_equal(g, h) for h in induced) for g in linear_group
    ) and all(any(pgl_equal(g, h) for g in linear_group) for h in induced)
