"""Brute-force ground truth over GL(n, p).

Every invertible matrix over GF(p) is generated row by row, each new row
chosen outside the span of the previous ones.  For each batch of matrices
we tabulate the permutation it induces on all vectors of GF(p)^n and on
all points of P(GF(p)^n); an extension query is then a table lookup over
the whole group.  None of this shares code with the constructive
extension routines it is used to check.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional

import numpy as np

from .errors import BudgetExceededError, SizeLimitError, UnsupportedFieldError
from .fields import GF, PrimeField
from .linalg import Matrix
from .linear import VectorSet, classify_linear, extend_permutation_linear
from .permutations import MAX_ENUMERATION_SIZE, Permutation, star_transpositions
from .projective import (
    ProjSet,
    classify_projective,
    extend_permutation_projective,
    is_harmonic,
)

__all__ = [
    "SearchBudget",
    "OracleReport",
    "gl_order",
    "enumerate_gl",
    "oracle_extend_linear",
    "oracle_extend_projective",
    "exhaustive_theorem1_check",
    "exhaustive_theorem2_check",
    "nonzero_vectors",
    "projective_points",
]

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 10**8
# Groups up to this order keep their action tables in memory between queries.
_CACHE_ORDER = 300_000


@dataclass(frozen=True)
class SearchBudget:
    max_order: int = DEFAULT_MAX_ORDER
    workers: Optional[int] = None


def gl_order(n: int, p: int) -> int:
    q = p**n
    return math.prod(q - p**i for i in range(n))


def _check_budget(n: int, p: int, budget: Optional[SearchBudget]) -> int:
    budget = budget or SearchBudget()
    order = gl_order(n, p)
    if order > budget.max_order:
        raise BudgetExceededError(order, budget.max_order)
    return order


@functools.lru_cache(maxsize=None)
def _all_vectors(n: int, p: int) -> np.ndarray:
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(-1, n)


def _encode(arr: np.ndarray, p: int) -> np.ndarray:
    n = arr.shape[-1]
    weights = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return arr @ weights


@functools.lru_cache(maxsize=None)
def _point_tables(n: int, p: int):
    """Normalized point representatives and the code -> point index map."""
    vecs = _all_vectors(n, p)
    nz = vecs[vecs.any(axis=1)]
    lead = nz[np.arange(len(nz)), np.argmax(nz != 0, axis=1)]
    reps = nz[lead == 1]
    lookup = np.full(p**n, -1, dtype=np.int64)
    lookup[_encode(reps, p)] = np.arange(len(reps))
    inverses = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
    return reps, lookup, inverses


def nonzero_vectors(n: int, p: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of GF(p)^n in lexicographic order."""
    return [tuple(int(x) for x in v) for v in _all_vectors(n, p) if v.any()]


def projective_points(n: int, p: int) -> list[tuple[int, ...]]:
    """Normalized representatives of all points of P(GF(p)^n), lexicographic."""
    return [tuple(int(x) for x in v) for v in _point_tables(n, p)[0]]


def _complete(rows, span, n, p, vectors, out):
    if len(rows) == n:
        out.append(rows)
        return
    for v in vectors:
        if v in span:
            continue
        new_span = {tuple((s[i] + c * v[i]) % p for i in range(n)) for s in span for c in range(p)}
        _complete(rows + [v], new_span, n, p, vectors, out)


def _gl_chunk(n: int, p: int, first_row: tuple) -> np.ndarray:
    """All invertible matrices with the given first row, lexicographic by rows."""
    vectors = [tuple(int(x) for x in v) for v in _all_vectors(n, p)]
    zero = (0,) * n
    span = {tuple((c * first_row[i]) % p for i in range(n)) for c in range(p)} | {zero}
    out = []
    _complete([first_row], span, n, p, vectors, out)
    return np.array(out, dtype=np.int64).reshape(-1, n, n)


def _action_tables(mats: np.ndarray, n: int, p: int):
    vecs = _all_vectors(n, p)
    images = np.einsum("gij,vj->gvi", mats, vecs) % p
    linear = _encode(images, p)
    reps, lookup, inverses = _point_tables(n, p)
    pimg = np.einsum("gij,vj->gvi", mats, reps) % p
    lead = np.take_along_axis(pimg, np.argmax(pimg != 0, axis=-1)[..., None], axis=-1)
    normalized = (pimg * inverses[lead]) % p
    projective = lookup[_encode(normalized, p)]
    return linear, projective


@functools.lru_cache(maxsize=8)
def _cached_chunks(n: int, p: int):
    return tuple(_iter_chunks(n, p))


def _iter_chunks(n: int, p: int):
    for first in nonzero_vectors(n, p):
        mats = _gl_chunk(n, p, first)
        yield (mats,) + _action_tables(mats, n, p)


def _chunks(n: int, p: int):
    """Batches ``(matrices, linear_action, projective_action)``, one per first row."""
    if gl_order(n, p) <= _CACHE_ORDER:
        return _cached_chunks(n, p)
    return _iter_chunks(n, p)


def enumerate_gl(n: int, p: int, budget: Optional[SearchBudget] = None) -> Iterator[Matrix]:
    """Each invertible n x n matrix over GF(p) exactly once."""
    _check_budget(n, p, budget)
    field = GF(p)
    for first in nonzero_vectors(n, p):
        for m in _gl_chunk(n, p, first):
            yield Matrix(field, m.tolist())


def _prime_field(field) -> PrimeField:
    if not isinstance(field, PrimeField):
        raise UnsupportedFieldError(f"exhaustive search needs a finite field, got {field}")
    return field


def _vector_codes(vectors, p: int) -> np.ndarray:
    arr = np.array([[int(x) for x in v] for v in vectors], dtype=np.int64)
    return _encode(arr, p)


def _point_indices(reps, p: int) -> np.ndarray:
    _, lookup, _ = _point_tables(len(reps[0]), p)
    return lookup[_vector_codes(reps, p)]


def _search(n, p, column, codes, target, budget):
    _check_budget(n, p, budget)
    field = GF(p)
    for chunk in _chunks(n, p):
        hit = np.flatnonzero((chunk[column][:, codes] == target).all(axis=1))
        if hit.size:
            return Matrix(field, chunk[0][hit[0]].tolist())
    return None


def _as_perm(sigma, k):
    sigma = sigma if isinstance(sigma, Permutation) else Permutation(sigma)
    if len(sigma) != k:
        raise ValueError(f"permutation of size {len(sigma)} for a set of size {k}")
    return sigma


def oracle_extend_linear(X: VectorSet, sigma, budget: Optional[SearchBudget] = None) -> Optional[Matrix]:
    """First invertible matrix (generation order) with ``g(x_i) == x_sigma(i)``."""
    p = _prime_field(X.field).p
    sigma = _as_perm(sigma, len(X))
    codes = _vector_codes(X.vectors, p)
    return _search(X.dim, p, 1, codes, codes[list(sigma.images)], budget)


def oracle_extend_projective(P: ProjSet, sigma, budget: Optional[SearchBudget] = None) -> Optional[Matrix]:
    """First invertible matrix whose induced map sends ``P[i]`` to ``P[sigma(i)]``."""
    p = _prime_field(P.field).p
    sigma = _as_perm(sigma, len(P))
    idx = _point_indices(P.reps, p)
    return _search(P.dim, p, 2, idx, idx[list(sigma.images)], budget)


@dataclass
class OracleReport:
    theorem: int
    n: int
    p: int
    max_size: int
    group_order: int
    universe_size: int
    subsets_checked: int = 0
    verdict_counts: dict = dc_field(default_factory=dict)
    harmonic_subsets: int = 0
    discrepancies: list = dc_field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "theorem": self.theorem,
            "universe": {
                "n": self.n,
                "p": self.p,
                "max_size": self.max_size,
                "group_order": self.group_order,
                "size": self.universe_size,
                "kind": "nonzero_vectors" if self.theorem == 1 else "projective_points",
            },
            "subsets_checked": self.subsets_checked,
            "verdict_counts": dict(sorted(self.verdict_counts.items())),
            "discrepancies": self.discrepancies,
        }
        if self.theorem == 2:
            d["harmonic_subsets"] = self.harmonic_subsets
        if include_timing:
            d["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return d


def _verdict_key(v) -> str:
    m = getattr(v, "m", None)
    return f"{v.name}({m})" if m is not None else v.name


def _all_tables(n, p):
    chunks = _chunks(n, p)
    lin = np.concatenate([c[1] for c in chunks])
    proj = np.concatenate([c[2] for c in chunks])
    return lin, proj


def _check_linear_subset(subset, field, table):
    X = VectorSet(field, subset)
    p = field.p
    codes = _vector_codes(subset, p)
    sub = table[:, codes]
    verdict = classify_linear(X)
    problems = []
    oracle_all = True
    for t in star_transpositions(len(X)):
        found = bool((sub == codes[list(t.images)]).all(axis=1).any())
        u = extend_permutation_linear(X, t)
        if (u is not None) != found:
            problems.append((t, f"constructive={'present' if u is not None else 'absent'} oracle={'present' if found else 'absent'}"))
        if u is not None and not (u.is_invertible() and all(u.apply(X[i]) == X[t(i)] for i in range(len(X)))):
            problems.append((t, "constructive extension fails substitution"))
        oracle_all = oracle_all and found
    if verdict.homogeneous != oracle_all:
        problems.append((None, f"verdict {verdict.name} but oracle full-extendability={oracle_all}"))
    return verdict, False, problems


def _check_projective_subset(subset, field, table):
    P = ProjSet(field, subset)
    p = field.p
    idx = _point_indices(P.reps, p)
    sub = table[:, idx]
    verdict = classify_projective(P)
    problems = []
    oracle_all = True
    for t in star_transpositions(len(P)):
        found = bool((sub == idx[list(t.images)]).all(axis=1).any())
        a = extend_permutation_projective(P, t)
        if (a is not None) != found:
            problems.append((t, f"constructive={'present' if a is not None else 'absent'} oracle={'present' if found else 'absent'}"))
        if a is not None:
            sound = a.is_invertible() and all(
                P[t(i)].contains(a.apply(P[i].rep)) for i in range(len(P))
            )
            if not sound:
                problems.append((t, "constructive extension fails proportionality"))
        oracle_all = oracle_all and found
    if verdict.homogeneous != oracle_all:
        problems.append((None, f"verdict {verdict.name} but oracle full-extendability={oracle_all}"))
    return verdict, is_harmonic(P) is not None, problems


def _sweep_part(theorem, n, p, max_size, part, parts):
    """Process the subsets whose enumeration index is ``part`` mod ``parts``."""
    field = GF(p)
    lin, proj = _all_tables(n, p)
    if theorem == 1:
        universe, table, check = nonzero_vectors(n, p), lin, _check_linear_subset
    else:
        universe, table, check = projective_points(n, p), proj, _check_projective_subset
    counts: dict = {}
    harmonic = 0
    found = []
    checked = 0
    pos = -1
    for size in range(2, min(max_size, len(universe)) + 1):
        for subset in itertools.combinations(universe, size):
            pos += 1
            if pos % parts != part:
                continue
            checked += 1
            verdict, is_harm, problems = check(subset, field, table)
            key = _verdict_key(verdict)
            counts[key] = counts.get(key, 0) + 1
            harmonic += is_harm
            for t, reason in problems:
                found.append((pos, {
                    "subset": [list(v) for v in subset],
                    "permutation": None if t is None else t.to_list(),
                    "reason": reason,
                }))
    return checked, counts, harmonic, found


def _sweep(theorem, n, p, max_size, budget):
    budget = budget or SearchBudget()
    if max_size > MAX_ENUMERATION_SIZE:
        raise SizeLimitError(f"max_size {max_size} exceeds the cap {MAX_ENUMERATION_SIZE}")
    order = _check_budget(n, p, budget)
    GF(p)  # rejects composite moduli before any work
    start = time.perf_counter()
    universe = nonzero_vectors(n, p) if theorem == 1 else projective_points(n, p)
    report = OracleReport(theorem, n, p, max_size, order, len(universe))
    parts = max(1, budget.workers or 1)
    if parts == 1:
        results = [_sweep_part(theorem, n, p, max_size, 0, 1)]
    else:
        with ProcessPoolExecutor(max_workers=parts) as pool:
            futures = [pool.submit(_sweep_part, theorem, n, p, max_size, i, parts) for i in range(parts)]
            results = [f.result() for f in futures]
    merged = []
    for checked, counts, harmonic, found in results:
        report.subsets_checked += checked
        report.harmonic_subsets += harmonic
        for k, v in counts.items():
            report.verdict_counts[k] = report.verdict_counts.get(k, 0) + v
        merged.extend(found)
    merged.sort(key=lambda item: item[0])
    report.discrepancies = [d for _, d in merged]
    report.elapsed_seconds = time.perf_counter() - start
    logger.info("theorem %d sweep n=%d p=%d: %d subsets in %.2fs", theorem, n, p,
                report.subsets_checked, report.elapsed_seconds)
    return report


def exhaustive_theorem1_check(n: int, p: int, max_size: int = 6, budget: Optional[SearchBudget] = None) -> OracleReport:
    """Compare :func:`classify_linear` with GL(n, p) exhaustion on every
    subset of nonzero vectors of size 2..max_size."""
    return _sweep(1, n, p, max_size, budget)


def exhaustive_theorem2_check(n: int, p: int, max_size: int = 6, budget: Optional[SearchBudget] = None) -> OracleReport:
    """Compare :func:`classify_projective` with GL(n, p) exhaustion on every
    subset of points of P(GF(p)^n) of size 2..max_size."""
    return _sweep(2, n, p, max_size, budget)
