import math

import pytest

from _brute import all_subspaces, span_set
from permext.errors import SizeLimitError
from permext.fields import GF, QQ
from permext.linalg import Matrix
from permext.linear import VectorSet
from permext.projective import ProjPoint, pgl_equal
from permext.reps import (
    MatrixGroupGens,
    coxeter_check,
    generate_group,
    invariant_subspace_scan,
    is_faithful_on,
    orbit,
    projectivize_group_equality,
    spin,
    standard_negsum_rep,
    verify_corollary1,
    verify_corollary2,
)


def perm_matrix(field, images):
    n = len(images)
    cols = [tuple(field.one if r == images[c] else field.zero for r in range(n)) for c in range(n)]
    return Matrix.from_columns(field, cols)


def adjacent_perm_gens(field, n):
    return MatrixGroupGens.of(
        [perm_matrix(field, [i + 1 if j == i else i if j == i + 1 else j for j in range(n)]) for i in range(n - 1)]
    )


class TestStandardRep:
    def test_n2_over_q(self):
        s1, s2 = standard_negsum_rep(2, QQ)
        assert s1 == Matrix(QQ, [[0, 1], [1, 0]])
        assert s2 == Matrix(QQ, [[1, -1], [0, -1]])
        assert s2.apply((-1, -1)) == (0, 1)
        assert (s1 @ s2) ** 3 == Matrix.identity(QQ, 2)

    def test_n3_gf5_involutions(self):
        gens = standard_negsum_rep(3, GF(5))
        assert len(gens) == 3
        assert all((g @ g).is_identity() for g in gens)

    @pytest.mark.parametrize("field", [QQ, GF(2), GF(5)], ids=str)
    @pytest.mark.parametrize("n", range(2, 7))
    def test_generators_permute_the_set_and_satisfy_relations(self, field, n):
        gens = standard_negsum_rep(n, field)
        basis = [tuple(field.one if i == j else field.zero for i in range(n)) for j in range(n)]
        X = set(basis) | {tuple(-field.one for _ in range(n))}
        for g in gens:
            assert {g.apply(x) for x in X} == X
        assert coxeter_check(gens)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_group_order(self, n):
        assert len(generate_group(standard_negsum_rep(n, QQ))) == math.factorial(n + 1)

    def test_n_too_small(self):
        with pytest.raises(ValueError):
            standard_negsum_rep(1, QQ)


class TestCoxeter:
    def test_permutation_matrices(self):
        assert coxeter_check(adjacent_perm_gens(QQ, 4))

    def test_homothety_fails(self):
        assert not coxeter_check([Matrix.identity(QQ, 2).scale(2)])
        assert coxeter_check([Matrix.identity(QQ, 2).scale(2)], projective=True)

    def test_commuting_relation_required(self):
        F = QQ
        a = perm_matrix(F, [1, 0, 2])
        b = perm_matrix(F, [0, 2, 1])
        # in (a, b, b) the far-apart pair (a, b) has order 3, not 2
        assert coxeter_check([a, b])
        assert not coxeter_check([a, b, b])


class TestOrbit:
    def test_example_orbit(self):
        X = orbit(standard_negsum_rep(2, QQ), (1, 0))
        assert set(X) == {(1, 0), (0, 1), (-1, -1)} and len(X) == 3
        assert X[0] == (1, 0)

    def test_identity_orbit(self):
        assert orbit([Matrix.identity(QQ, 3)], (1, 2, 3)) == [(1, 2, 3)]

    def test_gf5_orbit(self):
        assert len(orbit(standard_negsum_rep(3, GF(5)), (1, 0, 0))) == 4

    def test_projective_orbit(self):
        X = orbit(standard_negsum_rep(2, GF(5)), ProjPoint(GF(5), (1, 0)))
        assert len(X) == 3

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            orbit([Matrix(QQ, [[1, 1], [0, 1]])], (0, 1), cap=10)

    def test_zero_seed(self):
        with pytest.raises(ValueError):
            orbit(standard_negsum_rep(2, QQ), (0, 0))


class TestFaithful:
    def test_negsum(self):
        gens = standard_negsum_rep(2, QQ)
        assert is_faithful_on(gens, orbit(gens, (1, 0)))

    def test_diagonal_not_faithful(self):
        assert not is_faithful_on([Matrix.diagonal(QQ, [1, -1])], [(1, 0)])

    def test_permutation_action(self):
        gens = adjacent_perm_gens(QQ, 3)
        assert is_faithful_on(gens, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])

    def test_projective_faithfulness_ignores_homotheties(self):
        F = GF(5)
        assert is_faithful_on([Matrix.identity(F, 2).scale(2)], [ProjPoint(F, (1, 0))])
        # diag(1, 2) fixes both coordinate points without being a homothety
        gens = [Matrix.diagonal(F, [1, 2])]
        assert not is_faithful_on(gens, [ProjPoint(F, (1, 0)), ProjPoint(F, (0, 1))])
        assert is_faithful_on(gens, [(1, 0), (0, 1)])


class TestScan:
    def test_gf3_line(self):
        scan = invariant_subspace_scan(standard_negsum_rep(2, GF(3)))
        F = GF(3)
        assert scan.basis == ((F(1), F(2)),) and scan.complete

    def test_gf2_none(self):
        scan = invariant_subspace_scan(standard_negsum_rep(2, GF(2)))
        assert scan.basis is None and scan.complete

    def test_rational_unipotent(self):
        scan = invariant_subspace_scan([Matrix(QQ, [[1, 1], [0, 1]])])
        assert scan.basis == ((1, 0),)

    def test_rational_negative_is_flagged(self):
        scan = invariant_subspace_scan(standard_negsum_rep(2, QQ))
        assert scan.basis is None and not scan.complete

    def test_rational_caller_seed(self):
        gens = adjacent_perm_gens(QQ, 3)
        scan = invariant_subspace_scan(gens, seeds=[(1, 1, 1)])
        assert scan.found

    def test_spin(self):
        gens = adjacent_perm_gens(QQ, 3)
        assert spin(gens, (1, 1, 1)) == [(1, 1, 1)]
        assert len(spin(gens, (1, 0, 0))) == 3


def _invariant_subspaces(p, n, gens):
    int_gens = [[[int(x) for x in row] for row in g.rows] for g in gens]
    found = []
    for members in all_subspaces(p, n):
        if 1 < len(members) < p**n:
            if all(tuple(sum(r[j] * v[j] for j in range(n)) % p for r in g) in members
                   for g in int_gens for v in members):
                found.append(members)
    return found


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3)])
def test_scan_agrees_with_subspace_enumeration_for_named_groups(p, n):
    F = GF(p)
    for gens in [standard_negsum_rep(n, F), adjacent_perm_gens(F, n), MatrixGroupGens.of([Matrix.identity(F, n)])]:
        scan = invariant_subspace_scan(gens)
        brute = _invariant_subspaces(p, n, gens)
        assert scan.found == bool(brute)
        if scan.found:
            members = span_set(p, [[int(x) for x in v] for v in scan.basis], n)
            assert members in brute


class TestCorollary1:
    def test_gf2_verified(self):
        r = verify_corollary1(standard_negsum_rep(2, GF(2)), 3, (1, 0))
        assert r.status == "verified" and r.exit_code == 0
        assert r.conclusion["verdict"] == "basis_plus_negsum"
        assert r.conclusion["group_equals_induced_group"]

    def test_gf3_inapplicable(self):
        r = verify_corollary1(standard_negsum_rep(2, GF(3)), 3, (1, 0))
        assert r.status == "inapplicable" and r.exit_code == 4
        assert r.hypotheses["invariant_subspace"] == [["1", "2"]]
        assert r.conclusion is None

    def test_s2_permutation_matrices(self):
        F = GF(2)
        r = verify_corollary1([perm_matrix(F, [1, 0])], 2, (1, 0))
        assert r.hypotheses["invariant_subspace"] == [["1", "1"]]
        assert r.exit_code == 4

    @pytest.mark.parametrize("p", [2, 5, 7])
    def test_s4_verified(self, p):
        r = verify_corollary1(standard_negsum_rep(3, GF(p)), 4, (1, 0, 0))
        if r.hypotheses["hold"]:
            assert r.status == "verified"
        else:
            assert r.status == "inapplicable"

    def test_wrong_degree_inapplicable(self):
        r = verify_corollary1(standard_negsum_rep(2, GF(2)), 4, (1, 0))
        assert r.exit_code == 4


class TestCorollary2:
    def test_gf2_simplex(self):
        r = verify_corollary2(standard_negsum_rep(2, GF(2)), 3, (1, 0))
        assert r.status == "verified"
        assert (r.conclusion["verdict"], r.conclusion["verdict_m"]) == ("simplex", 2)
        assert r.conclusion["group_equals_induced_group"] is True

    def test_gf5_s4(self):
        r = verify_corollary2(standard_negsum_rep(3, GF(5)), 4, (1, 0, 0))
        assert r.exit_code == 0
        assert (r.conclusion["verdict"], r.conclusion["verdict_m"]) == ("simplex", 3)

    def test_identity_only(self):
        r = verify_corollary2([Matrix.identity(GF(5), 2)], 1, (1, 0))
        assert r.exit_code == 4 and not r.hypotheses["orbit_size_ok"]


@pytest.mark.parametrize("field,n", [(GF(5), 2), (QQ, 2), (GF(7), 3)], ids=["gf5", "q", "gf7-3"])
def test_projectivize_group_equality(field, n):
    basis = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    X = VectorSet(field, basis + [tuple(-1 for _ in range(n))])
    assert projectivize_group_equality(X)


def test_projectivize_rejects_other_shapes():
    with pytest.raises(ValueError):
        projectivize_group_equality(VectorSet(QQ, [(1, 0), (0, 1)]))


def test_projective_group_closure_counts_classes():
    F = GF(5)
    gens = [Matrix.identity(F, 2).scale(2), Matrix(F, [[0, 1], [1, 0]])]
    group = generate_group(gens, projective=True)
    assert len(group) == 2
    assert any(pgl_equal(g, Matrix.identity(F, 2)) for g in group)
