import json
import subprocess
import sys

import pytest

from permext.cli import main
from permext.fields import parse_field
from permext.linalg import Matrix
from permext.linear import VectorSet


def write(tmp_path, doc, name="in.json"):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc, indent=1))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


NEGSUM_Q = {"field": "Q", "dim": 2, "vectors": [["1", "0"], ["0", "1"], ["-1", "-1"]]}
HARM3 = {"field": "GF(3)", "dim": 2, "points": [["1", "0"], ["0", "1"], ["1", "1"], ["1", "2"]]}
HARM5 = {"field": "GF(5)", "dim": 2, "points": [["1", "0"], ["0", "1"], ["1", "1"], ["1", "4"]]}


class TestClassify:
    def test_negsum(self, tmp_path, capsys):
        code, out, _ = run(capsys, "classify-linear", write(tmp_path, NEGSUM_Q))
        assert code == 0
        assert out == {"command": "classify-linear", "field": "Q", "verdict": "basis_plus_negsum", "rank": 2, "m": 2}

    def test_independent(self, tmp_path, capsys):
        doc = {"field": "Q", "vectors": [["1", "0"], ["0", "1"]]}
        code, out, _ = run(capsys, "classify-linear", write(tmp_path, doc))
        assert (code, out["verdict"], out["rank"]) == (0, "independent", 2)

    def test_not_homogeneous_witness(self, tmp_path, capsys):
        doc = {"field": "Q", "vectors": [["1", "0"], ["0", "1"], ["1", "1"]]}
        code, out, _ = run(capsys, "classify-linear", write(tmp_path, doc))
        assert out["verdict"] == "not_homogeneous" and out["witness"] == [2, 1, 0]

    def test_duplicate_vector(self, tmp_path, capsys):
        doc = '{\n "field": "Q",\n "vectors": [["1", "0"], ["1", "0"]]\n}'
        code, out, err = run(capsys, "classify-linear", write(tmp_path, doc))
        assert code == 2 and out is None
        assert "in.json:3: vectors:" in err and "duplicate" in err

    def test_projective_verdicts(self, tmp_path, capsys):
        assert run(capsys, "classify-projective", write(tmp_path, HARM3))[1]["verdict"] == "harmonic_char3"
        code, out, _ = run(capsys, "classify-projective", write(tmp_path, HARM5))
        assert (out["verdict"], out["witness"]) == ("not_homogeneous", [2, 1, 0, 3])
        simplex = {"field": "GF(7)", "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "2", "3"]]}
        out = run(capsys, "classify-projective", write(tmp_path, simplex))[1]
        assert (out["verdict"], out["m"]) == ("simplex", 3)

    def test_field_override(self, tmp_path, capsys):
        doc = {"field": "Q", "vectors": [["1", "0"], ["0", "1"], ["1", "1"]]}
        out = run(capsys, "classify-linear", "--field", "GF(2)", write(tmp_path, doc))[1]
        assert (out["field"], out["verdict"]) == ("GF(2)", "basis_plus_negsum")


@pytest.mark.parametrize(
    "doc,needle",
    [
        ('{"field": "GF(6)", "vectors": [["1", "0"]]}', "field"),
        ('{"field": "GF(5)", "vectors": [["1", "5"], ["0", "1"]]}', "vectors[0][1]"),
        ('{"field": "Q", "vectors": [["1/0", "1"], ["0", "1"]]}', "vectors[0][0]"),
        ('{"field": "Q", "vectors": [["1", "x"], ["0", "1"]]}', "vectors[0][1]"),
        ('{"field": "Q", "dim": 3, "vectors": [["1", "0"], ["0", "1"]]}', "vectors[0]"),
        ('{"vectors": [["1", "0"], ["0", "1"]]}', "field"),
        ('{"field": "Q", "vectors": [["1", "0"], ["0", "1"]', "in.json:1:"),
        ('{"field": "Q", "vectors": [["1", "0"]]}', "vectors"),
    ],
)
def test_input_errors(tmp_path, capsys, doc, needle):
    code, out, err = run(capsys, "classify-linear", write(tmp_path, doc))
    assert code == 2 and out is None
    assert needle in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "classify-linear", str(tmp_path / "nope.json"))
    assert code == 2 and "nope.json" in err


class TestExtend:
    def test_example_matrix(self, tmp_path, capsys):
        code, out, _ = run(capsys, "extend", write(tmp_path, {**NEGSUM_Q, "permutation": [2, 1, 0]}))
        assert code == 0 and out["extension"] == [["-1", "0"], ["-1", "1"]]

    def test_identity(self, tmp_path, capsys):
        out = run(capsys, "extend", write(tmp_path, {**NEGSUM_Q, "permutation": [0, 1, 2]}))[1]
        assert out["extension"] == [["1", "0"], ["0", "1"]]

    def test_null_extension(self, tmp_path, capsys):
        code, out, _ = run(capsys, "extend", "--projective", write(tmp_path, {**HARM5, "permutation": [2, 1, 0, 3]}))
        assert code == 0 and out["extension"] is None and out["projective"] is True

    def test_projective_extension(self, tmp_path, capsys):
        out = run(capsys, "extend", "--projective", write(tmp_path, {**HARM3, "permutation": [0, 2, 1, 3]}))[1]
        assert out["extension"] is not None

    def test_bad_permutation(self, tmp_path, capsys):
        for perm in ([0, 1], [0, 0, 1], None):
            doc = dict(NEGSUM_Q)
            if perm is not None:
                doc["permutation"] = perm
            assert run(capsys, "extend", write(tmp_path, doc))[0] == 2

    def test_round_trip(self, tmp_path, capsys):
        doc = {"field": "Q", "vectors": [["1/2", "0"], ["0", "3"], ["-1/2", "-3"]], "permutation": [1, 2, 0]}
        out = run(capsys, "extend", write(tmp_path, doc))[1]
        F = parse_field("Q")
        u = Matrix(F, [[F.parse(x) for x in row] for row in out["extension"]])
        assert u.to_strings() == out["extension"]
        X = VectorSet(F, [[F.parse(x) for x in v] for v in doc["vectors"]])
        assert [u.apply(X[i]) for i in range(3)] == [X[1], X[2], X[0]]


class TestOracle:
    def test_linear_sweep(self, capsys):
        code, out, _ = run(capsys, "oracle-verify", "--theorem", "1", "--n", "2", "--p", "3")
        assert code == 0 and out["discrepancies"] == [] and "elapsed_seconds" not in out

    def test_projective_sweep(self, capsys):
        code, out, _ = run(capsys, "oracle-verify", "--theorem", "2", "--n", "2", "--p", "5")
        assert code == 0 and out["discrepancies"] == []

    def test_budget_refusal(self, capsys):
        code, out, err = run(capsys, "oracle-verify", "--theorem", "1", "--n", "4", "--p", "5")
        assert code == 3 and out is None and "exceeds" in err

    def test_size_cap(self, capsys):
        assert run(capsys, "oracle-verify", "--theorem", "1", "--n", "2", "--p", "2", "--max-size", "9")[0] == 3

    def test_bad_modulus(self, capsys):
        assert run(capsys, "oracle-verify", "--theorem", "1", "--n", "2", "--p", "4")[0] == 2


def _gens_doc(field, mats, **extra):
    return {"field": field, "generators": mats, **extra}


# over GF(2) the residues must be canonical, so -1 is written 1
NEGSUM_GENS = [[["0", "1"], ["1", "0"]], [["1", "1"], ["0", "1"]]]


class TestCorollary:
    def test_gf2_verified(self, tmp_path, capsys):
        path = write(tmp_path, _gens_doc("GF(2)", NEGSUM_GENS))
        code, out, _ = run(capsys, "verify-corollary", "--which", "1", "--m", "3", "--seed", "1,0", path)
        assert code == 0 and out["status"] == "verified"

    def test_s2_inapplicable(self, tmp_path, capsys):
        path = write(tmp_path, _gens_doc("GF(2)", [[["0", "1"], ["1", "0"]]], m=2, seed=["1", "0"]))
        code, out, _ = run(capsys, "verify-corollary", path)
        assert code == 4 and out["hypotheses"]["invariant_subspace"] == [["1", "1"]]

    def test_singular_generator(self, tmp_path, capsys):
        path = write(tmp_path, _gens_doc("GF(2)", [[["1", "1"], ["1", "1"]]]))
        code, _, err = run(capsys, "verify-corollary", "--m", "2", "--seed", "1,0", path)
        assert code == 2 and "invertible" in err

    def test_non_canonical_residue(self, tmp_path, capsys):
        path = write(tmp_path, _gens_doc("GF(2)", [[["0", "1"], ["1", "0"]], [["1", "-1"], ["0", "-1"]]]))
        code, _, err = run(capsys, "verify-corollary", "--m", "3", "--seed", "1,0", path)
        assert code == 2 and "generators[1][0][1]" in err

    def test_missing_seed(self, tmp_path, capsys):
        path = write(tmp_path, _gens_doc("GF(2)", NEGSUM_GENS))
        assert run(capsys, "verify-corollary", "--m", "3", path)[0] == 2

    def test_violation_exit_code(self, monkeypatch, tmp_path, capsys):
        from permext import cli
        from permext.reps import CorollaryReport

        def broken(gens, m, seed):
            return CorollaryReport(1, "GF(2)", 2, m, {"hold": True}, [], {"shape_ok": False}, "violation")

        monkeypatch.setattr(cli, "verify_corollary1", broken)
        path = write(tmp_path, _gens_doc("GF(2)", NEGSUM_GENS))
        assert run(capsys, "verify-corollary", "--m", "3", "--seed", "1,0", path)[0] == 5


def test_module_entry_point(tmp_path):
    path = write(tmp_path, NEGSUM_Q)
    proc = subprocess.run([sys.executable, "-m", "permext", "classify-linear", path], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "basis_plus_negsum"


def test_output_is_deterministic(tmp_path):
    path = write(tmp_path, {**HARM5, "permutation": [1, 0, 2, 3]})
    outs = {
        subprocess.run([sys.executable, "-m", "permext", "extend", "--projective", path],
                       capture_output=True).stdout
        for _ in range(3)
    }
    assert len(outs) == 1
