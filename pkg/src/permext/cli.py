"""Command-line front end.

Every command reads at most one JSON document and writes one JSON document
to stdout.  Exit codes: 0 decided, 2 input error, 3 budget or size cap
refused, 4 corollary hypotheses fail, 5 violation (an oracle discrepancy
or a corollary conclusion that does not hold).
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Optional

from .errors import PermextError, SizeLimitError
from .fields import FieldSpec, parse_field
from .linalg import Matrix
from .linear import VectorSet, classify_linear, extend_permutation_linear
from .oracle import SearchBudget, exhaustive_theorem1_check, exhaustive_theorem2_check
from .permutations import Permutation
from .projective import ProjSet, classify_projective, extend_permutation_projective
from .reps import MatrixGroupGens, verify_corollary1, verify_corollary2

logger = logging.getLogger("permext")

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INAPPLICABLE, EXIT_VIOLATION = 0, 2, 3, 4, 5


class InputError(Exception):
    """Raised for anything wrong with the input document or flags."""


class Document:
    """A parsed input document plus enough source text to anchor messages."""

    def __init__(self, path: str, text: str, data: dict, field_override: Optional[str]):
        self.path = path
        self.text = text
        self.data = data
        if not isinstance(data, dict):
            raise self.error("top level", "document must be a JSON object")
        field_text = field_override or data.get("field")
        if field_text is None:
            raise self.error("field", "missing 'field' (or pass --field)")
        try:
            self.field: FieldSpec = parse_field(field_text)
        except PermextError as exc:
            raise self.error("field", str(exc)) from None
        self.dim = data.get("dim")
        if self.dim is not None and (not isinstance(self.dim, int) or self.dim < 2):
            raise self.error("dim", "dim must be an integer >= 2")

    @classmethod
    def load(cls, path: str, field_override: Optional[str] = None) -> "Document":
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
        return cls(path, text, data, field_override)

    def line_of(self, key: str) -> int:
        m = re.search(r'"%s"\s*:' % re.escape(key.split("[")[0]), self.text)
        return self.text.count("\n", 0, m.start()) + 1 if m else 1

    def error(self, where: str, message: str) -> InputError:
        return InputError(f"{self.path}:{self.line_of(where)}: {where}: {message}")

    def require(self, key: str):
        if key not in self.data:
            raise self.error(key, f"missing '{key}'")
        return self.data[key]

    def scalar(self, text, where: str):
        try:
            return self.field.parse(text)
        except PermextError as exc:
            raise self.error(where, str(exc)) from None

    def vector(self, row, where: str) -> tuple:
        if not isinstance(row, list):
            raise self.error(where, "expected an array of scalar strings")
        if self.dim is not None and len(row) != self.dim:
            raise self.error(where, f"expected {self.dim} coordinates, got {len(row)}")
        return tuple(self.scalar(x, f"{where}[{j}]") for j, x in enumerate(row))

    def vectors(self, key: str) -> list[tuple]:
        rows = self.require(key)
        if not isinstance(rows, list) or not rows:
            raise self.error(key, "expected a nonempty array of vectors")
        return [self.vector(r, f"{key}[{i}]") for i, r in enumerate(rows)]

    def vector_set(self) -> VectorSet:
        vecs = self.vectors("vectors")
        try:
            return VectorSet(self.field, vecs)
        except (PermextError, ValueError) as exc:
            raise self.error("vectors", str(exc)) from None

    def proj_set(self) -> ProjSet:
        key = "points" if "points" in self.data else "vectors"
        vecs = self.vectors(key)
        try:
            return ProjSet(self.field, vecs)
        except (PermextError, ValueError) as exc:
            raise self.error(key, str(exc)) from None

    def permutation(self, size: int) -> Permutation:
        images = self.require("permutation")
        try:
            sigma = Permutation(images)
        except (TypeError, ValueError) as exc:
            raise self.error("permutation", str(exc)) from None
        if len(sigma) != size:
            raise self.error("permutation", f"size {len(sigma)} does not match {size} elements")
        return sigma

    def generators(self) -> MatrixGroupGens:
        raw = self.require("generators")
        if not isinstance(raw, list) or not raw:
            raise self.error("generators", "expected a nonempty array of matrices")
        mats = []
        for i, m in enumerate(raw):
            where = f"generators[{i}]"
            if not isinstance(m, list) or not m:
                raise self.error(where, "expected a square array of scalar strings")
            rows = [self.vector(r, f"{where}[{j}]") for j, r in enumerate(m)]
            try:
                mats.append(Matrix(self.field, rows))
            except PermextError as exc:
                raise self.error(where, str(exc)) from None
        try:
            return MatrixGroupGens.of(mats)
        except (PermextError, ValueError) as exc:
            raise self.error("generators", str(exc)) from None


def _fmt(field: FieldSpec, v) -> list[str]:
    return [field.format(x) for x in v]


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def _verdict_doc(verdict, rank: int) -> dict:
    doc = {"verdict": verdict.name, "rank": rank}
    if getattr(verdict, "m", None) is not None:
        doc["m"] = verdict.m
    if verdict.name == "not_homogeneous":
        doc["witness"] = verdict.witness.to_list()
    return doc


def cmd_classify_linear(args) -> int:
    doc = Document.load(args.file, args.field)
    X = doc.vector_set()
    if len(X) < 2:
        raise doc.error("vectors", "classification needs at least two vectors")
    verdict = classify_linear(X)
    _emit({"command": "classify-linear", "field": str(X.field), **_verdict_doc(verdict, X.rank)})
    return EXIT_OK


def cmd_classify_projective(args) -> int:
    doc = Document.load(args.file, args.field)
    P = doc.proj_set()
    if len(P) < 2:
        raise doc.error("points", "classification needs at least two points")
    verdict = classify_projective(P)
    _emit({"command": "classify-projective", "field": str(P.field), **_verdict_doc(verdict, P.rank)})
    return EXIT_OK


def cmd_extend(args) -> int:
    doc = Document.load(args.file, args.field)
    if args.projective:
        S = doc.proj_set()
        result = extend_permutation_projective(S, doc.permutation(len(S)))
    else:
        S = doc.vector_set()
        result = extend_permutation_linear(S, doc.permutation(len(S)))
    _emit({
        "command": "extend",
        "field": str(S.field),
        "projective": bool(args.projective),
        "extension": None if result is None else result.to_strings(),
    })
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    budget = SearchBudget(args.budget, args.workers)
    check = exhaustive_theorem1_check if args.theorem == 1 else exhaustive_theorem2_check
    try:
        parse_field(f"GF({args.p})")
    except PermextError as exc:
        raise InputError(f"--p: {exc}") from None
    if args.n < 2:
        raise InputError("--n: dimension must be at least 2")
    report = check(args.n, args.p, args.max_size, budget)
    logger.info("elapsed %.3fs", report.elapsed_seconds)
    _emit(report.to_dict(include_timing=False))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_verify_corollary(args) -> int:
    doc = Document.load(args.file, args.field)
    gens = doc.generators()
    m = args.m if args.m is not None else doc.data.get("m")
    if not isinstance(m, int) or m < 1:
        raise doc.error("m", "m must be a positive integer (pass --m)")
    if args.seed is not None:
        seed = doc.vector(args.seed.split(","), "--seed")
    elif "seed" in doc.data:
        seed = doc.vector(doc.data["seed"], "seed")
    else:
        raise doc.error("seed", "missing seed (pass --seed)")
    if len(seed) != gens.dim:
        raise doc.error("seed", f"seed has {len(seed)} coordinates, generators act on dimension {gens.dim}")
    if not any(seed):
        raise doc.error("seed", "seed must be nonzero")
    verify = verify_corollary1 if args.which == 1 else verify_corollary2
    report = verify(gens, m, seed)
    _emit(report.to_dict())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permext",
        description="Decide and classify extendability of permutations to GL(V) and PGL(V).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="JSON input document")
        p.add_argument("--field", help="override the document's field, e.g. Q or GF(5)")
        p.set_defaults(func=func)
        return p

    with_file("classify-linear", cmd_classify_linear, "classify a finite set of vectors")
    with_file("classify-projective", cmd_classify_projective, "classify a finite set of projective points")
    p = with_file("extend", cmd_extend, "extend a permutation to GL(V), or PGL(V) with --projective")
    p.add_argument("--projective", action="store_true")
    p = with_file("verify-corollary", cmd_verify_corollary, "check a representation of S_m")
    p.add_argument("--which", type=int, choices=(1, 2), default=1)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", help="comma-separated scalar strings, e.g. 1,0")

    p = sub.add_parser("oracle-verify", help="exhaustive check against GL(n, p)")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--budget", type=int, default=SearchBudget().max_order, help="max group order")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_oracle_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="permext: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"permext: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitError as exc:
        print(f"permext: refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
