"""
Driving the command-line interface
==================================

Each command reads one JSON document and writes one JSON document.  The
exit code says what kind of answer it was: 0 decided, 2 bad input,
3 refused for size, 4 hypotheses fail, 5 violation.
"""

import json
import tempfile
from pathlib import Path

from permext.cli import main

tmp = Path(tempfile.mkdtemp())

doc = {"field": "Q", "dim": 2, "vectors": [["1", "0"], ["0", "1"], ["-1", "-1"]], "permutation": [2, 1, 0]}
(tmp / "negsum.json").write_text(json.dumps(doc))
print("exit", main(["classify-linear", str(tmp / "negsum.json")]))
print("exit", main(["extend", str(tmp / "negsum.json")]))

harm = {"field": "GF(5)", "points": [["1", "0"], ["0", "1"], ["1", "1"], ["1", "4"]]}
(tmp / "harm.json").write_text(json.dumps(harm))
print("exit", main(["classify-projective", str(tmp / "harm.json")]))
print("exit", main(["classify-projective", "--field", "GF(3)", str(tmp / "harm.json")]))

gens = {"field": "GF(2)", "generators": [[["0", "1"], ["1", "0"]], [["1", "1"], ["0", "1"]]]}
(tmp / "gens.json").write_text(json.dumps(gens))
print("exit", main(["verify-corollary", "--which", "1", "--m", "3", "--seed", "1,0", str(tmp / "gens.json")]))

print("exit", main(["oracle-verify", "--theorem", "1", "--n", "2", "--p", "3"]))
# GL(4, 5) has about 1.5e11 elements, far beyond the default budget
print("exit", main(["oracle-verify", "--theorem", "1", "--n", "4", "--p", "5"]))
