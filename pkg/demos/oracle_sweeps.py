"""
Brute-force certification over small finite fields
==================================================

For tiny n and p the whole group GL(n, p) fits in memory.  Every subset
of nonzero vectors (or of projective points) is classified and the
verdict is compared with what exhaustive search over the group says.
"""

import json

from permext import GF, ProjSet, VectorSet
from permext.oracle import (
    SearchBudget,
    enumerate_gl,
    exhaustive_theorem1_check,
    exhaustive_theorem2_check,
    gl_order,
    oracle_extend_linear,
    oracle_extend_projective,
)
from permext.permutations import transposition

for n, p in [(2, 2), (2, 3), (3, 2)]:
    print(f"|GL({n},{p})| = {gl_order(n, p)} =", sum(1 for _ in enumerate_gl(n, p)))

# a single query: no invertible 2x2 matrix over GF(5) swaps (1,0) and (1,1) while fixing (0,1)
X = VectorSet(GF(5), [(1, 0), (0, 1), (1, 1)])
print("oracle:", oracle_extend_linear(X, transposition(3, 0, 2)))

H = ProjSet(GF(3), [(1, 0), (0, 1), (1, 1), (1, 2)])
print("oracle, projective:", oracle_extend_projective(H, transposition(4, 0, 2)).to_strings())

# full sweeps; the discrepancy lists must be empty
linear = exhaustive_theorem1_check(2, 3, max_size=6)
print(json.dumps(linear.to_dict(include_timing=False), indent=1))

proj = exhaustive_theorem2_check(3, 2, max_size=7, budget=SearchBudget(workers=2))
print(json.dumps(proj.to_dict(include_timing=False), indent=1))
