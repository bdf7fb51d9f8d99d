"""
Representations of the symmetric group
======================================

The n + 1 vectors e_1, ..., e_n, -(e_1 + ... + e_n) are permuted by a
matrix representation of S_{n+1}.  Given generator matrices, the
corollary checks decide whether an orbit must have one of the
homogeneous shapes and whether the group is exactly the one the orbit
induces.
"""

from permext import GF, QQ
from permext.reps import (
    coxeter_check,
    generate_group,
    invariant_subspace_scan,
    orbit,
    standard_negsum_rep,
    verify_corollary1,
    verify_corollary2,
)

gens = standard_negsum_rep(2, QQ)
print([g.to_strings() for g in gens])
print("Coxeter relations:", coxeter_check(gens), "| order:", len(generate_group(gens)))
print("orbit of e1:", orbit(gens, (1, 0)))

# over GF(3) the line <e1 - e2> is invariant, so the representation is reducible
print("GF(3) scan:", invariant_subspace_scan(standard_negsum_rep(2, GF(3))))
# over Q the scan is only a heuristic and says so
print("Q scan:", invariant_subspace_scan(gens))

for p in (2, 3):
    report = verify_corollary1(standard_negsum_rep(2, GF(p)), 3, (1, 0))
    print(f"linear, GF({p}):", report.status, report.conclusion)

report = verify_corollary2(standard_negsum_rep(3, GF(5)), 4, (1, 0, 0))
print("projective, GF(5), S4:", report.status, report.conclusion)
