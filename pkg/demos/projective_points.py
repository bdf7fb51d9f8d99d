"""
Projective points, simplices and harmonic quadruples
====================================================

In projective space a map only needs to send each point to the right
line, so there is extra room.  Simplices are always homogeneous, and so
is the harmonic quadruple <x>, <y>, <x+y>, <x-y>, but only in
characteristic 3.
"""

from permext import GF, Matrix, ProjSet, classify_projective, extend_permutation_projective
from permext.permutations import transposition
from permext.projective import induced_permutation, pgl_equal, simplex_normal_form, unique_simplex_map

for p in (3, 5, 7):
    H = ProjSet(GF(p), [(1, 0), (0, 1), (1, 1), (1, p - 1)])
    print(f"harmonic quadruple over GF({p}):", classify_projective(H))

# in characteristic 3 swapping <y> and <x+y> is realised by x -> -x, y -> x+y
# (printed here up to a scalar)
H3 = ProjSet(GF(3), [(1, 0), (0, 1), (1, 1), (1, 2)])
A = extend_permutation_projective(H3, transposition(4, 1, 2))
print("swap P2, P3:", A.to_strings(), "induces", induced_permutation(A, H3))

# the same swap fails over GF(5)
H5 = ProjSet(GF(5), [(1, 0), (0, 1), (1, 1), (1, 4)])
print("over GF(5) swapping P1, P3 gives", extend_permutation_projective(H5, transposition(4, 0, 2)))

# a 3-simplex in P(GF(7)^3) and its normal form
F = GF(7)
S = ProjSet(F, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)])
print("simplex:", classify_projective(S), "normal form", [[str(x) for x in v] for v in simplex_normal_form(S)])

# between two n-simplices there is exactly one projective map
T = ProjSet(F, [(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
M = unique_simplex_map(S, T)
print("unique map:", M.to_strings())
print("2M is the same projective map:", pgl_equal(M, M.scale(2)))

# without the extra point, uniqueness is lost: diag(2, 3, 5) fixes every basis point
D = Matrix.diagonal(F, [2, 3, 5])
B = ProjSet(F, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
print("diag fixes basis points:", induced_permutation(D, B).is_identity(),
      "| homothety:", pgl_equal(D, Matrix.identity(F, 3)))
