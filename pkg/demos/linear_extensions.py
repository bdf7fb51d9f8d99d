"""
Extending permutations of vectors to linear maps
================================================

A permutation of a finite set of vectors X extends to an invertible
linear map exactly when it preserves every linear relation among the
vectors.  Only two shapes of X let every permutation through.
"""

from permext import GF, QQ, VectorSet, classify_linear, extend_permutation_linear
from permext.permutations import transposition


def show(vectors):
    return [tuple(str(x) for x in v) for v in vectors]


# the standard basis of Q^2 together with minus the sum of its vectors
X = VectorSet(QQ, [(1, 0), (0, 1), (-1, -1)])
print(show(X), "->", classify_linear(X))

# swapping the first and last vector while fixing the middle one
u = extend_permutation_linear(X, transposition(3, 0, 2))
print(u.to_strings())
print("u(-1, -1) =", show([u.apply((-1, -1))])[0])

# replace the negated sum by the plain sum and the relation breaks symmetry
Y = VectorSet(QQ, [(1, 0), (0, 1), (1, 1)])
print(show(Y), "->", classify_linear(Y))

# over GF(2) the two sets coincide, so the same vectors are homogeneous again
Z = VectorSet(GF(2), [(1, 0), (0, 1), (1, 1)])
print("over GF(2):", classify_linear(Z))

# a zero vector is fixed by every linear map
W = VectorSet(QQ, [(0, 0), (1, 0), (0, 1)])
print("with a zero vector:", classify_linear(W))
