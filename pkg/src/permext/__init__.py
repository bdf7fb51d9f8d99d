"""Extendability of permutations on finite vector and projective point sets.

Exact arithmetic over Q and GF(p); see :mod:`permext.linear` for the
GL(V) case, :mod:`permext.projective` for PGL(V), :mod:`permext.oracle`
for brute-force verification and :mod:`permext.reps` for the attached
symmetric-group representations.
"""

from .fields import GF, QQ, Mod, parse_field
from .linalg import Matrix, kernel_basis, rank, relation_space, rref
from .linear import (
    VectorSet,
    alpha_extension,
    classify_linear,
    extend_permutation_linear,
    group_of_set,
    is_fully_extendable_linear,
)
from .permutations import Permutation, adjacent_generators, all_permutations, compose, transposition
from .projective import (
    ProjPoint,
    ProjSet,
    classify_projective,
    extend_permutation_projective,
    is_fully_extendable_projective,
    is_harmonic,
    is_independent,
    is_simplex,
    normalize_lift,
    pgl_equal,
    simplex_normal_form,
    unique_simplex_map,
)
from .verdicts import BasisPlusNegativeSum, HarmonicChar3, Independent, NotHomogeneous, Simplex

__version__ = "0.1.0"
