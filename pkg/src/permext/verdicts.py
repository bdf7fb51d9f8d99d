"""Classification verdicts for linear and projective point sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .permutations import Permutation


@dataclass(frozen=True)
class Independent:
    """Linearly independent vectors, or an independent set of points."""

    rank: int
    name = "independent"
    homogeneous = True


@dataclass(frozen=True)
class BasisPlusNegativeSum:
    """``x_1, ..., x_m, -(x_1 + ... + x_m)`` with the ``x_i`` independent."""

    m: int
    name = "basis_plus_negsum"
    homogeneous = True


@dataclass(frozen=True)
class Simplex:
    """``m + 1`` points, dependent, with every ``m`` of them independent."""

    m: int
    name = "simplex"
    homogeneous = True


@dataclass(frozen=True)
class HarmonicChar3:
    """``<x>, <y>, <x+y>, <x-y>`` over a field of characteristic 3."""

    name = "harmonic_char3"
    homogeneous = True


@dataclass(frozen=True)
class NotHomogeneous:
    """Some transposition (``witness``) has no extension."""

    witness: Optional[Permutation]
    name = "not_homogeneous"
    homogeneous = False


LinearClass = Union[Independent, BasisPlusNegativeSum, NotHomogeneous]
ProjClass = Union[Independent, Simplex, HarmonicChar3, NotHomogeneous]
