"""Permutations of index sets ``{0, ..., k-1}``.

A permutation acts on positions, never on the vectors or points stored at
those positions; ``sigma(i)`` is the image index.  Composition follows
function composition: ``(s * t)(i) == s(t(i))``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, TypeVar

from .errors import DimensionError, SizeLimitError

__all__ = [
    "Permutation",
    "compose",
    "transposition",
    "adjacent_generators",
    "star_transpositions",
    "all_permutations",
    "closure",
    "MAX_ENUMERATION_SIZE",
]

MAX_ENUMERATION_SIZE = 8


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{list(images)} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(k))

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def apply_to(self, items):
        """Reorder ``items`` so position ``i`` holds ``items[self(i)]``."""
        return [items[j] for j in self.images]

    def to_list(self) -> list[int]:
        return list(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def compose(s: Permutation, t: Permutation) -> Permutation:
    """``s`` after ``t``."""
    if len(s) != len(t):
        raise DimensionError(f"cannot compose permutations of sizes {len(s)} and {len(t)}")
    return Permutation(s.images[i] for i in t.images)


def transposition(k: int, i: int, j: int) -> Permutation:
    if not (0 <= i < k and 0 <= j < k):
        raise ValueError(f"indices {i}, {j} out of range for size {k}")
    if i == j:
        raise ValueError("a transposition needs two distinct indices")
    images = list(range(k))
    images[i], images[j] = j, i
    return Permutation(images)


def adjacent_generators(k: int) -> list[Permutation]:
    """The Coxeter generators ``(i i+1)`` of the symmetric group on k letters."""
    if k < 2:
        raise ValueError("adjacent generators need k >= 2")
    return [transposition(k, i, i + 1) for i in range(k - 1)]


def star_transpositions(k: int) -> list[Permutation]:
    """The generators ``(0 i)``, ``i = 1..k-1``."""
    if k < 2:
        raise ValueError("star transpositions need k >= 2")
    return [transposition(k, 0, i) for i in range(1, k)]


def all_permutations(k: int, cap: int = MAX_ENUMERATION_SIZE) -> Iterator[Permutation]:
    """Every permutation of size k in lexicographic order of image sequences."""
    if k > cap:
        raise SizeLimitError(f"refusing to enumerate {k}! permutations; size cap is {cap}")
    if k < 0:
        raise ValueError("negative size")
    return (Permutation(p) for p in itertools.permutations(range(k)))


T = TypeVar("T", bound=Hashable)


def closure(gens: Iterable[T], mul: Callable[[T, T], T], identity: T, cap: int = math.factorial(MAX_ENUMERATION_SIZE)) -> list[T]:
    """Breadth-first closure of ``gens`` under ``mul``, starting at ``identity``.

    Elements must be hashable and canonical (equal elements compare equal).
    Raises :class:`SizeLimitError` once more than ``cap`` elements appear.
    """
    gens = list(gens)
    seen = {identity}
    order = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(g, s)
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
                    if len(order) > cap:
                        raise SizeLimitError(f"group closure exceeds cap {cap}")
        frontier = nxt
    return order
