"""Finite sets and bijections, and their inclusion into diagram morphisms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .diagrams import PLUS, DiagMorphism, ObjWord
from .errors import BoundaryMismatchError

__all__ = ["Permutation", "perm_compose", "block_sum", "include", "all_permutations"]


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` in one-line notation: ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def to_json(self) -> list[int]:
        return list(self.images)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Permutation:
        return cls(tuple(data))


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply ``q`` first."""
    if p.size != q.size:
        raise BoundaryMismatchError(p.size, q.size, what="permutation size")
    return Permutation(tuple(p(q(i)) for i in range(1, q.size + 1)))


def block_sum(p: Permutation, q: Permutation) -> Permutation:
    n = p.size
    return Permutation(p.images + tuple(n + x for x in q.images))


def include(p: Permutation) -> DiagMorphism:
    """The diagram on ``+...+`` joining domain point ``i`` to codomain point ``p(i)``."""
    n = p.size
    w = ObjWord((PLUS,) * n)
    partner = [0] * (2 * n)
    for i in range(n):
        j = n + p.images[i] - 1
        partner[i], partner[j] = j, i
    return DiagMorphism._from_partner(w, w, partner, 0)


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)
