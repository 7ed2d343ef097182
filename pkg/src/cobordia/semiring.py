"""Commutative semirings used as matrix entries."""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

__all__ = [
    "Semiring",
    "INTEGERS",
    "NATURALS",
    "RATIONALS",
    "FLOATS",
    "BOOLEANS",
    "SEMIRINGS",
    "get_semiring",
]


@dataclass(frozen=True)
class Semiring:
    """Carrier operations for array entries.

    ``standard`` marks semirings whose ``add``/``mul`` are Python's ``+`` and
    ``*``; arrays over them are contracted with numpy instead of explicit
    loops.  ``eq`` compares entries (tolerant for floats).
    """

    name: str
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    coerce: Callable[[Any], Any]
    standard: bool = True
    eq: Callable[[Any, Any], bool] = operator.eq

    def from_natural(self, k: int) -> Any:
        """The image of ``k`` under the unique map from the natural numbers."""
        out = self.zero
        for _ in range(k):
            out = self.add(out, self.one)
        return out

    def power(self, x: Any, k: int) -> Any:
        out = self.one
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def __repr__(self) -> str:
        return f"Semiring({self.name!r})"


def _natural(x: Any) -> int:
    value = int(x)
    if value != x or value < 0:
        raise ValueError(f"not a natural number: {x!r}")
    return value


def _integer(x: Any) -> int:
    value = int(x)
    if value != x:
        raise ValueError(f"not an integer: {x!r}")
    return value


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9)


INTEGERS = Semiring("int", 0, 1, operator.add, operator.mul, _integer)
NATURALS = Semiring("nat", 0, 1, operator.add, operator.mul, _natural)
RATIONALS = Semiring("rational", Fraction(0), Fraction(1), operator.add, operator.mul, Fraction)
FLOATS = Semiring("float", 0.0, 1.0, operator.add, operator.mul, float, eq=_close)
# Boolean semiring (or, and): exercises the non-numpy contraction path.
BOOLEANS = Semiring("bool", False, True, operator.or_, operator.and_, bool, standard=False)

SEMIRINGS = {s.name: s for s in (INTEGERS, NATURALS, RATIONALS, FLOATS, BOOLEANS)}


def get_semiring(name: str) -> Semiring:
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise KeyError(f"unknown semiring {name!r}; choose from {sorted(SEMIRINGS)}") from None
