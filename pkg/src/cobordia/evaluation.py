"""Matrix-valued evaluation of diagrams and duality checks in the matrix instance.

A ``TensorArray`` is a morphism of the category of finite-dimensional
matrices over a commutative semiring.  Every object is a list of legs, each
of dimension ``dim``; a ``+`` leg is the standard space and a ``-`` leg its
dual.  Entries are a dense numpy object array whose axes are the codomain
legs in order followed by the domain legs in order (cod-major).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from . import linalg
from .algebra import epsilon, eta, identity
from .diagrams import PLUS, DiagMorphism, ObjWord, Orientation, dual_object
from .errors import BoundaryMismatchError, MissingDualityError, ResourceBoundError
from .semiring import INTEGERS, RATIONALS, Semiring

__all__ = [
    "Leg",
    "TensorArray",
    "DEFAULT_MAX_LEGS",
    "legs_of",
    "word_of",
    "dual_legs",
    "evaluate",
    "identity_array",
    "array_compose",
    "array_tensor",
    "DualityData",
    "standard_duality",
    "apply_at",
    "dual_morphism_generic",
    "dual_morphism_literal",
    "respects",
    "RespectReport",
    "check_lemma_respect",
    "InvertNatReport",
    "check_invertnat",
]

DEFAULT_MAX_LEGS = 8


class Leg(enum.Enum):
    PLAIN = "+"
    DUAL = "-"

    @classmethod
    def of(cls, o: Orientation) -> Leg:
        return cls.PLAIN if o is PLUS else cls.DUAL

    def flip(self) -> Leg:
        return Leg.DUAL if self is Leg.PLAIN else Leg.PLAIN


Legs = tuple[Leg, ...]


def legs_of(w: ObjWord | str) -> Legs:
    if isinstance(w, str):
        w = ObjWord.parse(w)
    return tuple(Leg.of(o) for o in w)


def word_of(legs: Iterable[Leg]) -> str:
    return "".join(leg.value for leg in legs)


def dual_legs(legs: Legs) -> Legs:
    return tuple(leg.flip() for leg in reversed(legs))


def _object_array(shape: tuple[int, ...], fill: Any) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(fill)
    return out


@dataclass(frozen=True, eq=False)
class TensorArray:
    dom: Legs
    cod: Legs
    dim: int
    entries: np.ndarray
    semiring: Semiring = field(default=INTEGERS)

    def __post_init__(self) -> None:
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "cod", tuple(self.cod))
        entries = np.asarray(self.entries, dtype=object)
        expected = (self.dim,) * (len(self.cod) + len(self.dom))
        if entries.shape != expected:
            raise ValueError(f"entries have shape {entries.shape}, expected {expected}")
        object.__setattr__(self, "entries", entries)

    @property
    def rank(self) -> int:
        return len(self.dom) + len(self.cod)

    def is_scalar(self) -> bool:
        return self.rank == 0

    def scalar(self) -> Any:
        if not self.is_scalar():
            raise ValueError("not a scalar array")
        return self.entries[()]

    def flat(self) -> list:
        return list(self.entries.reshape(-1))

    def same_type(self, other: TensorArray) -> bool:
        return (self.dom, self.cod, self.dim, self.semiring.name) == (
            other.dom, other.cod, other.dim, other.semiring.name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorArray):
            return NotImplemented
        if not self.same_type(other):
            return False
        eq = self.semiring.eq
        return all(eq(x, y) for x, y in zip(self.flat(), other.flat()))

    __hash__ = None  # type: ignore[assignment]

    def deviations(self, other: TensorArray) -> list[str]:
        """Index-by-index differences from ``other`` (empty when equal)."""
        if not self.same_type(other):
            return [f"type mismatch: {self.signature()} vs {other.signature()}"]
        out = []
        eq = self.semiring.eq
        for idx in np.ndindex(*self.entries.shape):
            x, y = self.entries[idx], other.entries[idx]
            if not eq(x, y):
                out.append(f"entry {tuple(i + 1 for i in idx)}: {x} != {y}")
        return out

    def signature(self) -> str:
        return f"[{word_of(self.dom)}] -> [{word_of(self.cod)}] (dim {self.dim}, {self.semiring.name})"

    # 1-leg to 1-leg arrays are ordinary square matrices, rows = codomain index.
    def to_matrix(self) -> list[list]:
        if len(self.dom) != 1 or len(self.cod) != 1:
            raise ValueError("to_matrix needs exactly one domain and one codomain leg")
        return [list(row) for row in self.entries]

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence], dom: Leg | str = Leg.PLAIN,
                    cod: Leg | str | None = None, semiring: Semiring = RATIONALS) -> TensorArray:
        dom = Leg(dom)
        cod = dom if cod is None else Leg(cod)
        data = [[semiring.coerce(x) for x in row] for row in rows]
        entries = np.empty((len(data), len(data)), dtype=object)
        for i, row in enumerate(data):
            if len(row) != len(data):
                raise ValueError("from_matrix needs a square matrix")
            for j, x in enumerate(row):
                entries[i, j] = x
        return cls((dom,), (cod,), len(data), entries, semiring)

    def __repr__(self) -> str:
        return f"TensorArray({self.signature()}, {self.flat()!r})"


def _check_legs(count: int, max_legs: int) -> None:
    if count > max_legs:
        raise ResourceBoundError(f"{count} legs exceed the leg-count bound {max_legs}")


def evaluate(m: DiagMorphism, d: int, s: Semiring = INTEGERS, max_legs: int = DEFAULT_MAX_LEGS) -> TensorArray:
    """Image of ``m`` under the functor sending ``+`` to the standard ``d``-dimensional space.

    Every strand becomes a Kronecker delta on its two legs (identity,
    coevaluation or evaluation), and each circle contributes a factor ``d``.
    """
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    n, k = len(m.dom), len(m.cod)
    _check_legs(n + k, max_legs)
    shape = (d,) * (n + k)
    scale = s.power(s.from_natural(d), m.circles)
    entries = _object_array(shape, s.zero)
    if n + k == 0:
        entries[()] = scale
    else:
        # flat point p: domain 0..n-1, codomain n..; array axis: codomain first
        def axis(p: int) -> int:
            return p - n if p >= n else k + p

        idx = np.indices(shape)
        mask = np.ones(shape, dtype=bool)
        for p, q in enumerate(m.partner):
            if p < q:
                mask &= idx[axis(p)] == idx[axis(q)]
        entries[mask] = scale
    return TensorArray(legs_of(m.dom), legs_of(m.cod), d, entries, s)


def identity_array(legs: Iterable[Leg], d: int, s: Semiring = INTEGERS,
                   max_legs: int = DEFAULT_MAX_LEGS) -> TensorArray:
    return evaluate(identity(ObjWord.parse(word_of(legs))), d, s, max_legs)


def _require_same_carrier(a: TensorArray, b: TensorArray) -> None:
    if a.dim != b.dim:
        raise BoundaryMismatchError(a.dim, b.dim, what="dimension")
    if a.semiring.name != b.semiring.name:
        raise BoundaryMismatchError(a.semiring.name, b.semiring.name, what="semiring")


def array_compose(b: TensorArray, a: TensorArray) -> TensorArray:
    """``b o a``: contract the codomain legs of ``a`` with the domain legs of ``b``."""
    if a.cod != b.dom:
        raise BoundaryMismatchError(word_of(a.cod), word_of(b.dom), what="leg")
    _require_same_carrier(a, b)
    s, d = a.semiring, a.dim
    nb_cod, nmid, na_dom = len(b.cod), len(a.cod), len(a.dom)
    if s.standard:
        out = np.tensordot(b.entries, a.entries,
                           axes=(list(range(nb_cod, nb_cod + nmid)), list(range(nmid))))
        out = np.asarray(out, dtype=object)
        if out.shape == ():
            # tensordot of 0-d object arrays may come back without the object wrapper
            out = _object_array((), out[()])
    else:
        out = _object_array((d,) * (nb_cod + na_dom), s.zero)
        mids = list(itertools.product(range(d), repeat=nmid))
        for ob in itertools.product(range(d), repeat=nb_cod):
            for oa in itertools.product(range(d), repeat=na_dom):
                acc = s.zero
                for mid in mids:
                    acc = s.add(acc, s.mul(b.entries[ob + mid], a.entries[mid + oa]))
                out[ob + oa] = acc
    return TensorArray(a.dom, b.cod, d, out, s)


def array_tensor(a: TensorArray, b: TensorArray) -> TensorArray:
    """Monoidal product: legs of ``a`` first; axes reordered to (cod a, cod b, dom a, dom b)."""
    _require_same_carrier(a, b)
    s = a.semiring
    outer = np.frompyfunc(s.mul, 2, 1).outer(a.entries, b.entries)
    outer = np.asarray(outer, dtype=object)
    if outer.shape == ():
        outer = _object_array((), outer[()])
    ca, da, cb, db = len(a.cod), len(a.dom), len(b.cod), len(b.dom)
    order = (list(range(ca)) + list(range(ca + da, ca + da + cb))
             + list(range(ca, ca + da)) + list(range(ca + da + cb, ca + da + cb + db)))
    return TensorArray(a.dom + b.dom, a.cod + b.cod, a.dim, outer.transpose(order), s)


def _tensor_all(arrays: Sequence[TensorArray]) -> TensorArray:
    out = arrays[0]
    for x in arrays[1:]:
        out = array_tensor(out, x)
    return out


def apply_at(f: TensorArray, a: TensorArray, offset: int) -> TensorArray:
    """``(id_L x f x id_R) o a`` where ``L`` is the first ``offset`` codomain legs of ``a``.

    Contracts ``f`` directly into the chosen legs instead of materializing
    the identity factors; equal to the literal composite.
    """
    k = len(f.dom)
    if a.cod[offset:offset + k] != f.dom or offset < 0 or offset + k > len(a.cod):
        raise BoundaryMismatchError(word_of(a.cod[offset:offset + k]), word_of(f.dom), what="leg")
    _require_same_carrier(a, f)
    left, right = a.cod[:offset], a.cod[offset + k:]
    if not a.semiring.standard:
        d, s = a.dim, a.semiring
        whiskered = _tensor_all([identity_array(left, d, s, max_legs=2 * len(left)), f,
                                 identity_array(right, d, s, max_legs=2 * len(right))])
        return array_compose(whiskered, a)
    cf = len(f.cod)
    out = np.tensordot(f.entries, a.entries,
                       axes=(list(range(cf, cf + k)), list(range(offset, offset + k))))
    out = np.asarray(out, dtype=object)
    if out.shape == ():
        out = _object_array((), out[()])
    out = np.moveaxis(out, list(range(cf)), list(range(offset, offset + cf)))
    return TensorArray(a.dom, left + f.cod + right, a.dim, out, a.semiring)


Triple = tuple[Legs, TensorArray, TensorArray]


@dataclass
class DualityData:
    """Chosen duals with unit ``I -> C C*`` and counit ``C* C -> I`` per object.

    ``table`` holds explicit (possibly twisted) triples keyed by leg tuple.
    With ``generate`` set, objects missing from the table get the standard
    Kronecker-delta duality.
    """

    dim: int
    semiring: Semiring = INTEGERS
    table: Mapping[Legs, Triple] = field(default_factory=dict)
    generate: bool = True

    def triple(self, obj: Iterable[Leg]) -> Triple:
        obj = tuple(obj)
        if obj in self.table:
            return self.table[obj]
        if not self.generate:
            raise MissingDualityError(f"no duality data for object [{word_of(obj)}]")
        word = ObjWord.parse(word_of(obj))
        star = dual_object(word)
        unit = evaluate(eta(star), self.dim, self.semiring)
        counit = evaluate(epsilon(star), self.dim, self.semiring)
        return legs_of(star), unit, counit

    def dual(self, obj: Iterable[Leg]) -> Legs:
        return self.triple(obj)[0]

    def unit(self, obj: Iterable[Leg]) -> TensorArray:
        return self.triple(obj)[1]

    def counit(self, obj: Iterable[Leg]) -> TensorArray:
        return self.triple(obj)[2]

    def identity(self, obj: Iterable[Leg]) -> TensorArray:
        obj = tuple(obj)
        return identity_array(obj, self.dim, self.semiring, max_legs=max(DEFAULT_MAX_LEGS, 2 * len(obj)))

    def snakes_hold(self, obj: Iterable[Leg]) -> bool:
        """Both zig-zag composites of the triple for ``obj`` are identities."""
        obj = tuple(obj)
        star, unit, counit = self.triple(obj)
        i_c, i_star = self.identity(obj), self.identity(star)
        right = array_compose(array_tensor(i_c, counit), array_tensor(unit, i_c))
        left = array_compose(array_tensor(counit, i_star), array_tensor(i_star, unit))
        return right == i_c and left == i_star


def standard_duality(d: int, s: Semiring = INTEGERS) -> DualityData:
    return DualityData(d, s)


def dual_morphism_generic(f: TensorArray, dd: DualityData) -> TensorArray:
    """``(eps_D x C*) o (D* x f x C*) o (D* x eta_C)`` for ``f: C -> D``."""
    c, d = f.dom, f.cod
    _, eta_c, _ = dd.triple(c)
    d_star, _, eps_d = dd.triple(d)
    first = array_tensor(dd.identity(d_star), eta_c)
    return apply_at(eps_d, apply_at(f, first, len(d_star)), 0)


def dual_morphism_literal(f: TensorArray, dd: DualityData) -> TensorArray:
    """Same as ``dual_morphism_generic`` but composing fully materialized whiskered arrays."""
    c, d = f.dom, f.cod
    c_star, eta_c, _ = dd.triple(c)
    d_star, _, eps_d = dd.triple(d)
    first = array_tensor(dd.identity(d_star), eta_c)
    middle = _tensor_all([dd.identity(d_star), f, dd.identity(c_star)])
    last = array_tensor(eps_d, dd.identity(c_star))
    return array_compose(last, array_compose(middle, first))


def _check_respect_types(g: TensorArray, f: TensorArray, dd: DualityData) -> None:
    c_star, d_star = dd.dual(f.dom), dd.dual(f.cod)
    if g.dom != c_star or g.cod != d_star:
        raise BoundaryMismatchError(
            f"[{word_of(g.dom)}] -> [{word_of(g.cod)}]",
            f"[{word_of(c_star)}] -> [{word_of(d_star)}]", what="type")


def respects(g: TensorArray, f: TensorArray, dd: DualityData) -> bool:
    """Whether ``g: C* -> D*`` respects ``f: C -> D``.

    Both squares must commute: ``eps_D o (g x f) = eps_C`` and
    ``(f x g) o eta_C = eta_D``.
    """
    _check_respect_types(g, f, dd)
    _, eta_c, eps_c = dd.triple(f.dom)
    _, eta_d, eps_d = dd.triple(f.cod)
    counit_square = array_compose(eps_d, array_tensor(g, f)) == eps_c
    unit_square = array_compose(array_tensor(f, g), eta_c) == eta_d
    return counit_square and unit_square


@dataclass(frozen=True)
class RespectReport:
    precondition: bool
    g_after_dual_f: bool
    dual_f_after_g: bool
    deviations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.precondition and self.g_after_dual_f and self.dual_f_after_g


def check_lemma_respect(g: TensorArray, f: TensorArray, dd: DualityData) -> RespectReport:
    """Check that ``g o f*`` and ``f* o g`` are identities for ``g`` respecting ``f``.

    A failed precondition is reported with ``precondition=False`` and the
    composites are still evaluated, so the report shows what went wrong.
    """
    pre = respects(g, f, dd)
    f_star = dual_morphism_generic(f, dd)
    left = array_compose(g, f_star)
    right = array_compose(f_star, g)
    dev_left = left.deviations(dd.identity(left.dom))
    dev_right = right.deviations(dd.identity(right.dom))
    deviations = tuple([f"g o f*: {x}" for x in dev_left] + [f"f* o g: {x}" for x in dev_right])
    if not pre:
        deviations = ("precondition violated: g does not respect f",) + deviations
    return RespectReport(pre, not dev_left, not dev_right, deviations)


@dataclass(frozen=True)
class InvertNatReport:
    counit_square: bool
    unit_square: bool
    inverse_witnessed: bool
    alpha_plus_left_invertible: bool | None
    obstruction: str | None = None

    @property
    def squares_hold(self) -> bool:
        return self.counit_square and self.unit_square

    @property
    def passed(self) -> bool:
        return self.squares_hold and self.inverse_witnessed


def _transpose(a: TensorArray) -> TensorArray:
    return TensorArray(a.cod, a.dom, a.dim, a.entries.T.copy(), a.semiring)


def check_invertnat(alpha_plus: TensorArray, alpha_minus: TensorArray, d: int,
                    s: Semiring | None = None) -> InvertNatReport:
    """Monoidal-naturality squares for a transformation between two evaluation functors.

    Both functors send ``+`` to the standard ``d``-dimensional space, so the
    transformation is determined by its components at ``+`` and ``-``.  The
    counit square forces ``transpose(alpha_minus) alpha_plus = 1`` and the
    unit square ``alpha_plus transpose(alpha_minus) = 1``; when both hold,
    ``transpose(alpha_minus)`` is a two-sided inverse of ``alpha_plus``.
    """
    s = s or alpha_plus.semiring
    plus, minus = (Leg.PLAIN,), (Leg.DUAL,)
    for name, a, legs in (("alpha_plus", alpha_plus, plus), ("alpha_minus", alpha_minus, minus)):
        if a.dim != d or a.dom != legs or a.cod != legs:
            raise BoundaryMismatchError(a.signature(), f"[{word_of(legs)}] -> [{word_of(legs)}] (dim {d})",
                                        what=f"{name} shape")
    dd = standard_duality(d, s)
    _, eta_c, eps_c = dd.triple(plus)
    counit_square = array_compose(eps_c, array_tensor(alpha_minus, alpha_plus)) == eps_c
    unit_square = array_compose(array_tensor(alpha_plus, alpha_minus), eta_c) == eta_c
    inv = _transpose(alpha_minus)
    inv = TensorArray(plus, plus, d, inv.entries, s)
    witnessed = (array_compose(inv, alpha_plus) == dd.identity(plus)
                 and array_compose(alpha_plus, inv) == dd.identity(plus))

    left_invertible: bool | None = None
    if s.name in ("int", "nat", "rational"):
        left_invertible = linalg.rank(alpha_plus.to_matrix()) == d
    obstruction = None
    if left_invertible is False:
        obstruction = "alpha_plus has rank < d: no left inverse exists, so no alpha_minus satisfies the counit square"
    return InvertNatReport(counit_square, unit_square, counit_square and unit_square and witnessed,
                           left_invertible, obstruction)
