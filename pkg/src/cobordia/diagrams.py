"""Objects and total pairings of the free compact closed category on one generator.

An object is a word over the two orientations ``+`` and ``-``.  A morphism
``dom -> cod`` is a perfect matching (a *pairing*) of the points of
``dom`` and ``cod`` together with a natural number of closed circles.

Points are addressed in direct coordinates: ``Endpoint(DOM, i)`` is the
i-th letter of the domain word and ``Endpoint(COD, j)`` the j-th letter of
the codomain word, both 1-based.  A strand is sign compatible when

* it joins two domain points of opposite orientation (a *cap*),
* it joins two codomain points of opposite orientation (a *cup*), or
* it joins a domain point to a codomain point of equal orientation.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidPairingError, ParseError, ResourceBoundError

__all__ = [
    "Orientation",
    "PLUS",
    "MINUS",
    "ObjWord",
    "Side",
    "DOM",
    "COD",
    "Endpoint",
    "Strand",
    "Pairing",
    "SectionCounts",
    "DiagMorphism",
    "parse_object",
    "dual_object",
    "tensor_objects",
    "validate_pairing",
    "classify_sections",
    "enumerate_pairings",
    "canonical_form",
    "all_words",
    "default_max_points",
]

DEFAULT_MAX_POINTS = 16
MAX_POINTS_ENV = "COBORDIA_MAX_POINTS"


class Orientation(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def flip(self) -> Orientation:
        return MINUS if self is PLUS else PLUS

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"Orientation({self.value!r})"


PLUS = Orientation.PLUS
MINUS = Orientation.MINUS


@dataclass(frozen=True, eq=False)
class ObjWord:
    """A finite word of orientations; the empty word is the monoidal unit."""

    orientations: tuple[Orientation, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.orientations, tuple):
            object.__setattr__(self, "orientations", tuple(self.orientations))
        for o in self.orientations:
            if not isinstance(o, Orientation):
                raise TypeError(f"not an orientation: {o!r}")
        # equality and hashing go through the text form
        object.__setattr__(self, "_text", "".join(o.value for o in self.orientations))

    @classmethod
    def _trusted(cls, orientations: tuple[Orientation, ...], text: str) -> ObjWord:
        w = object.__new__(cls)
        object.__setattr__(w, "orientations", orientations)
        object.__setattr__(w, "_text", text)
        return w

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ObjWord):
            return NotImplemented
        return self._text == other._text

    def __hash__(self) -> int:
        return hash(self._text)

    @classmethod
    def parse(cls, text: str) -> ObjWord:
        return parse_object(text)

    @property
    def length(self) -> int:
        return len(self.orientations)

    def __len__(self) -> int:
        return len(self.orientations)

    def __iter__(self) -> Iterator[Orientation]:
        return iter(self.orientations)

    def __getitem__(self, i: int) -> Orientation:
        return self.orientations[i]

    def at(self, index: int) -> Orientation:
        """Orientation at a 1-based position."""
        if not 1 <= index <= len(self.orientations):
            raise IndexError(f"position {index} outside word of length {len(self)}")
        return self.orientations[index - 1]

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return f"ObjWord({self._text!r})"


def parse_object(text: str) -> ObjWord:
    """Parse a string over ``{+, -}``; the empty string is the unit object.

    >>> parse_object("+-+")
    ObjWord('+-+')
    """
    out = []
    for pos, ch in enumerate(text, start=1):
        if ch == "+":
            out.append(PLUS)
        elif ch == "-":
            out.append(MINUS)
        else:
            raise ParseError(f"invalid orientation {ch!r} at position {pos}", position=pos)
    return ObjWord(tuple(out))


def dual_object(w: ObjWord) -> ObjWord:
    """Reverse the word and flip every orientation."""
    flipped = tuple(o.flip() for o in reversed(w.orientations))
    return ObjWord._trusted(flipped, "".join(o.value for o in flipped))


def tensor_objects(w1: ObjWord, w2: ObjWord) -> ObjWord:
    return ObjWord._trusted(w1.orientations + w2.orientations, w1._text + w2._text)


def all_words(max_len: int, min_len: int = 0) -> Iterator[ObjWord]:
    """Every word of length ``min_len..max_len``, shortest first, ``+`` before ``-``."""
    import itertools

    for n in range(min_len, max_len + 1):
        for letters in itertools.product((PLUS, MINUS), repeat=n):
            yield ObjWord(letters)


class Side(enum.IntEnum):
    DOM = 0
    COD = 1

    @property
    def letter(self) -> str:
        return "d" if self is Side.DOM else "c"


DOM = Side.DOM
COD = Side.COD


class Endpoint(NamedTuple):
    """A boundary point; ``index`` is 1-based.  Ordering: all DOM points, then COD."""

    side: Side
    index: int

    def __str__(self) -> str:
        return f"{self.side.letter}{self.index}"

    @classmethod
    def parse(cls, text: str) -> Endpoint:
        if len(text) < 2 or text[0] not in "dc" or not text[1:].isdigit():
            raise ParseError(f"malformed endpoint {text!r}")
        return cls(DOM if text[0] == "d" else COD, int(text[1:]))


def _endpoint(x: Endpoint | tuple | str) -> Endpoint:
    if isinstance(x, str):
        return Endpoint.parse(x)
    side, index = x
    return Endpoint(Side(side), int(index))


@dataclass(frozen=True, order=True)
class Strand:
    """An unordered pair of distinct endpoints, stored with ``a < b``."""

    a: Endpoint
    b: Endpoint

    def __init__(self, a: Endpoint | tuple | str, b: Endpoint | tuple | str):
        a, b = _endpoint(a), _endpoint(b)
        if a == b:
            raise ValueError(f"strand endpoints must be distinct, got {a} twice")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def endpoints(self) -> tuple[Endpoint, Endpoint]:
        return (self.a, self.b)

    @property
    def kind(self) -> str:
        """``"external"``, ``"cap"`` (domain section) or ``"cup"`` (codomain section)."""
        if self.a.side != self.b.side:
            return "external"
        return "cap" if self.a.side is DOM else "cup"

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"

    def __repr__(self) -> str:
        return f"Strand({str(self.a)!r}, {str(self.b)!r})"


@dataclass(frozen=True)
class Pairing:
    """A listing of strands.  Listing order is kept; ``canonical()`` sorts it."""

    strands: tuple[Strand, ...] = ()

    def __post_init__(self) -> None:
        strands = tuple(s if isinstance(s, Strand) else Strand(*s) for s in self.strands)
        object.__setattr__(self, "strands", strands)

    def canonical(self) -> Pairing:
        return Pairing(tuple(sorted(set(self.strands))))

    def __iter__(self) -> Iterator[Strand]:
        return iter(self.strands)

    def __len__(self) -> int:
        return len(self.strands)

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.strands) + "}"


class SectionCounts(NamedTuple):
    """Numbers of external strands, domain caps and codomain cups."""

    external: int
    domain_caps: int
    codomain_cups: int


def _orientation(dom: ObjWord, cod: ObjWord, p: Endpoint) -> Orientation:
    return (dom if p.side is DOM else cod).at(p.index)


def _in_range(dom: ObjWord, cod: ObjWord, p: Endpoint) -> bool:
    return 1 <= p.index <= len(dom if p.side is DOM else cod)


def _compatible(dom: ObjWord, cod: ObjWord, p: Endpoint, q: Endpoint) -> bool:
    same = _orientation(dom, cod, p) is _orientation(dom, cod, q)
    return same if p.side != q.side else not same


def validate_pairing(
    dom: ObjWord, cod: ObjWord, p: Pairing | Iterable[Strand], require_total: bool = True
) -> list[str]:
    """Return every violation found in ``p``; an empty list means the pairing is valid.

    Checks sign compatibility of each strand, disjointness of strands and,
    when ``require_total`` is set, that every point is covered.  For a
    partial pairing the maximality condition is checked instead: no two
    uncovered points may form a compatible strand.
    """
    strands = tuple(p)
    violations: list[str] = []
    seen: dict[Endpoint, Strand] = {}
    for s in strands:
        bad = [e for e in s.endpoints if not _in_range(dom, cod, e)]
        if bad:
            violations.extend(f"strand {s}: endpoint {e} out of range" for e in bad)
            continue
        if not _compatible(dom, cod, s.a, s.b):
            oa, ob = _orientation(dom, cod, s.a), _orientation(dom, cod, s.b)
            need = "equal" if s.kind == "external" else "opposite"
            violations.append(f"strand {s}: sign violation ({oa}, {ob}); {s.kind} strand needs {need} orientations")
        for e in s.endpoints:
            if e in seen and seen[e] is not s:
                violations.append(f"strand {s}: endpoint {e} already used by strand {seen[e]}")
            else:
                seen[e] = s
    points = [Endpoint(DOM, i) for i in range(1, len(dom) + 1)]
    points += [Endpoint(COD, j) for j in range(1, len(cod) + 1)]
    free = [e for e in points if e not in seen]
    if require_total:
        if free:
            violations.append("coverage violation: unmatched points " + ", ".join(str(e) for e in free))
    else:
        for i, e in enumerate(free):
            for f in free[i + 1:]:
                if _compatible(dom, cod, e, f):
                    violations.append(f"maximality violation: free points {e} and {f} could be paired")
    return violations


class DiagMorphism:
    """A morphism ``dom -> cod``: a total pairing plus a circle count.

    Equality and hashing ignore the listing order of strands, so two
    listings of the same strand set compare equal.  The circle count is part
    of the data: ``(G, 0) != (G, 1)``.  Instances are immutable.
    """

    __slots__ = ("dom", "cod", "circles", "_pairing", "_partner", "_hash")

    dom: ObjWord
    cod: ObjWord
    circles: int

    def __init__(self, dom: ObjWord, cod: ObjWord, pairing: Pairing | Iterable = (), circles: int = 0):
        if not isinstance(pairing, Pairing):
            pairing = Pairing(tuple(pairing))
        if isinstance(circles, bool) or not isinstance(circles, int) or circles < 0:
            raise ValueError(f"circle count must be a natural number, got {circles!r}")
        violations = validate_pairing(dom, cod, pairing, require_total=True)
        if violations:
            raise InvalidPairingError(violations)
        self._init(dom, cod, pairing, None, circles)

    def _init(self, dom, cod, pairing, partner, circles) -> None:
        set_ = object.__setattr__
        set_(self, "dom", dom)
        set_(self, "cod", cod)
        set_(self, "circles", circles)
        set_(self, "_pairing", pairing)
        set_(self, "_partner", partner)
        set_(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _from_partner(cls, dom: ObjWord, cod: ObjWord, partner: Sequence[int], circles: int) -> DiagMorphism:
        """Build from a point involution (points ``0..n-1`` domain, ``n..`` codomain), skipping validation."""
        m = object.__new__(cls)
        m._init(dom, cod, None, tuple(partner), circles)
        return m

    @property
    def pairing(self) -> Pairing:
        if self._pairing is None:
            n = len(self.dom)
            strands = []
            for p, q in enumerate(self._partner):
                if p < q:
                    a = Endpoint(DOM, p + 1) if p < n else Endpoint(COD, p - n + 1)
                    b = Endpoint(DOM, q + 1) if q < n else Endpoint(COD, q - n + 1)
                    strands.append(Strand(a, b))
            object.__setattr__(self, "_pairing", Pairing(tuple(strands)))
        return self._pairing

    @property
    def partner(self) -> tuple[int, ...]:
        """The pairing as a fixed-point-free involution on ``0..n+m-1``."""
        if self._partner is None:
            n = len(self.dom)
            out = [-1] * (n + len(self.cod))

            def flat(e: Endpoint) -> int:
                return e.index - 1 if e.side is DOM else n + e.index - 1

            for s in self._pairing:
                x, y = flat(s.a), flat(s.b)
                out[x], out[y] = y, x
            object.__setattr__(self, "_partner", tuple(out))
        return self._partner

    @property
    def strands(self) -> tuple[Strand, ...]:
        return self.pairing.strands

    def _key(self) -> tuple:
        return (self.dom, self.cod, self.partner, self.circles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagMorphism):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._key()))
        return self._hash

    def __reduce__(self):
        return (type(self)._from_partner, (self.dom, self.cod, self.partner, self.circles))

    def __str__(self) -> str:
        return f"({self.dom or '()'} -> {self.cod or '()'}, {self.pairing.canonical()}, circles={self.circles})"

    def __repr__(self) -> str:
        strands = ", ".join(f"({str(s.a)!r}, {str(s.b)!r})" for s in self.pairing)
        return f"DiagMorphism({self.dom!r}, {self.cod!r}, [{strands}], {self.circles})"


def classify_sections(m: DiagMorphism) -> SectionCounts:
    counts = {"external": 0, "cap": 0, "cup": 0}
    for s in m.pairing:
        counts[s.kind] += 1
    return SectionCounts(counts["external"], counts["cap"], counts["cup"])


def canonical_form(m: DiagMorphism) -> DiagMorphism:
    """Same morphism with strands sorted by endpoint order (DOM before COD, then index)."""
    return DiagMorphism._from_partner(m.dom, m.cod, m.partner, m.circles)


def default_max_points() -> int:
    raw = os.environ.get(MAX_POINTS_ENV)
    if raw is None or raw == "":
        return DEFAULT_MAX_POINTS
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"{MAX_POINTS_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ParseError(f"{MAX_POINTS_ENV} must be nonnegative, got {value}")
    return value


def _matchings(labels: Sequence[tuple[int, Orientation]]) -> Iterator[list[tuple[int, int]]]:
    # labels[i] = (side, orientation); matches the lowest free point first
    npts = len(labels)
    partner = [-1] * npts

    def go(start: int) -> Iterator[list[tuple[int, int]]]:
        i = start
        while i < npts and partner[i] >= 0:
            i += 1
        if i == npts:
            yield [(p, q) for p, q in enumerate(partner) if p < q]
            return
        side_i, o_i = labels[i]
        for j in range(i + 1, npts):
            if partner[j] >= 0:
                continue
            side_j, o_j = labels[j]
            if (o_i is o_j) != (side_i != side_j):
                continue
            partner[i], partner[j] = j, i
            yield from go(i + 1)
            partner[i] = partner[j] = -1

    yield from go(0)


def enumerate_pairings(dom: ObjWord, cod: ObjWord, max_points: int | None = None) -> list[Pairing]:
    """All total sign-compatible pairings ``dom -> cod`` in canonical order.

    Raises ``ResourceBoundError`` when ``len(dom) + len(cod)`` exceeds
    ``max_points`` (default 16, or the ``COBORDIA_MAX_POINTS`` environment
    variable).
    """
    if max_points is None:
        max_points = default_max_points()
    n, m = len(dom), len(cod)
    if n + m > max_points:
        raise ResourceBoundError(f"{n + m} boundary points exceed the enumeration bound {max_points}")
    if (n + m) % 2:
        return []
    labels = [(0, o) for o in dom] + [(1, o) for o in cod]

    def ep(p: int) -> Endpoint:
        return Endpoint(DOM, p + 1) if p < n else Endpoint(COD, p - n + 1)

    return [Pairing(tuple(Strand(ep(p), ep(q)) for p, q in match)) for match in _matchings(labels)]
