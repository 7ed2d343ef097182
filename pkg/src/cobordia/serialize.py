"""JSON interchange for morphisms, arrays and permutations.

Morphism schema (compact, keys in this order)::

    {"dom": "+-", "cod": "+-", "strands": [["d1","c1"],["d2","c2"]], "circles": 0}

Array schema::

    {"dim": 2, "dom": "+", "cod": "+", "entries": [1,0,0,1], "semiring": "int"}

Array entries are flat and cod-major; rational entries are strings such as
``"1/2"`` so they survive a round trip exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import numpy as np

from .diagrams import DOM, DiagMorphism, Endpoint, ObjWord, Pairing, Strand, parse_object
from .errors import InvalidPairingError, ParseError
from .evaluation import TensorArray, legs_of, word_of
from .fsm import Permutation
from .semiring import get_semiring

__all__ = [
    "morphism_to_json",
    "morphism_from_json",
    "dumps_morphism",
    "loads_morphism",
    "array_to_json",
    "array_from_json",
    "dumps_array",
    "loads_array",
    "permutation_from_json",
    "dumps",
]

MORPHISM_KEYS = ("dom", "cod", "strands", "circles")
ARRAY_KEYS = ("dim", "dom", "cod", "entries", "semiring")


def dumps(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"))


def _load(data: str | bytes | dict) -> Any:
    if isinstance(data, (str, bytes)):
        try:
            return json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"$: invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}",
                             path="$") from None
    return data


def _fail(path: str, message: str) -> ParseError:
    return ParseError(f"{path}: {message}", path=path)


def _check_keys(obj: Any, keys: tuple[str, ...], path: str = "$") -> None:
    if not isinstance(obj, dict):
        raise _fail(path, f"expected an object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    extra = sorted(k for k in obj if k not in keys)
    if missing:
        raise _fail(path, f"missing key(s) {', '.join(missing)}")
    if extra:
        raise _fail(path, f"unexpected key(s) {', '.join(extra)}")


def _word(obj: dict, key: str) -> ObjWord:
    value = obj[key]
    if not isinstance(value, str):
        raise _fail(f"$.{key}", f"expected a string over '+'/'-', got {type(value).__name__}")
    try:
        return parse_object(value)
    except ParseError as exc:
        raise _fail(f"$.{key}", str(exc)) from None


def _natural(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise _fail(path, f"expected a nonnegative integer, got {value!r}")
    return value


def morphism_to_json(m: DiagMorphism) -> dict:
    strands = [[str(s.a), str(s.b)] for s in m.pairing.canonical()]
    return {"dom": str(m.dom), "cod": str(m.cod), "strands": strands, "circles": m.circles}


def dumps_morphism(m: DiagMorphism) -> str:
    return dumps(morphism_to_json(m))


def morphism_from_json(data: str | bytes | dict) -> DiagMorphism:
    """Parse and validate a morphism; errors name the offending JSON path."""
    obj = _load(data)
    _check_keys(obj, MORPHISM_KEYS)
    dom, cod = _word(obj, "dom"), _word(obj, "cod")
    raw = obj["strands"]
    if not isinstance(raw, list):
        raise _fail("$.strands", "expected a list of endpoint pairs")
    strands = []
    for i, pair in enumerate(raw):
        path = f"$.strands[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise _fail(path, "expected a pair of endpoints like [\"d1\", \"c1\"]")
        ends = []
        for j, text in enumerate(pair):
            epath = f"{path}[{j}]"
            if not isinstance(text, str):
                raise _fail(epath, f"expected an endpoint string, got {text!r}")
            try:
                e = Endpoint.parse(text)
            except ParseError:
                raise _fail(epath, f"malformed endpoint {text!r}; use dN or cN") from None
            size = len(dom) if e.side is DOM else len(cod)
            if not 1 <= e.index <= size:
                word = "dom" if e.side is DOM else "cod"
                raise _fail(epath, f"index out of range in {text!r}: {word} has length {size}")
            ends.append(e)
        if ends[0] == ends[1]:
            raise _fail(path, f"strand joins {ends[0]} to itself")
        strands.append(Strand(*ends))
    circles = _natural(obj["circles"], "$.circles")
    try:
        return DiagMorphism(dom, cod, Pairing(tuple(strands)), circles)
    except InvalidPairingError as exc:
        raise _fail("$.strands", "; ".join(exc.violations)) from None


def loads_morphism(text: str) -> DiagMorphism:
    return morphism_from_json(text)


def _entry_to_json(x: Any, semiring: str) -> Any:
    if semiring == "rational":
        return str(Fraction(x))
    if semiring == "float":
        return float(x)
    if semiring == "bool":
        return bool(x)
    return int(x)


def _entry_from_json(x: Any, semiring: str, path: str) -> Any:
    try:
        if semiring == "rational":
            if isinstance(x, bool) or not isinstance(x, (str, int)):
                raise ValueError
            return Fraction(x)
        if semiring == "float":
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise ValueError
            return float(x)
        if semiring == "bool":
            if not isinstance(x, bool):
                raise ValueError
            return x
        if isinstance(x, bool) or not isinstance(x, int) or (semiring == "nat" and x < 0):
            raise ValueError
        return x
    except (ValueError, ZeroDivisionError):
        raise _fail(path, f"invalid {semiring} entry {x!r}") from None


def array_to_json(a: TensorArray) -> dict:
    name = a.semiring.name
    return {"dim": a.dim, "dom": word_of(a.dom), "cod": word_of(a.cod),
            "entries": [_entry_to_json(x, name) for x in a.flat()], "semiring": name}


def dumps_array(a: TensorArray) -> str:
    return dumps(array_to_json(a))


def array_from_json(data: str | bytes | dict) -> TensorArray:
    obj = _load(data)
    _check_keys(obj, ARRAY_KEYS)
    dim = _natural(obj["dim"], "$.dim")
    if dim < 1:
        raise _fail("$.dim", "dimension must be at least 1")
    dom, cod = _word(obj, "dom"), _word(obj, "cod")
    try:
        semiring = get_semiring(obj["semiring"])
    except (KeyError, TypeError):
        raise _fail("$.semiring", f"unknown semiring {obj['semiring']!r}") from None
    raw = obj["entries"]
    expected = dim ** (len(dom) + len(cod))
    if not isinstance(raw, list) or len(raw) != expected:
        raise _fail("$.entries", f"expected a flat list of {expected} entries")
    values = [_entry_from_json(x, semiring.name, f"$.entries[{i}]") for i, x in enumerate(raw)]
    entries = np.empty(len(values), dtype=object)
    entries[:] = values
    entries = entries.reshape((dim,) * (len(dom) + len(cod)))
    return TensorArray(legs_of(dom), legs_of(cod), dim, entries, semiring)


def loads_array(text: str) -> TensorArray:
    return array_from_json(text)


def permutation_from_json(data: str | list) -> Permutation:
    obj = _load(data)
    if not isinstance(obj, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in obj):
        raise _fail("$", "expected a list of integers in one-line notation")
    try:
        return Permutation(tuple(obj))
    except ValueError as exc:
        raise _fail("$", str(exc)) from None

