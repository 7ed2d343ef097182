import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cobordia.algebra import eta, identity
from cobordia.diagrams import parse_object
from cobordia.errors import ParseError
from cobordia.evaluation import TensorArray, evaluate
from cobordia.laws import homsets
from cobordia.semiring import BOOLEANS, RATIONALS
from cobordia.serialize import (
    array_from_json,
    dumps_array,
    dumps_morphism,
    loads_array,
    loads_morphism,
    morphism_from_json,
    morphism_to_json,
    permutation_from_json,
)

POOL = [m for ms in homsets(3, 2).values() for m in ms]


def test_schema_and_key_order():
    text = dumps_morphism(eta(parse_object("+")))
    assert text == '{"dom":"","cod":"-+","strands":[["c1","c2"]],"circles":0}'


@given(st.sampled_from(POOL))
def test_morphism_round_trip(m):
    assert loads_morphism(dumps_morphism(m)) == m
    assert morphism_to_json(loads_morphism(dumps_morphism(m))) == morphism_to_json(m)


@pytest.mark.parametrize("doc, path", [
    ('{"dom":"+","cod":"+","strands":[["d0","c1"]],"circles":0}', "$.strands[0][0]"),
    ('{"dom":"+","cod":"+","strands":[["d1","c2"]],"circles":0}', "$.strands[0][1]"),
    ('{"dom":"+","cod":"-","strands":[["d1","c1"]],"circles":0}', "$.strands"),
    ('{"dom":"+","cod":"+","strands":[],"circles":0}', "$.strands"),
    ('{"dom":"+","cod":"+","strands":[["d1","c1"]],"circles":-1}', "$.circles"),
    ('{"dom":"+x","cod":"+","strands":[],"circles":0}', "$.dom"),
    ('{"dom":"+","cod":"+","strands":[["d1"]],"circles":0}', "$.strands[0]"),
    ('{"dom":"+","cod":"+","strands":[["q1","c1"]],"circles":0}', "$.strands[0][0]"),
    ('{"dom":"+","cod":"+","strands":[["d1","c1"]]}', "$"),
    ('{"dom":"+","cod":"+","strands":[["d1","c1"]],"circles":0,"x":1}', "$"),
    ('[1, 2]', "$"),
    ('{"dom":', "$"),
])
def test_morphism_errors_name_the_path(doc, path):
    with pytest.raises(ParseError) as info:
        morphism_from_json(doc)
    assert info.value.path == path
    assert str(info.value).startswith(path + ":")


def test_out_of_range_message():
    with pytest.raises(ParseError, match="index out of range in 'd0'"):
        morphism_from_json('{"dom":"+","cod":"+","strands":[["d0","c1"]],"circles":0}')


def test_array_round_trips():
    a = evaluate(identity(parse_object("+-")), 2)
    assert loads_array(dumps_array(a)) == a
    r = TensorArray.from_matrix([["1/2", 3], [0, "-2/3"]], semiring=RATIONALS)
    data = json.loads(dumps_array(r))
    assert data["entries"] == ["1/2", "3", "0", "-2/3"] and data["semiring"] == "rational"
    assert loads_array(dumps_array(r)) == r
    b = evaluate(eta(parse_object("+")), 2, BOOLEANS)
    assert loads_array(dumps_array(b)) == b
    assert array_from_json({"dim": 3, "dom": "", "cod": "", "entries": [9], "semiring": "int"}).scalar() == 9


def test_array_entries_are_cod_major():
    # a cup on "-+" at d=2: entry (c1, c2) is 1 iff indices agree
    a = json.loads(dumps_array(evaluate(eta(parse_object("+")), 2)))
    assert a["entries"] == [1, 0, 0, 1]
    r = TensorArray.from_matrix([[1, 2], [3, 4]], semiring=RATIONALS)
    assert json.loads(dumps_array(r))["entries"] == ["1", "2", "3", "4"]
    assert r.to_matrix()[0][1] == Fraction(2)


@pytest.mark.parametrize("doc, path", [
    ({"dim": 0, "dom": "", "cod": "", "entries": [1], "semiring": "int"}, "$.dim"),
    ({"dim": 2, "dom": "+", "cod": "", "entries": [1], "semiring": "int"}, "$.entries"),
    ({"dim": 1, "dom": "", "cod": "", "entries": [1], "semiring": "real"}, "$.semiring"),
    ({"dim": 1, "dom": "", "cod": "", "entries": ["x"], "semiring": "rational"}, "$.entries[0]"),
    ({"dim": 1, "dom": "", "cod": "", "entries": [-1], "semiring": "nat"}, "$.entries[0]"),
    ({"dim": 1, "dom": "", "cod": "", "entries": [1.5], "semiring": "int"}, "$.entries[0]"),
])
def test_array_errors(doc, path):
    with pytest.raises(ParseError) as info:
        array_from_json(doc)
    assert info.value.path == path


def test_permutations():
    assert permutation_from_json("[2,1,3]").images == (2, 1, 3)
    for bad in ("[1,1]", '["a"]', "{}", "[true]"):
        with pytest.raises(ParseError):
            permutation_from_json(bad)
