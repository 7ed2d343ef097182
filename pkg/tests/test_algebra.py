import random

import pytest
from hypothesis import given, settings, strategies as st

from cobordia.algebra import (
    cir_formula,
    compose,
    compose_all,
    dual_morphism,
    epsilon,
    eta,
    identity,
    snake_left,
    snake_right,
    symmetry,
    tensor_all,
    tensor_morphisms,
    trace_composition,
)
from cobordia.diagrams import DiagMorphism, ObjWord, all_words, dual_object, parse_object, tensor_objects
from cobordia.errors import BoundaryMismatchError
from cobordia.laws import homsets
from cobordia.serialize import morphism_from_json, morphism_to_json

import oracles

EMPTY = ObjWord()
W = parse_object


def strands(m):
    return {str(s) for s in m.pairing}


def closed(k):
    return DiagMorphism(EMPTY, EMPTY, (), k)


HOMS2 = homsets(2, 1)
HOMS3 = homsets(3, 1)
ALL3 = [m for ms in HOMS3.values() for m in ms]
BY_DOM3 = {}
for _m in ALL3:
    BY_DOM3.setdefault(_m.dom, []).append(_m)


# -- generators ------------------------------------------------------------

def test_identity_examples():
    assert identity(EMPTY) == closed(0)
    assert strands(identity(W("+-"))) == {"d1-c1", "d2-c2"}


def test_eta_and_epsilon_examples():
    u = eta(W("+-"))
    assert (str(u.dom), str(u.cod)) == ("", "+-+-")
    assert strands(u) == {"c1-c4", "c2-c3"} and u.circles == 0
    e = epsilon(W("-+"))
    assert (str(e.dom), str(e.cod)) == ("-+-+", "")
    assert strands(e) == {"d1-d4", "d2-d3"} and e.circles == 0


def test_symmetry_crosses_blocks():
    s = symmetry(W("+-"), W("+"))
    assert (str(s.dom), str(s.cod)) == ("+-+", "++-")
    assert strands(s) == {"d1-c2", "d2-c3", "d3-c1"}


# -- composition -----------------------------------------------------------

def test_cup_then_cap_is_one_circle():
    assert compose(epsilon(W("-")), eta(W("+"))) == closed(1)


def test_circles_add_under_tensor():
    loop = compose(epsilon(W("-")), eta(W("+")))
    assert tensor_morphisms(loop, loop) == closed(2)


def test_boundary_mismatch():
    with pytest.raises(BoundaryMismatchError) as info:
        compose(identity(W("-")), identity(W("+")))
    assert "'+'" in str(info.value) and "'-'" in str(info.value)


def test_compose_matches_graph_oracle_small_exhaustive():
    for (a, b), gs in HOMS2.items():
        for (b2, c), hs in HOMS2.items():
            if b2 != b:
                continue
            for g in gs:
                for h in hs:
                    expected = oracles.compose_oracle(morphism_to_json(h), morphism_to_json(g))
                    assert oracles.same_morphism(morphism_to_json(compose(h, g)), expected)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_compose_matches_graph_oracle_length_three(data):
    g = data.draw(st.sampled_from(ALL3))
    h = data.draw(st.sampled_from(BY_DOM3.get(g.cod, [identity(g.cod)])))
    expected = oracles.compose_oracle(morphism_to_json(h), morphism_to_json(g))
    assert oracles.same_morphism(morphism_to_json(compose(h, g)), expected)


def test_composite_independent_of_strand_listing_order():
    rng = random.Random(3)
    g = eta(W("+-+"))
    h = tensor_all(identity(W("-+")), epsilon(W("-")), identity(W("-+")), closed(1))
    for _ in range(20):
        gl, hl = list(g.pairing), list(h.pairing)
        rng.shuffle(gl)
        rng.shuffle(hl)
        g2 = DiagMorphism(g.dom, g.cod, gl, g.circles)
        h2 = DiagMorphism(h.dom, h.cod, hl, h.circles)
        assert compose(h2, g2) == compose(h, g)


def test_compose_all_is_diagrammatic():
    a, b = eta(W("+")), epsilon(W("-"))
    assert compose_all(a, b) == compose(b, a)
    assert compose_all(a) == a
    with pytest.raises(ValueError):
        compose_all()


def test_trace_reports_paths_and_loops():
    tr = trace_composition(epsilon(W("-")), eta(W("+")))
    assert tr.closed_loops == 1 and tr.loops == ((1, 2),) and tr.paths == ()
    tr = trace_composition(tensor_morphisms(epsilon(W("+")), identity(W("+"))),
                           tensor_morphisms(identity(W("+")), eta(W("+"))))
    assert tr.closed_loops == 0 and tr.paths == ((1, 2, 3),)


# -- the section-count formula versus traced loops -------------------------

def test_formula_agrees_on_cup_cap():
    h, g = epsilon(W("-")), eta(W("+"))
    assert cir_formula(h, g) == 1 == trace_composition(h, g).closed_loops


def test_formula_disagrees_on_snake():
    w = W("+")
    g = tensor_morphisms(identity(w), eta(w))
    h = tensor_morphisms(epsilon(w), identity(w))
    assert compose(h, g) == identity(w)
    assert cir_formula(h, g) == 1
    assert trace_composition(h, g).closed_loops == 0


def test_formula_overcounts_a_loop_through_two_cups():
    # one loop through middle 1-2-3-4 built from two cups and two caps
    g = DiagMorphism(EMPTY, W("+-+-"), [("c1", "c2"), ("c3", "c4")])
    h = DiagMorphism(W("+-+-"), EMPTY, [("d2", "d3"), ("d1", "d4")])
    assert trace_composition(h, g).closed_loops == 1
    assert cir_formula(h, g) == 2
    assert compose(h, g) == closed(1)


# -- tensor ----------------------------------------------------------------

def test_tensor_of_units_reindexes():
    u = tensor_morphisms(eta(W("+")), eta(W("+")))
    assert str(u.cod) == "-+-+"
    assert strands(u) == {"c1-c2", "c3-c4"}


def test_tensor_unit_and_associativity_small():
    ms = [m for ms in HOMS2.values() for m in ms][:40]
    unit = identity(EMPTY)
    for a in ms:
        assert tensor_morphisms(a, unit) == a == tensor_morphisms(unit, a)
    for a in ms[:12]:
        for b in ms[:12]:
            for c in ms[:12]:
                assert tensor_all(a, b, c) == tensor_morphisms(a, tensor_morphisms(b, c))


def test_interchange_and_naturality_sampled():
    rng = random.Random(11)
    for _ in range(400):
        g1 = rng.choice(ALL3)
        h1 = rng.choice(BY_DOM3[g1.cod])
        g2 = rng.choice(ALL3)
        h2 = rng.choice(BY_DOM3[g2.cod])
        lhs = tensor_morphisms(compose(h1, g1), compose(h2, g2))
        rhs = compose(tensor_morphisms(h1, h2), tensor_morphisms(g1, g2))
        assert lhs == rhs
        a, b = rng.choice(ALL3), rng.choice(ALL3)
        if len(a.dom) + len(b.dom) <= 4 and len(a.cod) + len(b.cod) <= 4:
            left = compose(symmetry(a.cod, b.cod), tensor_morphisms(a, b))
            right = compose(tensor_morphisms(b, a), symmetry(a.dom, b.dom))
            assert left == right


def test_symmetry_self_inverse():
    for w1 in all_words(3):
        for w2 in all_words(3):
            assert compose(symmetry(w2, w1), symmetry(w1, w2)) == identity(tensor_objects(w1, w2))


# -- snakes and duals ------------------------------------------------------

def test_snakes_all_words_to_five():
    count = 0
    for w in all_words(5, min_len=1):
        assert snake_right(w) == identity(w)
        assert snake_left(w) == identity(dual_object(w))
        count += 1
    assert count == 62


def test_dual_of_unit_is_a_cap():
    d = dual_morphism(eta(W("+")))
    assert (str(d.dom), str(d.cod)) == ("-+", "")
    assert strands(d) == {"d1-d2"} and d.circles == 0


def test_dual_of_identity_and_type():
    for w in all_words(4):
        assert dual_morphism(identity(w)) == identity(dual_object(w))
    for m in ALL3[:200]:
        d = dual_morphism(m)
        assert (d.dom, d.cod, d.circles) == (dual_object(m.cod), dual_object(m.dom), m.circles)


def test_dual_involution_with_circles_up_to_two():
    for ms in homsets(2, 2).values():
        for m in ms:
            assert dual_morphism(dual_morphism(m)) == m


def test_dual_involution_length_four_sampled():
    rng = random.Random(5)
    homs = homsets(4, 0)
    pool = [m for ms in homs.values() for m in ms]
    for m in rng.sample(pool, 300):
        assert dual_morphism(dual_morphism(m)) == m


def test_dual_reverses_composition_small():
    for (a, b), gs in HOMS2.items():
        for h in BY_DOM3.get(b, []):
            if len(h.cod) > 2:
                continue
            for g in gs:
                assert dual_morphism(compose(h, g)) == compose(dual_morphism(g), dual_morphism(h))


def test_json_round_trip_exhaustive():
    for m in ALL3:
        assert morphism_from_json(morphism_to_json(m)) == m
