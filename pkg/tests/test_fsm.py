import itertools

import pytest
from hypothesis import given, strategies as st

from cobordia.algebra import compose, identity, tensor_morphisms
from cobordia.diagrams import parse_object
from cobordia.errors import BoundaryMismatchError
from cobordia.fsm import Permutation, all_permutations, block_sum, include, perm_compose

perms = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs))))


def test_identity_permutation_includes_to_identity():
    assert include(Permutation.identity(2)) == identity(parse_object("++"))
    assert include(Permutation.identity(0)) == identity(parse_object(""))


def test_include_joins_i_to_p_of_i():
    m = include(Permutation((2, 3, 1)))
    assert {str(s) for s in m.pairing} == {"d1-c2", "d2-c3", "d3-c1"}


def test_composition_applies_right_argument_first():
    p, q = Permutation((2, 1, 3)), Permutation((1, 3, 2))
    r = perm_compose(p, q)
    assert [r(i) for i in (1, 2, 3)] == [p(q(i)) for i in (1, 2, 3)] == [2, 3, 1]


def test_invalid_permutations_and_size_mismatch():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        Permutation((0, 1))
    with pytest.raises(BoundaryMismatchError):
        perm_compose(Permutation((1,)), Permutation((1, 2)))


def test_counts_up_to_four():
    sizes = [sum(1 for _ in all_permutations(n)) for n in range(1, 5)]
    assert sizes == [1, 2, 6, 24] and sum(sizes) == 33
    assert sum(s * s for s in sizes) == 617


def test_include_is_a_faithful_functor_up_to_four():
    for n in range(0, 5):
        ps = list(all_permutations(n))
        assert include(Permutation.identity(n)) == identity(parse_object("+" * n))
        assert len({include(p) for p in ps}) == len(ps)
        for p, q in itertools.product(ps, repeat=2):
            assert include(perm_compose(p, q)) == compose(include(p), include(q))


def test_include_is_strict_monoidal_up_to_three():
    for n in range(0, 4):
        for m in range(0, 4):
            for p in all_permutations(n):
                for q in all_permutations(m):
                    assert include(block_sum(p, q)) == tensor_morphisms(include(p), include(q))


@given(perms)
def test_json_round_trip(p):
    assert Permutation.from_json(p.to_json()) == p
    assert perm_compose(p, Permutation.identity(p.size)) == p
