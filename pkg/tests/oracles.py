"""Independent reference implementations used by the tests.

Nothing here calls into the library's composition, enumeration or
evaluation code; inputs and outputs are plain strings, tuples and dicts.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import networkx as nx


def flip(c: str) -> str:
    return "-" if c == "+" else "+"


def dual_text(w: str) -> str:
    return "".join(flip(c) for c in reversed(w))


def points(dom: str, cod: str) -> list[str]:
    return [f"d{i}" for i in range(1, len(dom) + 1)] + [f"c{j}" for j in range(1, len(cod) + 1)]


def sign(dom: str, cod: str, p: str) -> str:
    i = int(p[1:]) - 1
    return dom[i] if p[0] == "d" else cod[i]


def compatible(dom: str, cod: str, p: str, q: str) -> bool:
    """Sign rule, written out case by case."""
    sp, sq = sign(dom, cod, p), sign(dom, cod, q)
    if p[0] != q[0]:
        return sp == sq
    return sp != sq


def brute_force_matchings(pts: list[str]) -> list[frozenset]:
    """Every perfect matching of ``pts``, by filtering all orderings into pairs."""
    if len(pts) % 2:
        return []
    seen = set()
    for perm in itertools.permutations(pts):
        pairs = frozenset(frozenset(perm[i:i + 2]) for i in range(0, len(perm), 2))
        seen.add(pairs)
    return sorted(seen, key=lambda m: sorted(tuple(sorted(p)) for p in m))


def brute_force_pairings(dom: str, cod: str) -> set[frozenset]:
    out = set()
    for m in brute_force_matchings(points(dom, cod)):
        if all(compatible(dom, cod, *sorted(pair)) for pair in m):
            out.add(m)
    return out


def hom_count(dom: str, cod: str) -> int:
    """Closed form: flipping domain signs turns every strand into a +/- pair."""
    eff = [flip(c) for c in dom] + list(cod)
    plus, minus = eff.count("+"), eff.count("-")
    return math.factorial(plus) if plus == minus else 0


def relabel_opposite(dom: str, cod: str, pairs) -> bool:
    """Each strand joins opposite labels of the word ``dual(dom) cod``.

    Domain point ``i`` sits at position ``len(dom) + 1 - i`` of ``dual(dom)``.
    """
    word = dual_text(dom) + cod
    n = len(dom)

    def label(p: str) -> str:
        i = int(p[1:])
        return word[n - i] if p[0] == "d" else word[n + i - 1]

    return all(label(a) != label(b) for a, b in pairs)


def compose_oracle(h: dict, g: dict) -> dict:
    """``h o g`` on JSON morphisms via connected components of a glued graph."""
    assert g["cod"] == h["dom"]
    graph = nx.Graph()
    m = len(g["cod"])
    for k in range(1, m + 1):
        graph.add_node(("mid", k))
    for i in range(1, len(g["dom"]) + 1):
        graph.add_node(("in", i))
    for j in range(1, len(h["cod"]) + 1):
        graph.add_node(("out", j))

    def g_node(p: str):
        return ("in", int(p[1:])) if p[0] == "d" else ("mid", int(p[1:]))

    def h_node(p: str):
        return ("mid", int(p[1:])) if p[0] == "d" else ("out", int(p[1:]))

    for a, b in g["strands"]:
        graph.add_edge(g_node(a), g_node(b), owner="g")
    for a, b in h["strands"]:
        graph.add_edge(h_node(a), h_node(b), owner="h")
    strands, loops = [], 0
    for comp in nx.connected_components(graph):
        ends = sorted(n for n in comp if n[0] != "mid")
        if not ends:
            loops += 1
            continue
        assert len(ends) == 2
        names = sorted(("d" if kind == "in" else "c") + str(i) for kind, i in ends)
        strands.append(names)
    key = {"d": 0, "c": 1}
    strands = sorted([sorted(s, key=lambda p: (key[p[0]], int(p[1:]))) for s in strands],
                     key=lambda s: [(key[p[0]], int(p[1:])) for p in s])
    return {"dom": g["dom"], "cod": h["cod"], "strands": strands,
            "circles": g["circles"] + h["circles"] + loops}


def strand_set(data: dict) -> frozenset:
    return frozenset(frozenset(s) for s in data["strands"])


def same_morphism(a: dict, b: dict) -> bool:
    return (a["dom"], a["cod"], a["circles"]) == (b["dom"], b["cod"], b["circles"]) \
        and strand_set(a) == strand_set(b)


def evaluate_oracle(data: dict, d: int) -> dict:
    """Entries keyed by (cod indices, dom indices): product of Kronecker deltas times d**circles."""
    n, k = len(data["dom"]), len(data["cod"])
    out = {}
    for cod_idx in itertools.product(range(d), repeat=k):
        for dom_idx in itertools.product(range(d), repeat=n):
            def val(p: str) -> int:
                i = int(p[1:]) - 1
                return dom_idx[i] if p[0] == "d" else cod_idx[i]

            ok = all(val(a) == val(b) for a, b in data["strands"])
            out[(cod_idx, dom_idx)] = d ** data["circles"] if ok else 0
    return out


def contract_oracle(b: dict, a: dict, d: int, mid: int, k: int, n: int) -> dict:
    """``b o a`` by explicit sums over the ``mid`` shared legs; ``k`` outputs, ``n`` inputs."""
    out = {}
    for cod_idx in itertools.product(range(d), repeat=k):
        for dom_idx in itertools.product(range(d), repeat=n):
            out[(cod_idx, dom_idx)] = sum(b[(cod_idx, m)] * a[(m, dom_idx)]
                                          for m in itertools.product(range(d), repeat=mid))
    return out


def flat_oracle(entries: dict, d: int, n: int, k: int) -> list:
    """Flatten in cod-major order: codomain indices first, then domain indices."""
    return [entries[(tuple(idx[:k]), tuple(idx[k:]))] for idx in itertools.product(range(d), repeat=k + n)]


def matmul(a, b):
    return [[sum(Fraction(a[i][t]) * b[t][j] for t in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def det(a) -> Fraction:
    """Leibniz expansion; fine for the 3x3 matrices used here."""
    n = len(a)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(n):
            term *= Fraction(a[i][perm[i]])
        total += term
    return total
