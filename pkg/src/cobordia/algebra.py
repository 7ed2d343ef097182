"""Categorical structure on diagram morphisms.

``compose(h, g)`` is applicative order: first ``g``, then ``h``.  Circles
created by a composition are found by following strands through the middle
word; ``cir_formula`` evaluates the section-count formula
``H_c + G_c - (H o G)_c`` for comparison only and never feeds ``compose``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (
    DiagMorphism,
    ObjWord,
    Pairing,
    classify_sections,
    dual_object,
    tensor_objects,
)
from .errors import BoundaryMismatchError

__all__ = [
    "CompositionTrace",
    "identity",
    "symmetry",
    "eta",
    "epsilon",
    "trace_composition",
    "compose",
    "compose_all",
    "cir_formula",
    "tensor_morphisms",
    "tensor_all",
    "dual_morphism",
    "snake_left",
    "snake_right",
]


@dataclass(frozen=True)
class CompositionTrace:
    """Result of tracing strands of ``g`` then ``h`` through the middle word.

    ``paths`` lists, for every composite strand, the middle points (1-based)
    it passes through; ``loops`` lists the middle points of each closed
    loop.  Together they visit every middle point exactly once.
    """

    composite: DiagMorphism
    closed_loops: int
    paths: tuple[tuple[int, ...], ...]
    loops: tuple[tuple[int, ...], ...]

    @property
    def visited(self) -> tuple[int, ...]:
        return tuple(k for seq in self.paths + self.loops for k in seq)

    @property
    def composite_pairing(self) -> Pairing:
        return self.composite.pairing


def identity(w: ObjWord) -> DiagMorphism:
    n = len(w)
    return DiagMorphism._from_partner(w, w, [n + i for i in range(n)] + list(range(n)), 0)


def symmetry(w1: ObjWord, w2: ObjWord) -> DiagMorphism:
    """The braiding ``w1 w2 -> w2 w1``."""
    n1, n2 = len(w1), len(w2)
    n = n1 + n2
    partner = [0] * (2 * n)
    for i in range(n1):
        partner[i] = n + n2 + i
    for j in range(n2):
        partner[n1 + j] = n + j
    for p in range(n):
        partner[partner[p]] = p
    return DiagMorphism._from_partner(tensor_objects(w1, w2), tensor_objects(w2, w1), partner, 0)


def eta(w: ObjWord) -> DiagMorphism:
    """The unit ``() -> dual(w) w`` made of nested cups."""
    n = len(w)
    return DiagMorphism._from_partner(ObjWord(), tensor_objects(dual_object(w), w),
                                      [2 * n - 1 - i for i in range(2 * n)], 0)


def epsilon(w: ObjWord) -> DiagMorphism:
    """The counit ``w dual(w) -> ()`` made of nested caps."""
    n = len(w)
    return DiagMorphism._from_partner(tensor_objects(w, dual_object(w)), ObjWord(),
                                      [2 * n - 1 - i for i in range(2 * n)], 0)


def trace_composition(h: DiagMorphism, g: DiagMorphism) -> CompositionTrace:
    if g.cod != h.dom:
        raise BoundaryMismatchError(g.cod, h.dom)
    gp, hp = g.partner, h.partner
    n, m, l = len(g.dom), len(g.cod), len(h.cod)
    visited = [False] * m
    partner = [-1] * (n + l)
    paths = []

    # g points: 0..n-1 domain, n+k middle k; h points: k middle k, m..m+l-1 codomain
    starts = [(r, 0, r) for r in range(n)] + [(n + t, 1, m + t) for t in range(l)]
    for r, side, p in starts:
        if partner[r] >= 0:
            continue
        through = []
        while True:
            if side == 0:
                q = gp[p]
                if q < n:
                    end = q
                    break
                k = q - n
                side, p = 1, k
            else:
                q = hp[p]
                if q >= m:
                    end = n + q - m
                    break
                k = q
                side, p = 0, n + k
            visited[k] = True
            through.append(k + 1)
        partner[r], partner[end] = end, r
        paths.append(tuple(through))

    loops = []
    for k0 in range(m):
        if visited[k0]:
            continue
        cycle = []
        k = k0
        while not visited[k]:
            visited[k] = True
            cycle.append(k + 1)
            k2 = gp[n + k] - n
            visited[k2] = True
            cycle.append(k2 + 1)
            k = hp[k2]
        loops.append(tuple(cycle))

    composite = DiagMorphism._from_partner(g.dom, h.cod, partner, g.circles + h.circles + len(loops))
    return CompositionTrace(composite, len(loops), tuple(paths), tuple(loops))


def compose(h: DiagMorphism, g: DiagMorphism) -> DiagMorphism:
    """``h o g``; the circle count is ``g.circles + h.circles + closed loops``."""
    return trace_composition(h, g).composite


def compose_all(*ms: DiagMorphism) -> DiagMorphism:
    """Compose in diagrammatic order: ``compose_all(a, b, c) == c o b o a``."""
    if not ms:
        raise ValueError("compose_all needs at least one morphism")
    out = ms[0]
    for m in ms[1:]:
        out = compose(m, out)
    return out


def cir_formula(h: DiagMorphism, g: DiagMorphism) -> int:
    """Raw value of ``H_c + G_c - (H o G)_c``; may disagree with the traced loop count."""
    composite = compose(h, g)
    return (classify_sections(h).codomain_cups + classify_sections(g).codomain_cups
            - classify_sections(composite).codomain_cups)


def tensor_morphisms(g: DiagMorphism, j: DiagMorphism) -> DiagMorphism:
    """Place ``j`` beside ``g``; indices of ``j`` shift past those of ``g``."""
    ng, mg = len(g.dom), len(g.cod)
    nj, mj = len(j.dom), len(j.cod)

    # new positions: dom g, dom j, cod g, cod j
    gm = list(range(ng)) + list(range(ng + nj, ng + nj + mg))
    jm = list(range(ng, ng + nj)) + list(range(ng + nj + mg, ng + nj + mg + mj))
    partner = [0] * (ng + mg + nj + mj)
    for p, q in zip(gm, g.partner):
        partner[p] = gm[q]
    for p, q in zip(jm, j.partner):
        partner[p] = jm[q]
    return DiagMorphism._from_partner(tensor_objects(g.dom, j.dom), tensor_objects(g.cod, j.cod),
                                      partner, g.circles + j.circles)


def tensor_all(*ms: DiagMorphism) -> DiagMorphism:
    out = identity(ObjWord())
    for m in ms:
        out = tensor_morphisms(out, m)
    return out


def dual_morphism(f: DiagMorphism) -> DiagMorphism:
    """The dual ``dual(cod) -> dual(dom)`` of ``f: dom -> cod``.

    Built as ``(eps_D x C*) o (D* x f x C*) o (D* x eta_C)`` where
    ``eta_C: () -> C C*`` and ``eps_D: D* D -> ()`` are the unit of
    ``dual(C)`` and the counit of ``dual(D)``.
    """
    c, d = f.dom, f.cod
    c_star, d_star = dual_object(c), dual_object(d)
    first = tensor_morphisms(identity(d_star), eta(c_star))
    middle = tensor_all(identity(d_star), f, identity(c_star))
    last = tensor_morphisms(epsilon(d_star), identity(c_star))
    return compose_all(first, middle, last)


def snake_right(w: ObjWord) -> DiagMorphism:
    """``w -> w dual(w) w -> w`` via ``id x eta`` then ``eps x id``."""
    return compose(tensor_morphisms(epsilon(w), identity(w)),
                   tensor_morphisms(identity(w), eta(w)))


def snake_left(w: ObjWord) -> DiagMorphism:
    """``dual(w) -> dual(w) w dual(w) -> dual(w)`` via ``eta x id`` then ``id x eps``."""
    wd = dual_object(w)
    return compose(tensor_morphisms(identity(wd), epsilon(w)),
                   tensor_morphisms(eta(w), identity(wd)))
