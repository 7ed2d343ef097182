"""Seedable property suites for the diagram category and its matrix evaluation.

Each suite returns ``LawReport`` objects, one per law (plus one per
diagnostic finding in the circles suite).  Exhaustive parts enumerate every
morphism up to the given bounds; randomized parts draw from
``random.Random(seed)``, so the same arguments always give byte-identical
reports.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

from . import linalg
from .algebra import (
    cir_formula,
    compose,
    dual_morphism,
    epsilon,
    eta,
    identity,
    snake_left,
    snake_right,
    symmetry,
    tensor_morphisms,
    trace_composition,
)
from .diagrams import (
    DOM,
    DiagMorphism,
    ObjWord,
    all_words,
    dual_object,
    enumerate_pairings,
    parse_object,
    tensor_objects,
    validate_pairing,
)
from .errors import UnknownSuiteError
from .evaluation import (
    Leg,
    TensorArray,
    apply_at,
    array_compose,
    array_tensor,
    check_invertnat,
    check_lemma_respect,
    dual_morphism_generic,
    evaluate,
    identity_array,
    legs_of,
    respects,
    standard_duality,
)
from .fsm import Permutation, all_permutations, block_sum, include, perm_compose
from .semiring import INTEGERS, RATIONALS

__all__ = ["LawReport", "SUITES", "DEFAULT_BOUNDS", "run_suite", "run_all", "any_failed", "homsets"]

DEFAULT_BOUNDS = {"snake": 5, "inclusion": 4}
DEFAULT_MAX_LEN = 3
DEFAULT_MAX_CIRCLES = 1

# largest dense array built by the snake-evaluation law
SNAKE_EVAL_MAX_ENTRIES = 2 ** 16


@dataclass(frozen=True)
class LawReport:
    suite: str
    law: str
    instance: str
    passed: bool
    cases: int
    seed: int
    counterexample: Any = None
    diagnostic: bool = False

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def _ser(x: Any) -> Any:
    from .serialize import array_to_json, morphism_to_json

    if isinstance(x, DiagMorphism):
        return morphism_to_json(x)
    if isinstance(x, TensorArray):
        return array_to_json(x)
    if isinstance(x, ObjWord):
        return str(x)
    if isinstance(x, Permutation):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_ser(y) for y in x]
    return x


class _Law:
    """Counts cases and keeps the first counterexample."""

    def __init__(self, suite: str, law: str, instance: str, seed: int, diagnostic: bool = False):
        self.suite, self.law, self.instance, self.seed = suite, law, instance, seed
        self.diagnostic = diagnostic
        self.cases = 0
        self.counterexample: dict | None = None

    def case(self, ok: bool, **inputs: Any) -> bool:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = {k: _ser(v) for k, v in inputs.items()}
        return ok

    def report(self) -> LawReport:
        return LawReport(self.suite, self.law, self.instance, self.counterexample is None,
                         self.cases, self.seed, self.counterexample, self.diagnostic)


def homsets(max_len: int, max_circles: int) -> dict[tuple[ObjWord, ObjWord], list[DiagMorphism]]:
    """Every morphism between words of length ``<= max_len`` with at most ``max_circles`` circles."""
    words = list(all_words(max_len))
    out = {}
    for a in words:
        for b in words:
            pairings = enumerate_pairings(a, b)
            out[a, b] = [DiagMorphism(a, b, p, k) for k in range(max_circles + 1) for p in pairings]
    return out


def _composable_pairs(homs: dict) -> Iterator[tuple[DiagMorphism, DiagMorphism]]:
    """All ``(g, h)`` with ``g: a -> b`` and ``h: b -> c``."""
    words = sorted({a for a, _ in homs}, key=lambda w: (len(w), str(w)))
    for a in words:
        for b in words:
            for c in words:
                for g in homs[a, b]:
                    for h in homs[b, c]:
                        yield g, h


def _bounds(max_len: int, max_circles: int) -> str:
    return f"max_len={max_len}, max_circles={max_circles}"


def suite_category(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    inst = _bounds(max_len, max_circles)
    homs = homsets(max_len, max_circles)
    words = sorted({a for a, _ in homs}, key=lambda w: (len(w), str(w)))
    left = _Law("category", "left-identity", inst, seed)
    right = _Law("category", "right-identity", inst, seed)
    valid = _Law("category", "composite-is-total-pairing", inst, seed)
    assoc = _Law("category", "associativity", inst, seed)
    for ms in homs.values():
        for f in ms:
            left.case(compose(identity(f.cod), f) == f, f=f)
            right.case(compose(f, identity(f.dom)) == f, f=f)

    composites: dict[tuple[DiagMorphism, DiagMorphism], DiagMorphism] = {}
    for g, h in _composable_pairs(homs):
        hg = compose(h, g)
        valid.case(not validate_pairing(hg.dom, hg.cod, hg.pairing) and hg.circles >= g.circles + h.circles,
                   g=g, h=h, composite=hg)
        composites[g, h] = hg
    for a, b, c, d in itertools.product(words, repeat=4):
        for f in homs[a, b]:
            for g in homs[b, c]:
                gf = composites[f, g]
                for h in homs[c, d]:
                    assoc.case(compose(h, gf) == compose(composites[g, h], f), f=f, g=g, h=h)
    return [x.report() for x in (left, right, valid, assoc)]


def _small_pairs(homs: dict, max_len: int) -> Iterator[tuple[DiagMorphism, DiagMorphism]]:
    """Pairs of morphisms whose tensor has domain and codomain of length ``<= max_len``."""
    keys = sorted(homs, key=lambda k: (len(k[0]), str(k[0]), len(k[1]), str(k[1])))
    for (a1, b1), (a2, b2) in itertools.product(keys, repeat=2):
        if len(a1) + len(a2) > max_len or len(b1) + len(b2) > max_len:
            continue
        for f in homs[a1, b1]:
            for g in homs[a2, b2]:
                yield f, g


def suite_monoidal(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    inst = _bounds(max_len, max_circles)
    homs = homsets(max_len, max_circles)
    words = sorted({a for a, _ in homs}, key=lambda w: (len(w), str(w)))
    unit = ObjWord()

    units = _Law("monoidal", "tensor-unit", inst, seed)
    ids = _Law("monoidal", "tensor-preserves-identities", inst, seed)
    assoc = _Law("monoidal", "tensor-associativity", inst, seed)
    inter = _Law("monoidal", "interchange", inst, seed)
    sym_inv = _Law("monoidal", "symmetry-self-inverse", inst, seed)
    sym_unit = _Law("monoidal", "symmetry-unit", inst, seed)
    hexagon = _Law("monoidal", "symmetry-hexagon", inst, seed)
    natural = _Law("monoidal", "symmetry-naturality", inst, seed)

    for ms in homs.values():
        for f in ms:
            units.case(tensor_morphisms(f, identity(unit)) == f == tensor_morphisms(identity(unit), f), f=f)
    for a, b in itertools.product(words, repeat=2):
        ab = tensor_objects(a, b)
        ids.case(tensor_morphisms(identity(a), identity(b)) == identity(ab), a=a, b=b)
        sym_inv.case(compose(symmetry(b, a), symmetry(a, b)) == identity(ab), a=a, b=b)
    for a in words:
        sym_unit.case(symmetry(a, unit) == identity(a) == symmetry(unit, a), a=a)
    for a, b, c in itertools.product(words, repeat=3):
        lhs = symmetry(a, tensor_objects(b, c))
        rhs = compose(tensor_morphisms(identity(b), symmetry(a, c)),
                      tensor_morphisms(symmetry(a, b), identity(c)))
        hexagon.case(lhs == rhs, a=a, b=b, c=c)

    pairs = list(_small_pairs(homs, max_len))
    # (f x g) x h = f x (g x h) over triples whose total boundary fits the bound
    for f, g in pairs:
        for h_list in (homs[k] for k in homs
                       if len(f.dom) + len(g.dom) + len(k[0]) <= max_len
                       and len(f.cod) + len(g.cod) + len(k[1]) <= max_len):
            for h in h_list:
                assoc.case(tensor_morphisms(tensor_morphisms(f, g), h)
                           == tensor_morphisms(f, tensor_morphisms(g, h)), f=f, g=g, h=h)
    # interchange: (h1 o g1) x (h2 o g2) = (h1 x h2) o (g1 x g2)
    outgoing = _outgoing(homs)
    for g1, g2 in pairs:
        for h1 in outgoing[g1.cod]:
            for h2 in outgoing[g2.cod]:
                if len(h1.cod) + len(h2.cod) > max_len:
                    continue
                lhs = tensor_morphisms(compose(h1, g1), compose(h2, g2))
                rhs = compose(tensor_morphisms(h1, h2), tensor_morphisms(g1, g2))
                inter.case(lhs == rhs, g1=g1, h1=h1, g2=g2, h2=h2)
    # naturality over every pair of enumerated morphisms
    allm = [f for ms in homs.values() for f in ms]
    for f in allm:
        for g in allm:
            lhs = compose(symmetry(f.cod, g.cod), tensor_morphisms(f, g))
            rhs = compose(tensor_morphisms(g, f), symmetry(f.dom, g.dom))
            natural.case(lhs == rhs, f=f, g=g)
    return [x.report() for x in (units, ids, assoc, inter, sym_inv, sym_unit, hexagon, natural)]


def _outgoing(homs: dict) -> dict[ObjWord, list[DiagMorphism]]:
    """Morphisms grouped by domain, codomains in (length, text) order."""
    out: dict[ObjWord, list[DiagMorphism]] = {}
    for (a, _), ms in sorted(homs.items(), key=lambda kv: (len(kv[0][1]), str(kv[0][1]))):
        out.setdefault(a, []).extend(ms)
    return out


def suite_snake(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    inst = f"nonempty words of length <= {max_len}"
    right = _Law("snake", "zigzag-right (eps x id) o (id x eta) = id", inst, seed)
    left = _Law("snake", "zigzag-left (id x eps) o (eta x id) = id", inst, seed)
    for w in all_words(max_len, min_len=1):
        right.case(snake_right(w) == identity(w), word=w, got=snake_right(w))
        left.case(snake_left(w) == identity(dual_object(w)), word=w, got=snake_left(w))
    return [right.report(), left.report()]


def _relabel_ok(dom: ObjWord, cod: ObjWord, m: DiagMorphism) -> bool:
    # positions in dual(dom) ++ cod: domain point i sits at n + 1 - i
    n = len(dom)
    labels = tensor_objects(dual_object(dom), cod)
    for s in m.pairing:
        pos = [n + 1 - e.index if e.side is DOM else n + e.index for e in s.endpoints]
        if labels.at(pos[0]) is labels.at(pos[1]):
            return False
    return True


def suite_duals(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    inst = _bounds(max_len, max_circles)
    obj_len = max(8, max_len)
    obj_inst = f"words of length <= {obj_len}"
    inv = _Law("duals", "object-dual-involution", obj_inst, seed)
    anti = _Law("duals", "object-dual-anti-homomorphism", f"pairs of combined length <= {obj_len}", seed)
    unit = _Law("duals", "unit-self-dual", "()", seed)
    relabel = _Law("duals", "pairing-relabeling", inst, seed)
    d_id = _Law("duals", "dual-of-identity", inst, seed)
    d_type = _Law("duals", "dual-morphism-type", inst, seed)
    d_inv = _Law("duals", "dual-morphism-involution", inst, seed)
    d_anti = _Law("duals", "dual-morphism-anti-functor", inst, seed)

    words = list(all_words(obj_len))
    for w in words:
        inv.case(dual_object(dual_object(w)) == w, word=w)
    for a in words:
        for b in all_words(obj_len - len(a)):
            anti.case(dual_object(tensor_objects(a, b)) == tensor_objects(dual_object(b), dual_object(a)),
                      a=a, b=b)
    unit.case(dual_object(ObjWord()) == ObjWord())

    homs = homsets(max_len, max_circles)
    duals: dict[DiagMorphism, DiagMorphism] = {}
    for (a, b), ms in homs.items():
        for f in ms:
            relabel.case(_relabel_ok(a, b, f), f=f)
            df = dual_morphism(f)
            duals[f] = df
            d_type.case(df.dom == dual_object(f.cod) and df.cod == dual_object(f.dom), f=f, dual=df)
            d_inv.case(dual_morphism(df) == f, f=f, dual=df)
    for w in all_words(max_len):
        d_id.case(dual_morphism(identity(w)) == identity(dual_object(w)), word=w)
    for g, h in _composable_pairs(homs):
        d_anti.case(dual_morphism(compose(h, g)) == compose(duals[g], duals[h]), g=g, h=h)
    return [x.report() for x in (inv, anti, unit, relabel, d_id, d_type, d_inv, d_anti)]


def _pinned_snake() -> tuple[DiagMorphism, DiagMorphism]:
    w = parse_object("+")
    g = tensor_morphisms(identity(w), eta(w))
    h = tensor_morphisms(epsilon(w), identity(w))
    return h, g


def _pinned_cup_cap() -> tuple[DiagMorphism, DiagMorphism]:
    return epsilon(parse_object("-")), eta(parse_object("+"))


def classify_composition(h: DiagMorphism, g: DiagMorphism) -> dict:
    """Loop structure of ``h o g`` as used by the circles diagnostic.

    ``closed_middle``: no composite strand passes through the middle word.
    ``cup_cap_cycles``: additionally every loop is one cup of ``g`` meeting one cap of ``h``.
    ``snake``: some cup of ``g`` or cap of ``h`` lies on an open path.
    ``multi_cup_loop``: some closed loop uses two or more cups of ``g``.
    """
    tr = trace_composition(h, g)
    open_points = {k for path in tr.paths for k in path}
    g_cups = [s for s in g.pairing if s.kind == "cup"]
    h_caps = [s for s in h.pairing if s.kind == "cap"]
    snake = any(s.a.index in open_points for s in g_cups) or any(s.a.index in open_points for s in h_caps)
    cup_points = {s.a.index for s in g_cups}
    multi = any(sum(1 for k in loop if k in cup_points) > 1 for loop in tr.loops)
    closed = not open_points
    return {
        "traced": tr.closed_loops,
        "formula": cir_formula(h, g),
        "closed_middle": closed,
        "cup_cap_cycles": closed and all(len(loop) == 2 for loop in tr.loops),
        "snake": snake,
        "multi_cup_loop": multi,
    }


def suite_circles(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    """Compare the section-count circle formula with traced loops.

    Circle counts of the factors do not enter either quantity, so only
    circle-free morphisms are enumerated.
    """
    inst = f"max_len={max_len}, circle-free factors"
    reports = []
    pinned_snake = _Law("circles-diagnostic", "pinned-snake: formula 1, traced 0", "+", seed)
    h, g = _pinned_snake()
    info = classify_composition(h, g)
    pinned_snake.case(info["formula"] == 1 and info["traced"] == 0, h=h, g=g, **_values(info))
    pinned_cc = _Law("circles-diagnostic", "pinned-cup-cap: formula 1, traced 1", "+", seed)
    h2, g2 = _pinned_cup_cap()
    info2 = classify_composition(h2, g2)
    pinned_cc.case(info2["formula"] == 1 and info2["traced"] == 1, h=h2, g=g2, **_values(info2))

    cupcap = _Law("circles-diagnostic", "cup-cap-cycles-agree", inst, seed)
    explained = _Law("circles-diagnostic", "disagreements-explained", inst, seed)
    closed = _Law("circles-diagnostic", "closed-middle-agree", inst, seed, diagnostic=True)
    found = _Law("circles-diagnostic", "disagreement-exists", inst, seed)
    disagreements = []
    homs = homsets(max_len, 0)
    for g, h in _composable_pairs(homs):
        info = classify_composition(h, g)
        agree = info["formula"] == info["traced"]
        if info["cup_cap_cycles"]:
            cupcap.case(agree, h=h, g=g, **_values(info))
        if info["closed_middle"]:
            closed.case(agree, h=h, g=g, **_values(info))
        if not agree:
            explained.case(info["snake"] or info["multi_cup_loop"], h=h, g=g, **_values(info))
            pattern = "snake" if info["snake"] else "multi-cup-loop"
            disagreements.append(LawReport(
                "circles-diagnostic", "cir-formula-vs-trace", f"{pattern}: {g.dom or '()'} -> "
                f"{g.cod or '()'} -> {h.cod or '()'}", False, 1, seed,
                {"h": _ser(h), "g": _ser(g), "pattern": pattern, **_values(info)}, True))
    # the smallest snake passes through a middle word of length 3
    found.case(bool(disagreements) or max_len < 3, count=len(disagreements))
    reports = [pinned_snake.report(), pinned_cc.report(), found.report(), cupcap.report(),
               explained.report(), closed.report()]
    return reports + disagreements


def _values(info: dict) -> dict:
    return {"formula": info["formula"], "traced": info["traced"]}


def suite_inclusion(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    inst = f"permutations of size <= {max_len}"
    ids = _Law("inclusion", "preserves-identities", inst, seed)
    comp = _Law("inclusion", "preserves-composition", inst, seed)
    faithful = _Law("inclusion", "injective", inst, seed)
    mon_n = min(max_len, 3)
    monoidal = _Law("inclusion", "strict-monoidal", f"block sums of sizes <= {mon_n}", seed)
    swap = _Law("inclusion", "transposition-is-symmetry", "n=2", seed)

    seen: dict[DiagMorphism, Permutation] = {}
    for n in range(max_len + 1):
        perms = list(all_permutations(n))
        ids.case(include(Permutation.identity(n)) == identity(ObjWord((parse_object("+")[0],) * n)), n=n)
        for p in perms:
            m = include(p)
            faithful.case(m not in seen, p=p, q=seen.get(m))
            seen[m] = p
        for p, q in itertools.product(perms, repeat=2):
            comp.case(include(perm_compose(p, q)) == compose(include(p), include(q)), p=p, q=q)
    for n, m in itertools.product(range(mon_n + 1), repeat=2):
        for p in all_permutations(n):
            for q in all_permutations(m):
                monoidal.case(include(block_sum(p, q)) == tensor_morphisms(include(p), include(q)), p=p, q=q)
    plus = parse_object("+")
    swap.case(include(Permutation((2, 1))) == symmetry(plus, plus))
    return [x.report() for x in (ids, comp, faithful, monoidal, swap)]


def _dual_inverse(f: list[list[Fraction]]) -> list[list[Fraction]]:
    return linalg.transpose(linalg.inverse(f))


RANDOM_INVERTIBLE = 200
RANDOM_SINGULAR = 50


def suite_matrix_duality(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    rng = random.Random(seed)
    rand_inst = f"{RANDOM_INVERTIBLE} seeded invertible rational matrices, d in 1..3"
    respect = _Law("appendix-a", "dual-inverse-respects", rand_inst, seed)
    composites = _Law("appendix-a", "respect-composites-are-identities", rand_inst, seed)
    detect = _Law("appendix-a", "respects-iff-dual-inverse", f"{RANDOM_INVERTIBLE} seeded pairs", seed)
    nat_ok = _Law("appendix-a", "invertnat-passes-invertible", rand_inst, seed)
    nat_bad = _Law("appendix-a", "invertnat-rejects-singular",
                   f"{RANDOM_SINGULAR} seeded singular matrices, d in 1..3", seed)
    groupoid = _Law("appendix-a", "passing-transformations-are-invertible", rand_inst, seed)
    snakes = _Law("appendix-a", "standard-duality-snakes", "words of length <= 2, d in 1..3", seed)
    cross = _Law("appendix-a", "dual-morphism-matches-matrix-dual", f"{_bounds(max_len, max_circles)}, d in 1..2",
                 seed)

    for i in range(RANDOM_INVERTIBLE):
        d = 1 + i % 3
        dd = standard_duality(d, RATIONALS)
        f_mat = linalg.random_invertible(rng, d)
        f = TensorArray.from_matrix(f_mat, Leg.PLAIN)
        g = TensorArray.from_matrix(_dual_inverse(f_mat), Leg.DUAL)
        respect.case(respects(g, f, dd), f=f, g=g)
        report = check_lemma_respect(g, f, dd)
        composites.case(report.ok, f=f, g=g, deviations=list(report.deviations))

        other = linalg.random_rational_matrix(rng, d, bound=2)
        expected = linalg.matmul(linalg.transpose(other), f_mat) == linalg.identity_matrix(d)
        g_other = TensorArray.from_matrix(other, Leg.DUAL)
        detect.case(respects(g_other, f, dd) == expected, f=f, g=g_other)

        result = check_invertnat(f, g, d, RATIONALS)
        nat_ok.case(result.passed, alpha_plus=f, alpha_minus=g)
        if result.passed:
            groupoid.case(linalg.transpose(g.to_matrix()) == linalg.inverse(f_mat)
                          and result.alpha_plus_left_invertible is True, alpha_plus=f, alpha_minus=g)

    for i in range(RANDOM_SINGULAR):
        d = 1 + i % 3
        a_mat = linalg.random_singular(rng, d)
        a = TensorArray.from_matrix(a_mat, Leg.PLAIN)
        candidates = [linalg.identity_matrix(d), linalg.random_rational_matrix(rng, d)]
        for b_mat in candidates:
            b = TensorArray.from_matrix(b_mat, Leg.DUAL)
            result = check_invertnat(a, b, d, RATIONALS)
            nat_bad.case(not result.passed and result.alpha_plus_left_invertible is False
                          and result.obstruction is not None, alpha_plus=a, alpha_minus=b)

    for d in (1, 2, 3):
        dd = standard_duality(d, INTEGERS)
        for w in all_words(2):
            snakes.case(dd.snakes_hold(legs_of(w)), word=w, d=d)

    homs = homsets(max_len, max_circles)
    for ms in homs.values():
        for m in ms:
            for d in (1, 2):
                dd = standard_duality(d, INTEGERS)
                cross.case(dual_morphism_generic(evaluate(m, d), dd) == evaluate(dual_morphism(m), d), m=m, d=d)
    return [x.report() for x in (respect, composites, detect, nat_ok, nat_bad, groupoid, snakes, cross)]


def suite_evaluation(max_len: int, max_circles: int, seed: int) -> list[LawReport]:
    inst = f"{_bounds(max_len, max_circles)}, d in 1..3"
    functor = _Law("evaluation-functor", "functoriality", inst, seed)
    ids = _Law("evaluation-functor", "preserves-identities", inst, seed)
    monoidal = _Law("evaluation-functor", "monoidality", f"tensor boundaries <= {max_len}, d in 1..3", seed)
    closed = _Law("evaluation-functor", "closed-diagram-value", "k <= 6, d in 1..4", seed)
    snake_len = min(max_len + 1, 4)
    snakes = _Law("evaluation-functor", "snake-evaluates-to-identity",
                  f"words of length <= {snake_len}, d in 1..3, at most {SNAKE_EVAL_MAX_ENTRIES} entries", seed)

    homs = homsets(max_len, max_circles)
    for d in (1, 2, 3):
        cache: dict[DiagMorphism, TensorArray] = {}

        def ev(m: DiagMorphism) -> TensorArray:
            if m not in cache:
                cache[m] = evaluate(m, d)
            return cache[m]

        for w in all_words(max_len):
            ids.case(ev(identity(w)) == identity_array(legs_of(w), d), word=w, d=d)
        for g, h in _composable_pairs(homs):
            functor.case(evaluate(compose(h, g), d) == array_compose(ev(h), ev(g)), g=g, h=h, d=d)
        for f, g in _small_pairs(homs, max_len):
            monoidal.case(evaluate(tensor_morphisms(f, g), d) == array_tensor(ev(f), ev(g)), f=f, g=g, d=d)
    for d in (1, 2, 3, 4):
        for k in range(7):
            value = evaluate(DiagMorphism(ObjWord(), ObjWord(), (), k), d).scalar()
            closed.case(value == d ** k, d=d, k=k, value=value)
    for w in all_words(snake_len, min_len=1):
        for d in (1, 2, 3):
            if d ** (4 * len(w)) > SNAKE_EVAL_MAX_ENTRIES:
                continue
            wd = dual_object(w)
            n = len(w)
            # (eps x id) o (id x eta), contracted leg-wise
            right = apply_at(evaluate(epsilon(w), d),
                             apply_at(evaluate(eta(w), d, max_legs=2 * n), identity_array(legs_of(w), d), n), 0)
            left = apply_at(evaluate(epsilon(w), d),
                            apply_at(evaluate(eta(w), d, max_legs=2 * n), identity_array(legs_of(wd), d), 0), n)
            snakes.case(right == identity_array(legs_of(w), d) and left == identity_array(legs_of(wd), d),
                        word=w, d=d)
    return [x.report() for x in (functor, ids, monoidal, closed, snakes)]


SUITES: dict[str, Callable[[int, int, int], list[LawReport]]] = {
    "category": suite_category,
    "monoidal": suite_monoidal,
    "snake": suite_snake,
    "duals": suite_duals,
    "circles-diagnostic": suite_circles,
    "inclusion": suite_inclusion,
    "appendix-a": suite_matrix_duality,
    "evaluation-functor": suite_evaluation,
}


def run_suite(name: str, max_len: int | None = None, max_circles: int = DEFAULT_MAX_CIRCLES,
              seed: int = 0) -> list[LawReport]:
    """Run one suite; ``max_len=None`` picks the suite's default bound."""
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    if max_len is None:
        max_len = DEFAULT_BOUNDS.get(name, DEFAULT_MAX_LEN)
    if max_len < 0 or max_circles < 0:
        raise ValueError("bounds must be nonnegative")
    return suite(max_len, max_circles, seed)


def run_all(max_len: int | None = None, max_circles: int = DEFAULT_MAX_CIRCLES,
            seed: int = 0) -> list[LawReport]:
    return [r for name in SUITES for r in run_suite(name, max_len, max_circles, seed)]


def any_failed(reports: Iterable[LawReport]) -> bool:
    """True iff a non-diagnostic law failed."""
    return any(not r.passed and not r.diagnostic for r in reports)

