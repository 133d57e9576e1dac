"""Weak and strict finite limits, and coinserters, by exhaustive search.

A :class:`DiagramSpec` lists vertices (objects of the category), labelled
edges and constraints between paths.  Vertices without incoming edges are the
*leg vertices*: a cone assigns a morphism to each of them, and every other
vertex is reached by composing along edges.  A constraint compares the
composites of two paths with ``=`` or ``<=``.  That covers conical diagrams
(equalities only) as well as commas and inserters (one inequality).

Universal properties are tested on generalized elements: for every object
``A`` the map ``C(A, L) → Cones(A)`` must be surjective (weak limit) or an
isomorphism of posets, cones being ordered legwise (strict limit).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .category import dual
from .errors import NotParallel, SpecInvalid
from .report import Report

LE = "<="
EQ = "="


@dataclass(frozen=True)
class DiagramSpec:
    vertices: tuple
    edges: tuple = ()
    constraints: tuple = ()
    label: str = "diagram"

    @property
    def leg_vertices(self):
        targets = {t for _, t, _ in self.edges}
        return tuple(v for v in range(len(self.vertices)) if v not in targets)

    def path_end(self, path):
        start, edges = path
        v = start
        for e in edges:
            s, t, _ = self.edges[e]
            if s != v:
                raise SpecInvalid(f"path {path} is not composable at edge {e}")
            v = t
        return v


@dataclass(frozen=True)
class Cone:
    apex: int
    legs: tuple

    def to_dict(self, cat=None):
        if cat is None:
            return {"apex": self.apex, "legs": list(self.legs)}
        return {"apex": cat.objects[self.apex], "legs": [cat.name(m) for m in self.legs]}


def validate_spec(cat, spec):
    """Raise :class:`SpecInvalid` unless ``spec`` is well-typed over ``cat``."""
    n = len(spec.vertices)
    for x in spec.vertices:
        if not (0 <= x < cat.n_objects):
            raise SpecInvalid(f"vertex object {x} not in category")
    for i, (s, t, m) in enumerate(spec.edges):
        if not (0 <= s < n and 0 <= t < n):
            raise SpecInvalid(f"edge {i} has unknown endpoint")
        if not (0 <= m < cat.n_morphisms) or cat.dom[m] != spec.vertices[s] or cat.cod[m] != spec.vertices[t]:
            raise SpecInvalid(f"edge {i} label does not match its vertex objects")
    legs = set(spec.leg_vertices)
    for a, b, rel in spec.constraints:
        if rel not in (EQ, LE):
            raise SpecInvalid(f"unknown relation {rel!r}")
        for start, _ in (a, b):
            if start not in legs:
                raise SpecInvalid(f"path starts at {start}, which is not a leg vertex")
        if spec.vertices[spec.path_end(a)] != spec.vertices[spec.path_end(b)]:
            raise SpecInvalid("constraint paths end at different objects")
    return spec


# -- spec builders -------------------------------------------------------


def _all_paths(n, edges, start):
    out = [(start, ())]
    stack = [(start, ())]
    while stack:
        v, p = stack.pop()
        for i, (s, t, _) in enumerate(edges):
            if s == v:
                if len(p) > len(edges):
                    raise SpecInvalid("conical diagram has a cycle")
                q = (t, p + (i,))
                out.append((start, q[1]))
                stack.append(q)
    return out


def conical(cat, vertices, edges, label="conical"):
    """Conical diagram over a finite DAG: all paths into a vertex must agree."""
    spec = DiagramSpec(tuple(vertices), tuple(edges), (), label)
    by_end = {}
    for v in spec.leg_vertices:
        for path in _all_paths(len(vertices), spec.edges, v):
            by_end.setdefault(spec.path_end(path), []).append(path)
    constraints = []
    for paths in by_end.values():
        for p in paths[1:]:
            constraints.append((paths[0], p, EQ))
    spec = DiagramSpec(spec.vertices, spec.edges, tuple(constraints), label)
    return validate_spec(cat, spec)


def terminal_spec(cat):
    return DiagramSpec((), (), (), "terminal")


def product_spec(cat, x, y):
    return validate_spec(cat, DiagramSpec((x, y), (), (), "product"))


def inserter_spec(cat, f, g):
    """Inserter of ``(f, g)``: one leg ``e`` with ``f∘e ≤ g∘e``."""
    if cat.dom[f] != cat.dom[g] or cat.cod[f] != cat.cod[g]:
        raise SpecInvalid("inserter needs a parallel pair")
    spec = DiagramSpec(
        (cat.dom[f], cat.cod[f]),
        ((0, 1, f), (0, 1, g)),
        (((0, (0,)), (0, (1,)), LE),),
        "inserter",
    )
    return validate_spec(cat, spec)


def comma_spec(cat, f, g):
    """Comma ``f/g``: legs ``c0, c1`` with ``f∘c0 ≤ g∘c1``."""
    if cat.cod[f] != cat.cod[g]:
        raise SpecInvalid("comma needs a cospan")
    spec = DiagramSpec(
        (cat.dom[f], cat.dom[g], cat.cod[f]),
        ((0, 2, f), (1, 2, g)),
        (((0, (0,)), (1, (1,)), LE),),
        "comma",
    )
    return validate_spec(cat, spec)


def pullback_spec(cat, f, g):
    if cat.cod[f] != cat.cod[g]:
        raise SpecInvalid("pullback needs a cospan")
    spec = DiagramSpec(
        (cat.dom[f], cat.dom[g], cat.cod[f]),
        ((0, 2, f), (1, 2, g)),
        (((0, (0,)), (1, (1,)), EQ),),
        "pullback",
    )
    return validate_spec(cat, spec)


# -- cones ------------------------------------------------------------------


def _compiled(cat, spec):
    legs = spec.leg_vertices
    pos = {v: i for i, v in enumerate(legs)}
    labels = [tuple(spec.edges[e][2] for e in path[1]) for c in spec.constraints for path in c[:2]]
    checks = []
    for k, (a, b, rel) in enumerate(spec.constraints):
        ia, ib = pos[a[0]], pos[b[0]]
        checks.append((max(ia, ib), ia, labels[2 * k], ib, labels[2 * k + 1], rel))
    by_level = [[] for _ in legs]
    for c in checks:
        by_level[c[0]].append(c[1:])
    return legs, by_level


def _along(cat, m, labels):
    for f in labels:
        m = cat.compose[f, m]
    return m


def cones(cat, spec, apex):
    """All cones over ``spec`` with the given apex, legs in lexicographic order."""
    key = ("cones", spec, apex)

    def compute():
        legs, by_level = _compiled(cat, spec)
        out = []
        acc = []

        def rec(k):
            if k == len(legs):
                out.append(tuple(acc))
                return
            for m in cat.hom(apex, spec.vertices[legs[k]]):
                acc.append(m)
                ok = True
                for ia, la, ib, lb, rel in by_level[k]:
                    u, v = _along(cat, acc[ia], la), _along(cat, acc[ib], lb)
                    if not (u == v if rel == EQ else cat.le(u, v)):
                        ok = False
                        break
                if ok:
                    rec(k + 1)
                acc.pop()

        rec(0)
        return tuple(out)

    return cat.cached(key, compute)


def all_cones(cat, spec):
    for a in range(cat.n_objects):
        for legs in cones(cat, spec, a):
            yield Cone(a, legs)


def is_cone(cat, spec, cone):
    return tuple(cone.legs) in cones(cat, spec, cone.apex)


def _restrict(cat, legs, h):
    return tuple(cat.compose[l, h] for l in legs)


# -- universal property -----------------------------------------------------


def _weak_check(cat, spec, cone):
    """Return (factor map, None) or (None, first uncovered cone)."""
    factor = {}
    for a in range(cat.n_objects):
        reached = {}
        for h in cat.hom(a, cone.apex):
            reached.setdefault(_restrict(cat, cone.legs, h), h)
        for legs in cones(cat, spec, a):
            if legs not in reached:
                return None, Cone(a, legs)
            factor[a, legs] = reached[legs]
    return factor, None


def _strict_check(cat, spec, cone):
    factor = {}
    for a in range(cat.n_objects):
        hs = cat.hom(a, cone.apex)
        image = {}
        for h in hs:
            r = _restrict(cat, cone.legs, h)
            if r in image:
                return None, {"reason": "factorization not unique", "test_object": a, "mediators": [image[r], h]}
            image[r] = h
        for legs in cones(cat, spec, a):
            if legs not in image:
                return None, {"reason": "cone does not factor", "cone": Cone(a, legs)}
            factor[a, legs] = image[legs]
        for h in hs:
            rh = _restrict(cat, cone.legs, h)
            for k in hs:
                if h != k and not cat.le(h, k):
                    rk = _restrict(cat, cone.legs, k)
                    if all(cat.le(x, y) for x, y in zip(rh, rk)):
                        return None, {"reason": "legs do not reflect the order", "pair": [h, k]}
    return factor, None


def is_weak_limit(cat, spec, cone):
    return is_cone(cat, spec, cone) and _weak_check(cat, spec, cone)[0] is not None


def is_strict_limit(cat, spec, cone):
    return is_cone(cat, spec, cone) and _strict_check(cat, spec, cone)[0] is not None


@dataclass
class LimitResult:
    kind: str
    spec: DiagramSpec
    cone: Cone
    n_cones: int
    factor: dict = field(repr=False, default_factory=dict)

    @property
    def apex(self):
        return self.cone.apex

    @property
    def legs(self):
        return self.cone.legs

    def mediator(self, apex, legs):
        """The chosen factoring morphism for a cone ``(apex, legs)``."""
        return self.factor[apex, tuple(legs)]

    def __bool__(self):
        return True


class NotFound:
    """Falsy search outcome.

    ``failures`` maps each candidate cone to the reason it was rejected (for
    weak searches, its first uncovered cone).  ``counterexample`` is a cone
    missed by every candidate when one exists, otherwise the cone missed by
    the most candidates.
    """

    def __init__(self, kind, spec, failures, counterexample=None):
        self.kind = kind
        self.spec = spec
        self.failures = failures
        self.counterexample = counterexample

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NotFound({self.kind} {self.spec.label}, {len(self.failures)} candidates rejected)"

    def to_dict(self, cat=None):
        def show(c):
            return c.to_dict(cat) if isinstance(c, Cone) else c

        return {
            "kind": self.kind,
            "spec": self.spec.label,
            "candidates": [
                {"cone": show(cand), "rejected_by": _show_reason(reason, cat)} for cand, reason in self.failures.items()
            ],
            "counterexample": show(self.counterexample) if self.counterexample is not None else None,
        }


def _show_reason(reason, cat):
    if isinstance(reason, Cone):
        return reason.to_dict(cat)
    if isinstance(reason, dict) and isinstance(reason.get("cone"), Cone):
        return dict(reason, cone=reason["cone"].to_dict(cat))
    return reason


def _search(cat, spec, strict):
    validate_spec(cat, spec)
    total = sum(len(cones(cat, spec, a)) for a in range(cat.n_objects))
    failures = {}
    check = _strict_check if strict else _weak_check
    for apex in range(cat.n_objects):
        for legs in cones(cat, spec, apex):
            cone = Cone(apex, legs)
            factor, bad = check(cat, spec, cone)
            if factor is not None:
                return LimitResult("strict" if strict else "weak", spec, cone, total, factor)
            failures[cone] = bad
    missed = {}
    for reason in failures.values():
        c = reason if isinstance(reason, Cone) else reason.get("cone") if isinstance(reason, dict) else None
        if c is not None:
            missed[c] = missed.get(c, 0) + 1
    counter = None
    if failures and not strict:
        for c in all_cones(cat, spec):
            if not any(_covers(cat, cand, c) for cand in failures):
                counter = c
                break
    if counter is None and missed:
        counter = max(sorted(missed, key=lambda c: (c.apex, c.legs)), key=lambda c: missed[c])
    return NotFound("strict" if strict else "weak", spec, failures, counter)


def _covers(cat, cand, cone):
    return any(_restrict(cat, cand.legs, h) == cone.legs for h in cat.hom(cone.apex, cand.apex))


def search_weak_limit(cat, spec):
    """Canonical weak limit: least apex id, then lexicographically least legs."""
    return _search(cat, spec, strict=False)


def search_strict_limit(cat, spec):
    return _search(cat, spec, strict=True)


def all_weak_limits(cat, spec):
    """Every weak limit cone of ``spec``, in canonical order."""
    validate_spec(cat, spec)
    return [c for c in all_cones(cat, spec) if _weak_check(cat, spec, c)[0] is not None]


def all_strict_limits(cat, spec):
    validate_spec(cat, spec)
    return [c for c in all_cones(cat, spec) if _strict_check(cat, spec, c)[0] is not None]


def weak_terminal(cat):
    return search_weak_limit(cat, terminal_spec(cat))


def weak_product(cat, x, y):
    return search_weak_limit(cat, product_spec(cat, x, y))


def weak_inserter(cat, f, g):
    return search_weak_limit(cat, inserter_spec(cat, f, g))


def weak_comma(cat, f, g):
    return search_weak_limit(cat, comma_spec(cat, f, g))


def weak_pullback(cat, f, g):
    return search_weak_limit(cat, pullback_spec(cat, f, g))


# -- coinserters ------------------------------------------------------------


@dataclass
class CoinserterResult:
    """``q`` with ``q∘f ≤ q∘g``; ``mediators`` sends each admissible ``h`` to its unique ``u``, ``u∘q = h``."""

    pair: tuple
    q: int
    codomain: int
    mediators: dict = field(repr=False, default_factory=dict)

    def __bool__(self):
        return True


def _check_parallel(cat, f, g):
    if cat.dom[f] != cat.dom[g] or cat.cod[f] != cat.cod[g]:
        raise NotParallel(f"{cat.name(f)} and {cat.name(g)} are not parallel")


def _coinserter_from(cat, f, g, res):
    return CoinserterResult((f, g), res.legs[0], res.apex, {legs[0]: u for (_, legs), u in res.factor.items()})


def search_coinserter(cat, f, g):
    """Canonical coinserter of ``(f, g)``: the strict inserter in the dual."""
    _check_parallel(cat, f, g)
    op = dual(cat)
    res = search_strict_limit(op, inserter_spec(op, f, g))
    if not res:
        return res
    return _coinserter_from(cat, f, g, res)


def is_coinserter(cat, f, g, q):
    _check_parallel(cat, f, g)
    op = dual(cat)
    return is_strict_limit(op, inserter_spec(op, f, g), Cone(cat.cod[q], (q,)))


def all_coinserters(cat, f, g):
    _check_parallel(cat, f, g)
    op = dual(cat)
    return [c.legs[0] for c in all_strict_limits(op, inserter_spec(op, f, g))]


# -- weakly lex -------------------------------------------------------------


def check_weakly_lex(cat, stop_at_first=False):
    """Weak terminal, weak binary products, weak inserters and weak commas of identity pairs.

    With ``stop_at_first`` the report ends at the first missing instance.
    """
    rep = Report("check --weakly-lex")

    def record(name, res, law):
        witness = None if res else res.to_dict(cat)
        rep.add(name, bool(res), witness, law)
        return bool(res) or not stop_at_first

    ok = record("weak terminal", weak_terminal(cat), "weak terminal object")
    n = cat.n_objects
    for x in range(n):
        for y in range(n):
            if not ok:
                break
            name = f"weak product {cat.objects[x]}×{cat.objects[y]}"
            ok = record(name, weak_product(cat, x, y), "weak binary products")
    for f, g in list(cat.parallel_pairs()):
        if not ok:
            break
        ok = record(f"weak inserter ({cat.name(f)}, {cat.name(g)})", weak_inserter(cat, f, g), "weak inserters")
    for x in range(n):
        if not ok:
            break
        i = cat.identities[x]
        ok = record(f"weak comma (1_{cat.objects[x]}, 1_{cat.objects[x]})", weak_comma(cat, i, i),
                    "weak commas of identity pairs")
    return rep.finish()


def is_weakly_lex(cat):
    return cat.cached("weakly_lex", lambda: bool(check_weakly_lex(cat, stop_at_first=True)))
