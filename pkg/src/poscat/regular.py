"""Order-monos, so-morphisms, factorizations, congruences, regularity and exactness.

Every property is decided by quantifying over generalized elements, that is
over all test objects ``A`` and all morphisms out of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .category import full_subcategory
from .errors import DefinitionMismatch, NotACover, NotARelation, PreconditionFailed
from .limits import (
    all_strict_limits,
    comma_spec,
    inserter_spec,
    is_coinserter,
    product_spec,
    pullback_spec,
    search_strict_limit,
    search_weak_limit,
    terminal_spec,
)
from .report import Report


class Check(NamedTuple):
    ok: bool
    witness: object = None

    def __bool__(self):
        return bool(self.ok)


# -- ff and so --------------------------------------------------------------


def check_ff(cat, m):
    """``m∘-`` reflects the order: ``m∘u ≤ m∘v`` implies ``u ≤ v``."""
    x = cat.dom[m]
    for z in range(cat.n_objects):
        hs = cat.hom(z, x)
        for u in hs:
            for v in hs:
                if u != v and not cat.le(u, v) and cat.le(cat.compose[m, u], cat.compose[m, v]):
                    return Check(False, {"u": u, "v": v})
    return Check(True)


def ff_morphisms(cat):
    return cat.cached("ff", lambda: tuple(m for m in range(cat.n_morphisms) if check_ff(cat, m)))


def _so_square(cat, e, m):
    """Is the square of hom-posets for ``e: A → B`` against ``m: X → Y`` a pullback in Pos?"""
    a, b = cat.dom[e], cat.cod[e]
    x, y = cat.dom[m], cat.cod[m]
    hs = cat.hom(b, x)
    image = {}
    for h in hs:
        key = (cat.compose[h, e], cat.compose[m, h])
        if key in image:
            return {"ff": m, "reason": "mediator not unique", "pair": list(key), "mediators": [image[key], h]}
        image[key] = h
    for g in cat.hom(b, y):
        ge = cat.compose[g, e]
        for f in cat.hom(a, x):
            if cat.compose[m, f] == ge and (f, g) not in image:
                return {"ff": m, "reason": "no mediator", "pair": [f, g]}
    for h in hs:
        for k in hs:
            if h != k and not cat.le(h, k):
                if cat.le(cat.compose[h, e], cat.compose[k, e]) and cat.le(cat.compose[m, h], cat.compose[m, k]):
                    return {"ff": m, "reason": "order not reflected", "mediators": [h, k]}
    return None


def check_so(cat, e):
    """``e`` is left orthogonal, in the enriched sense, to every order-mono."""
    for m in ff_morphisms(cat):
        bad = _so_square(cat, e, m)
        if bad is not None:
            return Check(False, bad)
    return Check(True)


def so_morphisms(cat):
    return cat.cached("so", lambda: tuple(e for e in range(cat.n_morphisms) if check_so(cat, e)))


def is_so(cat, e):
    return e in so_morphisms(cat)


def is_ff(cat, m):
    return m in ff_morphisms(cat)


@dataclass(frozen=True)
class Factorization:
    e: int
    m: int
    middle: int


def all_factorizations(cat, f):
    """Every (so, ff) factorization of ``f``, middles in id order."""
    a, b = cat.dom[f], cat.cod[f]
    so, ff = set(so_morphisms(cat)), set(ff_morphisms(cat))
    out = []
    for mid in range(cat.n_objects):
        for e in cat.hom(a, mid):
            if e not in so:
                continue
            for m in cat.hom(mid, b):
                if m in ff and cat.compose[m, e] == f:
                    out.append(Factorization(e, m, mid))
    return out


def so_ff_factorize(cat, f):
    """Canonical (so, ff) factorization, or None."""
    fs = all_factorizations(cat, f)
    return fs[0] if fs else None


# -- relations and congruences ------------------------------------------------


def factors_through(cat, r0, r1, a0, a1):
    """Some ``u`` with ``r0∘u = a0`` and ``r1∘u = a1``, or None."""
    for u in cat.hom(cat.dom[a0], cat.dom[r0]):
        if cat.compose[r0, u] == a0 and cat.compose[r1, u] == a1:
            return u
    return None


def _members(cat, r0, r1, a):
    key = ("members", r0, r1, a)
    return cat.cached(key, lambda: frozenset((cat.compose[r0, u], cat.compose[r1, u]) for u in cat.hom(a, cat.dom[r0])))


def jointly_order_monic(cat, r0, r1):
    rr = cat.dom[r0]
    for a in range(cat.n_objects):
        hs = cat.hom(a, rr)
        for u in hs:
            for v in hs:
                if u != v and not cat.le(u, v):
                    if cat.le(cat.compose[r0, u], cat.compose[r0, v]) and cat.le(cat.compose[r1, u], cat.compose[r1, v]):
                        return Check(False, {"u": u, "v": v})
    return Check(True)


def reflexive(cat, r0, r1):
    i = cat.identities[cat.cod[r0]]
    d = factors_through(cat, r0, r1, i, i)
    return Check(d is not None, {"diagonal": d} if d is not None else None)


def order_reflexive(cat, r0, r1):
    x = cat.cod[r0]
    for a in range(cat.n_objects):
        mem = _members(cat, r0, r1, a)
        for a0 in cat.hom(a, x):
            for a1 in cat.above[a0]:
                if (a0, a1) not in mem:
                    return Check(False, {"a0": a0, "a1": a1})
    return Check(True)


def transitive(cat, r0, r1):
    """For ``u, v: A → R`` with ``r1∘u = r0∘v`` the pair ``(r0∘u, r1∘v)`` is in the relation."""
    rr = cat.dom[r0]
    for a in range(cat.n_objects):
        mem = _members(cat, r0, r1, a)
        hs = cat.hom(a, rr)
        for u in hs:
            for v in hs:
                if cat.compose[r1, u] == cat.compose[r0, v]:
                    if (cat.compose[r0, u], cat.compose[r1, v]) not in mem:
                        return Check(False, {"u": u, "v": v})
    return Check(True)


def order_ideal(cat, r0, r1):
    for a in range(cat.n_objects):
        mem = _members(cat, r0, r1, a)
        for x, y in mem:
            for xx in cat.hom(a, cat.cod[r0]):
                if not cat.le(xx, x):
                    continue
                for yy in cat.above[y]:
                    if (xx, yy) not in mem:
                        return Check(False, {"pair": [x, y], "weakened": [xx, yy]})
    return Check(True)


@dataclass
class Relation:
    R: int
    r0: int
    r1: int
    X: int
    flags: dict = field(default_factory=dict, repr=False)

    @classmethod
    def of(cls, cat, r0, r1):
        if cat.dom[r0] != cat.dom[r1] or cat.cod[r0] != cat.cod[r1]:
            raise NotARelation("span legs are not parallel")
        rel = cls(cat.dom[r0], r0, r1, cat.cod[r0])
        rel.flags = {
            "jointly_order_monic": jointly_order_monic(cat, r0, r1),
            "reflexive": reflexive(cat, r0, r1),
            "order_reflexive": order_reflexive(cat, r0, r1),
            "transitive": transitive(cat, r0, r1),
            "order_ideal": order_ideal(cat, r0, r1),
        }
        return rel

    @property
    def span(self):
        return self.r0, self.r1


def kernel_congruence(cat, f):
    """The strict comma ``f/f`` as a :class:`Relation`, or the NotFound from the search."""
    res = search_strict_limit(cat, comma_spec(cat, f, f))
    if not res:
        return res
    return Relation.of(cat, *res.legs)


def is_congruence(cat, r0, r1):
    """Evaluate both characterizations and return their common verdict.

    The trace names the first failing condition of each route.
    """
    jom = jointly_order_monic(cat, r0, r1)
    if not jom:
        raise NotARelation("span is not jointly order-monic", jom.witness)
    t = transitive(cat, r0, r1)
    route_a = [("reflexive", reflexive(cat, r0, r1)), ("transitive", t), ("order_ideal", order_ideal(cat, r0, r1))]
    route_b = [("transitive", t), ("order_reflexive", order_reflexive(cat, r0, r1))]
    va, vb = all(c for _, c in route_a), all(c for _, c in route_b)
    trace = {
        "reflexive+transitive+order_ideal": next((n for n, c in route_a if not c), None),
        "transitive+order_reflexive": next((n for n, c in route_b if not c), None),
    }
    if va != vb:
        raise DefinitionMismatch("congruence characterizations disagree", {"span": [r0, r1], "trace": trace})
    return Check(va, trace)


def same_subobject(cat, span_a, span_b):
    """Mutual factorization of two spans with a common codomain pair."""
    a0, a1 = span_a
    b0, b1 = span_b
    return factors_through(cat, b0, b1, a0, a1) is not None and factors_through(cat, a0, a1, b0, b1) is not None


def is_effective_congruence(cat, r0, r1):
    """Some ``q`` out of ``X`` whose kernel congruence is the span, up to mutual factorization."""
    x = cat.cod[r0]
    for q in cat.out_of[x]:
        ker = search_strict_limit(cat, comma_spec(cat, q, q))
        if ker and same_subobject(cat, ker.legs, (r0, r1)):
            return Check(True, {"q": q})
    return Check(False, {"span": [r0, r1]})


def congruences(cat):
    """All congruence spans ``(r0, r1)`` in id order."""

    def compute():
        out = []
        for r0, r1 in cat.parallel_pairs():
            if jointly_order_monic(cat, r0, r1) and is_congruence(cat, r0, r1):
                out.append((r0, r1))
        return tuple(out)

    return cat.cached("congruences", compute)


def is_effective_epi(cat, e):
    """``e`` is the coinserter of some parallel pair into its domain."""
    a = cat.dom[e]
    for z in range(cat.n_objects):
        hs = cat.hom(z, a)
        for f in hs:
            for g in hs:
                if is_coinserter(cat, f, g, e):
                    return Check(True, {"pair": [f, g]})
    return Check(False)


# -- regular and exact ------------------------------------------------------


def _strict_family(cat, rep, stop):
    kinds = [("terminal", [((), terminal_spec(cat))])]
    n = cat.n_objects
    kinds.append(("product", [((cat.objects[x], cat.objects[y]), product_spec(cat, x, y))
                              for x in range(n) for y in range(n)]))
    kinds.append(("inserter", [((cat.name(f), cat.name(g)), inserter_spec(cat, f, g))
                               for f, g in cat.parallel_pairs()]))
    cosp = list(cat.cospans())
    kinds.append(("comma", [((cat.name(f), cat.name(g)), comma_spec(cat, f, g)) for f, g in cosp]))
    kinds.append(("pullback", [((cat.name(f), cat.name(g)), pullback_spec(cat, f, g)) for f, g in cosp]))
    ok = True
    for kind, instances in kinds:
        for args, spec in instances:
            res = search_strict_limit(cat, spec)
            name = f"strict {kind}" + (f" ({', '.join(args)})" if args else "")
            ok = rep.add(name, bool(res), None if res else res.to_dict(cat), f"finite limits: {kind}") and ok
            if stop and not ok:
                return False
    return ok


def check_regular(cat, stop_at_first=False):
    """Strict finite limits, (so, ff) factorizations, and pullback-stable so-morphisms."""
    rep = Report("check --regular")
    ok = _strict_family(cat, rep, stop_at_first)
    if stop_at_first and not ok:
        return rep.finish()
    for f in range(cat.n_morphisms):
        fac = so_ff_factorize(cat, f)
        witness = None if fac else {"morphism": cat.name(f)}
        rep.add(f"factorization of {cat.name(f)}", fac is not None, witness, "(so, ff) factorizations")
        if stop_at_first and fac is None:
            return rep.finish()
    for e in so_morphisms(cat):
        for g in cat.into[cat.cod[e]]:
            for cone in all_strict_limits(cat, pullback_spec(cat, e, g)):
                pulled = cone.legs[1]
                good = is_so(cat, pulled)
                if not good or not stop_at_first:
                    rep.add(
                        f"so stable: {cat.name(e)} along {cat.name(g)}",
                        good,
                        None if good else {"so": cat.name(e), "along": cat.name(g), "pulled_back": cat.name(pulled),
                                           "apex": cat.objects[cone.apex]},
                        "so-morphisms stable under pullback",
                    )
                if stop_at_first and not good:
                    return rep.finish()
    return rep.finish()


def is_regular(cat):
    return cat.cached("regular", lambda: bool(check_regular(cat, stop_at_first=True)))


def check_exact(cat, stop_at_first=False):
    rep = Report("check --exact")
    reg = check_regular(cat, stop_at_first)
    rep.extend(reg)
    if stop_at_first and not reg:
        return rep.finish()
    for r0, r1 in congruences(cat):
        eff = is_effective_congruence(cat, r0, r1)
        rep.add(
            f"congruence ({cat.name(r0)}, {cat.name(r1)}) effective",
            eff.ok,
            None if eff else {"span": [cat.name(r0), cat.name(r1)]},
            "every congruence is effective",
        )
        if stop_at_first and not eff:
            break
    return rep.finish()


def is_exact(cat):
    return cat.cached("exact", lambda: bool(check_exact(cat, stop_at_first=True)))


# -- projectives ------------------------------------------------------------


def check_projective(cat, p):
    """Every ``f: P → B`` lifts along every so ``e: A ↠ B``."""
    for e in so_morphisms(cat):
        a, b = cat.dom[e], cat.cod[e]
        for f in cat.hom(p, b):
            if not any(cat.compose[e, u] == f for u in cat.hom(p, a)):
                return Check(False, {"so": e, "map": f})
    return Check(True)


def check_projective_cover(cat, objs):
    """All of ``objs`` projective, and each object receives an so-morphism from one of them.

    The witness maps every object to its chosen covering so-morphism.
    """
    objs = sorted(set(objs))
    for p in objs:
        pr = check_projective(cat, p)
        if not pr:
            return Check(False, {"not_projective": p, **pr.witness})
    so = set(so_morphisms(cat))
    cover = {}
    for c in range(cat.n_objects):
        hit = next((e for p in objs for e in cat.hom(p, c) if e in so), None)
        if hit is None:
            return Check(False, {"uncovered": c})
        cover[c] = hit
    return Check(True, cover)


LIMIT_KINDS = ("terminal", "product", "inserter", "comma", "pullback")


def limit_instances(cat, kind):
    """``(label, spec)`` for every instance of a limit kind in ``cat``."""
    n = cat.n_objects
    if kind == "terminal":
        return [("terminal", terminal_spec(cat))]
    if kind == "product":
        return [(f"{cat.objects[x]}×{cat.objects[y]}", product_spec(cat, x, y)) for x in range(n) for y in range(n)]
    if kind == "inserter":
        return [(f"ins({cat.name(f)},{cat.name(g)})", inserter_spec(cat, f, g)) for f, g in cat.parallel_pairs()]
    if kind == "comma":
        return [(f"{cat.name(f)}/{cat.name(g)}", comma_spec(cat, f, g)) for f, g in cat.cospans()]
    if kind == "pullback":
        return [(f"pb({cat.name(f)},{cat.name(g)})", pullback_spec(cat, f, g)) for f, g in cat.cospans()]
    raise ValueError(f"unknown limit kind {kind!r}")


def check_weak_limits_in_cover(cat, objs, kind):
    """The full subcategory on a projective cover has weak limits of ``kind``.

    Needs ``cat`` to have the corresponding strict limits.
    """
    if not check_projective_cover(cat, objs):
        raise NotACover(f"{sorted(objs)} is not a projective cover")
    for label, spec in limit_instances(cat, kind):
        if not search_strict_limit(cat, spec):
            raise PreconditionFailed(f"missing strict {kind} {label}")
    sub = full_subcategory(cat, objs)
    for label, spec in limit_instances(sub, kind):
        res = search_weak_limit(sub, spec)
        if not res:
            return Check(False, {"instance": label, **res.to_dict(sub)})
    return Check(True)
