"""Left covering functors and their extension along the completion."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .category import find_isomorphism, full_subcategory, is_isomorphic, isomorphisms
from .completion import build_exact_completion, gamma
from .errors import CoinserterMissing, DiagramShapeInvalid, PreconditionFailed
from .functors import (
    PosFunctor,
    check_equivalence,
    check_fully_order_faithful,
    enumerate_functors,
    find_natural_iso,
    inclusion_functor,
    validate_functor,
)
from .limits import (
    Cone,
    all_weak_limits,
    inserter_spec,
    is_strict_limit,
    is_weakly_lex,
    product_spec,
    pullback_spec,
    search_coinserter,
    search_strict_limit,
    terminal_spec,
)
from .regular import (
    Check,
    Relation,
    check_projective,
    check_projective_cover,
    ff_morphisms,
    is_congruence,
    is_effective_epi,
    is_exact,
    is_regular,
    is_so,
    so_ff_factorize,
    so_morphisms,
)
from .report import Report

UNIQUENESS_GATE = 4
COVERING_KINDS = ("terminal", "product", "inserter")


def map_spec(F, spec):
    """The image of a diagram under ``F``; constraints refer to edge indices and carry over."""
    return replace(
        spec,
        vertices=tuple(F.ob(v) for v in spec.vertices),
        edges=tuple((s, t, F.mor(m)) for s, t, m in spec.edges),
    )


def map_cone(F, cone):
    return Cone(F.ob(cone.apex), tuple(F.mor(m) for m in cone.legs))


def generating_instances(cat, kinds=COVERING_KINDS):
    """``(kind, label, spec)`` for every terminal, binary product and inserter problem."""
    out = []
    n = cat.n_objects
    if "terminal" in kinds:
        out.append(("terminal", "1", terminal_spec(cat)))
    if "product" in kinds:
        for x in range(n):
            for y in range(n):
                out.append(("product", f"{cat.objects[x]}×{cat.objects[y]}", product_spec(cat, x, y)))
    if "inserter" in kinds:
        for f, g in cat.parallel_pairs():
            out.append(("inserter", f"ins({cat.name(f)},{cat.name(g)})", inserter_spec(cat, f, g)))
    return out


def check_left_covering(F):
    """Every weak limit of the generating family maps to a cone whose comparison is so."""
    c, e = F.source, F.target
    if not is_weakly_lex(c):
        raise PreconditionFailed("source is not weakly lex")
    if not is_regular(e):
        raise PreconditionFailed("target is not regular")
    rep = Report("check --left-covering")
    for kind, label, spec in generating_instances(c):
        target_spec = map_spec(F, spec)
        strict = search_strict_limit(e, target_spec)
        if not strict:
            raise PreconditionFailed(f"target lacks the strict {kind} for {label}")
        for weak in all_weak_limits(c, spec):
            image = map_cone(F, weak)
            comp = strict.mediator(image.apex, image.legs)
            ok = is_so(e, comp)
            witness = None if ok else {"instance": label, "weak_limit": weak.to_dict(c), "comparison": e.name(comp)}
            rep.add(f"{kind} {label} at {c.objects[weak.apex]}", ok, witness, "comparison is an effective epi")
    return rep.finish()


def is_left_covering(F):
    try:
        return bool(check_left_covering(F))
    except PreconditionFailed:
        return False


def image_congruence_check(F, r0, r1):
    """(so, ff)-image of ``⟨Fr0, Fr1⟩`` in ``FX × FX``; returns the image span as a Relation."""
    e = F.target
    fx = F.ob(F.source.cod[r0])
    prod = search_strict_limit(e, product_spec(e, fx, fx))
    if not prod:
        raise PreconditionFailed("target lacks the product FX×FX")
    a, b = F.mor(r0), F.mor(r1)
    pairing = prod.mediator(e.dom[a], (a, b))
    fac = so_ff_factorize(e, pairing)
    if fac is None:
        raise PreconditionFailed("pairing has no (so, ff) factorization")
    p0, p1 = prod.legs
    rel = Relation.of(e, e.compose[p0, fac.m], e.compose[p1, fac.m])
    verdict = is_congruence(e, rel.r0, rel.r1)
    return rel, verdict


@dataclass(eq=False)
class ExtensionResult:
    Fbar: PosFunctor
    per_object: tuple  # CoinserterResult per completion object
    natural_iso: tuple  # q at Γx, for each base object x
    report: Report

    def q(self, i):
        return self.per_object[i].q


def extend_functor(F, ex, check=True):
    """``F̄(X, R)`` is the coinserter of ``(Fr0, Fr1)``; ``F̄[f]`` is the induced map."""
    e = F.target
    if check:
        if not is_exact(e):
            raise PreconditionFailed("target is not exact")
        lc = check_left_covering(F)
        if not lc:
            raise PreconditionFailed("functor is not left covering", lc.failures[0].witness)
    E = ex.cat
    per = []
    for i, p in enumerate(ex.objects):
        res = search_coinserter(e, F.mor(p.r0), F.mor(p.r1))
        if not res:
            raise CoinserterMissing(f"no coinserter of (F{ex.base.name(p.r0)}, F{ex.base.name(p.r1)})", {"object": E.objects[i]})
        per.append(res)
    obj_map = tuple(r.codomain for r in per)
    mor_map = []
    for m in range(E.n_morphisms):
        i, j = E.dom[m], E.cod[m]
        images = set()
        for f in ex.homs[m].members:
            h = e.compose[per[j].q, F.mor(f)]
            u = per[i].mediators.get(h)
            if u is None:
                raise CoinserterMissing("induced map missing", {"morphism": E.name(m)})
            images.add(u)
        if len(images) != 1:
            raise CoinserterMissing("induced map depends on the representative", {"morphism": E.name(m)})
        mor_map.append(images.pop())
    Fbar = validate_functor(PosFunctor(E, e, obj_map, tuple(mor_map)))

    rep = Report("extend")
    G = gamma(ex.base, ex).functor
    comps = []
    for x in range(ex.base.n_objects):
        comps.append(per[G.ob(x)].q)
    iso_ok = all(isomorphisms(e, e.dom[q], e.cod[q]) and any(u == q for u, _ in isomorphisms(e, e.dom[q], e.cod[q])) for q in comps)
    natural = all(
        e.compose[comps[ex.base.cod[f]], F.mor(f)] == e.compose[Fbar.mor(G.mor(f)), comps[ex.base.dom[f]]]
        for f in range(ex.base.n_morphisms)
    )
    rep.add("q at Γx is invertible", iso_ok, None if iso_ok else {"components": [e.name(q) for q in comps]}, "F̄Γ ≅ F")
    rep.add("q at Γx is natural", natural, None, "F̄Γ ≅ F")
    if check:
        rep.extend(check_regular_functor(Fbar), "F̄ ")
    return ExtensionResult(Fbar, tuple(per), tuple(comps), rep.finish())


def check_regular_functor(G):
    """Preserves strict terminal, binary products, inserters and so-morphisms."""
    c, e = G.source, G.target
    rep = Report("regular functor")
    for kind, label, spec in generating_instances(c):
        lim = search_strict_limit(c, spec)
        if not lim:
            continue
        ok = is_strict_limit(e, map_spec(G, spec), map_cone(G, lim.cone))
        rep.add(f"preserves {kind} {label}", ok, None if ok else {"instance": label, "cone": lim.cone.to_dict(c)},
                f"preserves {kind}")
    for m in so_morphisms(c):
        ok = is_so(e, G.mor(m))
        rep.add(f"preserves so {c.name(m)}", ok, None if ok else {"so": c.name(m), "image": e.name(G.mor(m))}, "preserves so-morphisms")
    return rep.finish()


def is_regular_functor(G):
    return bool(check_regular_functor(G))


def check_extension_uniqueness(F, ex, gate=UNIQUENESS_GATE, extension=None):
    """Every regular ``G`` with ``GΓ ≅ F`` is isomorphic to ``F̄``.

    Returns None when the completion has more than ``gate`` objects.
    """
    if ex.cat.n_objects > gate:
        return None
    ext = extension or extend_functor(F, ex)
    G0 = gamma(ex.base, ex).functor
    rep = Report("extension uniqueness")
    found = 0
    for G in enumerate_functors(ex.cat, F.target):
        if find_natural_iso(G0.then(G), F) is None or not is_regular_functor(G):
            continue
        found += 1
        ok = find_natural_iso(G, ext.Fbar) is not None
        rep.add(f"regular extension #{found}", ok, None if ok else G.to_dict(), "extension unique up to isomorphism")
    rep.add("F̄ is among the enumerated extensions", found >= 1, None if found else {"found": 0}, "extension exists")
    return rep.finish()


# -- the lemma on inserters over effective epis ----------------------------


@dataclass(frozen=True)
class LemmaDiagram:
    """Inserter rows ``i`` of ``(f0, f1)`` and ``i'`` of ``(g0, g1)``, with ``g_k∘p = m∘f_k``."""

    f0: int
    f1: int
    g0: int
    g1: int
    p: int
    m: int
    i: int
    i2: int


def _validate_lemma(E, d):
    def bad(msg):
        raise DiagramShapeInvalid(msg, {"diagram": [E.name(v) for v in (d.f0, d.f1, d.g0, d.g1, d.p, d.m, d.i, d.i2)]})

    if E.dom[d.f0] != E.dom[d.f1] or E.cod[d.f0] != E.cod[d.f1] or E.dom[d.g0] != E.dom[d.g1] or E.cod[d.g0] != E.cod[d.g1]:
        bad("rows are not parallel pairs")
    if E.dom[d.p] != E.dom[d.f0] or E.cod[d.p] != E.dom[d.g0] or E.dom[d.m] != E.cod[d.f0] or E.cod[d.m] != E.cod[d.g0]:
        bad("verticals do not connect the rows")
    if any(E.compose[g, d.p] != E.compose[d.m, f] for f, g in ((d.f0, d.g0), (d.f1, d.g1))):
        bad("squares do not commute")
    if not is_effective_epi(E, d.p):
        bad("p is not an effective epi")
    if d.m not in ff_morphisms(E):
        bad("m is not ff")
    for i, (a, b) in ((d.i, (d.f0, d.f1)), (d.i2, (d.g0, d.g1))):
        if not is_strict_limit(E, inserter_spec(E, a, b), Cone(E.dom[i], (i,))):
            bad("rows are not inserters")


def useful_lemma_check(E, d):
    """The induced ``q`` between inserters is an effective epi and ``(i, q)`` is a pullback of ``(p, i')``."""
    _validate_lemma(E, d)
    res = search_strict_limit(E, inserter_spec(E, d.g0, d.g1))
    target = E.compose[d.p, d.i]
    q = next((u for u in E.hom(E.dom[d.i], E.dom[d.i2]) if E.compose[d.i2, u] == target), None)
    if q is None or not res:
        return Check(False, {"reason": "no induced q"})
    if not is_effective_epi(E, q):
        return Check(False, {"reason": "q is not an effective epi", "q": E.name(q)})
    if not is_strict_limit(E, pullback_spec(E, d.p, d.i2), Cone(E.dom[d.i], (d.i, q))):
        return Check(False, {"reason": "square is not a pullback", "q": E.name(q)})
    return Check(True, {"q": q})


def lemma_diagrams(E):
    inserters = {}
    for f0, f1 in E.parallel_pairs():
        res = search_strict_limit(E, inserter_spec(E, f0, f1))
        if res:
            inserters[f0, f1] = res.legs[0]
    effective = [p for p in range(E.n_morphisms) if is_effective_epi(E, p)]
    ffs = ff_morphisms(E)
    for (f0, f1), i in inserters.items():
        x, y = E.dom[f0], E.cod[f0]
        for p in effective:
            if E.dom[p] != x:
                continue
            for m in ffs:
                if E.dom[m] != y:
                    continue
                for (g0, g1), i2 in inserters.items():
                    if E.dom[g0] != E.cod[p] or E.cod[g0] != E.cod[m]:
                        continue
                    if E.compose[g0, p] == E.compose[m, f0] and E.compose[g1, p] == E.compose[m, f1]:
                        yield LemmaDiagram(f0, f1, g0, g1, p, m, i, i2)


def scan_lemma_diagrams(E):
    rep = Report("inserters over effective epis")
    for d in lemma_diagrams(E):
        res = useful_lemma_check(E, d)
        rep.add(f"({E.name(d.f0)},{E.name(d.f1)}) over {E.name(d.p)}", res, None if res else res.witness,
                "induced map of inserters is an effective epi")
    return rep.finish()


# -- projective covers -------------------------------------------------------


def check_projective_cover_theorem(E, cover):
    """``P_ex ≃ E`` for ``P`` the full subcategory on a projective cover."""
    if not is_exact(E):
        raise PreconditionFailed("category is not exact")
    pc = check_projective_cover(E, cover)
    if not pc:
        raise PreconditionFailed("not a projective cover", pc.witness)
    rep = Report("projective cover theorem")
    P = full_subcategory(E, sorted(set(cover)))
    wl = is_weakly_lex(P)
    rep.add("cover is weakly lex", wl, None, "projective cover has weak finite limits")
    if not wl:
        return rep.finish()
    ex = build_exact_completion(P)
    J = inclusion_functor(P)
    ext = extend_functor(J, ex)
    rep.extend(ext.report)
    eq = check_equivalence(ext.Fbar)
    rep.add("extension of the inclusion is an equivalence", eq, None if eq else eq.witness, "P_ex ≃ E")
    return rep.finish()


def skeleton(cat):
    """Full subcategory on the least object of each isomorphism class."""
    reps = []
    for x in range(cat.n_objects):
        if not any(isomorphisms(cat, r, x) for r in reps):
            reps.append(x)
    return full_subcategory(cat, reps)


def check_corollary(E, cover_e, F, cover_f):
    """Exact categories with isomorphic projective covers are equivalent."""
    rep = Report("exact categories with isomorphic covers")
    P, Q = full_subcategory(E, sorted(set(cover_e))), full_subcategory(F, sorted(set(cover_f)))
    if not is_isomorphic(P, Q):
        raise PreconditionFailed("covers are not isomorphic")
    for name, cat, cov in (("E", E, cover_e), ("F", F, cover_f)):
        rep.extend(check_projective_cover_theorem(cat, cov), f"{name}: ")
    pex, qex = build_exact_completion(P), build_exact_completion(Q)
    same = find_isomorphism(pex.cat, qex.cat) is not None
    rep.add("completions of the covers are isomorphic", same, None, "isomorphic covers give isomorphic completions")
    eqv = is_isomorphic(skeleton(E), skeleton(F))
    rep.add("skeleta are isomorphic", eqv, None, "E ≃ F")
    return rep.finish()


def check_fof_extension(F, ex):
    """For ``F`` fully order-faithful with projective values, ``F̄`` is fully order-faithful."""
    rep = Report("fully order-faithful extension")
    fof = check_fully_order_faithful(F)
    proj = all(check_projective(F.target, F.ob(x)) for x in range(F.source.n_objects))
    if not (fof and proj):
        # vacuous: nothing to check
        return rep.finish()
    ext = extend_functor(F, ex)
    res = check_fully_order_faithful(ext.Fbar)
    rep.add("F̄ fully order-faithful", res, None if res else res.witness, "F̄ is fully order-faithful")
    return rep.finish()


def image_congruence_sweep(F):
    """Image congruences of every pseudocongruence of the source."""
    from .completion import enumerate_pseudocongruences

    rep = Report("image congruences")
    for pc in enumerate_pseudocongruences(F.source):
        rel, verdict = image_congruence_check(F, pc.r0, pc.r1)
        rep.add(f"image of ({F.source.name(pc.r0)},{F.source.name(pc.r1)})", verdict, None if verdict else verdict.witness,
                "image is a congruence")
    return rep.finish()

