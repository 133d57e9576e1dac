"""Locally monotone functors between finite Pos-categories."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .category import isomorphisms
from .errors import NotAFunctor
from .regular import Check


@dataclass(frozen=True, eq=False)
class PosFunctor:
    source: object
    target: object
    obj_map: tuple
    mor_map: tuple

    def ob(self, x):
        return self.obj_map[x]

    def mor(self, f):
        return self.mor_map[f]

    def then(self, other):
        """``other ∘ self``."""
        return PosFunctor(
            self.source,
            other.target,
            tuple(other.obj_map[y] for y in self.obj_map),
            tuple(other.mor_map[g] for g in self.mor_map),
        )

    def to_dict(self):
        s, t = self.source, self.target
        return {
            "objMap": {s.objects[x]: t.objects[y] for x, y in enumerate(self.obj_map)},
            "morMap": {s.name(f): t.name(g) for f, g in enumerate(self.mor_map)},
        }


def identity_functor(cat):
    return PosFunctor(cat, cat, tuple(range(cat.n_objects)), tuple(range(cat.n_morphisms)))


def inclusion_functor(sub):
    """The embedding of a full subcategory built by ``full_subcategory``."""
    objs, mors = sub._cache["embedding"]
    parent = sub._cache["parent"]
    return PosFunctor(sub, parent, tuple(objs), tuple(mors))


def validate_functor(F):
    """Check the four functor laws; return ``F`` or raise :class:`NotAFunctor`."""
    c, d = F.source, F.target
    if len(F.obj_map) != c.n_objects or len(F.mor_map) != c.n_morphisms:
        raise NotAFunctor("maps are total on the source", {"objects": len(F.obj_map), "morphisms": len(F.mor_map)})
    for x, y in enumerate(F.obj_map):
        if not (0 <= y < d.n_objects):
            raise NotAFunctor("object map lands in the target", {"object": c.objects[x]})
    for f, g in enumerate(F.mor_map):
        if not (0 <= g < d.n_morphisms):
            raise NotAFunctor("morphism map lands in the target", {"morphism": c.name(f)})
        if d.dom[g] != F.obj_map[c.dom[f]] or d.cod[g] != F.obj_map[c.cod[f]]:
            raise NotAFunctor("preserves domain and codomain", {"morphism": c.name(f), "image": d.name(g)})
    for x in range(c.n_objects):
        if F.mor_map[c.identities[x]] != d.identities[F.obj_map[x]]:
            raise NotAFunctor("preserves identities", {"object": c.objects[x]})
    for (g, f), h in c.compose.items():
        if d.compose[F.mor_map[g], F.mor_map[f]] != F.mor_map[h]:
            raise NotAFunctor("preserves composition", {"g": c.name(g), "f": c.name(f)})
    for a, b in c.order_pairs():
        if not d.le(F.mor_map[a], F.mor_map[b]):
            raise NotAFunctor("locally monotone", {"le": [c.name(a), c.name(b)]})
    return F


def functor_from_maps(source, target, obj_map, mor_map):
    """Build and validate a functor from name- or id-keyed maps."""

    def oid(cat, v):
        return v if isinstance(v, int) else cat.object_id(v)

    def mid(cat, v):
        return v if isinstance(v, int) else cat.morphism_id(v)

    om = [None] * source.n_objects
    for k, v in obj_map.items():
        om[oid(source, k)] = oid(target, v)
    mm = [None] * source.n_morphisms
    for k, v in mor_map.items():
        mm[mid(source, k)] = mid(target, v)
    # identities may be left implicit
    for x in range(source.n_objects):
        i = source.identities[x]
        if mm[i] is None and om[x] is not None:
            mm[i] = target.identities[om[x]]
    if None in om or None in mm:
        raise NotAFunctor("maps are total on the source", {"missing_objects": [source.objects[x] for x, v in enumerate(om) if v is None],
                                                           "missing_morphisms": [source.name(f) for f, v in enumerate(mm) if v is None]})
    return validate_functor(PosFunctor(source, target, tuple(om), tuple(mm)))


def check_fully_order_faithful(F):
    """Every hom map is a bijection that preserves and reflects the order."""
    c, d = F.source, F.target
    for x in range(c.n_objects):
        for y in range(c.n_objects):
            src = c.hom(x, y)
            tgt = d.hom(F.obj_map[x], F.obj_map[y])
            image = [F.mor_map[f] for f in src]
            where = {"hom": [c.objects[x], c.objects[y]]}
            if len(set(image)) != len(image):
                return Check(False, {**where, "reason": "not injective"})
            if set(image) != set(tgt):
                missing = [d.name(g) for g in tgt if g not in set(image)]
                return Check(False, {**where, "reason": "not surjective", "missing": missing})
            for f in src:
                for g in src:
                    if c.le(f, g) != d.le(F.mor_map[f], F.mor_map[g]):
                        return Check(False, {**where, "reason": "order not reflected", "pair": [c.name(f), c.name(g)]})
    return Check(True)


def check_essentially_surjective(F):
    d = F.target
    image = sorted(set(F.obj_map))
    witness = {}
    for y in range(d.n_objects):
        hit = next(((x, isomorphisms(d, x, y)[0][0]) for x in image if isomorphisms(d, x, y)), None)
        if hit is None:
            return Check(False, {"object": d.objects[y]})
        witness[y] = hit
    return Check(True, witness)


def check_equivalence(F):
    """Fully order-faithful and essentially surjective."""
    fof = check_fully_order_faithful(F)
    if not fof:
        return Check(False, {"fully_order_faithful": fof.witness})
    es = check_essentially_surjective(F)
    if not es:
        return Check(False, {"essentially_surjective": es.witness})
    return Check(True)


def find_natural_iso(F, G):
    """Components ``α_x: Fx → Gx`` of a natural isomorphism, or None."""
    c, d = F.source, F.target
    n = c.n_objects
    choices = [[f for f, _ in isomorphisms(d, F.obj_map[x], G.obj_map[x])] for x in range(n)]
    alpha = [None] * n
    morphs = list(range(c.n_morphisms))

    def natural_so_far(x):
        for f in morphs:
            a, b = c.dom[f], c.cod[f]
            if max(a, b) != x:
                continue
            if d.compose[alpha[b], F.mor_map[f]] != d.compose[G.mor_map[f], alpha[a]]:
                return False
        return True

    def rec(x):
        if x == n:
            return True
        for a in choices[x]:
            alpha[x] = a
            if natural_so_far(x) and rec(x + 1):
                return True
        alpha[x] = None
        return False

    return tuple(alpha) if rec(0) else None


def enumerate_functors(source, target):
    """Every locally monotone functor ``source → target``, in lexicographic order of maps."""
    c, d = source, target
    non_id = [f for f in range(c.n_morphisms) if not c.is_identity(f)]
    for om in itertools.product(range(d.n_objects), repeat=c.n_objects):
        mm = [None] * c.n_morphisms
        for x in range(c.n_objects):
            mm[c.identities[x]] = d.identities[om[x]]

        def consistent(f):
            for (g, h), k in c.compose.items():
                if f not in (g, h, k):
                    continue
                if mm[g] is None or mm[h] is None or mm[k] is None:
                    continue
                if d.compose[mm[g], mm[h]] != mm[k]:
                    return False
            for a in (f,):
                for b in c.above[a]:
                    if mm[b] is not None and not d.le(mm[a], mm[b]):
                        return False
                for b in c.hom(c.dom[a], c.cod[a]):
                    if a in c.above[b] and mm[b] is not None and not d.le(mm[b], mm[a]):
                        return False
            return True

        def rec(k):
            if k == len(non_id):
                yield PosFunctor(c, d, tuple(om), tuple(mm))
                return
            f = non_id[k]
            for g in d.hom(om[c.dom[f]], om[c.cod[f]]):
                mm[f] = g
                if consistent(f):
                    yield from rec(k + 1)
            mm[f] = None

        yield from rec(0)
