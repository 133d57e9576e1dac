"""Exhaustive enumeration of small poset-enriched categories up to isomorphism.

Generation runs in three layers: hom-size matrices (one per orbit under
object permutations), composition tables by backtracking with incremental
associativity checks, and compatible partial orders as closed relations.
Duplicates are removed by a canonical key, the lexicographically least
encoding over all relabelings of objects and of morphisms inside each
hom-set.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from .category import FinPosCategory
from .errors import BoundsTooLarge

DEFAULT_BOUNDS = (3, 6)


def hom_shapes(n, max_morphisms):
    """n×n hom-size matrices with nonzero diagonal and total ≤ max_morphisms.

    Only the lexicographically least matrix of each orbit under simultaneous
    row/column permutation is produced.
    """
    cells = [(i, j) for i in range(n) for j in range(n)]
    perms = list(itertools.permutations(range(n)))

    def rec(k, remaining, acc):
        if k == len(cells):
            flat = tuple(acc)
            if all(_permute_shape(flat, n, p) >= flat for p in perms):
                yield flat
            return
        i, j = cells[k]
        lo = 1 if i == j else 0
        # reserve one identity per later diagonal cell
        later_diag = sum(1 for a, b in cells[k + 1:] if a == b)
        for v in range(lo, remaining - later_diag + 1):
            acc.append(v)
            yield from rec(k + 1, remaining - v, acc)
            acc.pop()

    if n == 0:
        return
    yield from rec(0, max_morphisms, [])


def _permute_shape(flat, n, p):
    return tuple(flat[p[i] * n + p[j]] for i in range(n) for j in range(n))


def _layout(n, shape):
    """Morphism ids for a shape: row-major hom-sets, identity first in each endo hom-set."""
    dom, cod, identities = [], [], [0] * n
    for i in range(n):
        for j in range(n):
            for k in range(shape[i * n + j]):
                if i == j and k == 0:
                    identities[i] = len(dom)
                dom.append(i)
                cod.append(j)
    return dom, cod, identities


def composition_tables(n, shape):
    """Yield every associative, unital composition table on the given layout."""
    dom, cod, identities = _layout(n, shape)
    m = len(dom)
    hom = defaultdict(list)
    for x in range(m):
        hom[dom[x], cod[x]].append(x)
    is_id = [False] * m
    for i in identities:
        is_id[i] = True

    comp = {}
    preimage = defaultdict(set)
    for f in range(m):
        comp[identities[cod[f]], f] = f
        preimage[f].add((identities[cod[f]], f))
        comp[f, identities[dom[f]]] = f
        preimage[f].add((f, identities[dom[f]]))

    todo = [(g, f) for f in range(m) for g in range(m) if not is_id[f] and not is_id[g] and cod[f] == dom[g]]
    for g, f in todo:
        if not hom[dom[f], cod[g]]:
            return
    out_of = [[x for x in range(m) if dom[x] == i] for i in range(n)]
    into = [[x for x in range(m) if cod[x] == i] for i in range(n)]

    def ok(g, f, x):
        # (g, f, c): g∘(f∘c) vs x∘c
        for c in into[dom[f]]:
            y = comp.get((f, c))
            if y is None:
                continue
            a = comp.get((g, y))
            b = comp.get((x, c))
            if a is not None and b is not None and a != b:
                return False
        # (a, g, f): (a∘g)∘f vs a∘x
        for a_ in out_of[cod[g]]:
            y = comp.get((a_, g))
            if y is None:
                continue
            a = comp.get((y, f))
            b = comp.get((a_, x))
            if a is not None and b is not None and a != b:
                return False
        # g∘(b∘c) with b∘c = f: compare with (g∘b)∘c
        for b_, c in preimage[f]:
            y = comp.get((g, b_))
            if y is None:
                continue
            a = comp.get((y, c))
            if a is not None and a != x:
                return False
        # (a∘b)∘f with a∘b = g: compare with a∘(b∘f)
        for a_, b_ in preimage[g]:
            y = comp.get((b_, f))
            if y is None:
                continue
            a = comp.get((a_, y))
            if a is not None and a != x:
                return False
        return True

    def rec(k):
        if k == len(todo):
            yield dict(comp)
            return
        g, f = todo[k]
        for x in hom[dom[f], cod[g]]:
            comp[g, f] = x
            preimage[x].add((g, f))
            if ok(g, f, x):
                yield from rec(k + 1)
            preimage[x].discard((g, f))
            del comp[g, f]

    yield from rec(0)


def compatible_orders(n_morphisms, dom, cod, comp):
    """All partial orders on hom-sets for which composition is monotone.

    Returned as frozensets of strict pairs.  Every such order is reached
    from the discrete one by adding generating pairs one at a time and
    closing under transitivity and whiskering on both sides.
    """
    out_of = defaultdict(list)
    into = defaultdict(list)
    for x in range(n_morphisms):
        out_of[dom[x]].append(x)
        into[cod[x]].append(x)
    candidates = [
        (a, b) for a in range(n_morphisms) for b in range(n_morphisms)
        if a != b and dom[a] == dom[b] and cod[a] == cod[b]
    ]

    def close(base, pair):
        rel = set(base)
        work = [pair]
        while work:
            a, b = work.pop()
            if a == b or (a, b) in rel:
                continue
            if (b, a) in rel:
                return None
            rel.add((a, b))
            for w in out_of[cod[a]]:
                work.append((comp[w, a], comp[w, b]))
            for w in into[dom[a]]:
                work.append((comp[a, w], comp[b, w]))
            for c, d in list(rel):
                if d == a:
                    work.append((c, b))
                if c == b:
                    work.append((a, d))
        return frozenset(rel)

    start = frozenset()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for rel in frontier:
            for p in candidates:
                if p in rel:
                    continue
                closed = close(rel, p)
                if closed is not None and closed not in seen:
                    seen.add(closed)
                    nxt.append(closed)
        frontier = nxt
    return sorted(seen, key=lambda r: (len(r), sorted(r)))


def _relabelings(cat, bound=None):
    """Yield ``(shape, objects_order, morphisms_order)`` for every relabeling
    that keeps identities first in their hom-sets.

    Object permutations whose hom-size matrix exceeds ``bound`` are skipped.
    """
    n = cat.n_objects
    for p in itertools.permutations(range(n)):
        pshape = tuple(len(cat.hom(p[i], p[j])) for i in range(n) for j in range(n))
        if bound is not None and pshape > bound:
            continue
        homs = []
        for i in range(n):
            for j in range(n):
                ms = cat.hom(p[i], p[j])
                if i == j:
                    ident = cat.identities[p[i]]
                    homs.append((ident, [x for x in ms if x != ident]))
                else:
                    homs.append((None, list(ms)))
        choices = [itertools.permutations(rest) for _, rest in homs]
        for combo in itertools.product(*choices):
            order = []
            for (ident, _), perm in zip(homs, combo):
                if ident is not None:
                    order.append(ident)
                order.extend(perm)
            yield pshape, list(p), order


def canonical_key(cat):
    """Lexicographically least encoding of ``cat`` over all relabelings.

    Returns ``(key, objects_order, morphisms_order)`` where the orders list
    old ids in their new positions.
    """
    best = None
    n = cat.n_objects
    bound = min(
        tuple(len(cat.hom(p[i], p[j])) for i in range(n) for j in range(n))
        for p in itertools.permutations(range(n))
    )
    for pshape, p, order in _relabelings(cat, bound):
        key = _encode(cat, pshape, order)
        if best is None or key < best[0]:
            best = (key, p, order)
    return best


def automorphisms(cat):
    """Relabelings ``(objects_order, morphisms_order)`` preserving shape and composition.

    The hom-order is ignored; this is the symmetry group of the underlying table.
    """
    n = cat.n_objects
    shape = tuple(len(cat.hom(i, j)) for i in range(n) for j in range(n))
    base = _encode_comp(cat, list(range(cat.n_morphisms)))
    out = []
    for pshape, p, order in _relabelings(cat, shape):
        if pshape == shape and _encode_comp(cat, order) == base:
            out.append((p, order))
    return out


def _encode_comp(cat, order):
    new = {old: i for i, old in enumerate(order)}
    return tuple(
        new[cat.compose[order[g], order[f]]]
        for f in range(len(order))
        for g in range(len(order))
        if (order[g], order[f]) in cat.compose
    )


def _encode(cat, shape, order):
    new = {old: i for i, old in enumerate(order)}
    comp = _encode_comp(cat, order)
    rel = tuple(sorted((new[a], new[b]) for a, b in cat.order_pairs()))
    return (len(shape), shape, comp, rel)


def relabel(cat, obj_order, mor_order, generic_names=True):
    """Rebuild ``cat`` with objects and morphisms in the given orders."""
    new_obj = {old: i for i, old in enumerate(obj_order)}
    new_mor = {old: i for i, old in enumerate(mor_order)}
    if generic_names:
        objects = [f"o{i}" for i in range(len(obj_order))]
    else:
        objects = [cat.objects[x] for x in obj_order]
    morphisms = []
    for i, old in enumerate(mor_order):
        d, c = new_obj[cat.dom[old]], new_obj[cat.cod[old]]
        if generic_names:
            name = f"id_{objects[d]}" if cat.is_identity(old) else f"m{i}"
        else:
            name = cat.mor_names[old]
        morphisms.append((name, d, c))
    return FinPosCategory(
        objects,
        morphisms,
        [new_mor[cat.identities[x]] for x in obj_order],
        {(new_mor[g], new_mor[f]): new_mor[h] for (g, f), h in cat.compose.items()},
        [(new_mor[a], new_mor[b]) for a, b in cat.order_pairs()],
    )


def canonical_form(cat):
    """The canonical representative of the isomorphism class of ``cat``."""
    key, objs, mors = canonical_key(cat)
    return relabel(cat, objs, mors)


def enumerate_categories(max_objects, max_morphisms, *, bounds=DEFAULT_BOUNDS):
    """Every finite Pos-category with 1..max_objects objects and at most
    max_morphisms morphisms (identities included), once per isomorphism
    class, in canonical order.

    The empty category is not produced.
    """
    if max_objects > bounds[0] or max_morphisms > bounds[1]:
        raise BoundsTooLarge(
            f"bounds ({max_objects}, {max_morphisms}) exceed the configured cap {bounds}; pass bounds= to raise it"
        )
    found = {}
    for n in range(1, max_objects + 1):
        for shape in hom_shapes(n, max_morphisms):
            dom, cod, identities = _layout(n, shape)
            objects = [f"o{i}" for i in range(n)]
            morphisms = [(f"m{i}", d, c) for i, (d, c) in enumerate(zip(dom, cod))]
            tables = {}
            for comp in composition_tables(n, shape):
                plain = FinPosCategory(objects, morphisms, identities, comp)
                key, objs, mors = canonical_key(plain)
                if key not in tables:
                    tables[key] = relabel(plain, objs, mors)
            for key, canon in tables.items():
                # canon is already least, so isomorphic orders differ by an automorphism
                auts = automorphisms(canon)
                m = canon.n_morphisms
                for rel in compatible_orders(m, canon.dom, canon.cod, canon.compose):
                    best = None
                    for objs, mors in auts:
                        new = {old: i for i, old in enumerate(mors)}
                        mapped = tuple(sorted((new[a], new[b]) for a, b in rel))
                        if best is None or mapped < best[0]:
                            best = (mapped, objs, mors)
                    full = key[:3] + (best[0],)
                    if full not in found:
                        cat = FinPosCategory(canon.objects, [(canon.mor_names[i], canon.dom[i], canon.cod[i]) for i in range(m)],
                                             canon.identities, canon.compose, rel)
                        found[full] = relabel(cat, best[1], best[2])
    for key in sorted(found):
        yield found[key]
