"""Finite poset-enriched categories given by full tables.

Objects and morphisms are dense integer ids.  ``compose[(g, f)]`` is ``g∘f``
(``f`` applied first).  The hom-order is kept as its reflexive-transitive
closure, ``above[m]`` being the set of morphisms ``≥ m``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from .errors import (
    ComposeTypeError,
    CompositionNotMonotone,
    IdentityLaw,
    MalformedInput,
    MissingComposite,
    NonAssociative,
    OrderNotPartial,
    UnknownObject,
)


class FinPosCategory:
    """A finite category whose hom-sets are finite posets.

    The constructor trusts its input apart from closing the order
    reflexively and transitively; run :func:`validate_category` on anything
    that did not come out of this package.
    """

    def __init__(self, objects, morphisms, identities, compose, order=()):
        self.objects = tuple(objects)
        self.mor_names = tuple(name for name, _, _ in morphisms)
        self.dom = tuple(d for _, d, _ in morphisms)
        self.cod = tuple(c for _, _, c in morphisms)
        self.identities = tuple(identities)
        self.compose = dict(compose)
        self.above = _close_order(len(self.mor_names), order)
        self._cache = {}

        hom = defaultdict(list)
        out_of = [[] for _ in self.objects]
        into = [[] for _ in self.objects]
        for m, (d, c) in enumerate(zip(self.dom, self.cod)):
            hom[d, c].append(m)
            out_of[d].append(m)
            into[c].append(m)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self.out_of = tuple(map(tuple, out_of))
        self.into = tuple(map(tuple, into))

    # -- basic queries ---------------------------------------------------

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_morphisms(self):
        return len(self.mor_names)

    def hom(self, x, y):
        return self._hom.get((x, y), ())

    def comp(self, g, f):
        return self.compose[g, f]

    def le(self, a, b):
        return b in self.above[a]

    def is_identity(self, m):
        return self.identities[self.dom[m]] == m

    def parallel_pairs(self):
        """All ordered pairs of parallel morphisms, in id order."""
        for (x, y), ms in sorted(self._hom.items()):
            for f in ms:
                for g in ms:
                    yield f, g

    def cospans(self):
        """All pairs ``(f, g)`` with a common codomain."""
        for z in range(self.n_objects):
            for f in self.into[z]:
                for g in self.into[z]:
                    yield f, g

    def order_pairs(self, strict=True):
        for a in range(self.n_morphisms):
            for b in sorted(self.above[a]):
                if not strict or a != b:
                    yield a, b

    def object_id(self, name):
        try:
            return self.objects.index(name)
        except ValueError:
            raise UnknownObject(f"unknown object {name!r}") from None

    def morphism_id(self, name):
        try:
            return self.mor_names.index(name)
        except ValueError:
            raise MalformedInput(f"unknown morphism {name!r}") from None

    def name(self, m):
        return self.mor_names[m]

    def cached(self, key, compute):
        """Memoize derived data on this (immutable) category."""
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    def tables(self):
        """Everything that determines the category, names included."""
        return (
            self.objects,
            self.mor_names,
            self.dom,
            self.cod,
            self.identities,
            tuple(sorted(self.compose.items())),
            tuple(self.order_pairs(strict=True)),
        )

    def __eq__(self, other):
        if not isinstance(other, FinPosCategory):
            return NotImplemented
        return self.tables() == other.tables()

    def __hash__(self):
        return hash(self.tables())

    def __repr__(self):
        return f"<FinPosCategory {self.n_objects} objects, {self.n_morphisms} morphisms>"


def _close_order(n, pairs):
    above = [{m} for m in range(n)]
    for a, b in pairs:
        above[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in range(n):
            new = set()
            for b in above[a]:
                new |= above[b]
            if not new <= above[a]:
                above[a] |= new
                changed = True
    return tuple(frozenset(s) for s in above)


# -- validation -------------------------------------------------------------


def validate_category(raw):
    """Check every category law and return the category.

    ``raw`` is a :class:`FinPosCategory` or a dict in the JSON category
    format.  Raises the subclass of :class:`ValidationError` for the first
    violated law, with a witness tuple of morphism ids.
    """
    cat = raw if isinstance(raw, FinPosCategory) else category_from_dict(raw, validate=False)
    dom, cod, comp = cat.dom, cat.cod, cat.compose
    n = cat.n_morphisms

    for x, i in enumerate(cat.identities):
        if not (0 <= i < n) or dom[i] != x or cod[i] != x:
            raise IdentityLaw(f"identity of object {x} is not an endomorphism of it", (x, i))

    for (g, f), h in comp.items():
        if cod[f] != dom[g]:
            raise ComposeTypeError(f"composite given for non-composable pair {(g, f)}", (g, f, h))
        if dom[h] != dom[f] or cod[h] != cod[g]:
            raise ComposeTypeError(f"composite {h} of {(g, f)} has the wrong type", (g, f, h))
    for f in range(n):
        for g in cat.out_of[cod[f]]:
            if (g, f) not in comp:
                raise MissingComposite(f"no composite for ({g}, {f})", (g, f))

    for f in range(n):
        if comp[cat.identities[cod[f]], f] != f or comp[f, cat.identities[dom[f]]] != f:
            raise IdentityLaw(f"identity law fails at {f}", (f,))

    for f in range(n):
        for g in cat.out_of[cod[f]]:
            gf = comp[g, f]
            for h in cat.out_of[cod[g]]:
                if comp[h, gf] != comp[comp[h, g], f]:
                    raise NonAssociative(f"h∘(g∘f) ≠ (h∘g)∘f for {(h, g, f)}", (h, g, f))

    for a in range(n):
        for b in cat.above[a]:
            if dom[a] != dom[b] or cod[a] != cod[b]:
                raise OrderNotPartial(f"order relates non-parallel {a} ≤ {b}", (a, b))
            if a != b and cat.le(b, a):
                raise OrderNotPartial(f"order is not antisymmetric: {a} ≤ {b} ≤ {a}", (a, b))

    for u, v in cat.order_pairs():
        for w in cat.out_of[cod[u]]:
            if not cat.le(comp[w, u], comp[w, v]):
                raise CompositionNotMonotone(f"{u} ≤ {v} but not w∘{u} ≤ w∘{v} for w={w}", (u, v, w))
        for w in cat.into[dom[u]]:
            if not cat.le(comp[u, w], comp[v, w]):
                raise CompositionNotMonotone(f"{u} ≤ {v} but not {u}∘w ≤ {v}∘w for w={w}", (u, v, w))
    return cat


# -- JSON category format ---------------------------------------------------

_CATEGORY_KEYS = {"objects", "morphisms", "identities", "compose", "order"}


def category_from_dict(data, validate=True):
    """Parse the JSON category format.

    Identities missing from ``identities`` are synthesized as ``id_<obj>``;
    composites with an identity may be omitted.
    """
    if not isinstance(data, dict):
        raise MalformedInput("category must be a JSON object")
    unknown = set(data) - _CATEGORY_KEYS
    if unknown:
        raise MalformedInput(f"unknown keys: {sorted(unknown)}")
    if "objects" not in data:
        raise MalformedInput("missing key 'objects'")
    objects = list(data["objects"])
    if len(set(objects)) != len(objects) or not all(isinstance(o, str) for o in objects):
        raise MalformedInput("objects must be distinct strings")
    obj_index = {o: i for i, o in enumerate(objects)}

    morphisms = []
    mor_index = {}

    def add(name, d, c):
        if not isinstance(name, str):
            raise MalformedInput(f"morphism id must be a string, got {name!r}")
        if name in mor_index:
            raise MalformedInput(f"duplicate morphism id {name!r}")
        for o in (d, c):
            if o not in obj_index:
                raise MalformedInput(f"morphism {name!r} refers to unknown object {o!r}")
        mor_index[name] = len(morphisms)
        morphisms.append((name, obj_index[d], obj_index[c]))

    declared = data.get("morphisms", [])
    if not isinstance(declared, list):
        raise MalformedInput("'morphisms' must be a list")
    specs = {}
    for entry in declared:
        if not isinstance(entry, dict) or set(entry) != {"id", "dom", "cod"}:
            raise MalformedInput(f"morphism entries need exactly id, dom, cod: {entry!r}")
        specs[entry["id"]] = entry

    given_ids = data.get("identities", {})
    if not isinstance(given_ids, dict):
        raise MalformedInput("'identities' must be an object")
    for o in given_ids:
        if o not in obj_index:
            raise MalformedInput(f"identity given for unknown object {o!r}")
    identity_names = []
    for o in objects:
        name = given_ids.get(o, f"id_{o}")
        if name in specs and (specs[name]["dom"], specs[name]["cod"]) != (o, o):
            raise MalformedInput(f"identity {name!r} of {o!r} is declared with another type")
        identity_names.append(name)

    # synthesized identities first, then declared morphisms in file order
    for o, name in zip(objects, identity_names):
        if name not in specs:
            add(name, o, o)
    for entry in declared:
        add(entry["id"], entry["dom"], entry["cod"])

    def mid(name):
        if name not in mor_index:
            raise MalformedInput(f"unknown morphism {name!r}")
        return mor_index[name]

    compose = {}
    for i, o in enumerate(objects):
        ident = mor_index[identity_names[i]]
        for m, (_, d, c) in enumerate(morphisms):
            if c == i:
                compose[ident, m] = m
            if d == i:
                compose[m, ident] = m
    for entry in data.get("compose", []):
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise MalformedInput(f"compose entries are [g, f, g∘f]: {entry!r}")
        g, f, h = (mid(x) for x in entry)
        if (g, f) in compose and compose[g, f] != h:
            raise IdentityLaw(f"composite ({entry[0]}, {entry[1]}) contradicts the identity law", (g, f, h))
        compose[g, f] = h

    order = []
    for entry in data.get("order", []):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise MalformedInput(f"order entries are [m1, m2]: {entry!r}")
        order.append((mid(entry[0]), mid(entry[1])))

    cat = FinPosCategory(objects, morphisms, [mor_index[n] for n in identity_names], compose, order)
    return validate_category(cat) if validate else cat


def category_to_dict(cat):
    """Serialize in canonical form; inverse of :func:`category_from_dict`."""
    objs = cat.objects
    return {
        "objects": list(objs),
        "morphisms": [
            {"id": cat.mor_names[m], "dom": objs[cat.dom[m]], "cod": objs[cat.cod[m]]}
            for m in range(cat.n_morphisms)
        ],
        "identities": {objs[x]: cat.mor_names[i] for x, i in enumerate(cat.identities)},
        "compose": [
            [cat.mor_names[g], cat.mor_names[f], cat.mor_names[h]]
            for (g, f), h in sorted(cat.compose.items())
            if not (cat.is_identity(g) or cat.is_identity(f))
        ],
        "order": [[cat.mor_names[a], cat.mor_names[b]] for a, b in cat.order_pairs()],
    }


# -- constructions ----------------------------------------------------------


def dual(cat):
    """The opposite category; hom-orders are kept as they are."""

    def build():
        morphisms = [(cat.mor_names[m], cat.cod[m], cat.dom[m]) for m in range(cat.n_morphisms)]
        compose = {(f, g): h for (g, f), h in cat.compose.items()}
        op = FinPosCategory(cat.objects, morphisms, cat.identities, compose, cat.order_pairs())
        op._cache["dual"] = cat
        return op

    return cat.cached("dual", build)


def full_subcategory(cat, objs):
    """Full subcategory on ``objs`` (ids or names), keeping their relative order.

    The result remembers its embedding under ``_cache['embedding']`` as the
    pair (object ids, morphism ids) in ``cat``, and ``cat`` itself under
    ``_cache['parent']``.
    """
    ids = sorted({cat.object_id(o) if isinstance(o, str) else _check_obj(cat, o) for o in objs})
    new_obj = {x: i for i, x in enumerate(ids)}
    kept = [m for m in range(cat.n_morphisms) if cat.dom[m] in new_obj and cat.cod[m] in new_obj]
    new_mor = {m: i for i, m in enumerate(kept)}
    sub = FinPosCategory(
        [cat.objects[x] for x in ids],
        [(cat.mor_names[m], new_obj[cat.dom[m]], new_obj[cat.cod[m]]) for m in kept],
        [new_mor[cat.identities[x]] for x in ids],
        {(new_mor[g], new_mor[f]): new_mor[h] for (g, f), h in cat.compose.items() if g in new_mor and f in new_mor},
        [(new_mor[a], new_mor[b]) for a, b in cat.order_pairs() if a in new_mor],
    )
    sub._cache["embedding"] = (tuple(ids), tuple(kept))
    sub._cache["parent"] = cat
    return sub


def _check_obj(cat, x):
    if not (0 <= x < cat.n_objects):
        raise UnknownObject(f"unknown object id {x}")
    return x


def isomorphisms(cat, a, b):
    """Pairs ``(f, f⁻¹)`` of mutually inverse morphisms ``a → b``."""
    out = []
    ida, idb = cat.identities[a], cat.identities[b]
    for f in cat.hom(a, b):
        for g in cat.hom(b, a):
            if cat.compose[g, f] == ida and cat.compose[f, g] == idb:
                out.append((f, g))
                break
    return out


def is_iso(cat, f):
    return any(p[0] == f for p in isomorphisms(cat, cat.dom[f], cat.cod[f]))


def find_isomorphism(c, d):
    """An isomorphism of categories ``c → d`` as (object map, morphism map), or None.

    Backtracking over object bijections pruned by hom-size profiles, then over
    per-hom-set bijections checked against composition and order.
    """
    if c.n_objects != d.n_objects or c.n_morphisms != d.n_morphisms:
        return None
    n = c.n_objects

    def profile(cat, x):
        return (
            len(cat.hom(x, x)),
            sorted(len(cat.hom(x, y)) for y in range(cat.n_objects)),
            sorted(len(cat.hom(y, x)) for y in range(cat.n_objects)),
        )

    pc = [profile(c, x) for x in range(n)]
    pd = [profile(d, y) for y in range(n)]
    obj_map = [None] * n
    used = [False] * n

    def objects_ok(x):
        for y in range(x + 1):
            if len(c.hom(x, y)) != len(d.hom(obj_map[x], obj_map[y])):
                return False
            if len(c.hom(y, x)) != len(d.hom(obj_map[y], obj_map[x])):
                return False
        return True

    def search_objects(x):
        if x == n:
            return search_morphisms()
        for y in range(n):
            if not used[y] and pc[x] == pd[y]:
                obj_map[x] = y
                used[y] = True
                if objects_ok(x):
                    res = search_objects(x + 1)
                    if res is not None:
                        return res
                used[y] = False
        return None

    def search_morphisms():
        homs = [(x, y) for x in range(n) for y in range(n) if c.hom(x, y)]
        mor_map = [None] * c.n_morphisms
        for x in range(n):
            mor_map[c.identities[x]] = d.identities[obj_map[x]]

        def consistent():
            for (g, f), h in c.compose.items():
                mg, mf, mh = mor_map[g], mor_map[f], mor_map[h]
                if mg is not None and mf is not None and mh is not None and d.compose[mg, mf] != mh:
                    return False
            return True

        def rec(k):
            if k == len(homs):
                if not consistent():
                    return None
                for a, b in c.order_pairs(strict=False):
                    if not d.le(mor_map[a], mor_map[b]):
                        return None
                inv = {v: k_ for k_, v in enumerate(mor_map)}
                for a, b in d.order_pairs():
                    if not c.le(inv[a], inv[b]):
                        return None
                return list(obj_map), list(mor_map)
            x, y = homs[k]
            src = [m for m in c.hom(x, y) if not c.is_identity(m)]
            tgt = [m for m in d.hom(obj_map[x], obj_map[y]) if not d.is_identity(m)]
            for perm in itertools.permutations(tgt):
                for a, b in zip(src, perm):
                    mor_map[a] = b
                if consistent():
                    res = rec(k + 1)
                    if res is not None:
                        return res
                for a in src:
                    mor_map[a] = None
            return None

        return rec(0)

    return search_objects(0)


def is_isomorphic(c, d):
    return find_isomorphism(c, d) is not None


# -- fixtures ---------------------------------------------------------------


def _fixture(objects, morphisms, compose=(), order=()):
    return category_from_dict(
        {
            "objects": objects,
            "morphisms": [{"id": i, "dom": d, "cod": c} for i, d, c in morphisms],
            "compose": [list(t) for t in compose],
            "order": [list(p) for p in order],
        }
    )


def thin_category(objects, leq):
    """The preorder generated by ``leq`` (pairs of object names) as a thin category."""
    n = len(objects)
    idx = {o: i for i, o in enumerate(objects)}
    reach = [[i == j for j in range(n)] for i in range(n)]
    for a, b in leq:
        reach[idx[a]][idx[b]] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    mors = [(f"{objects[i]}<{objects[j]}", objects[i], objects[j]) for i in range(n) for j in range(n) if reach[i][j] and i != j]
    name = {(i, j): f"{objects[i]}<{objects[j]}" if i != j else f"id_{objects[i]}" for i in range(n) for j in range(n)}
    compose = [
        (name[j, k], name[i, j], name[i, k])
        for i in range(n) for j in range(n) for k in range(n)
        if i != j and j != k and reach[i][j] and reach[j][k]
    ]
    return _fixture(list(objects), mors, compose)


def builtin(name):
    """Named fixture categories, addressable as ``builtin:NAME`` from the CLI."""
    try:
        return _BUILTINS[name.upper()]()
    except KeyError:
        raise MalformedInput(f"unknown builtin {name!r}; choose from {sorted(_BUILTINS)}") from None


_BUILTINS = {
    # one object, identity only
    "ONE": lambda: _fixture(["*"], []),
    # a → b
    "ARROW": lambda: _fixture(["a", "b"], [("f", "a", "b")]),
    # idempotent e with id ≤ e
    "IDEM": lambda: _fixture(["x"], [("e", "x", "x")], [("e", "e", "e")], [("id_x", "e")]),
    # the two-element group, discrete order
    "Z2": lambda: _fixture(["x"], [("s", "x", "x")], [("s", "s", "id_x")]),
    # two isomorphic objects
    "ISO2": lambda: _fixture(
        ["a", "b"],
        [("u", "a", "b"), ("v", "b", "a")],
        [("v", "u", "id_a"), ("u", "v", "id_b")],
    ),
    # a → b → c
    "CHAIN3": lambda: _fixture(
        ["a", "b", "c"],
        [("f", "a", "b"), ("g", "b", "c"), ("gf", "a", "c")],
        [("g", "f", "gf")],
    ),
    # the four-element lattice 0 < l, r < 1
    "DIAMOND": lambda: _fixture(
        ["0", "l", "r", "1"],
        [("0l", "0", "l"), ("0r", "0", "r"), ("l1", "l", "1"), ("r1", "r", "1"), ("01", "0", "1")],
        [("l1", "0l", "01"), ("r1", "0r", "01")],
    ),
    # a ≅ b → c, a preorder that is not a poset
    "ISOARROW": lambda: _fixture(
        ["a", "b", "c"],
        [("u", "a", "b"), ("v", "b", "a"), ("g", "b", "c"), ("gu", "a", "c")],
        [("v", "u", "id_a"), ("u", "v", "id_b"), ("g", "u", "gu"), ("gu", "v", "g")],
    ),
    # two parallel arrows f ≤ g
    "LAXARROW": lambda: _fixture(["a", "b"], [("f", "a", "b"), ("g", "a", "b")], order=[("f", "g")]),
}


def builtin_names():
    return sorted(_BUILTINS)
