import pytest

from poscat.category import builtin, full_subcategory
from poscat.errors import NotAFunctor
from poscat.functors import (
    PosFunctor,
    check_equivalence,
    check_essentially_surjective,
    check_fully_order_faithful,
    enumerate_functors,
    find_natural_iso,
    functor_from_maps,
    identity_functor,
    inclusion_functor,
    validate_functor,
)


def collapse(ARROW, ONE):
    return functor_from_maps(ARROW, ONE, {"a": "*", "b": "*"}, {"f": "id_*"})


def test_identity_valid(ARROW, ONE):
    assert validate_functor(identity_functor(ARROW))
    assert check_fully_order_faithful(identity_functor(ONE))


def test_collapse_valid_not_fof(ARROW, ONE):
    F = collapse(ARROW, ONE)
    res = check_fully_order_faithful(F)
    assert not res
    assert res.witness == {"hom": ["b", "a"], "reason": "not surjective", "missing": ["id_*"]}


def test_functor_laws(ARROW, IDEM):
    with pytest.raises(NotAFunctor) as info:
        validate_functor(PosFunctor(ARROW, ARROW, (0, 1), (0, 1, 1)))
    assert info.value.law == "preserves domain and codomain"
    with pytest.raises(NotAFunctor) as info:
        validate_functor(PosFunctor(ARROW, ARROW, (0, 1), (0, 1)))
    assert info.value.law == "maps are total on the source"
    # sending id to e breaks identities
    with pytest.raises(NotAFunctor) as info:
        validate_functor(PosFunctor(IDEM, IDEM, (0,), (1, 1)))
    assert info.value.law == "preserves identities"
    # Z2 → IDEM with s ↦ e: e∘e = e but s∘s = id ↦ id
    z2 = builtin("Z2")
    with pytest.raises(NotAFunctor) as info:
        validate_functor(PosFunctor(z2, IDEM, (0,), (0, 1)))
    assert info.value.law == "preserves composition"
    # LAXARROW f ≤ g mapped to g, f reverses the order
    lax = builtin("LAXARROW")
    fl, gl = lax.morphism_id("f"), lax.morphism_id("g")
    mm = [0, 1, 0, 0]
    mm[fl], mm[gl] = gl, fl
    mm[lax.identities[0]], mm[lax.identities[1]] = lax.identities[0], lax.identities[1]
    with pytest.raises(NotAFunctor) as info:
        validate_functor(PosFunctor(lax, lax, (0, 1), tuple(mm)))
    assert info.value.law == "locally monotone"


def test_enumerate_functors_counts(ARROW, IDEM, ONE):
    # ARROW → ARROW: both to a, both to b, or the identity
    assert len(list(enumerate_functors(ARROW, ARROW))) == 3
    # IDEM → IDEM: e ↦ id or e ↦ e (both monotone since id ≤ e)
    assert len(list(enumerate_functors(IDEM, IDEM))) == 2
    assert len(list(enumerate_functors(ONE, ARROW))) == 2
    for F in enumerate_functors(ARROW, ARROW):
        validate_functor(F)


def test_natural_iso_and_equivalence():
    iso2 = builtin("ISO2")
    one = builtin("ONE")
    # ONE → ISO2 picking a is an equivalence
    F = functor_from_maps(one, iso2, {"*": "a"}, {})
    assert check_equivalence(F)
    G = functor_from_maps(one, iso2, {"*": "b"}, {})
    alpha = find_natural_iso(F, G)
    assert alpha is not None and iso2.name(alpha[0]) == "u"
    arrow = builtin("ARROW")
    H = functor_from_maps(one, arrow, {"*": "a"}, {})
    assert not check_essentially_surjective(H)
    assert find_natural_iso(functor_from_maps(one, arrow, {"*": "b"}, {}), H) is None


def test_inclusion(ARROW):
    sub = full_subcategory(ARROW, [1])
    J = inclusion_functor(sub)
    assert validate_functor(J) and check_fully_order_faithful(J)
    assert J.obj_map == (1,)


def test_then_and_to_dict(ARROW, ONE):
    F = collapse(ARROW, ONE)
    G = identity_functor(ARROW).then(F)
    assert G.obj_map == F.obj_map and G.mor_map == F.mor_map
    assert F.to_dict() == {"objMap": {"a": "*", "b": "*"}, "morMap": {"id_a": "id_*", "id_b": "id_*", "f": "id_*"}}
