import pytest

from poscat.category import (
    builtin,
    builtin_names,
    category_from_dict,
    category_to_dict,
    dual,
    find_isomorphism,
    full_subcategory,
    is_iso,
    is_isomorphic,
    thin_category,
    validate_category,
)
from poscat.errors import (
    CompositionNotMonotone,
    IdentityLaw,
    MalformedInput,
    MissingComposite,
    NonAssociative,
    OrderNotPartial,
    UnknownObject,
)

IDEM_RAW = {
    "objects": ["x"],
    "morphisms": [{"id": "e", "dom": "x", "cod": "x"}],
    "compose": [["e", "e", "e"]],
    "order": [["id_x", "e"]],
}


def test_builtins_validate():
    for name in builtin_names():
        cat = builtin(name)
        assert validate_category(cat) is cat


def test_one_is_trivial(ONE):
    assert ONE.n_objects == 1 and ONE.n_morphisms == 1
    assert list(ONE.objects) == ["*"]


def test_idem_valid_and_ordered(IDEM):
    e = IDEM.morphism_id("e")
    i = IDEM.identities[0]
    assert IDEM.compose[e, e] == e
    assert IDEM.le(i, e) and not IDEM.le(e, i)


def test_idem_with_reversed_order_is_valid():
    raw = dict(IDEM_RAW, order=[["e", "id_x"]])
    cat = category_from_dict(raw)
    assert cat.le(cat.morphism_id("e"), cat.identities[0])


def test_missing_composite():
    raw = dict(IDEM_RAW, compose=[])
    with pytest.raises(MissingComposite) as info:
        category_from_dict(raw)
    assert info.value.witness == (1, 1)


def test_non_associative():
    # s∘s = e, e∘e = e but e∘s = s breaks (e∘s)∘s vs e∘(s∘s)
    raw = {
        "objects": ["x"],
        "morphisms": [{"id": "e", "dom": "x", "cod": "x"}, {"id": "s", "dom": "x", "cod": "x"}],
        "compose": [["e", "e", "e"], ["s", "s", "e"], ["e", "s", "s"], ["s", "e", "e"]],
    }
    with pytest.raises(NonAssociative):
        category_from_dict(raw)


def test_identity_conflict():
    raw = dict(IDEM_RAW, compose=[["e", "e", "e"], ["id_x", "e", "id_x"]])
    with pytest.raises(IdentityLaw):
        category_from_dict(raw)


def test_order_must_be_antisymmetric_and_parallel():
    with pytest.raises(OrderNotPartial):
        category_from_dict(dict(IDEM_RAW, order=[["e", "id_x"], ["id_x", "e"]]))
    raw = {"objects": ["a", "b"], "morphisms": [{"id": "f", "dom": "a", "cod": "b"}], "order": [["f", "id_a"]]}
    with pytest.raises(OrderNotPartial):
        category_from_dict(raw)


def test_composition_not_monotone():
    # Z2 with s ≤ id: s∘s = id must then be ≤ s∘id = s, but id and s are incomparable the other way
    raw = {
        "objects": ["x"],
        "morphisms": [{"id": "s", "dom": "x", "cod": "x"}],
        "compose": [["s", "s", "id_x"]],
        "order": [["s", "id_x"]],
    }
    with pytest.raises(CompositionNotMonotone):
        category_from_dict(raw)


def test_malformed_inputs():
    with pytest.raises(MalformedInput):
        category_from_dict({"objects": ["a"], "extra": 1})
    with pytest.raises(MalformedInput):
        category_from_dict({"objects": ["a"], "morphisms": [{"id": "f", "dom": "a", "cod": "z"}]})
    with pytest.raises(MalformedInput):
        category_from_dict([])
    with pytest.raises(MalformedInput):
        category_from_dict({"objects": ["a"], "compose": [["q", "id_a", "id_a"]]})


def test_empty_category_is_valid():
    cat = category_from_dict({"objects": []})
    assert cat.n_objects == 0 and cat.n_morphisms == 0


def test_json_round_trip():
    for name in builtin_names():
        cat = builtin(name)
        assert category_from_dict(category_to_dict(cat)) == cat


def test_order_closure_from_generators():
    raw = {
        "objects": ["a", "b"],
        "morphisms": [{"id": n, "dom": "a", "cod": "b"} for n in ("f", "g", "h")],
        "order": [["f", "g"], ["g", "h"]],
    }
    cat = category_from_dict(raw)
    assert cat.le(cat.morphism_id("f"), cat.morphism_id("h"))


def test_dual_involution_and_self_dual_idem(ARROW, IDEM):
    assert dual(dual(ARROW)) == ARROW
    assert dual(IDEM) == IDEM
    d = dual(ARROW)
    f = d.morphism_id("f")
    assert d.objects[d.dom[f]] == "b" and d.objects[d.cod[f]] == "a"


def test_full_subcategory(ARROW, ONE):
    sub = full_subcategory(ARROW, [0])
    assert is_isomorphic(sub, ONE)
    with pytest.raises(UnknownObject):
        full_subcategory(ARROW, [5])


def test_isomorphisms():
    iso2 = builtin("ISO2")
    u = iso2.morphism_id("u")
    assert is_iso(iso2, u)
    assert not is_iso(builtin("ARROW"), 2)
    assert find_isomorphism(builtin("ARROW"), dual(builtin("ARROW"))) is not None
    assert find_isomorphism(builtin("IDEM"), builtin("Z2")) is None


def test_thin_category_matches_fixtures():
    chain = thin_category(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert is_isomorphic(chain, builtin("CHAIN3"))
    iso = thin_category(["a", "b"], [("a", "b"), ("b", "a")])
    assert is_isomorphic(iso, builtin("ISO2"))
