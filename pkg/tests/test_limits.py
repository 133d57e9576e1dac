import itertools

import pytest

from poscat.category import builtin, isomorphisms
from poscat.errors import NotParallel, SpecInvalid
from poscat.limits import (
    LE,
    Cone,
    DiagramSpec,
    all_strict_limits,
    all_weak_limits,
    check_weakly_lex,
    comma_spec,
    conical,
    is_cone,
    is_strict_limit,
    is_weak_limit,
    is_weakly_lex,
    product_spec,
    pullback_spec,
    search_coinserter,
    search_strict_limit,
    search_weak_limit,
    terminal_spec,
    validate_spec,
    weak_comma,
    weak_inserter,
    weak_product,
    weak_terminal,
)
from poscat.regular import is_regular, kernel_congruence, so_morphisms


def names(cat, cone):
    return cat.objects[cone.apex], tuple(cat.name(m) for m in cone.legs)


def test_idem_comma_of_identities_not_found(IDEM):
    i = IDEM.identities[0]
    res = search_weak_limit(IDEM, comma_spec(IDEM, i, i))
    assert not res
    # three cones on x; each candidate misses one
    assert len(res.failures) == 3


def test_arrow_comma_of_identity(ARROW):
    ia = ARROW.identities[0]
    res = weak_comma(ARROW, ia, ia)
    assert names(ARROW, res.cone) == ("a", ("id_a", "id_a"))


def test_one_conical_spec(ONE):
    star = 0
    spec = conical(ONE, [star, star, star], [(0, 2, 0), (1, 2, 0)])
    res = search_weak_limit(ONE, spec)
    assert res.apex == 0 and all(l == 0 for l in res.legs)
    assert search_strict_limit(ONE, product_spec(ONE, 0, 0)).legs == (0, 0)


def test_arrow_strict_examples(ARROW):
    f = ARROW.morphism_id("f")
    pb = search_strict_limit(ARROW, pullback_spec(ARROW, f, f))
    assert names(ARROW, pb.cone) == ("a", ("id_a", "id_a"))
    assert ARROW.objects[search_strict_limit(ARROW, terminal_spec(ARROW)).apex] == "b"


def test_idem_weak_product_missing_with_counterexample(IDEM):
    res = weak_product(IDEM, 0, 0)
    assert not res
    assert len(res.failures) == 4
    e = IDEM.morphism_id("e")
    i = IDEM.identities[0]
    assert res.counterexample == Cone(0, (i, i))
    assert res.failures[Cone(0, (i, i))] == Cone(0, (i, e))


def test_weak_inserter_and_terminal(ARROW, ONE):
    f = ARROW.morphism_id("f")
    res = weak_inserter(ARROW, f, f)
    assert names(ARROW, res.cone) == ("a", ("id_a",))
    assert weak_terminal(ONE).apex == 0


def test_coinserters(ARROW, IDEM):
    ia = ARROW.identities[0]
    f = ARROW.morphism_id("f")
    assert ARROW.name(search_coinserter(ARROW, ia, ia).q) == "id_a"
    assert ARROW.name(search_coinserter(ARROW, f, f).q) == "id_b"
    e = IDEM.morphism_id("e")
    res = search_coinserter(IDEM, IDEM.identities[0], e)
    assert IDEM.name(res.q) == "id_x"
    for h, u in res.mediators.items():
        assert IDEM.compose[u, res.q] == h
    with pytest.raises(NotParallel):
        search_coinserter(ARROW, ia, f)


def test_weakly_lex_verdicts(ONE, ARROW, IDEM):
    assert check_weakly_lex(ONE)
    assert check_weakly_lex(ARROW)
    rep = check_weakly_lex(IDEM)
    assert not rep
    assert rep.failures[0].name == "weak product x×x"
    assert rep.failures[0].witness["counterexample"] == {"apex": "x", "legs": ["id_x", "id_x"]}


def test_spec_validation(ARROW):
    f = ARROW.morphism_id("f")
    with pytest.raises(SpecInvalid):
        validate_spec(ARROW, DiagramSpec((0, 0), ((0, 1, f),)))
    with pytest.raises(SpecInvalid):
        validate_spec(ARROW, DiagramSpec((0, 1), ((0, 1, f),), (((0, ()), (0, (0,)), LE),)))


def test_cone_membership(ARROW):
    f = ARROW.morphism_id("f")
    spec = comma_spec(ARROW, f, f)
    ia = ARROW.identities[0]
    assert is_cone(ARROW, spec, Cone(0, (ia, ia)))
    assert is_weak_limit(ARROW, spec, Cone(0, (ia, ia)))
    assert is_strict_limit(ARROW, spec, Cone(0, (ia, ia)))


def test_lax_arrow_inserter_strictness():
    lax = builtin("LAXARROW")
    f, g = lax.morphism_id("f"), lax.morphism_id("g")
    # f ≤ g everywhere, so the identity is the inserter of (f, g) but not of (g, f)
    assert search_strict_limit(lax, comma_spec(lax, f, g)) is not None
    ins = search_strict_limit(lax, DiagramSpec((0, 1), ((0, 1, f), (0, 1, g)), (((0, (0,)), (0, (1,)), LE),)))
    assert ins and lax.name(ins.legs[0]) == "id_a"
    rev = search_strict_limit(lax, DiagramSpec((0, 1), ((0, 1, g), (0, 1, f)), (((0, (0,)), (0, (1,)), LE),)))
    assert not rev


def _specs(cat):
    out = [terminal_spec(cat)]
    out += [product_spec(cat, x, y) for x in range(cat.n_objects) for y in range(cat.n_objects)]
    out += [comma_spec(cat, f, g) for f, g in cat.cospans()]
    return out


def test_strict_limits_are_weak(corpus_24):
    for cat in corpus_24[:150]:
        for spec in _specs(cat):
            for cone in all_strict_limits(cat, spec):
                assert is_weak_limit(cat, spec, cone)


def test_weak_limits_mutually_factor(corpus_24):
    for cat in corpus_24[:150]:
        for spec in _specs(cat):
            lims = all_weak_limits(cat, spec)
            assert bool(lims) == bool(search_weak_limit(cat, spec))
            for a, b in itertools.product(lims, repeat=2):
                assert any(
                    all(cat.compose[lb, h] == la for la, lb in zip(a.legs, b.legs)) for h in cat.hom(a.apex, b.apex)
                )


def test_determinism(corpus_24):
    for cat in corpus_24[:60]:
        for spec in _specs(cat):
            a, b = search_weak_limit(cat, spec), search_weak_limit(cat, spec)
            assert bool(a) == bool(b)
            if a:
                assert a.cone == b.cone


def test_coinserter_of_kernel_reproduces_so(regular_25):
    for cat in regular_25:
        for e in so_morphisms(cat):
            ker = kernel_congruence(cat, e)
            res = search_coinserter(cat, ker.r0, ker.r1)
            assert res
            assert any(cat.compose[u, res.q] == e for u, _ in isomorphisms(cat, res.codomain, cat.cod[e]))


def test_is_weakly_lex_cached(ARROW):
    assert is_weakly_lex(ARROW) and is_weakly_lex(ARROW)
    assert is_regular(ARROW)
