import itertools

import pytest

from poscat.category import FinPosCategory, builtin, dual, find_isomorphism, validate_category
from poscat.enumerate import canonical_form, canonical_key, enumerate_categories
from poscat.errors import BoundsTooLarge, ValidationError


def _contains(corpus, cat):
    return any(find_isomorphism(c, cat) is not None for c in corpus)


def test_one_by_one_is_exactly_one():
    cats = list(enumerate_categories(1, 1))
    assert len(cats) == 1
    assert find_isomorphism(cats[0], builtin("ONE")) is not None


def test_one_by_two_contains_idem_and_z2():
    cats = list(enumerate_categories(1, 2))
    assert _contains(cats, builtin("IDEM"))
    assert _contains(cats, builtin("Z2"))


def test_two_by_three_contains_arrow():
    assert _contains(list(enumerate_categories(2, 3)), builtin("ARROW"))


def test_bounds_guard():
    with pytest.raises(BoundsTooLarge):
        list(enumerate_categories(4, 4))
    assert len(list(enumerate_categories(1, 1, bounds=(4, 8)))) == 1


def test_deterministic():
    a = [canonical_key(c)[0] for c in enumerate_categories(2, 4)]
    b = [canonical_key(c)[0] for c in enumerate_categories(2, 4)]
    assert a == b


def test_pairwise_non_isomorphic(corpus_24):
    keys = [canonical_key(c)[0] for c in corpus_24]
    assert len(set(keys)) == len(keys)
    # spot-check the key against full isomorphism search on a slice
    sample = corpus_24[:40]
    for x, y in itertools.combinations(sample, 2):
        assert find_isomorphism(x, y) is None


def test_outputs_are_canonical(corpus_24):
    for c in corpus_24:
        assert canonical_form(c) == c


def test_closed_under_dual(corpus_24):
    keys = {canonical_key(c)[0] for c in corpus_24}
    for c in corpus_24:
        assert canonical_key(dual(c))[0] in keys


def test_order_only_between_parallel(corpus_24):
    for c in corpus_24:
        for a, b in c.order_pairs():
            assert c.dom[a] == c.dom[b] and c.cod[a] == c.cod[b]


def _naive_one_object(max_morphisms):
    """Independent oracle: brute-force every table and order, dedupe by isomorphism search."""
    found = []
    for n in range(1, max_morphisms + 1):
        mors = [(f"m{i}", 0, 0) for i in range(n)]
        pairs = [(g, f) for g in range(n) for f in range(n)]
        for values in itertools.product(range(n), repeat=n * n):
            comp = dict(zip(pairs, values))
            if any(comp[0, f] != f or comp[f, 0] != f for f in range(n)):
                continue
            rel_pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
            for bits in itertools.product((0, 1), repeat=len(rel_pairs)):
                order = [p for p, bit in zip(rel_pairs, bits) if bit]
                try:
                    cat = validate_category(FinPosCategory(["x"], mors, [0], comp, order))
                except ValidationError:
                    continue
                # keep only transitively closed inputs to avoid duplicates of one order
                if set(cat.order_pairs()) != set(order):
                    continue
                if not any(find_isomorphism(cat, c) is not None for c in found):
                    found.append(cat)
    return found


def test_matches_naive_oracle_one_object():
    naive = _naive_one_object(3)
    fast = list(enumerate_categories(1, 3))
    assert len(naive) == len(fast)
    for c in fast:
        assert _contains(naive, c)


def test_discrete_monoid_counts():
    # monoids of order 1, 2, 3 up to isomorphism: 1, 2, 7
    discrete = [c for c in enumerate_categories(1, 3) if not list(c.order_pairs())]
    counts = [sum(1 for c in discrete if c.n_morphisms == k) for k in (1, 2, 3)]
    assert counts == [1, 2, 7]


def test_regression_counts():
    # frozen after cross-checking (1, 3) against the naive oracle above
    assert len(list(enumerate_categories(1, 2))) == 5
    assert len(list(enumerate_categories(1, 3))) == 42
    assert len(list(enumerate_categories(2, 3))) == 48
