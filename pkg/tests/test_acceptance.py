"""Acceptance criteria 1-8, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are also written through ``capsys.disabled`` so a plain ``pytest -v``
shows them.
"""

import time

import pytest

from poscat.category import builtin, find_isomorphism
from poscat.completion import build_exact_completion
from poscat.functors import check_fully_order_faithful, functor_from_maps
from poscat.limits import check_weakly_lex
from poscat.regular import is_regular
from poscat.theorems import (
    congruence_definitions,
    crosscheck_suite,
    embedding_suite,
    exactness,
    idempotence,
    presentation_suite,
    so_effective,
    universal_property,
)
from poscat.extension import scan_lemma_diagrams

pytestmark = pytest.mark.acceptance


def label(cat):
    return "{" + ",".join(cat.objects) + f"}}/{cat.n_morphisms}"


def verdict(capsys, n, title, failures, detail=""):
    line = f"{'PASS' if not failures else 'FAIL'} criterion {n}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; first failures: {failures[:3]}"
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line


def failed(rep, who):
    return [f"{who}: {e.name}" for e in rep.failures]


@pytest.fixture(scope="module")
def instances(weakly_lex_all):
    return [(label(c), c, build_exact_completion(c)) for c in weakly_lex_all]


def test_criterion_1_exactness(capsys, weakly_lex_25, instances):
    t0 = time.perf_counter()
    bad = []
    for name, _, ex in instances:
        bad += failed(exactness(ex), name)
    dt = time.perf_counter() - t0
    verdict(capsys, 1, "every completion is exact", bad,
            f"{len(weakly_lex_25)} weakly lex corpus categories + {len(instances) - len(weakly_lex_25)} fixtures, "
            f"{dt:.1f}s")


def test_criterion_2_embedding(capsys, instances):
    bad = []
    for name, cat, ex in instances:
        bad += failed(embedding_suite(cat, ex), name)
    verdict(capsys, 2, "Γ is a fully order-faithful functor onto a projective cover", bad, f"{len(instances)} categories")


def test_criterion_3_presentations(capsys, instances):
    bad = []
    count = 0
    for name, _, ex in instances:
        rep = presentation_suite(ex)
        count += len(rep.entries)
        bad += failed(rep, name)
    verdict(capsys, 3, "every completion morphism has a coinserter presentation", bad, f"{count} morphisms")


def test_criterion_4_constructions(capsys, instances):
    bad = []
    count = 0
    for name, _, ex in instances:
        rep = crosscheck_suite(ex)
        count += len(rep.entries)
        bad += failed(rep, name)
    verdict(capsys, 4, "explicit constructions agree with search", bad, f"{count} checks")


def test_criterion_5_idempotence(capsys, exact_all):
    bad = []
    for name in ("ONE", "ARROW"):
        cat = builtin(name)
        if find_isomorphism(build_exact_completion(cat).cat, cat) is None:
            bad.append(f"completion of {name} is not isomorphic to it")
    count = 0
    for cat in exact_all:
        rep = idempotence(cat, build_exact_completion(cat))
        count += bool(rep.entries)
        bad += failed(rep, label(cat))
    verdict(capsys, 5, "completion of ONE, ARROW and exact self-covered categories", bad,
            f"{count} exact categories covered by themselves")


def test_criterion_6_universal_property(capsys, instances, exact_all):
    targets = [(label(c), c) for c in exact_all]
    t0 = time.perf_counter()
    bad = []
    count = 0
    for name, cat, ex in instances:
        rep = universal_property(cat, ex, targets)
        count += sum(1 for e in rep.entries if e.name.endswith(": extension"))
        bad += failed(rep, name)
    dt = time.perf_counter() - t0
    if dt >= 60:
        bad.append(f"runtime {dt:.1f}s exceeds 60s")
    verdict(capsys, 6, "left covering functors extend regularly and uniquely", bad,
            f"{count} left covering functors, {dt:.1f}s")


def test_criterion_7_definitions(capsys, corpus_25, regular_25, extras, instances):
    bad = []
    diagrams = 0
    for cat in corpus_25:
        rep = congruence_definitions(cat)
        bad += failed(rep, label(cat))
    regulars = regular_25 + [c for c in extras if is_regular(c)] + [ex.cat for _, _, ex in instances]
    for cat in regulars:
        bad += failed(so_effective(cat), label(cat) + " so")
        rep = scan_lemma_diagrams(cat)
        diagrams += len(rep.entries)
        bad += failed(rep, label(cat) + " lemma")
    verdict(capsys, 7, "congruence characterizations, so = effective epi, lemma diagrams", bad,
            f"{len(corpus_25)} corpus categories, {len(regulars)} regular, {diagrams} lemma diagrams")


def test_criterion_8_negative_controls(capsys):
    bad = []
    idem = builtin("IDEM")
    rep = check_weakly_lex(idem)
    first = rep.failures[0] if not rep else None
    if first is None or first.name != "weak product x×x" \
            or first.witness.get("counterexample") != {"apex": "x", "legs": ["id_x", "id_x"]}:
        bad.append(f"IDEM: unexpected verdict {first}")
    arrow, one = builtin("ARROW"), builtin("ONE")
    F = functor_from_maps(arrow, one, {"a": "*", "b": "*"}, {"f": "id_*"})
    res = check_fully_order_faithful(F)
    if res or res.witness != {"hom": ["b", "a"], "reason": "not surjective", "missing": ["id_*"]}:
        bad.append(f"ARROW→ONE: unexpected verdict {res}")
    verdict(capsys, 8, "IDEM has no weak product x×x; ARROW→ONE is not fully order-faithful", bad)
