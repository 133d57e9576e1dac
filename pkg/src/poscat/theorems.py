"""The theorem battery run over corpora by the CLI and the acceptance suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from .category import builtin, find_isomorphism
from .completion import (
    CROSSCHECK_KINDS,
    build_exact_completion,
    choice_independence,
    coinserter_presentation,
    gamma,
    internal_construction_crosscheck,
    so_identity_scan,
)
from .enumerate import enumerate_categories
from .errors import PoscatError
from .extension import (
    UNIQUENESS_GATE,
    check_extension_uniqueness,
    check_fof_extension,
    check_left_covering,
    check_projective_cover_theorem,
    extend_functor,
    image_congruence_sweep,
    scan_lemma_diagrams,
    skeleton,
)
from .functors import enumerate_functors, find_natural_iso, validate_functor, check_fully_order_faithful
from .limits import is_coinserter, is_weakly_lex
from .regular import (
    check_exact,
    check_projective,
    check_projective_cover,
    is_congruence,
    is_effective_epi,
    is_exact,
    is_regular,
    is_so,
    jointly_order_monic,
    kernel_congruence,
)
from .report import Report

# thin fixtures that widen coverage beyond the small corpus
EXTRA_FIXTURES = ("CHAIN3", "DIAMOND", "ISOARROW")


def exactness(ex):
    rep = Report("completion is exact")
    rep.extend(check_exact(ex.cat))
    return rep.finish()


def embedding_suite(cat, ex):
    rep = Report("embedding")
    g = gamma(cat, ex)
    G = validate_functor(g.functor)
    rep.add("Γ is a functor", True, None, "Γ is a functor")
    fof = check_fully_order_faithful(G)
    rep.add("Γ fully order-faithful", fof, None if fof else fof.witness, "Γ is fully order-faithful")
    image = sorted(set(G.obj_map))
    for x in range(cat.n_objects):
        pr = check_projective(ex.cat, G.ob(x))
        rep.add(f"Γ{cat.objects[x]} projective", pr, None if pr else pr.witness, "ΓA is so-projective")
    cov = check_projective_cover(ex.cat, image)
    rep.add("Γ-image is a projective cover", cov, None if cov else cov.witness, "Γ-image is a projective cover")
    return rep.finish()


def presentation_suite(ex):
    rep = Report("coinserter presentations")
    g = gamma(ex.base, ex)
    for m in range(ex.cat.n_morphisms):
        d = coinserter_presentation(ex, m, g)
        rep.add(f"presentation of {ex.cat.name(m)}", d.report, None if d.report else [e.to_dict() for e in d.report.failures],
                "rows are coinserters")
    return rep.finish()


def crosscheck_suite(ex):
    rep = Report("explicit constructions")
    for kind in CROSSCHECK_KINDS:
        try:
            rep.extend(internal_construction_crosscheck(ex, kind))
        except PoscatError as err:
            rep.add(f"{kind}", False, {"error": str(err), "witness": err.witness}, f"explicit {kind} agrees with search")
    rep.extend(so_identity_scan(ex))
    rep.extend(choice_independence(ex.base, ex))
    return rep.finish()


def idempotence(cat, ex):
    """For exact ``cat`` covered by all of its objects, ``P_ex ≃ E`` with ``P = E``."""
    rep = Report("idempotence on exact inputs")
    if not is_exact(cat):
        return rep.finish()
    allobjs = list(range(cat.n_objects))
    if not check_projective_cover(cat, allobjs):
        return rep.finish()
    rep.extend(check_projective_cover_theorem(cat, allobjs))
    same = find_isomorphism(skeleton(ex.cat), skeleton(cat)) is not None
    rep.add("completion has an isomorphic skeleton", same, None, "completion of an exact category is equivalent to it")
    return rep.finish()


def universal_property(cat, ex, targets, gate=UNIQUENESS_GATE):
    """Every left covering functor into an exact target extends, regularly and uniquely."""
    rep = Report("universal property")
    if ex.cat.n_objects > gate:
        return rep.finish()
    G = gamma(cat, ex).functor
    for tname, E in targets:
        if not is_exact(E):
            continue
        for k, F in enumerate(enumerate_functors(cat, E)):
            if not check_left_covering(F):
                continue
            label = f"into {tname} #{k}"
            ext = extend_functor(F, ex)
            rep.add(f"{label}: extension", ext.report, None if ext.report else [e.to_dict() for e in ext.report.failures],
                    "F̄ is regular and F̄Γ ≅ F")
            iso = find_natural_iso(G.then(ext.Fbar), F)
            rep.add(f"{label}: F̄Γ ≅ F", iso is not None, None, "F̄Γ ≅ F")
            uniq = check_extension_uniqueness(F, ex, gate, ext)
            if uniq is not None:
                rep.add(f"{label}: uniqueness", uniq, None if uniq else [e.to_dict() for e in uniq.failures],
                        "extension unique up to isomorphism")
            rep.extend(image_congruence_sweep(F), f"{label}: ")
            rep.extend(check_fof_extension(F, ex), f"{label}: ")
    return rep.finish()


def congruence_definitions(cat):
    """Both congruence characterizations agree on every jointly order-monic span."""
    rep = Report("congruence characterizations")
    for r0, r1 in cat.parallel_pairs():
        if not jointly_order_monic(cat, r0, r1):
            continue
        try:
            is_congruence(cat, r0, r1)
        except PoscatError as err:
            rep.add(f"({cat.name(r0)},{cat.name(r1)})", False, err.witness, "characterizations agree")
    rep.add("all spans", not rep.failures, None, "characterizations agree")
    return rep.finish()


def so_effective(cat):
    """In a regular category: so ⟺ effective epi ⟺ coinserter of its own kernel congruence."""
    rep = Report("so and effective epis")
    for e in range(cat.n_morphisms):
        so = is_so(cat, e)
        eff = bool(is_effective_epi(cat, e))
        ker = kernel_congruence(cat, e)
        own = bool(ker) and is_coinserter(cat, ker.r0, ker.r1, e)
        ok = so == eff == own
        rep.add(f"{cat.name(e)}", ok, None if ok else {"so": so, "effective": eff, "coinserter_of_kernel": own},
                "so ⟺ effective epi ⟺ coinserter of its kernel")
    return rep.finish()


def battery(cat, targets=(), gate=UNIQUENESS_GATE):
    """Every theorem check for one weakly lex category."""
    rep = Report("battery")
    ex = build_exact_completion(cat)
    rep.extend(exactness(ex), "exact: ")
    rep.extend(embedding_suite(cat, ex), "embedding: ")
    rep.extend(presentation_suite(ex), "presentation: ")
    rep.extend(crosscheck_suite(ex), "crosscheck: ")
    rep.extend(idempotence(cat, ex), "idempotence: ")
    rep.extend(universal_property(cat, ex, targets, gate), "universal: ")
    rep.extend(scan_lemma_diagrams(ex.cat), "lemma: ")
    rep.extend(so_effective(ex.cat), "so-effective: ")
    return rep.finish()


@dataclass
class CorpusSummary:
    bounds: tuple
    total: int = 0
    weakly_lex: int = 0
    regular: int = 0
    exact: int = 0
    checks: int = 0
    failures: int = 0
    rows: list = field(default_factory=list)

    def table(self):
        head = f"{'category':<28} {'objs':>4} {'mors':>4} {'C_ex objs':>9} {'C_ex mors':>9} {'checks':>6}  verdict"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            lines.append(f"{r['name']:<28} {r['objects']:>4} {r['morphisms']:>4} {r['ex_objects']:>9} "
                         f"{r['ex_morphisms']:>9} {r['checks']:>6}  {'PASS' if r['passed'] else 'FAIL'}")
        lines.append("-" * len(head))
        lines.append(f"corpus {self.bounds}: {self.total} categories, {self.weakly_lex} weakly lex, "
                     f"{self.regular} regular, {self.exact} exact; {self.checks} checks, {self.failures} failures")
        return "\n".join(lines)

    def to_dict(self):
        return {k: getattr(self, k) for k in ("bounds", "total", "weakly_lex", "regular", "exact", "checks", "failures", "rows")}


def _label(cat):
    return "{" + ",".join(cat.objects) + f"}}/{cat.n_morphisms}"


def run_corpus(max_objects, max_morphisms, extra=EXTRA_FIXTURES, gate=UNIQUENESS_GATE, definitions=True):
    """Enumerate, filter weakly lex, and assert the battery on every survivor."""
    summary = CorpusSummary((max_objects, max_morphisms))
    rep = Report(f"corpus --objects {max_objects} --morphisms {max_morphisms}")
    cats = [(_label(c), c) for c in enumerate_categories(max_objects, max_morphisms)]
    summary.total = len(cats)
    regular = []
    wl = []
    for name, c in cats:
        if definitions:
            rep.extend(congruence_definitions(c), f"{name} congruences: ")
        if is_regular(c):
            regular.append((name, c))
        if is_weakly_lex(c):
            wl.append((name, c))
    for fx in extra:
        c = builtin(fx)
        wl.append((fx, c))
        if is_regular(c):
            regular.append((fx, c))
    summary.weakly_lex = len(wl)
    summary.regular = len(regular)
    exact = [(n, c) for n, c in regular if is_exact(c)]
    summary.exact = len(exact)
    for name, c in regular:
        rep.extend(so_effective(c), f"{name} so-effective: ")
        rep.extend(scan_lemma_diagrams(c), f"{name} lemma: ")
    for name, c in wl:
        b = battery(c, exact, gate)
        rep.extend(b, f"{name}: ")
        ex = build_exact_completion(c)
        summary.rows.append({"name": name, "objects": c.n_objects, "morphisms": c.n_morphisms,
                             "ex_objects": ex.cat.n_objects, "ex_morphisms": ex.cat.n_morphisms,
                             "checks": len(b.entries), "passed": bool(b)})
    rep.finish()
    summary.checks = len(rep.entries)
    summary.failures = len(rep.failures)
    return rep, summary
