"""Command line: ``poscat validate|check|complete|extend|corpus|dot``.

Exit codes: 0 pass, 1 semantic failure (with a witness), 2 input or parse error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .category import category_to_dict, find_isomorphism
from .completion import CROSSCHECK_KINDS, build_exact_completion, gamma, internal_construction_crosscheck
from .dot import to_dot
from .errors import MalformedInput, PoscatError, ValidationError
from .extension import check_left_covering, extend_functor
from .functors import check_equivalence, check_fully_order_faithful
from .limits import check_weakly_lex
from .regular import check_exact, check_projective, check_projective_cover, check_regular
from .report import Report
from .serialize import load_category, load_completion, load_functor, save_completion
from .theorems import EXTRA_FIXTURES, presentation_suite, run_corpus

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

format_option = click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)


def emit(report, fmt):
    click.echo(report.to_json() if fmt == "json" else report.to_text())
    sys.exit(EXIT_PASS if report else EXIT_FAIL)


def error_report(command, err):
    rep = Report(command)
    rep.add(type(err).__name__, False, {"message": str(err), "witness": err.witness} if isinstance(err, PoscatError)
            else {"message": str(err)}, getattr(err, "law", ""))
    return rep.finish()


def fail(command, err, fmt, code):
    rep = error_report(command, err)
    click.echo(rep.to_json() if fmt == "json" else rep.to_text())
    sys.exit(code)


def read_category(command, ref, fmt):
    """Load or exit: parse problems give 2, law violations give 1."""
    try:
        return load_category(ref)
    except MalformedInput as err:
        fail(command, err, fmt, EXIT_INPUT)
    except ValidationError as err:
        fail(command, err, fmt, EXIT_FAIL)


@click.group()
def main():
    """Finite poset-enriched categories and their exact completions."""


@main.command()
@click.argument("path")
@format_option
def validate(path, fmt):
    """Check the category laws for PATH (a JSON file or builtin:NAME)."""
    cat = read_category(f"validate {path}", path, fmt)
    rep = Report(f"validate {path}")
    rep.add("category laws", True, {"objects": cat.n_objects, "morphisms": cat.n_morphisms})
    emit(rep.finish(), fmt)


@main.command()
@click.argument("path")
@click.option("--weakly-lex", "mode", flag_value="weakly-lex")
@click.option("--regular", "mode", flag_value="regular")
@click.option("--exact", "mode", flag_value="exact")
@click.option("--projectives", "mode", flag_value="projectives")
@click.option("--cover", default=None, help="Comma-separated objects to test as a projective cover.")
@format_option
def check(path, mode, cover, fmt):
    """Run one structural checker."""
    command = f"check {path} --{mode}"
    if mode is None:
        fail(command, MalformedInput("choose one of --weakly-lex, --regular, --exact, --projectives"), fmt, EXIT_INPUT)
    cat = read_category(command, path, fmt)
    if mode == "weakly-lex":
        rep = check_weakly_lex(cat)
    elif mode == "regular":
        rep = check_regular(cat)
    elif mode == "exact":
        rep = check_exact(cat)
    else:
        rep = Report(command)
        for x in range(cat.n_objects):
            res = check_projective(cat, x)
            rep.add(f"{cat.objects[x]} projective", True, {"projective": bool(res)})
        try:
            objs = [cat.object_id(o) for o in cover.split(",")] if cover else \
                [x for x in range(cat.n_objects) if check_projective(cat, x)]
        except PoscatError as err:
            fail(command, err, fmt, EXIT_INPUT)
        cov = check_projective_cover(cat, objs)
        witness = {"cover": [cat.objects[o] for o in objs]}
        if cov:
            witness["so"] = {cat.objects[c]: cat.name(e) for c, e in cov.witness.items()}
        else:
            witness.update(cov.witness)
        rep.add("projective cover", cov, witness, "enough projectives")
    rep.command = command
    emit(rep.finish() if rep.verdict is None else rep, fmt)


@main.command()
@click.argument("path")
@click.option("-o", "--out", "out", type=click.Path(file_okay=False), default=None, help="Output directory.")
@click.option("--provenance/--no-provenance", default=True, show_default=True)
@click.option("--crosscheck", is_flag=True, help="Also run exactness, Γ and construction checks.")
@format_option
def complete(path, out, provenance, crosscheck, fmt):
    """Build the exact completion of a weakly lex category."""
    command = f"complete {path}"
    cat = read_category(command, path, fmt)
    try:
        ex = build_exact_completion(cat)
    except PoscatError as err:
        fail(command, err, fmt, EXIT_FAIL)
    rep = Report(command)
    built = {"objects": ex.cat.n_objects, "morphisms": ex.cat.n_morphisms}
    if out:
        save_completion(ex, out, provenance)
        built["out"] = str(out)
    else:
        built["category"] = category_to_dict(ex.cat)
    rep.add("completion built", True, built)
    if crosscheck:
        try:
            rep.extend(check_exact(ex.cat), "exact: ")
            g = gamma(cat, ex)
            fof = check_fully_order_faithful(g.functor)
            rep.add("Γ fully order-faithful", fof, None if fof else fof.witness)
            rep.extend(presentation_suite(ex), "presentation: ")
            for kind in CROSSCHECK_KINDS:
                rep.extend(internal_construction_crosscheck(ex, kind), "crosscheck: ")
        except PoscatError as err:
            rep.add(type(err).__name__, False, {"message": str(err), "witness": err.witness})
    emit(rep.finish(), fmt)


@main.command()
@click.option("--functor", "functor_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--completion", "completion_dir", default=None, type=click.Path(file_okay=False),
              help="Directory written by 'complete'; rebuilt from the functor's source if omitted.")
@format_option
def extend(functor_path, completion_dir, fmt):
    """Extend a left covering functor along the completion of its source."""
    command = f"extend --functor {functor_path}"
    try:
        F = load_functor(functor_path)
        ex = load_completion(completion_dir) if completion_dir else build_exact_completion(F.source)
    except (MalformedInput, ValidationError) as err:
        fail(command, err, fmt, EXIT_INPUT)
    except PoscatError as err:
        fail(command, err, fmt, EXIT_FAIL)
    if find_isomorphism(ex.base, F.source) is None:
        fail(command, MalformedInput("completion base differs from the functor's source"), fmt, EXIT_INPUT)
    if ex.base != F.source:
        ex = build_exact_completion(F.source)
    rep = Report(command)
    try:
        lc = check_left_covering(F)
        rep.extend(lc, "left covering: ")
        if lc:
            res = extend_functor(F, ex)
            rep.extend(res.report)
            eq = check_equivalence(res.Fbar)
            rep.add("F̄ equivalence", True, {"equivalence": bool(eq), "Fbar": res.Fbar.to_dict()})
    except PoscatError as err:
        rep.add(type(err).__name__, False, {"message": str(err), "witness": err.witness})
    emit(rep.finish(), fmt)


@main.command()
@click.option("--objects", "n_obj", type=int, required=True)
@click.option("--morphisms", "n_mor", type=int, required=True)
@click.option("--assert-theorems", is_flag=True, help="Exit 1 on any theorem violation.")
@click.option("--extra/--no-extra", default=True, show_default=True, help=f"Add fixtures {', '.join(EXTRA_FIXTURES)}.")
@format_option
def corpus(n_obj, n_mor, assert_theorems, extra, fmt):
    """Enumerate small categories and run the theorem battery on the weakly lex ones."""
    try:
        rep, summary = run_corpus(n_obj, n_mor, EXTRA_FIXTURES if extra else ())
    except (MalformedInput, ValidationError) as err:
        fail(f"corpus {n_obj} {n_mor}", err, fmt, EXIT_INPUT)
    if fmt == "json":
        click.echo(json.dumps({"summary": summary.to_dict(), "failures": [e.to_dict() for e in rep.failures],
                               "verdict": bool(rep), "timing": round(rep.timing, 3)}, ensure_ascii=False, indent=2))
    else:
        click.echo(summary.table())
        for e in rep.failures:
            click.echo(f"FAIL {e.name}: {json.dumps(e.witness, ensure_ascii=False, default=str)}")
    sys.exit(EXIT_FAIL if assert_theorems and not rep else EXIT_PASS)


@main.command()
@click.argument("path")
@click.option("--show-ids", is_flag=True, help="Draw identity loops.")
def dot(path, show_ids):
    """Print Graphviz DOT for a category."""
    cat = read_category(f"dot {path}", path, "text")
    click.echo(to_dot(cat, show_ids, Path(path).stem if ":" not in path else path.split(":", 1)[1]), nl=False)


if __name__ == "__main__":
    main()
