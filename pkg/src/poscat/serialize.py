"""JSON files for categories, functors and completions."""

from __future__ import annotations

import json
from pathlib import Path

from .category import builtin, category_from_dict, category_to_dict, find_isomorphism
from .completion import build_exact_completion, gamma
from .errors import ConstructionMismatch, MalformedInput, UnknownObject
from .functors import functor_from_maps


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise MalformedInput(f"cannot read {path}: {err}") from err


def write_json(path, data):
    Path(path).write_text(json.dumps(data, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")


def load_category(ref, base_dir=None, validate=True):
    """``builtin:NAME``, a path to a JSON file, or an inline dict."""
    if isinstance(ref, dict):
        return category_from_dict(ref, validate=validate)
    if not isinstance(ref, str):
        raise MalformedInput(f"cannot interpret category reference {ref!r}")
    if ref.startswith("builtin:"):
        return builtin(ref.split(":", 1)[1])
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    return category_from_dict(read_json(path), validate=validate)


def dump_category(cat):
    return json.dumps(category_to_dict(cat), ensure_ascii=False, indent=2)


def functor_to_dict(F, source=None, target=None):
    d = F.to_dict()
    return {
        "source": source if source is not None else category_to_dict(F.source),
        "target": target if target is not None else category_to_dict(F.target),
        **d,
    }


def functor_from_dict(data, base_dir=None):
    if not isinstance(data, dict) or not {"source", "target", "objMap", "morMap"} <= set(data):
        raise MalformedInput("functor needs source, target, objMap and morMap")
    src = load_category(data["source"], base_dir)
    tgt = load_category(data["target"], base_dir)
    try:
        return functor_from_maps(src, tgt, data["objMap"], data["morMap"])
    except (KeyError, ValueError, UnknownObject) as err:
        raise MalformedInput(f"bad functor map: {err}") from err


def load_functor(path):
    return functor_from_dict(read_json(path), base_dir=Path(path).parent)


# -- completion directories -------------------------------------------------


def provenance_dict(ex):
    base = ex.base
    return {
        "base": category_to_dict(base),
        "objects": [
            {"name": ex.cat.objects[i], "R": base.objects[p.R], "r0": base.name(p.r0), "r1": base.name(p.r1),
             "X": base.objects[p.X]}
            for i, p in enumerate(ex.objects)
        ],
        "morphisms": [
            {"name": ex.cat.name(m), "rep": base.name(h.rep), "lift": base.name(h.lift),
             "members": [base.name(f) for f in h.members]}
            for m, h in enumerate(ex.homs)
        ],
        "order_witnesses": [
            [ex.cat.name(a), ex.cat.name(b), base.name(s)] for (a, b), s in sorted(ex.order_witness.items())
        ],
    }


def save_completion(ex, out_dir, provenance=True):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_json(out / "cat.json", category_to_dict(ex.cat))
    if provenance:
        write_json(out / "provenance.json", provenance_dict(ex))
        G = gamma(ex.base, ex).functor
        write_json(out / "gamma.json", functor_to_dict(G, source="base.json", target="cat.json"))
        write_json(out / "base.json", category_to_dict(ex.base))
    return out


def load_completion(out_dir):
    """Rebuild the completion from the stored base and check it against the stored category."""
    out = Path(out_dir)
    base_path = out / "base.json"
    if not base_path.exists():
        raise MalformedInput(f"{out} has no base.json; write it with provenance")
    ex = build_exact_completion(load_category(str(base_path)))
    stored = load_category(str(out / "cat.json"))
    if find_isomorphism(stored, ex.cat) is None:
        raise ConstructionMismatch("stored completion differs from the rebuilt one", {"dir": str(out)})
    return ex
