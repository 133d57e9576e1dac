"""Graphviz rendering of a finite Pos-category."""

from __future__ import annotations


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(cat, show_ids=False, name="C"):
    """Objects become nodes and morphisms edges; strict hom-order pairs are dashed edges between edge labels."""
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    for x in cat.objects:
        lines.append(f"  {_q(x)};")
    for m in range(cat.n_morphisms):
        if cat.is_identity(m) and not show_ids:
            continue
        lines.append(f"  {_q(cat.objects[cat.dom[m]])} -> {_q(cat.objects[cat.cod[m]])} [label={_q(cat.name(m))}];")
    pairs = list(cat.order_pairs(strict=True))
    if pairs:
        lines.append("  // hom-order")
        for m in sorted({m for p in pairs for m in p}):
            lines.append(f"  {_q('mor:' + cat.name(m))} [shape=plaintext, label={_q(cat.name(m))}];")
        for a, b in pairs:
            lines.append(f"  {_q('mor:' + cat.name(a))} -> {_q('mor:' + cat.name(b))} [style=dashed, label=\"≤\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
