"""Graphviz DOT emission for k-graphs, desourcification windows and decompositions.

Edges are drawn from range to source, so ``v -> w`` means an edge with range v.
"""

from __future__ import annotations

from .skeleton import KGraph

PALETTE = ("blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "gray40")


def colour_name(c: int) -> str:
    return PALETTE[(c - 1) % len(PALETTE)]


def _q(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: KGraph, clusters=None, name: str = "kgraph") -> str:
    """DOT text for g; ``clusters`` is an optional list of vertex sets."""
    lines = [f"digraph {_q(name)} {{", "  node [shape=circle];"]
    placed = set()
    order = {v: i for i, v in enumerate(g.vertices)}
    for i, members in enumerate(clusters or []):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="component {i + 1}";')
        for v in sorted(members, key=order.get):
            lines.append(f"    {_q(v)};")
            placed.add(v)
        lines.append("  }")
    for v in g.vertices:
        if v not in placed:
            lines.append(f"  {_q(v)};")
    for e in g.edges:
        lines.append(f"  {_q(e.range)} -> {_q(e.source)} [label={_q(e.id)}, color={colour_name(e.color)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_window(window) -> str:
    """A desourcification window; vertex ids already read ``base+(excess)``."""
    return export_dot(window.graph, name="window")


def export_decomposition(g: KGraph, report) -> str:
    return export_dot(g, clusters=[c.vertices for c in report.components], name="decomposition")
