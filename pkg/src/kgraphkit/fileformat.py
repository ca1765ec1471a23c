"""Line-based text format for k-graphs.

    # comment
    rank 2
    vertex v
    edge f color=1 range=v source=v
    square f g = g2 f2
    budget degree=3,3 presentation=8 saturation=2,2
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KGraphError, ParseError
from .skeleton import Edge, KGraph, Square, build_kgraph


@dataclass
class KGraphFile:
    graph: KGraph
    budget: dict  # subset of {"degree", "presentation", "saturation"}


def _ints(text, line, col):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", line, col) from None
    if any(v < 1 for v in vals):
        raise ParseError("budget values must be positive", line, col)
    return vals


def parse_budget(text: str, line=None) -> dict:
    out = {}
    col = 1
    for tok in text.split():
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}", line, col)
        key, val = tok.split("=", 1)
        if key not in ("degree", "presentation", "saturation"):
            raise ParseError(f"unknown budget key {key!r}", line, col)
        vals = _ints(val, line, col)
        if key == "presentation":
            if len(vals) != 1:
                raise ParseError("presentation takes a single integer", line, col)
            out[key] = vals[0]
        else:
            out[key] = vals
        col += len(tok) + 1
    return out


def _columns(raw: str):
    """Tokens of a line with their 1-based column numbers."""
    out, i = [], 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((raw[i:j], i + 1))
        i = j
    return out


def parse_kgraph(text: str) -> KGraphFile:
    rank = None
    vertices, edges, squares = [], [], []
    seen = {}
    budget = {}
    colour_lines = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = _columns(body)
        if not toks:
            continue
        kw, kcol = toks[0]
        args = toks[1:]
        if kw == "rank":
            if rank is not None:
                raise ParseError("rank declared twice", ln, kcol)
            if len(args) != 1 or not args[0][0].isdigit() or int(args[0][0]) < 1:
                raise ParseError("rank needs one positive integer", ln, kcol)
            rank = int(args[0][0])
        elif kw == "vertex":
            if len(args) != 1:
                raise ParseError("vertex needs exactly one id", ln, kcol)
            vid, vcol = args[0]
            if vid in seen:
                raise ParseError(f"duplicate id {vid!r}", ln, vcol)
            seen[vid] = ln
            vertices.append(vid)
        elif kw == "edge":
            if len(args) != 4:
                raise ParseError("edge needs: id color=i range=v source=w", ln, kcol)
            eid, ecol = args[0]
            if eid in seen:
                raise ParseError(f"duplicate id {eid!r}", ln, ecol)
            fields = {}
            for tok, col in args[1:]:
                key, eq, val = tok.partition("=")
                if not eq or key not in ("color", "range", "source") or key in fields or not val:
                    raise ParseError(f"bad edge field {tok!r}", ln, col)
                fields[key] = (val, col)
            if len(fields) != 3:
                raise ParseError("edge needs color, range and source", ln, kcol)
            cval, ccol = fields["color"]
            if not cval.isdigit():
                raise ParseError(f"colour must be a positive integer, got {cval!r}", ln, ccol)
            seen[eid] = ln
            colour_lines.append((int(cval), ln, ccol))
            edges.append(Edge(eid, int(cval), fields["range"][0], fields["source"][0]))
        elif kw == "square":
            if len(args) != 5 or args[2][0] != "=":
                raise ParseError("square needs: f g = g2 f2", ln, kcol)
            squares.append(Square(args[0][0], args[1][0], args[3][0], args[4][0]))
        elif kw == "budget":
            budget.update(parse_budget(body[body.index("budget") + len("budget"):], ln))
        else:
            raise ParseError(f"unknown record {kw!r}", ln, kcol)
    if rank is None:
        raise ParseError("missing rank line")
    for c, ln, col in colour_lines:
        if not 1 <= c <= rank:
            raise ParseError(f"colour {c} outside 1..{rank}", ln, col)
    for key in ("degree", "saturation"):
        if key in budget and len(budget[key]) != rank:
            raise ParseError(f"budget {key} needs {rank} entries")
    try:
        g = build_kgraph(rank, vertices, edges, squares)
    except ParseError:
        raise
    except KGraphError:
        raise
    return KGraphFile(g, budget)


def serialize_kgraph(g: KGraph, budget: dict | None = None) -> str:
    lines = [f"rank {g.rank}"]
    lines += [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.id} color={e.color} range={e.range} source={e.source}" for e in g.edges]
    lines += [f"square {s.f} {s.g} = {s.g2} {s.f2}" for s in g.squares]
    if budget:
        parts = []
        for key in ("degree", "presentation", "saturation"):
            if key in budget:
                val = budget[key]
                parts.append(f"{key}=" + (",".join(map(str, val)) if isinstance(val, tuple) else str(val)))
        lines.append("budget " + " ".join(parts))
    return "\n".join(lines) + "\n"
