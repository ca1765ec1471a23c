"""Batch analysis front end: ``kgraphkit <command> FILE... [options]``.

Exit codes: 0 success, 1 parse or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decompose import chains, decompose, decomposability
from .desourcify import des_window
from .dot import export_decomposition, export_dot, export_window
from .errors import KGraphError, ParseError
from .fileformat import parse_budget, parse_kgraph
from .ideals import enumerate_hs_lattice, is_cofinal_graph, restrict_to
from .periodicity import aperiodicity, h_per, per_group
from .skeleton import BudgetConfig
from .tails_prim import classify_prim, maximal_tails, prim_catalogue

SCHEMA = "kgraphkit/1"
ENV_BUDGET = "KGRAPHKIT_BUDGET"
COMMANDS = ("validate", "shape", "paths", "ideals", "tails", "periodicity",
            "prim", "decompose", "desourcify", "chains")


class UsageError(Exception):
    pass


def _vset(g, members):
    order = {v: i for i, v in enumerate(g.vertices)}
    return sorted(members, key=order.get)


def _group(grp):
    return [list(row) for row in grp.basis]


def _deg_arg(text, k, what):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers") from None
    if len(vals) == 1 and k > 1:
        vals = vals * k
    if len(vals) != k:
        raise UsageError(f"{what} needs {k} entries")
    return vals


def resolve_budget(g, file_budget: dict, args) -> BudgetConfig:
    """Precedence: command-line flags, then the file's budget line, then the environment, then defaults."""
    merged = {}
    env = os.environ.get(ENV_BUDGET)
    if env:
        try:
            merged.update(parse_budget(env))
        except ParseError as exc:
            raise UsageError(f"{ENV_BUDGET}: {exc}") from None
    merged.update(file_budget)
    if args.budget_degree:
        merged["degree"] = _deg_arg(args.budget_degree, g.rank, "--budget-degree")
    if args.budget_presentation is not None:
        merged["presentation"] = args.budget_presentation
    if args.budget_saturation:
        merged["saturation"] = _deg_arg(args.budget_saturation, g.rank, "--budget-saturation")
    for key in ("degree", "saturation"):
        if key in merged and len(merged[key]) != g.rank:
            if len(merged[key]) == 1:
                merged[key] = merged[key] * g.rank
            else:
                raise UsageError(f"budget {key} has the wrong length for rank {g.rank}")
    try:
        return BudgetConfig.for_graph(g, merged.get("degree"), merged.get("presentation"),
                                      merged.get("saturation"))
    except KGraphError as exc:
        raise UsageError(str(exc)) from None


# -- per-command reports ------------------------------------------------------

def _validate(g, budget, args):
    return {"rank": g.rank, "vertices": len(g.vertices), "edges": len(g.edges),
            "squares": len(g.squares), "status": "valid"}, None


def _shape(g, budget, args):
    sh = g.shape()
    return {"sources": [f"{v}:{i}" for v, i in sh.sources],
            "locally_convex": sh.locally_convex}, None


def _paths(g, budget, args):
    if not args.degree:
        raise UsageError("paths needs --degree")
    n = _deg_arg(args.degree, g.rank, "--degree")
    if any(x < 0 for x in n):
        raise UsageError("--degree must be nonnegative")
    starts = [args.vertex] if args.vertex else list(g.vertices)
    if args.vertex and args.vertex not in g.vertex_set:
        raise UsageError(f"unknown vertex {args.vertex!r}")
    found = [p for v in starts for p in g.paths_of_degree(n, v)]
    return {"degree": list(n), "count": len(found),
            "paths": [f"{p.range}<-{p.source}: {p}" for p in found]}, None


def _ideals(g, budget, args):
    lat = enumerate_hs_lattice(g, budget)
    return {"count": len(lat), "elements": [_vset(g, H) for H in lat],
            "cofinal": is_cofinal_graph(g, budget)}, None


def _tails(g, budget, args):
    out = []
    for t in maximal_tails(g, budget):
        verdict = aperiodicity(restrict_to(g, t.members), budget)
        out.append({"members": _vset(g, t.members), "complement": _vset(g, t.complement),
                    "verdict": verdict.status})
    return {"count": len(out), "tails": out}, None


def _periodicity(g, budget, args):
    pg = per_group(g, budget)
    hp = h_per(g, pg.group, budget)
    verdict = aperiodicity(g, budget)
    wit = None
    if verdict.witness is not None:
        wit = [str(verdict.witness[0]), str(verdict.witness[1])]
    return {"per": _group(pg.group), "per_exact": pg.exact, "per_certified": pg.certified,
            "h_per": _vset(g, hp.members), "h_per_exact": hp.exact,
            "verdict": verdict.status, "reason": verdict.reason, "witness": wit}, None


def _prim(g, budget, args):
    lat = enumerate_hs_lattice(g, budget)
    cat = prim_catalogue(g, budget, lat)
    flags = classify_prim(g, cat, lat, budget)
    records = []
    for rec, fl in zip(cat, flags):
        records.append({
            "tail": _vset(g, rec.tail.members),
            "per": _group(rec.per),
            "per_exact": rec.per_exact,
            "character_rank": rec.character_rank,
            "points": "one" if rec.character_rank == 0 else f"torus of dimension {rec.character_rank}",
            "h_per": _vset(g, rec.h_per),
            "vertex_generators": list(rec.vertex_generators),
            "relations": [f"{r.mu} ~ {r.nu} (phase {r.phase})" for r in rec.relations],
            "gauge_invariant": fl.gauge_invariant,
            "maximal_ideal": fl.maximal_ideal,
        })
    cofinal = flags[0].cofinal_graph if flags else len(lat) == 2
    strong = flags[0].strongly_aperiodic if flags else None
    return {"count": len(records), "cofinal": cofinal, "strongly_aperiodic": strong,
            "ideals": records}, None


def _decompose(g, budget, args):
    lat = enumerate_hs_lattice(g, budget)
    rep = decompose(g, budget, lat)
    dec = decomposability(g, budget, lat)
    data = {"n": rep.n, "unique": rep.unique,
            "chain": [_vset(g, H) for H in rep.chain.elements],
            "components": [_vset(g, c.vertices) for c in rep.components],
            "decomposable": dec.witness is not None}
    return data, (lambda: export_decomposition(g, rep))


def _desourcify(g, budget, args):
    N = _deg_arg(args.window, g.rank, "--window") if args.window else tuple(min(2, b) for b in budget.degree_bound)
    if any(x < 1 for x in N):
        raise UsageError("--window entries must be positive")
    win = des_window(g, N)
    wg = win.graph
    interior_sources = sorted({v for v, _ in wg.shape().sources if v in win.interior})
    data = {"window": list(N), "vertices": len(wg.vertices), "edges": len(wg.edges),
            "squares": len(wg.squares), "interior": len(win.interior),
            "interior_sources": interior_sources}
    return data, (lambda: export_window(win))


def _chains(g, budget, args):
    rep = chains(g, budget)
    return {"max_length": rep.max_length, "count": len(rep.maximal),
            "maximal": [[_vset(g, H) for H in c.elements] for c in rep.maximal]}, None


HANDLERS = {
    "validate": _validate, "shape": _shape, "paths": _paths, "ideals": _ideals,
    "tails": _tails, "periodicity": _periodicity, "prim": _prim,
    "decompose": _decompose, "desourcify": _desourcify, "chains": _chains,
}


# -- rendering ------------------------------------------------------------------

def _scalar(v):
    if v is None:
        return "unknown"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def render_text(data: dict, indent: int = 0) -> list:
    pad = "  " * indent
    lines = []
    for key, val in data.items():
        if isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(val, 1):
                lines.append(f"{pad}  [{i}]")
                lines.extend(render_text(item, indent + 2))
        elif isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(render_text(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {_scalar(val)}")
    return lines


def run(command: str, text: str, args, name: str = "<input>") -> tuple:
    """Analyse one file's contents; returns (report dict, exit code, dot text or None)."""
    try:
        parsed = parse_kgraph(text)
    except ParseError as exc:
        return {"file": name, "command": command, "status": "parse-error", "error": str(exc)}, 1, None
    except KGraphError as exc:
        return {"file": name, "command": command, "status": "invalid",
                "error": f"{type(exc).__name__}: {exc}"}, 1, None
    g = parsed.graph
    budget = resolve_budget(g, parsed.budget, args)
    head = {"file": name, "command": command,
            "budget": {"degree": list(budget.degree_bound),
                       "presentation": budget.presentation_bound,
                       "saturation": list(budget.saturation_bound)}}
    try:
        data, dot = HANDLERS[command](g, budget, args)
    except KGraphError as exc:
        return {**head, "status": "error", "error": f"{type(exc).__name__}: {exc}"}, 1, None
    dot_text = dot() if dot else export_dot(g)
    return {**head, "status": "ok", **data}, 0, dot_text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kgraphkit", description="Ideal-structure invariants of finite k-graphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("files", nargs="+", help="k-graph files; '-' reads stdin")
    p.add_argument("--budget-degree", help="degree bound, e.g. 3,3")
    p.add_argument("--budget-presentation", type=int, help="boundary presentation size bound")
    p.add_argument("--budget-saturation", help="saturation bound, e.g. 2,2")
    p.add_argument("--window", help="desourcification window bound, e.g. 2,2")
    p.add_argument("--degree", help="path degree for the paths command")
    p.add_argument("--vertex", help="restrict the paths command to one range vertex")
    p.add_argument("--json", action="store_true", help="emit the kgraphkit/1 JSON schema")
    p.add_argument("--dot", metavar="PATH", help="write a DOT rendering to PATH")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget_presentation is not None and args.budget_presentation < 1:
        parser.error("--budget-presentation must be positive")
    reports, dots, code = [], [], 0
    for name in args.files:
        try:
            if name == "-":
                text = sys.stdin.read()
            else:
                with open(name, encoding="utf-8") as fh:
                    text = fh.read()
        except OSError as exc:
            print(f"kgraphkit: cannot read {name}: {exc.strerror}", file=sys.stderr)
            return 2
        try:
            report, rc, dot_text = run(args.command, text, args, name)
        except UsageError as exc:
            print(f"kgraphkit: {exc}", file=sys.stderr)
            return 2
        reports.append(report)
        if dot_text:
            dots.append(dot_text)
        code = max(code, rc)
    if args.json:
        out = {"schema": SCHEMA, "reports": reports}
        sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    else:
        blocks = ["\n".join(render_text(r)) for r in reports]
        sys.stdout.write("\n\n".join(blocks) + "\n")
    if args.dot and dots:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write("".join(dots))
    return code


if __name__ == "__main__":
    sys.exit(main())
