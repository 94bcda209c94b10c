"""Command-line front end.

Subcommands width | check | fixed | edges | seidel, each fed from one source:
an action JSON file, a toric polytope JSON file plus a subcircle direction, a
Grassmannian generator, or a product of sources.  Output is deterministic
text or JSON.  Exit codes: 0 success, 1 hypothesis failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import toric
from .circle_action import (ISOLATED_MAX, MONOTONE_CONSISTENCY, SEMIFREE, ActionData,
                            CheckResult, action_to_json, gromov_width, load_action,
                            normalize_moment, product_action, raw_level_gap,
                            run_all_checks)
from .errors import Error, HypothesisFailed, HypothesisFailure, InvalidInput, NotMonotone
from .grassmannian import GrassmannianSpec, grassmannian_action
from .lattice import content
from .polytope import load_polytope, monotone_normalize
from .seidel import seidel_structure
from .serialize import point_to_json

_HEADLINES = {
    SEMIFREE: "NOT SEMIFREE",
    ISOLATED_MAX: "MAX NOT ISOLATED",
    MONOTONE_CONSISTENCY: "NOT MONOTONE-CONSISTENT",
}


@dataclass(frozen=True)
class Source:
    kind: str
    path: str | None = None
    direction: tuple[int, ...] | None = None
    k: int | None = None
    m: int | None = None
    children: tuple["Source", ...] = ()


@dataclass(frozen=True)
class Resolved:
    action: ActionData
    spec: toric.SubcircleSpec | None = None   # present only for toric sources


def _parse_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(p.strip()) for p in text.split(","))
    except ValueError as exc:
        raise InvalidInput(f"{flag}: expected comma-separated integers, got {text!r}") from exc


def _parse_direction(text: str) -> tuple[int, ...]:
    xi = _parse_ints(text, "--dir")
    if all(c == 0 for c in xi):
        raise InvalidInput("--dir: direction must be nonzero")
    g = content(xi)
    if g != 1:
        raise InvalidInput(f"--dir: direction {text} is not primitive (gcd {g})")
    return xi


def _split_top(text: str) -> list[str]:
    """Split on commas outside parentheses."""
    parts, cur, depth = [], [], 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidInput(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise InvalidInput(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_source_expr(text: str) -> Source:
    """One source: grassmannian(k,m) | action(FILE) | toric(FILE,a,b,...) | product(...)."""
    text = text.strip()
    open_idx = text.find("(")
    if open_idx < 0 or not text.endswith(")"):
        raise InvalidInput(f"cannot parse source {text!r}; "
                           "expected kind(...) such as grassmannian(2,4)")
    name = text[:open_idx].strip()
    inner = text[open_idx + 1:-1]
    args = _split_top(inner) if inner.strip() else []
    if name == "grassmannian":
        if len(args) != 2:
            raise InvalidInput("grassmannian(k,m) takes exactly two integers")
        k, m = _parse_ints(",".join(args), "grassmannian")
        return Source("grassmannian", k=k, m=m)
    if name == "action":
        if len(args) != 1 or not args[0]:
            raise InvalidInput("action(FILE) takes exactly one path")
        return Source("action", path=args[0])
    if name == "toric":
        if len(args) < 2 or not args[0]:
            raise InvalidInput("toric(FILE,a,b,...) needs a path and a direction")
        return Source("toric", path=args[0],
                      direction=_parse_direction(",".join(args[1:])))
    if name == "product":
        if not args:
            raise InvalidInput("product(...) needs at least one source")
        return Source("product", children=tuple(parse_source_expr(a) for a in args))
    raise InvalidInput(f"unknown source kind {name!r}")


def resolve(source: Source) -> Resolved:
    if source.kind == "action":
        return Resolved(normalize_moment(load_action(source.path)))
    if source.kind == "grassmannian":
        return Resolved(grassmannian_action(GrassmannianSpec(source.k, source.m)))
    if source.kind == "toric":
        _, reflexive = monotone_normalize(load_polytope(source.path))
        spec = toric.SubcircleSpec(source.direction, reflexive, source=str(source.path))
        return Resolved(toric.toric_action(spec), spec)
    if source.kind == "product":
        return Resolved(product_action([resolve(c).action for c in source.children]))
    raise InvalidInput(f"unknown source kind {source.kind!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gromov-width",
        description="Gromov width of monotone manifolds with a semifree circle "
                    "action and isolated maximum, from fixed-point data.")
    sub = parser.add_subparsers(dest="command", required=True)
    commands = [
        ("width", "compute the width and the levels behind it"),
        ("check", "run the hypothesis checks and report each"),
        ("fixed", "list the fixed components with weights and moment values"),
        ("edges", "cross-check c1 = area = lattice length on toric edges"),
        ("seidel", "report the graded structure of the Seidel element"),
    ]
    for name, help_text in commands:
        p = sub.add_parser(name, help=help_text)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--action", metavar="FILE", help="action JSON file")
        group.add_argument("--toric", metavar="FILE", help="polytope JSON file")
        group.add_argument("--grassmannian", metavar="K,M", help="Grassmannian Gr(k,m)")
        group.add_argument("--product", metavar="SRC[,SRC...]",
                           help="product of sources, e.g. grassmannian(2,4),action(a.json)")
        p.add_argument("--dir", metavar="CSV", dest="direction",
                       help="subcircle direction for --toric; use --dir=-1,-2 for negatives")
        p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _source_from_args(args) -> Source:
    if args.direction is not None and not args.toric:
        raise InvalidInput("--dir only applies to --toric sources")
    if args.action:
        return Source("action", path=args.action)
    if args.toric:
        if args.direction is None:
            raise InvalidInput("--toric requires --dir")
        return Source("toric", path=args.toric, direction=_parse_direction(args.direction))
    if args.grassmannian:
        values = _parse_ints(args.grassmannian, "--grassmannian")
        if len(values) != 2:
            raise InvalidInput("--grassmannian takes k,m")
        return Source("grassmannian", k=values[0], m=values[1])
    children = tuple(parse_source_expr(t) for t in _split_top(args.product))
    return Source("product", children=children)


def _enrich(exc: HypothesisFailed, resolved: Resolved) -> HypothesisFailed:
    """Upgrade a semifree witness to facet level for toric sources; add the gap."""
    witness = exc.witness
    if resolved.spec is not None and exc.check == SEMIFREE:
        witness = toric.semifree_witness(resolved.spec) or witness
    gap = exc.raw_difference
    if gap is None:
        gap = raw_level_gap(normalize_moment(resolved.action))
    return HypothesisFailed(exc.check, witness, gap)


def _failure_line(check: str, witness: str, gap) -> str:
    line = f"{_HEADLINES.get(check, check)}: {witness}"
    if gap is not None:
        line += f"; raw H_max - s = {gap} (diagnostic only)"
    return line


def _run_width(action: ActionData) -> tuple[dict, str, int]:
    report = gromov_width(action)
    payload = {
        "command": "width",
        "width": report.width,
        "H_max": report.H_max,
        "s": report.s,
        "max_component": report.max_component,
        "second_level_components": list(report.second_level_components),
        "hypothesis_log": list(report.hypothesis_log),
    }
    lines = [
        f"Gromov width: {report.width}",
        f"H(F_max) = {report.H_max} ({report.max_component})",
        f"s = {report.s} ({', '.join(report.second_level_components)})",
        "checks passed: " + ", ".join(report.hypothesis_log),
    ]
    return payload, "\n".join(lines), 0


def _run_check(action: ActionData, resolved: Resolved) -> tuple[dict, str, int]:
    results = run_all_checks(action)
    if resolved.spec is not None:
        upgraded = []
        for r in results:
            if r.check == SEMIFREE and not r.passed:
                witness = toric.semifree_witness(resolved.spec) or r.witness
                r = CheckResult(r.check, False, witness)
            upgraded.append(r)
        results = upgraded
    lines = [f"{r.check}: PASS" if r.passed else f"{r.check}: FAIL ({r.witness})"
             for r in results]
    payload = {
        "command": "check",
        "results": [{"check": r.check, "passed": r.passed, "witness": r.witness}
                    for r in results],
    }
    failed = [r for r in results if not r.passed]
    if not failed:
        lines.append("all hypotheses hold")
        return payload, "\n".join(lines), 0
    gap = raw_level_gap(normalize_moment(action))
    payload["failure"] = {"check": failed[0].check, "witness": failed[0].witness,
                          "raw_difference": gap}
    lines.append(_failure_line(failed[0].check, failed[0].witness, gap))
    return payload, "\n".join(lines), 1


def _run_fixed(action: ActionData) -> tuple[dict, str, int]:
    data = action_to_json(action)
    payload = {"command": "fixed", "n": data["n"], "components": data["components"]}
    lines = [f"n = {data['n']}"]
    for comp in data["components"]:
        lines.append(f"{comp['label']}: complex_dim {comp['complex_dim']}, "
                     f"weights {comp['weights']}, H = {comp['H']}")
    return payload, "\n".join(lines), 0


def _run_edges(resolved: Resolved) -> tuple[dict, str, int]:
    if resolved.spec is None:
        raise InvalidInput("edges requires a --toric source")
    rows = toric.edge_cross_check(resolved.spec)
    payload = {"command": "edges", "edges": []}
    lines = []
    for row in rows:
        tail, head = row.edge.tail.position, row.edge.head.position
        payload["edges"].append({
            "tail": point_to_json(tail),
            "head": point_to_json(head),
            "direction": list(row.edge.direction),
            "c1": row.c1,
            "area": row.area,
            "lattice_length": row.lattice_length,
        })
        lines.append(f"edge {_fmt(tail)} -> {_fmt(head)}: direction {_fmt(row.edge.direction)}, "
                     f"c1 = {row.c1}, area = {row.area}, lattice_length = {row.lattice_length}")
    if not lines:
        lines = ["no edges with nonzero weight"]
    return payload, "\n".join(lines), 0


def _run_seidel(action: ActionData) -> tuple[dict, str, int]:
    structure = seidel_structure(action)
    payload = {
        "command": "seidel",
        "n": structure.n,
        "s": structure.s,
        "formula": structure.formula(),
        "entries": [{"index": e.index, "status": e.status.value,
                     "cohomology_degree": e.cohomology_degree,
                     "q_exponent": e.q_exponent} for e in structure.entries],
    }
    lines = [structure.formula(), f"n = {structure.n}", f"s = {structure.s}"]
    for entry in sorted(structure.entries, key=lambda e: -e.index):
        lines.append(f"a_{entry.index}: {entry.status.value}")
    return payload, "\n".join(lines), 0


def _fmt(seq) -> str:
    return "(" + ", ".join(str(c) for c in seq) + ")"


def _execute(args) -> tuple[dict, str, int]:
    resolved = resolve(_source_from_args(args))
    try:
        if args.command == "width":
            return _run_width(resolved.action)
        if args.command == "check":
            return _run_check(resolved.action, resolved)
        if args.command == "fixed":
            return _run_fixed(resolved.action)
        if args.command == "edges":
            return _run_edges(resolved)
        return _run_seidel(resolved.action)
    except HypothesisFailed as exc:
        raise _enrich(exc, resolved) from None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, text, code = _execute(args)
    except HypothesisFailed as exc:
        payload = {"command": args.command,
                   "error": {"kind": "hypothesis-failure", "check": exc.check,
                             "witness": exc.witness,
                             "raw_difference": exc.raw_difference}}
        text = _failure_line(exc.check, exc.witness, exc.raw_difference)
        code = 1
    except NotMonotone as exc:
        payload = {"command": args.command,
                   "error": {"kind": "NotMonotone", "message": str(exc)}}
        text = f"NOT MONOTONE: {exc}"
        code = 1
    except HypothesisFailure as exc:
        payload = {"command": args.command,
                   "error": {"kind": type(exc).__name__, "message": str(exc)}}
        text = f"hypothesis failure: {exc}"
        code = 1
    except (Error, OSError) as exc:
        payload = {"command": args.command,
                   "error": {"kind": type(exc).__name__, "message": str(exc)}}
        text = f"error: {exc}"
        code = 2
    print(json.dumps(payload, sort_keys=True) if args.format == "json" else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
