"""Command-line front end.

Verbs: construct, cutsets, check, invariants, gadget, scan, export.  Graph
arguments accept inline names (K5, P3, C4), file paths, or ``-`` for stdin;
formats are sniffed from the extension and content unless ``--format`` is
given.  A JSON file with ``base``/``L``/``pendant`` keys is a corona
specification and stands for its constructed product.  Validation and bound
errors exit nonzero with a machine-readable JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bms import ReductionCheck, bms_scan, verify_reduction_d2, verify_reduction_d3
from .cas import emit_cas_script
from .corona import (
    CoronaSpec,
    corona,
    corona_spec_from_json,
    gadget_d2,
    gadget_d3,
    l_corona,
)
from .cutsets import (
    EnumerationBoundError,
    accessibility_witness_chain,
    enumerate_cutsets,
    is_cutset,
    iter_cutsets,
)
from .graph import Graph, complete_graph, cone, is_cm_closed, members, vset
from .invariants import (
    BaseInvariants,
    base_invariants_block_graph,
    depth_reg_corona_cm_closed,
    depth_reg_corona_complete,
    depth_reg_corona_path,
)
from .io import (
    format_edge_list,
    from_graph6,
    graph_from_json,
    graph_from_name,
    graph_to_json,
    is_graph_name,
    parse_edge_list,
    to_dot,
    to_graph6,
)

GRAPH_FORMATS = ("graph6", "edgelist", "json", "spec-json")


def _sniff_format(source: str, text: str) -> str:
    lower = source.lower()
    if lower.endswith((".g6", ".graph6")):
        return "graph6"
    if lower.endswith(".json"):
        return "json"
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if " " in first.strip() or "\t" in first:
        return "edgelist"
    return "graph6"


def _graph_arg(token: str, fmt: str | None = None) -> Graph:
    """Resolve a graph argument: inline name, file path, or '-' for stdin."""
    if fmt is None and is_graph_name(token):
        return graph_from_name(token)
    if token == "-":
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        path = Path(token)
        if not path.exists():
            if is_graph_name(token):
                return graph_from_name(token)
            raise ValueError(f"no such file or graph name: {token}")
        text = path.read_text()
        source = token
    fmt = fmt or _sniff_format(source, text)
    if fmt == "graph6":
        line = next((ln for ln in text.splitlines() if ln.strip()), "")
        return from_graph6(line)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt in ("json", "spec-json"):
        obj = json.loads(text)
        if {"base", "L", "pendant"} <= obj.keys():
            return l_corona(corona_spec_from_json(obj))[0]
        return graph_from_json(obj)
    raise ValueError(f"unknown input format {fmt!r}")


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _render_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    if fmt == "edgelist":
        return format_edge_list(g)
    if fmt == "json":
        return json.dumps(graph_to_json(g), indent=2) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")


def _labels(g: Graph, mask: int) -> list[str]:
    return [g.label(v) for v in members(mask)]


# ---------------------------------------------------------------------------
# verbs


def _cmd_construct(args) -> int:
    if args.corona:
        base = _graph_arg(args.corona[0], args.format)
        pend = _graph_arg(args.corona[1], args.format)
        g = corona(base, pend)[0]
    elif args.l_corona:
        base = _graph_arg(args.l_corona[0], args.format)
        pend = _graph_arg(args.l_corona[1], args.format)
        if not args.attach:
            raise ValueError("--l-corona needs --attach with base vertex indices")
        attach = vset(int(tok) for tok in args.attach.split(","))
        g = l_corona(CoronaSpec(base, attach, pend))[0]
    elif args.cone:
        g = cone(_graph_arg(args.cone, args.format))
    else:
        raise ValueError("choose one of --corona, --l-corona, --cone")
    _write_out(_render_graph(g, args.out), args.output)
    return 0


def _cmd_cutsets(args) -> int:
    g = _graph_arg(args.input, args.format)
    if args.out == "jsonl":
        lines = []
        for mask, w in iter_cutsets(g, args.bound):
            if args.size_cap is not None and mask.bit_count() > args.size_cap:
                continue
            lines.append(
                json.dumps({"cutset": members(mask), "components": w}) + "\n"
            )
        _write_out("".join(lines), args.output)
        return 0
    report = enumerate_cutsets(g, size_cap=args.size_cap, bound=args.bound)
    _write_out(json.dumps(report.to_json(), indent=2) + "\n", args.output)
    return 0


def _stuck_cutset(g: Graph, bound: int | None) -> int | None:
    """First nonempty cutset with no single-vertex removal staying a cutset."""
    report = enumerate_cutsets(g, bound=bound)
    family = set(report.cutsets)
    for mask in report.cutsets:
        if mask and not any((mask ^ (1 << v)) in family for v in members(mask)):
            return mask
    return None


def _cmd_check(args) -> int:
    g = _graph_arg(args.input, args.format)
    result: dict
    if args.unmixed:
        report = enumerate_cutsets(g, bound=args.bound)
        result = {"check": "unmixed", "value": report.is_unmixed}
        if not report.is_unmixed:
            w0 = report.base_components
            for mask, w in zip(report.cutsets, report.per_cutset_components):
                if w != mask.bit_count() + w0:
                    result["witness"] = _labels(g, mask)
                    result["witness_components"] = w
                    result["expected_components"] = mask.bit_count() + w0
                    break
    elif args.accessible:
        report = enumerate_cutsets(g, bound=args.bound)
        value = report.is_unmixed and report.is_accessible_system
        result = {"check": "accessible", "value": value}
        if not report.is_unmixed:
            result["reason"] = "not-unmixed"
        elif not report.is_accessible_system:
            stuck = _stuck_cutset(g, args.bound)
            result["reason"] = "no-removable-vertex"
            result["witness"] = _labels(g, stuck)
    elif args.accessible_system:
        report = enumerate_cutsets(g, bound=args.bound)
        result = {"check": "accessible-system", "value": report.is_accessible_system}
        if not report.is_accessible_system:
            result["witness"] = _labels(g, _stuck_cutset(g, args.bound))
    elif args.cutset is not None:
        mask = vset(int(tok) for tok in args.cutset.split(",") if tok != "")
        value = is_cutset(g, mask)
        result = {"check": "cutset", "set": _labels(g, mask), "value": value}
        if value and args.chain:
            chain = accessibility_witness_chain(g, mask)
            result["witness_chain"] = None if chain is None else [g.label(v) for v in chain]
    elif args.cm_closed:
        result = {"check": "cm-closed", "value": is_cm_closed(g)}
    else:
        raise ValueError("choose a check: --unmixed, --accessible, --accessible-system, --cutset, --cm-closed")
    _write_out(json.dumps(result, indent=2) + "\n", args.output)
    return 0


def _base_record(args) -> tuple[BaseInvariants, Graph | None]:
    pendant_graph = None
    if args.pendant_graph:
        pendant_graph = _graph_arg(args.pendant_graph, args.format)
    if args.pendant_block_graph:
        g = _graph_arg(args.pendant_block_graph, args.format)
        if pendant_graph is None:
            pendant_graph = g
        return base_invariants_block_graph(g, bound=args.bound), pendant_graph
    if args.pendant_base_json:
        obj = json.loads(Path(args.pendant_base_json).read_text())
        return BaseInvariants.from_json(obj), pendant_graph
    raise ValueError("supply pendant data: --pendant-block-graph or --pendant-base-json")


def _cmd_invariants(args) -> int:
    base, pendant_graph = _base_record(args)
    family = args.family
    product = None
    if family == "full-corona":
        if args.n is None:
            raise ValueError("--family full-corona needs --n")
        report = depth_reg_corona_complete(args.n, args.n, base)
        if pendant_graph is not None:
            product = corona(complete_graph(args.n), pendant_graph)[0]
    elif family == "l-corona":
        if args.n is None or args.ell is None:
            raise ValueError("--family l-corona needs --n and --ell")
        report = depth_reg_corona_complete(args.n, args.ell, base)
        if pendant_graph is not None:
            spec = CoronaSpec(
                complete_graph(args.n), (1 << args.ell) - 1, pendant_graph
            )
            product = l_corona(spec)[0]
    elif family == "cm-closed":
        if not args.b_graph:
            raise ValueError("--family cm-closed needs --b-graph")
        b_graph = _graph_arg(args.b_graph, args.format)
        report = depth_reg_corona_cm_closed(b_graph, base, pendant_graph, args.bound)
        if pendant_graph is not None:
            product = corona(b_graph, pendant_graph)[0]
    elif family == "path":
        if args.n is None:
            raise ValueError("--family path needs --n")
        report = depth_reg_corona_path(args.n, base, pendant_graph, args.bound)
        if pendant_graph is not None:
            from .graph import path_graph

            product = corona(path_graph(args.n), pendant_graph)[0]
    else:
        raise ValueError(f"unknown family {family!r}")

    if args.emit_cas:
        if product is None:
            raise ValueError("--emit-cas needs a pendant graph (--pendant-block-graph or --pendant-graph)")
        expected = {"family": report.family}
        for key, value in (
            ("dim", report.dim_q),
            ("depth", report.depth_q),
            ("reg", report.reg_q),
            ("pd", report.pd),
            ("cmdef", report.cmdef),
        ):
            if value is not None:
                expected[key] = value
        for key, verdict in report.verdicts.items():
            if verdict.value is not None:
                expected[key] = verdict.value
        script = emit_cas_script(product, dialect=args.dialect, expected=expected)
        Path(args.emit_cas).write_text(script.text)

    _write_out(json.dumps(report.to_json(), indent=2) + "\n", args.output)
    return 0


def _cmd_gadget(args) -> int:
    h = _graph_arg(args.input, args.format)
    build = gadget_d2 if args.kind == "d2" else gadget_d3
    if args.verify:
        verify = verify_reduction_d2 if args.kind == "d2" else verify_reduction_d3
        check: ReductionCheck = verify(h, args.bound)
        payload = {
            "kind": args.kind,
            "gadget_vertices": build(h).n,
            "diameter_ok": check.diameter_ok,
            "accessible_transfer_ok": check.accessible_transfer_ok,
        }
        if check.distance_cases_ok is not None:
            payload["distance_cases_ok"] = check.distance_cases_ok
        _write_out(json.dumps(payload, indent=2) + "\n", args.output)
        return 0
    _write_out(_render_graph(build(h), args.out), args.output)
    return 0


def _cmd_scan(args) -> int:
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        lines = Path(args.input).read_text().splitlines()
    diameters = None
    if args.diameter:
        diameters = {int(tok) for tok in args.diameter.split(",") if tok != ""}

    def on_error(lineno: int, message: str) -> None:
        sys.stderr.write(json.dumps({"line": lineno, "error": message}) + "\n")

    out_lines = []
    for record in bms_scan(
        lines,
        diameters=diameters,
        max_n=args.max_n,
        bound=args.bound,
        script_dir=args.scripts_dir,
        dialect=args.dialect,
        jobs=args.jobs,
        on_error=on_error,
    ):
        out_lines.append(json.dumps(record.to_json()) + "\n")
    _write_out("".join(out_lines), args.output)
    return 0


def _cmd_export(args) -> int:
    g = _graph_arg(args.input, args.format)
    if args.out == "cas":
        expected = None
        if args.oracle_expected:
            report = enumerate_cutsets(g, bound=args.bound)
            expected = {
                "dim": report.oracle_dimension,
                "unmixed": report.is_unmixed,
                "accessible": report.is_unmixed and report.is_accessible_system,
            }
        script = emit_cas_script(g, dialect=args.dialect, expected=expected)
        _write_out(script.text, args.output)
        return 0
    _write_out(_render_graph(g, args.out), args.output)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser, input_flag: bool = True) -> None:
    if input_flag:
        p.add_argument("--input", "-i", required=True, help="graph: name, file, or -")
    p.add_argument("--format", choices=GRAPH_FORMATS, help="force the input format")
    p.add_argument("--bound", type=int, help="enumeration cap (default: BEI_BOUND or 24)")
    p.add_argument("--output", "-o", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bei",
        description="Cutset combinatorics and invariant formulas for binomial edge ideals of corona-type products.",
    )
    parser.add_argument("--version", action="version", version=f"bei {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="build corona products and cones")
    p.add_argument("--corona", nargs=2, metavar=("BASE", "PENDANT"))
    p.add_argument("--l-corona", nargs=2, metavar=("BASE", "PENDANT"))
    p.add_argument("--attach", help="comma-separated base vertices carrying copies")
    p.add_argument("--cone", metavar="GRAPH")
    p.add_argument("--out", choices=("graph6", "dot", "edgelist", "json"), default="graph6")
    _add_common(p, input_flag=False)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("cutsets", help="enumerate all cutsets with verdicts")
    p.add_argument("--size-cap", type=int)
    p.add_argument("--out", choices=("json", "jsonl"), default="json")
    _add_common(p)
    p.set_defaults(func=_cmd_cutsets)

    p = sub.add_parser("check", help="combinatorial verdicts for one graph")
    p.add_argument("--unmixed", action="store_true")
    p.add_argument("--accessible", action="store_true")
    p.add_argument("--accessible-system", action="store_true")
    p.add_argument("--cutset", help="comma-separated vertices to test")
    p.add_argument("--chain", action="store_true", help="with --cutset: also search a removal chain")
    p.add_argument("--cm-closed", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("invariants", help="closed-form invariant reports")
    p.add_argument("--family", required=True, choices=("full-corona", "l-corona", "cm-closed", "path"))
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--b-graph", help="clique-path base graph (cm-closed family)")
    p.add_argument("--pendant-block-graph", help="pendant graph with block-graph closed forms")
    p.add_argument("--pendant-base-json", help="user-supplied pendant invariants (JSON file)")
    p.add_argument("--pendant-graph", help="pendant graph for oracle dimension / script emission")
    p.add_argument("--emit-cas", help="also write a verification script for the product")
    p.add_argument("--dialect", choices=("m2", "singular"), default="m2")
    _add_common(p, input_flag=False)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("gadget", help="diameter-2/3 wrappers and their verification")
    p.add_argument("--kind", required=True, choices=("d2", "d3"))
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out", choices=("graph6", "dot", "edgelist", "json"), default="graph6")
    _add_common(p)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("scan", help="classify a graph6 corpus (JSON lines out)")
    p.add_argument("--diameter", help="comma-separated diameters to keep")
    p.add_argument("--max-n", type=int)
    p.add_argument("--scripts-dir", help="emit a verification script per accessible graph")
    p.add_argument("--dialect", choices=("m2", "singular"), default="m2")
    p.add_argument("--jobs", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("export", help="convert a graph between formats")
    p.add_argument("--out", choices=("graph6", "dot", "edgelist", "json", "cas"), default="graph6", required=False)
    p.add_argument("--dialect", choices=("m2", "singular"), default="m2")
    p.add_argument("--oracle-expected", action="store_true", help="with --out cas: embed oracle verdicts")
    _add_common(p)
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationBoundError as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": "bound-exceeded"}) + "\n")
        return 1
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": "invalid-input"}) + "\n")
        return 1
    except OSError as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": "io-error"}) + "\n")
        return 1


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
