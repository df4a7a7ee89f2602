"""Command-line interface: verify theorems over sweeps or input files,
compute brute-force Turan numbers, and run conjecture searches.

Exit codes: 0 clean, 1 mathematical violation or equality-characterization
disagreement (witness dumped), 2 usage error or malformed input.  All logic
lives in the library modules; this is a thin shell over them.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import os
import sys

from . import hypergraphs as hg
from .enumeration import (
    Pattern,
    nonisomorphic_graphs,
    nonisomorphic_graphs_by_edges,
    pattern_by_name,
    pattern_from_edge_list,
)
from .graphs import Graph, from_edge_list_text, from_graph6, to_graph6
from .search import CONJECTURES, search_conjecture, turan_number
from .verify import (
    CSV_COLUMNS,
    DERIVED_THEOREMS,
    HYPERGRAPH_THEOREMS,
    LOCAL_THEOREMS,
    VerificationReport,
    report_to_csv_row,
    report_to_dict,
    report_to_human,
    sweep_verify,
    verify_hypergraph,
)

GRAPH_THEOREMS = LOCAL_THEOREMS + DERIVED_THEOREMS


def _load_pattern(spec: str) -> Pattern:
    if os.path.exists(spec):
        with open(spec) as fh:
            name = os.path.splitext(os.path.basename(spec))[0]
            return pattern_from_edge_list(name, fh.read())
    return pattern_by_name(spec)


def _read_graphs(path: str, fmt: str | None) -> list[Graph]:
    if fmt is None:
        fmt = "edgelist" if path.endswith((".el", ".edges", ".txt")) else "graph6"
    with open(path) as fh:
        text = fh.read()
    if fmt == "edgelist":
        return [from_edge_list_text(text)]
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


def _collect_params(args: argparse.Namespace) -> dict:
    params: dict = {}
    for key in ("t", "u", "r", "i"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    if getattr(args, "x_cap", None) is not None:
        params["x_cap"] = args.x_cap
    if getattr(args, "pattern", None) is not None:
        params["pattern"] = _load_pattern(args.pattern)
    return params


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_reports(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([report_to_dict(r) for r in reports], indent=2,
                          sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(CSV_COLUMNS)
        for rep in reports:
            writer.writerow(report_to_csv_row(rep))
        return buf.getvalue()
    lines = [report_to_human(rep) for rep in reports]
    bad = [rep for rep in reports if rep.failed]
    lines.append(
        f"# {len(reports)} reports, {len(bad)} failures "
        f"({sum(1 for r in reports if r.status == 'NOT-APPLICABLE')} not applicable)"
    )
    return "\n".join(lines) + "\n"


def _verify_worker(task: tuple[str, str, dict]) -> VerificationReport:
    g6, theorem, params = task
    if params.get("pattern") is not None:
        params = dict(params)
        params["pattern"] = _load_pattern(params["pattern"])
    return sweep_verify(theorem, params, [from_graph6(g6)])[0]


def _cmd_verify(args: argparse.Namespace) -> int:
    theorem = args.theorem
    if theorem in HYPERGRAPH_THEOREMS:
        if not args.input:
            raise ValueError(f"theorem {theorem} needs --input with a hypergraph file")
        with open(args.input) as fh:
            h = hg.from_hypergraph_text(fh.read())
        params = {k: v for k, v in (("t", args.t), ("i", args.i)) if v is not None}
        if args.x_cap is not None:
            params["x_cap"] = args.x_cap
        reports = [verify_hypergraph(h, theorem, **params)]
    else:
        if theorem not in GRAPH_THEOREMS:
            raise ValueError(f"unknown theorem {args.theorem!r}")
        if args.sweep_n is not None:
            graphs = list(nonisomorphic_graphs(args.sweep_n))
        elif args.sweep_m is not None:
            graphs = list(nonisomorphic_graphs_by_edges(args.sweep_m))
        elif args.input:
            graphs = _read_graphs(args.input, args.input_format)
        else:
            raise ValueError("need one of --sweep-n, --sweep-m, --input")
        params = _collect_params(args)
        if args.threads > 1 and len(graphs) > 1:
            raw = dict(params)
            if isinstance(raw.get("pattern"), Pattern):
                raw["pattern"] = args.pattern  # re-resolved in the worker
            tasks = [(to_graph6(g), theorem, raw) for g in graphs]
            with multiprocessing.Pool(args.threads) as pool:
                reports = pool.map(_verify_worker, tasks)
            reports.sort(key=lambda rep: rep.graph_id)
        else:
            reports = sweep_verify(theorem, params, graphs)
    _emit(_render_reports(reports, args.format), args.output)
    return 1 if any(rep.failed for rep in reports) else 0


def _cmd_turan(args: argparse.Namespace) -> int:
    budget = args.n if args.mode == "ex" else args.m
    if budget is None:
        raise ValueError("ex mode needs --n, mex mode needs --m")
    result = turan_number(
        args.mode, budget, _load_pattern(args.target), _load_pattern(args.forbid)
    )
    if args.format == "human":
        text = (
            f"{args.mode}({budget}, {args.target}, {args.forbid}) = {result['value']}\n"
            f"extremal: {' '.join(result['extremal'])}\n"
            f"checked {result['checked_classes']} classes "
            f"in {result['runtime_ms']} ms\n"
        )
    else:
        stable = {k: v for k, v in result.items() if k != "runtime_ms"}
        text = json.dumps(stable, indent=2, sort_keys=True) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.t is not None:
        t_values = (args.t,)
    else:
        t_values = tuple(range(2, (args.t_max or 4) + 1))
    findings = search_conjecture(
        args.conjecture,
        n_max=args.sweep_n or 6,
        m_max=args.sweep_m,
        t_values=t_values,
        hyper_n_max=args.n_max or 5,
    )
    if args.format == "human":
        lines = [
            f"conjecture {findings['conjecture']}: "
            f"{len(findings['violations'])} violations, "
            f"{len(findings['tight_cases'])} tight cases, "
            f"{findings['checked']} classes checked"
        ]
        for v in findings["violations"]:
            lines.append(f"VIOLATION {json.dumps(v, sort_keys=True)}")
        for tc in findings["tight_cases"]:
            lines.append(f"tight {json.dumps(tc, sort_keys=True)}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(findings, indent=2, sort_keys=True) + "\n"
    _emit(text, args.output)
    return 1 if findings["violations"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localturan",
        description="Localized clique/path/star/cycle weight bounds: "
        "verify, brute-force, and search on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")

    p_verify = sub.add_parser(
        "verify", parents=[common], help="verify a theorem over a sweep or input file"
    )
    p_verify.add_argument("--theorem", required=True,
                          choices=GRAPH_THEOREMS + HYPERGRAPH_THEOREMS)
    p_verify.add_argument("--t", type=int)
    p_verify.add_argument("--u", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--q", type=int, help="uniformity (hypergraph input)")
    p_verify.add_argument("--i", type=int)
    p_verify.add_argument("--x-cap", dest="x_cap", type=float)
    p_verify.add_argument("--pattern", help="catalog name (K3, P4, S3, C5, paw, diamond) or edge-list file")
    p_verify.add_argument("--sweep-n", dest="sweep_n", type=int,
                          help="sweep all isomorphism classes on exactly N vertices")
    p_verify.add_argument("--sweep-m", dest="sweep_m", type=int,
                          help="sweep all isomorphism classes with exactly M edges, no isolated vertices")
    p_verify.add_argument("--input", metavar="FILE",
                          help="graph6 lines, edge-list, or hypergraph text file")
    p_verify.add_argument("--input-format", dest="input_format",
                          choices=("graph6", "edgelist"))
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)

    p_turan = sub.add_parser(
        "turan", parents=[common], help="brute-force a generalized Turan number"
    )
    p_turan.add_argument("--mode", choices=("ex", "mex"), required=True)
    p_turan.add_argument("--n", type=int, help="vertex budget (ex mode)")
    p_turan.add_argument("--m", type=int, help="edge budget (mex mode)")
    p_turan.add_argument("--target", required=True)
    p_turan.add_argument("--forbid", required=True)
    p_turan.set_defaults(func=_cmd_turan)

    p_search = sub.add_parser(
        "search", parents=[common], help="exhaustive counterexample search for a conjecture"
    )
    p_search.add_argument("--conjecture", required=True, choices=CONJECTURES)
    p_search.add_argument("--sweep-n", dest="sweep_n", type=int,
                          help="search all graphs with up to N vertices")
    p_search.add_argument("--sweep-m", dest="sweep_m", type=int,
                          help="also search all edge classes with up to M edges")
    p_search.add_argument("--t", type=int, help="single clique size")
    p_search.add_argument("--t-max", dest="t_max", type=int,
                          help="clique sizes 2..T (default 4)")
    p_search.add_argument("--n-max", dest="n_max", type=int,
                          help="hypergraph vertex cap (hypergraph-m)")
    p_search.add_argument("--q", type=int, default=3, help="uniformity (hypergraph-m)")
    p_search.set_defaults(func=_cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
