"""Command-line entry point.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 infeasible size.
All rationals are printed as ``p/q``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any

from . import cmcomplex, cochains, graphs, partitions, search, verify
from .errors import InfeasibleSizeError
from .partitions import format_rational

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3
JOBS_ENV = "CUTMIN_JOBS"


@dataclass
class CommandResult:
    command: str
    status: str = "ok"
    payload: Any = None
    message: str | None = None
    exit_code: int = EXIT_OK
    # commands whose natural output is not JSON (graph text, CSV, claim lines)
    text: str | None = field(default=None, repr=False)

    def render(self) -> str:
        if self.text is not None and self.status == "ok":
            return self.text
        out: dict[str, Any] = {"command": self.command, "status": self.status}
        if self.status == "ok":
            out["payload"] = self.payload
        else:
            out["message"] = self.message
        return json.dumps(out, indent=2, sort_keys=False) + "\n"


def _read_graph(path: str) -> graphs.Graph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return graphs.parse_graph(text)


def _jobs(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get(JOBS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _cut_json(rep: graphs.CutReport) -> dict:
    return {
        "cut_set": [v + 1 for v in rep.vertices()],
        "edges_across": rep.edges_across,
        "non_edges_across": rep.non_edges_across,
        "perfect": rep.perfect,
    }


# --- handlers -------------------------------------------------------------


def cmd_partition(args) -> CommandResult:
    lam = partitions.parse_partition(args.parts)
    return CommandResult("partition info", payload=partitions.info(lam))


def cmd_staircase(args) -> CommandResult:
    lam = partitions.parse_partition(args.parts)
    n = partitions.n_min(lam) if args.n is None else args.n
    return CommandResult("staircase", text=graphs.format_graph(graphs.staircase(n, lam)))


def cmd_check_cutmin(args) -> CommandResult:
    g = _read_graph(args.graph)
    witness = graphs.check_cut_minimal(g)
    payload = {"cut_minimal": witness is None}
    if witness is not None:
        payload["witness"] = _cut_json(witness)
    return CommandResult("check-cutmin", payload=payload)


def cmd_hgraph(args) -> CommandResult:
    g = _read_graph(args.graph)
    h = graphs.h_graph(g)
    payload = {
        "n": g.n,
        "edges": g.edge_count,
        "odd_triangles": graphs.count_odd_triangles(g),
        "h": format_rational(h),
        "h_minus_n_over_3": format_rational(h - g.n * partitions.Fraction(1, 3)),
    }
    if args.approx:
        payload["approx"] = f"{float(h):.6f}"
    return CommandResult("hgraph", payload=payload)


def cmd_blowup(args) -> CommandResult:
    g = _read_graph(args.graph)
    return CommandResult("blowup", text=graphs.format_graph(graphs.blowup_graph(g, args.c)))


def cmd_mw_cert(args) -> CommandResult:
    g = _read_graph(args.graph)
    cert = graphs.mw_certificate(g)
    payload = {
        "M_total": cert.total,
        "M_v": list(cert.per_vertex),
        "edges": cert.edge_count,
        "bound_holds": cert.holds,
        "sharp": cert.sharp,
    }
    return CommandResult("mw-cert", payload=payload)


def cmd_cochain_hk(args) -> CommandResult:
    res = cochains.cheeger_constant(args.n, args.k, not args.no_augment)
    payload = res.to_json()
    if args.k == 0:
        other = cochains.cheeger_constant(args.n, 0, args.no_augment).value
        payload["augmented"] = not args.no_augment
        payload["h_other_convention"] = format_rational(other)
        payload["conventions_differ"] = other != res.value
    return CommandResult("cochain hk", payload=payload)


def cmd_cm(args) -> CommandResult:
    s = cmcomplex.summary(args.n, betti=args.betti, maximal=args.maximal)
    return CommandResult("cm", payload=s.to_json())


def cmd_search(args) -> CommandResult:
    jobs = _jobs(args)
    rep = search.cheeger_number(args.n, jobs)
    payload = rep.to_json(timing=args.timing)
    payload["num_cheeger_graphs"] = len(rep.cheeger_graphs)
    if not args.all_cheeger:
        payload["cheeger_graphs"] = payload["cheeger_graphs"][:1]
    if args.conjectures:
        rep_c = search.conjecture_report(args.n, jobs)
        payload["conjectures"] = {
            "all_triangle_free": rep_c["all_triangle_free"],
            "all_bipartite": rep_c["all_bipartite"],
            "non_staircase": rep_c["non_staircase"],
        }
    return CommandResult("search", payload=payload)


def cmd_table(args) -> CommandResult:
    rows = search.h_table(args.n_max, jobs=_jobs(args))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["n", "lower", "upper", "exact", "source"]
    if args.approx:
        header.append("approx")
    writer.writerow(header)
    for r in rows:
        row = [
            r.n,
            format_rational(r.lower),
            format_rational(r.upper),
            "" if r.exact is None else format_rational(r.exact),
            r.source,
        ]
        if args.approx:
            row.append(f"{float(r.upper - r.lower):.6f}")
        writer.writerow(row)
    return CommandResult("table", text=buf.getvalue())


def cmd_verify(args) -> CommandResult:
    if args.target != "paper":
        raise _Usage(f"unknown verification target {args.target!r}; expected 'paper'")
    lines, failed = [], 0
    for _, claim in verify.run_all(_jobs(args)):
        lines.append(claim.line())
        failed += not claim.passed
    lines.append(f"# {len(lines) - failed}/{len(lines)} claims passed")
    res = CommandResult("verify paper", text="\n".join(lines) + "\n")
    if failed:
        res.exit_code = EXIT_VERIFY
    return res


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 on its own; keep the message uniform
        self.print_usage(sys.stderr)
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cutmin", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--seed", type=int, default=None, help="accepted and ignored")
    parser.add_argument("--jobs", type=int, default=None, help=f"worker processes (env {JOBS_ENV})")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("partition", help="partition calculus")
    p.add_argument("action", choices=["info"])
    p.add_argument("parts", help="e.g. 3,3,1 or 3^2,1")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("staircase", help="emit the staircase graph of a partition")
    p.add_argument("parts")
    p.add_argument("-n", type=int, default=None, help="vertex count (default: minimal legal n)")
    p.set_defaults(func=cmd_staircase)

    for name, func, helptext in (
        ("check-cutmin", cmd_check_cutmin, "cut-minimality with witness"),
        ("hgraph", cmd_hgraph, "expansion functional h(G)"),
        ("mw-cert", cmd_mw_cert, "per-vertex lower-bound certificate"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("graph", help="edge-list file, or - for stdin")
        if name == "hgraph":
            p.add_argument("--approx", action="store_true", help="add a decimal approximation")
        p.set_defaults(func=func)

    p = sub.add_parser("blowup", help="replace each vertex by c clones")
    p.add_argument("graph")
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("cochain", help="brute-force cochain computations")
    p.add_argument("action", choices=["hk"])
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--no-augment", action="store_true")
    p.set_defaults(func=cmd_cochain_hk)

    p = sub.add_parser("cm", help="complex of cut-minimal graphs")
    p.add_argument("n", type=int)
    p.add_argument("--betti", action="store_true")
    p.add_argument("--maximal", action="store_true")
    p.set_defaults(func=cmd_cm)

    p = sub.add_parser("search", help="exact h(n) by exhaustive search")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=None, dest="jobs_sub")
    p.add_argument("--all-cheeger", action="store_true")
    p.add_argument("--conjectures", action="store_true")
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="bounds on h(n) as CSV")
    p.add_argument("n_max", type=int)
    p.add_argument("--approx", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="recompute the numeric claims")
    p.add_argument("target")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs_sub", None) is not None:
            args.jobs = args.jobs_sub
        if not getattr(args, "func", None):
            raise _Usage("missing command")
        return args.func(args)
    except _Usage as exc:
        return CommandResult(" ".join(argv[:2]), "error", message=f"usage: {exc}", exit_code=EXIT_USAGE)
    except InfeasibleSizeError as exc:
        return CommandResult(" ".join(argv[:2]), "error", message=str(exc), exit_code=EXIT_INFEASIBLE)
    except (ValueError, OSError) as exc:
        return CommandResult(" ".join(argv[:2]), "error", message=str(exc), exit_code=EXIT_USAGE)


def main(argv: list[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if res.status == "ok" else sys.stderr
    stream.write(res.render())
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
