"""Command-line entry point.

One graph per line throughout: graph6 corpora stream, edge-list files hold a
single graph. All subcommands are deterministic for fixed inputs and flags;
corpus work fans out to SUBSEC_THREADS workers without changing the output.

Exit codes: 0 done, 2 violations found under --fail-on-violation, 64 usage
error, 65 parse error (reported with its line number).
"""

from __future__ import annotations

import argparse
import sys

from . import bounds
from .certificates import (
    CertificateError,
    cert_fifth,
    cert_general,
    cert_half,
    cert_quarter,
    cert_star,
    cert_third,
)
from .graphs import (
    FAMILIES,
    Graph,
    GraphError,
    ParseError,
    emit_edgelist,
    emit_graph6,
    enumerate_connected,
    generate,
    iter_graph6,
    parse_edgelist,
)
from .solver import SolverBudget, gamma_exact, gamma_s_exact
from .subdivision import subdivide

EX_USAGE = 64
EX_DATAERR = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_budget_flags(sub):
    sub.add_argument("--max-vertices", type=int, default=SolverBudget.max_vertices)
    sub.add_argument("--max-nodes", type=int, default=SolverBudget.max_nodes)
    sub.add_argument("--time-ms", type=int, default=SolverBudget.time_ms)


def _add_input_flags(sub, name="--input"):
    sub.add_argument(name, default="-", help="file path, or - for stdin")
    sub.add_argument("--format", choices=("g6", "edges"), default="g6")


def build_parser() -> _Parser:
    parser = _Parser(prog="subsec", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="emit a named graph")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--format", choices=("g6", "edges"), default="g6")

    enum = commands.add_parser("enum", help="all connected graphs on n vertices, one per class")
    enum.add_argument("--n", type=int, required=True)

    sub = commands.add_parser("subdivide", help="replace each edge with a k-edge path")
    _add_input_flags(sub)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--labels", action="store_true",
                     help="append the id->label table as comments (edges format only)")

    for name in ("gamma", "gamma-s"):
        solv = commands.add_parser(name, help=f"exact {name.replace('-', '_')} of each input graph")
        _add_input_flags(solv)
        solv.add_argument("--naive", action="store_true")
        _add_budget_flags(solv)

    cert = commands.add_parser("cert", help="build and validate a certificate construction")
    _add_input_flags(cert)
    cert.add_argument("--theorem", choices=("half", "star", "third", "quarter", "fifth", "general"),
                      required=True)
    cert.add_argument("--k", type=int, help="subdivision parameter for --theorem star (2 or 3)")
    cert.add_argument("-n", type=int, dest="n", help="subdivision parameter for --theorem general")

    verify = commands.add_parser("verify", help="grade claimed bounds over a corpus")
    verify.add_argument("--corpus", default="-", help="file path, or - for stdin")
    verify.add_argument("--format", choices=("g6", "edges"), default="g6")
    verify.add_argument("--theorem", action="append", required=True,
                        help="theorem id (repeatable or comma-separated)")
    verify.add_argument("-n", type=int, dest="n", help="subdivision parameter for g16/r024")
    verify.add_argument("--output", choices=("tsv", "jsonl", "text"), default="tsv")
    verify.add_argument("--naive", action="store_true")
    verify.add_argument("--fail-on-violation", action="store_true")
    _add_budget_flags(verify)

    conj = commands.add_parser("conjecture", help="scan a corpus for ratio gamma_s(G^{1/2})/|V|")
    conj.add_argument("--corpus", default="-")
    conj.add_argument("--format", choices=("g6", "edges"), default="g6")
    conj.add_argument("--output", choices=("tsv", "jsonl", "text"), default="tsv")
    conj.add_argument("--naive", action="store_true")
    _add_budget_flags(conj)

    return parser


def _read_stream(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _read_graphs(path: str, fmt: str) -> list[tuple[str, Graph]]:
    """(graph_id, Graph) pairs: one per nonblank line for g6, one per file
    for edge lists. graph_id is the input g6 line, or the emitted g6 of a
    parsed edge list."""
    text = _read_stream(path)
    if fmt == "edges":
        g = parse_edgelist(text)
        return [(emit_graph6(g), g)]
    pairs = []
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = next(iter_graph6([line]))
        except ParseError as exc:
            raise ParseError(str(exc), line_number=lineno) from None
        gid = line[len(">>graph6<<"):] if line.startswith(">>graph6<<") else line
        pairs.append((gid, g))
    return pairs


def _emit_graph(g: Graph, fmt: str, out) -> None:
    if fmt == "g6":
        print(emit_graph6(g), file=out)
    else:
        out.write(emit_edgelist(g))


def _budget(args) -> SolverBudget:
    return SolverBudget(max_vertices=args.max_vertices, max_nodes=args.max_nodes,
                        time_ms=args.time_ms)


def _cmd_gen(args, out) -> int:
    g = generate(args.family, args.n, p=args.p, seed=args.seed)
    _emit_graph(g, args.format, out)
    return 0


def _cmd_enum(args, out) -> int:
    for g in enumerate_connected(args.n):
        print(emit_graph6(g), file=out)
    return 0


def _cmd_subdivide(args, out) -> int:
    if args.labels and args.format != "edges":
        raise _UsageError("--labels requires --format edges")
    for _, g in _read_graphs(args.input, args.format):
        sm = subdivide(g, args.k)
        _emit_graph(sm.derived, args.format, out)
        if args.labels:
            for vid in range(sm.derived.n):
                print(f"# label {vid}\t{sm.label(vid)}", file=out)
    return 0


def _cmd_solve(args, out, secure: bool) -> int:
    budget = _budget(args)
    solve = gamma_s_exact if secure else gamma_exact
    for _, g in _read_graphs(args.input, args.format):
        res = solve(g, budget, naive=args.naive)
        if res.status == "exact":
            witness = ",".join(str(v) for v in res.witness.sorted())
            print(f"value={res.value} status=exact witness={witness}", file=out)
        else:
            print("value=- status=skipped witness=-", file=out)
    return 0


_CERT_K = {"half": 2, "third": 3, "quarter": 4, "fifth": 5}


def _cmd_cert(args, out) -> int:
    if args.theorem == "star":
        if args.k not in (2, 3):
            raise _UsageError("--theorem star needs --k 2 or --k 3")
        k = args.k
    elif args.theorem == "general":
        if args.n is None:
            raise _UsageError("--theorem general needs -n")
        k = args.n
    else:
        k = _CERT_K[args.theorem]
    builders = {
        "half": cert_half,
        "star": cert_star,
        "third": cert_third,
        "quarter": cert_quarter,
        "fifth": cert_fifth,
        "general": cert_general,
    }
    for _, g in _read_graphs(args.input, args.format):
        sm = subdivide(g, k)
        built = builders[args.theorem](sm)
        for cert in built if isinstance(built, tuple) else (built,):
            ids = cert.vertices.sorted()
            labels = ",".join(str(sm.label(v)) for v in ids)
            verdict = "true" if cert.validated else "false"
            print(f"theorem={cert.theorem_id} claimed={cert.claimed_size} "
                  f"size={len(cert.vertices)} validated={verdict}", file=out)
            print(f"set={','.join(str(v) for v in ids)}", file=out)
            print(f"labels={labels}", file=out)
    return 0


def _theorem_list(values) -> list[str]:
    tids = []
    for chunk in values:
        tids.extend(t for t in chunk.split(",") if t)
    for tid in tids:
        if tid not in bounds.THEOREM_IDS:
            raise _UsageError(
                f"unknown theorem id {tid!r} (choose from {', '.join(bounds.THEOREM_IDS)})")
    return tids


def _cmd_verify(args, out) -> int:
    tids = _theorem_list(args.theorem)
    if any(t in ("g16", "r024") for t in tids) and args.n is None:
        raise _UsageError("g16/r024 need -n")
    pairs = _read_graphs(args.corpus, args.format)
    checks = bounds.run_corpus(pairs, tids, n=args.n, budget=_budget(args), naive=args.naive)
    for line in bounds.render_checks(checks, args.output):
        print(line, file=out)
    if args.fail_on_violation and any(c.status == "violated" for c in checks):
        return 2
    return 0


def _cmd_conjecture(args, out) -> int:
    pairs = _read_graphs(args.corpus, args.format)
    report = bounds.conjecture_scan(pairs, budget=_budget(args), naive=args.naive)
    for line in bounds.render_conjecture(report, args.output):
        print(line, file=out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gen":
            return _cmd_gen(args, sys.stdout)
        if args.command == "enum":
            return _cmd_enum(args, sys.stdout)
        if args.command == "subdivide":
            return _cmd_subdivide(args, sys.stdout)
        if args.command == "gamma":
            return _cmd_solve(args, sys.stdout, secure=False)
        if args.command == "gamma-s":
            return _cmd_solve(args, sys.stdout, secure=True)
        if args.command == "cert":
            return _cmd_cert(args, sys.stdout)
        if args.command == "verify":
            return _cmd_verify(args, sys.stdout)
        if args.command == "conjecture":
            return _cmd_conjecture(args, sys.stdout)
        raise AssertionError(args.command)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except ParseError as exc:
        where = f"line {exc.line_number}: " if exc.line_number else ""
        print(f"parse error: {where}{exc}", file=sys.stderr)
        return EX_DATAERR
    except (GraphError, CertificateError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
