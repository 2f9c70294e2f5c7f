"""Command-line front end: solve, verify, gen, reduce, bench.

Exit codes: 0 solved or yes, 1 certified no (also failed verification),
2 "no" with confidence only (randomised engine exhausted its trials),
64 usage errors, 65 malformed instance or certificate files.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

from . import fileio
from .complete import solve_complete
from .errors import (
    CClusterError,
    InputError,
    ParameterError,
    SizeLimitError,
    UnsupportedInstanceError,
)
from .fpt_stable import solve_stable_fpt
from .fpt_unstable import solve_unstable_fpt
from .generate import hardness_reduction, random_instance
from .graph import EdgeColouredGraph, is_vertex_monochromatic, stability, used_colours
from .mincut import solve_bicoloured
from .oracle import brute_force_clustering, within_clustering_bound

EXIT_SOLVED = 0
EXIT_NO = 1
EXIT_NO_CONFIDENCE = 2
EXIT_USAGE = 64
EXIT_DATA = 65

ALGOS = ("auto", "mincut", "complete", "fpt-stable", "fpt-unstable", "brute")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class _UsageError(Exception):
    pass


def _pick_auto(g: EdgeColouredGraph) -> str:
    colours = used_colours(g)
    if len(colours) <= 2:
        if g.m == g.n * (g.n - 1) // 2:
            return "complete"
        return "mincut"
    if within_clustering_bound(g):
        return "brute"
    raise _UsageError(
        "instance needs an explicit fpt engine with --k "
        "(more than two colours and too large for brute force)"
    )


def _solve_dispatch(g: EdgeColouredGraph, args: argparse.Namespace):
    """Returns (exit_code, opt, extras, certificate_text)."""
    algo = args.algo
    if algo == "auto":
        algo = _pick_auto(g)
    if algo in ("fpt-stable", "fpt-unstable") and args.k is None:
        raise _UsageError(f"--k is required for --algo {algo}")

    if algo == "mincut":
        cut = solve_bicoloured(g)
        opt = g.m - cut.cut_value
        return (
            EXIT_SOLVED,
            opt,
            {"algo": "mincut", "deleted": cut.cut_value},
            fileio.emit_colouring_certificate(cut.colouring),
        )
    if algo == "complete":
        opt, colouring = solve_complete(g)
        return (
            EXIT_SOLVED,
            opt,
            {"algo": "complete"},
            fileio.emit_colouring_certificate(colouring),
        )
    if algo == "brute":
        result = brute_force_clustering(g)
        return (
            EXIT_SOLVED,
            result.opt_stable,
            {"algo": "brute"},
            fileio.emit_colouring_certificate(result.opt_colouring),
        )
    if algo == "fpt-stable":
        result = solve_stable_fpt(g, args.k, failure_prob=args.delta, seed=args.seed)
        extras = {
            "algo": "fpt-stable",
            "k": args.k,
            "budget": result.trials_budget,
            "trials": result.trials_run,
            "seed": result.seed,
            "achieved": result.best_achieved,
        }
        if result.found:
            assert result.colouring is not None
            return (
                EXIT_SOLVED,
                result.best_achieved,
                extras,
                fileio.emit_colouring_certificate(result.colouring),
            )
        return EXIT_NO_CONFIDENCE, result.best_achieved, extras, None
    if algo == "fpt-unstable":
        result = solve_unstable_fpt(g, args.k)
        extras = {"algo": "fpt-unstable", "k": args.k}
        if result.kernel is not None:
            extras["n_star"] = result.kernel.n_star
            extras["m_star"] = result.kernel.m_star
            extras["kernel"] = "ok" if result.kernel.within_bounds else "exceeded"
        extras["search_nodes"] = result.search_nodes
        if result.yes:
            assert result.deleted_edges is not None
            extras["cover_weight"] = result.cover_weight
            return (
                EXIT_SOLVED,
                g.m - len(result.deleted_edges),
                extras,
                fileio.emit_deletion_certificate(g, result.deleted_edges),
            )
        return EXIT_NO, -1, extras, None
    raise _UsageError(f"unknown algorithm {algo!r}")


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        g = fileio.read_instance(args.instance)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    start = time.perf_counter()
    try:
        code, opt, extras, certificate = _solve_dispatch(g, args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedInstanceError, SizeLimitError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    tail = " ".join(f"{key}={value}" for key, value in extras.items() if key != "algo")
    line = f"opt={opt} algo={extras['algo']} time_ms={elapsed_ms}"
    if tail:
        line = f"{line} {tail}"
    print(line)
    if args.cert and certificate is not None:
        Path(args.cert).write_text(certificate)
    return code


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = fileio.read_instance(args.instance)
        kind, payload = fileio.parse_certificate(
            Path(args.certificate).read_text(), g
        )
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    if kind == "colouring":
        report = stability(g, payload)  # type: ignore[arg-type]
        print(f"stable={report.stable_count}")
        return EXIT_SOLVED if report.stable_count >= args.k else EXIT_NO
    deleted: set[int] = payload  # type: ignore[assignment]
    kept = [edge for index, edge in enumerate(g.edges) if index not in deleted]
    remainder = EdgeColouredGraph(n=g.n, edges=kept, t=g.t)
    ok = is_vertex_monochromatic(remainder) and len(deleted) <= args.k
    print(f"deleted={len(deleted)} conflict_free={is_vertex_monochromatic(remainder)}")
    return EXIT_SOLVED if ok else EXIT_NO


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = random_instance(args.n, args.m, args.t, args.seed)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fileio.write_instance(args.out, g, comments=[f"seed {args.seed}"])
    return EXIT_SOLVED


def _cmd_reduce(args: argparse.Namespace) -> int:
    try:
        n, edges = fileio.parse_uncoloured(Path(args.source).read_text())
        red = hardness_reduction(n, edges)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CClusterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fileio.write_instance(
        args.out,
        red.gprime,
        comments=[f"gadget built from {args.source}"],
    )
    if args.map:
        payload = {
            "source_edge_count": red.source_edge_count,
            "vertex_map": red.vertex_map,
            "psi": red.psi,
        }
        Path(args.map).write_text(json.dumps(payload, indent=2) + "\n")
    return EXIT_SOLVED


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.algo in ("fpt-stable", "fpt-unstable") and args.k is None:
        print(f"error: --k is required for --algo {args.algo}", file=sys.stderr)
        return EXIT_USAGE
    print("instance,n,m,result,median_time_ms")
    corpus = sorted(Path(args.corpus).glob("*.cc"))
    for path in corpus:
        try:
            g = fileio.read_instance(path)
        except InputError as exc:
            print(f"skipping {path.name}: {exc}", file=sys.stderr)
            continue
        times = []
        result = "?"
        failed = False
        for _ in range(args.repeat):
            start = time.perf_counter()
            try:
                code, opt, extras, _ = _solve_dispatch(g, args)
            except (_UsageError, CClusterError) as exc:
                print(f"skipping {path.name}: {exc}", file=sys.stderr)
                failed = True
                break
            times.append((time.perf_counter() - start) * 1000)
            if code == EXIT_SOLVED:
                result = str(opt)
            elif code == EXIT_NO:
                result = "no"
            else:
                result = "no-confidence"
        if failed:
            continue
        print(f"{path.name},{g.n},{g.m},{result},{statistics.median(times):.3f}")
    return EXIT_SOLVED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ccluster", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("instance")
    solve.add_argument("--algo", choices=ALGOS, default="auto")
    solve.add_argument("--k", type=int, default=None, help="parameter for fpt engines")
    solve.add_argument("--delta", type=float, default=0.01,
                       help="failure probability for fpt-stable")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--cert", default=None, help="write certificate here")
    solve.set_defaults(func=_cmd_solve)

    verify = sub.add_parser("verify", help="check a certificate independently")
    verify.add_argument("instance")
    verify.add_argument("certificate")
    verify.add_argument("--k", type=int, required=True)
    verify.set_defaults(func=_cmd_verify)

    gen = sub.add_parser("gen", help="generate a random instance file")
    gen.add_argument("out")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--t", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=_cmd_gen)

    reduce_cmd = sub.add_parser(
        "reduce", help="build the three-colour gadget from an uncoloured graph"
    )
    reduce_cmd.add_argument("source", help="edge list: 'p edge n m' + 'e u v' lines")
    reduce_cmd.add_argument("out")
    reduce_cmd.add_argument("--map", default=None, help="write vertex map JSON here")
    reduce_cmd.set_defaults(func=_cmd_reduce)

    bench = sub.add_parser("bench", help="time every *.cc instance in a directory")
    bench.add_argument("corpus")
    bench.add_argument("--algo", choices=ALGOS, default="auto")
    bench.add_argument("--k", type=int, default=None)
    bench.add_argument("--delta", type=float, default=0.01)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeat", type=int, default=3)
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
