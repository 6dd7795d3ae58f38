"""Command-line front end: solve one instance, export artifacts, run sweeps.

Thin adapter over the library: parse, dispatch, format.  Exit codes are 0
for success, 2 for usage or input-format problems, 3 when an exhaustive
routine refuses an oversized instance.  Every stochastic command requires
an explicit --seed; there is no silent nondeterminism.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import baselines, experiments, graph, iqp, sideinfo, solvers
from ._scan import BACKEND
from .errors import ParseError, ResourceLimitError

_SCHEME_FLAGS = {
    "max-clique": "max_clique",
    "best-repetition": "best_repetition",
    "random-repetition": "random_repetition",
    "cope-like": "cope_like",
    "exact": "exact_oracle",
}


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_packet(packets) -> str:
    return "+".join(str(j) for j in sorted(packets))


def _parse_grid(spec: str) -> tuple[float, ...]:
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ParseError(f"grid range must be start:stop:step, got {spec!r}")
        start, stop, step = (float(x) for x in parts)
        if step <= 0:
            raise ParseError(f"grid step must be positive, got {step}")
        grid = []
        k = 0
        while (v := round(start + k * step, 10)) <= stop + 1e-12:
            grid.append(round(v, 10))
            k += 1
        return tuple(grid)
    try:
        return tuple(float(x) for x in spec.split(","))
    except ValueError:
        raise ParseError(f"bad probability list {spec!r}") from None


def _cmd_solve(args) -> int:
    matrix = sideinfo.matrix_from_text(_read(args.matrix))
    scheme = _SCHEME_FLAGS[args.scheme]
    if scheme == "max_clique":
        if args.p is None:
            raise ParseError("--scheme max-clique requires --p")
        clique = solvers.max_clique_search(matrix, solvers.CliqueSearchParams(args.p, args.delta))
        packets = clique.packets() if clique.vertices else None
    elif scheme == "exact_oracle":
        clique = solvers.max_clique_exact(matrix)
        packets = clique.packets() if clique.vertices else None
    elif scheme == "best_repetition":
        decision = baselines.best_repetition(matrix)
        packets = decision.packet.packets if decision.packet else None
    elif scheme == "random_repetition":
        if args.seed is None:
            raise ParseError("--scheme random-repetition requires --seed")
        decision = baselines.random_repetition(matrix, args.seed)
        packets = decision.packet.packets if decision.packet else None
    else:  # cope-like
        if args.seed is None:
            raise ParseError("--scheme cope-like requires --seed")
        wanted = [j for j in range(1, matrix.m + 1) if matrix.column_count(j) > 0]
        if wanted:
            rng = np.random.Generator(np.random.Philox(args.seed))
            decision = baselines.cope_like(matrix, rng.permutation(wanted))
            packets = decision.packet.packets if decision.packet else None
        else:
            packets = None
    if packets is None:
        _emit("no packet needed\n", args.out)
        return 0
    count = len(sideinfo.beneficiaries(matrix, sideinfo.CodedPacket(frozenset(packets))))
    _emit(f"packet={_format_packet(packets)} beneficiaries={count}\n", args.out)
    return 0


def _cmd_graph(args) -> int:
    matrix = sideinfo.matrix_from_text(_read(args.matrix))
    _emit(graph.to_dot(graph.build_graph(matrix)), args.out)
    return 0


def _cmd_reduce(args) -> int:
    inst = iqp.x3c_from_text(_read(args.x3c))
    matrix = iqp.x3c_to_matrix(inst)
    cover, reaches = iqp.check_reduction(inst)
    sol = iqp.solve_exhaustive(matrix)
    text = sideinfo.matrix_to_text(matrix)
    text += (
        f"x3c_cover={'yes' if cover else 'no'} "
        f"objective={sol.value} target={inst.element_count} "
        f"reaches_target={'yes' if reaches else 'no'}\n"
    )
    _emit(text, args.out)
    return 0


def _cmd_sweep(args) -> int:
    schemes = tuple(_SCHEME_FLAGS[s.strip()] for s in args.schemes.split(","))
    cfg = experiments.ExperimentConfig(
        n=args.n,
        m=args.m,
        seed=args.seed,
        loss_grid=_parse_grid(args.p) if args.p else experiments.default_loss_grid(),
        trials=args.trials,
        delta=args.delta,
        schemes=schemes,
    )
    result = experiments.run_sweep(cfg)
    _emit(result.to_csv() if args.format == "csv" else result.to_raw_json(), args.out)
    if args.raw_out:
        with open(args.raw_out, "w") as fh:
            fh.write(result.to_raw_json())
    return 0


def _cmd_fj(args) -> int:
    _emit(experiments.fj_table_csv(_parse_grid(args.p)), args.out)
    return 0


def _cmd_clique_stats(args) -> int:
    summary = experiments.clique_number_experiment(
        args.n, args.m, args.p, args.trials, args.seed, delta=args.delta
    )
    text = (
        f"method={summary.method} n={summary.n} m={summary.m} p={summary.p:.6g} "
        f"trials={summary.trials}\n"
        f"mean_size={summary.mean_size:.6g} std_size={summary.std_size:.6g}\n"
        f"j_star={summary.j_star} mu={summary.mu:.6g} mu_delta={summary.mu_delta:.6g} "
        f"fraction_within={summary.fraction_within:.6g}\n"
        f"touched_exactly_j_star={summary.touched_fraction(summary.j_star):.6g}\n"
    )
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtidnc",
        description=f"Instantly decodable recovery coding toolbox (scan backend: {BACKEND})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="best packet for one matrix under one scheme")
    p_solve.add_argument("--matrix", required=True, help="matrix file: 'n m' then n rows of 0/1")
    p_solve.add_argument("--scheme", required=True, choices=sorted(_SCHEME_FLAGS))
    p_solve.add_argument("--p", type=float, help="loss probability (max-clique window center)")
    p_solve.add_argument("--delta", type=int, default=3, help="window half-width (default 3)")
    p_solve.add_argument("--seed", type=int, help="seed for the random schemes")
    p_solve.add_argument("--out")
    p_solve.set_defaults(func=_cmd_solve)

    p_graph = sub.add_parser("graph", help="export the coding graph as DOT")
    p_graph.add_argument("--matrix", required=True)
    p_graph.add_argument("--out")
    p_graph.set_defaults(func=_cmd_graph)

    p_reduce = sub.add_parser("reduce", help="map a 3-set cover instance to a matrix and solve it")
    p_reduce.add_argument("--x3c", required=True, help="cover file: 'k ell' then ell lines of 3 elements")
    p_reduce.add_argument("--out")
    p_reduce.set_defaults(func=_cmd_reduce)

    p_sweep = sub.add_parser("sweep", help="Monte Carlo sweep over loss rates")
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--m", type=int, required=True)
    p_sweep.add_argument("--seed", type=int, required=True)
    p_sweep.add_argument("--trials", type=int, default=100)
    p_sweep.add_argument("--delta", type=int, default=3)
    p_sweep.add_argument("--p", help="comma list or start:stop:step (default 0.01:0.99:0.01)")
    p_sweep.add_argument(
        "--schemes",
        default="max-clique,best-repetition,random-repetition,cope-like",
        help="comma list of schemes",
    )
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out")
    p_sweep.add_argument("--raw-out", help="also write per-trial scores and packets as JSON")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_fj = sub.add_parser("fj", help="table of the optimal mix size and its success probability")
    p_fj.add_argument("--p", required=True, help="comma list or start:stop:step")
    p_fj.add_argument("--out")
    p_fj.set_defaults(func=_cmd_fj)

    p_cs = sub.add_parser("clique-stats", help="clique-size distribution on random instances")
    p_cs.add_argument("--n", type=int, required=True)
    p_cs.add_argument("--m", type=int, required=True)
    p_cs.add_argument("--p", type=float, required=True)
    p_cs.add_argument("--trials", type=int, required=True)
    p_cs.add_argument("--seed", type=int, required=True)
    p_cs.add_argument("--delta", type=int, default=3)
    p_cs.add_argument("--out")
    p_cs.set_defaults(func=_cmd_clique_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():  # console-script target
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
