"""Command-line front end.

Subcommands:

* ``reorder``     — reorder one Matrix Market file; write the permuted
  matrix, the permutation, and/or a JSON report.
* ``bench``       — sweep a corpus directory and emit reordering
  statistics as CSV or JSON (optionally with figures).
* ``solve-bench`` — sweep the SPD subset of a corpus through envelope
  Cholesky and emit solve statistics.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path

from .bench import BenchConfig, run_bench, run_solve_bench, write_report
from .finders import StartPolicy
from .matrix_io import (MatrixFormatError, read_matrix_market_file,
                        write_matrix_market_file)
from .reorder import rcm_pipeline

_ALGO_NAMES = {"rcm++": "RCM++", "gl": "GL_RCM", "mind": "MIND_RCM", "none": "none"}
_ALGO_TO_FINDER = {"rcm++": "BNF", "gl": "GL", "mind": "MIND", "none": "none"}


def _policy_from_args(args) -> StartPolicy:
    if args.start == "min-degree":
        return StartPolicy.min_degree()
    if args.start == "random":
        if args.seed is None:
            raise SystemExit("--start random requires --seed")
        return StartPolicy.seeded(args.seed)
    if args.node is None:
        raise SystemExit("--start node requires --node")
    return StartPolicy.explicit(args.node)


def _add_start_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--start", choices=("min-degree", "random", "node"),
                   default="min-degree", help="start-node policy for the finder")
    p.add_argument("--seed", type=int, help="seed for --start random")
    p.add_argument("--node", type=int, help="node id for --start node")
    p.add_argument("--symmetrize", action="store_true",
                   help="accept non-symmetric general files as A plus its transpose")


def _write_permutation_file(perm, path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{perm.n}\n")
        for new in perm.new_of_old:
            fh.write(f"{int(new)}\n")


def _cmd_reorder(args) -> int:
    try:
        m = read_matrix_market_file(args.input, symmetrize=args.symmetrize)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 1
    except MatrixFormatError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 1
    policy = _policy_from_args(args)
    perm, report = rcm_pipeline(m, _ALGO_TO_FINDER[args.algo], policy)
    if args.out:
        from .reorder import apply_permutation
        write_matrix_market_file(apply_permutation(m, perm), args.out)
    if args.perm_out:
        _write_permutation_file(perm, args.perm_out)
    if args.report:
        Path(args.report).write_text(
            json.dumps(dataclasses.asdict(report), indent=2) + "\n",
            encoding="utf-8")
    print(f"{args.input}: {report.algorithm} bandwidth "
          f"{report.bandwidth_before} -> {report.bandwidth_after}, profile "
          f"{report.profile_before} -> {report.profile_after}")
    return 0


def _bench_config(args, solve: bool) -> BenchConfig:
    algos = []
    for token in args.algo.split(","):
        token = token.strip().lower()
        if token not in _ALGO_NAMES:
            raise SystemExit(f"unknown algorithm {token!r} "
                             f"(choose from {', '.join(_ALGO_NAMES)})")
        algos.append(_ALGO_NAMES[token])
    return BenchConfig(
        corpus_dir=Path(args.dir),
        output_path=Path(args.out),
        algorithms=tuple(algos),
        start_policy=_policy_from_args(args),
        smoothing_span=args.span,
        finder_repeats=args.repeats,
        solve=solve,
        output_format=args.format,
        symmetrize=args.symmetrize,
    )


def _run_sweep(args, solve: bool) -> int:
    config = _bench_config(args, solve)
    try:
        report = run_solve_bench(config) if solve else run_bench(config)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    write_report(report, config.output_path, config.output_format)
    if args.plots:
        from .plots import render_report_plots
        for path in render_report_plots(report, Path(args.plots)):
            print(f"wrote {path}")
    print(f"wrote {config.output_path} "
          f"({len(report.rows)} rows, {len(report.skipped)} skipped)")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="rcmkit",
        description="Sparse matrix reordering toolkit: RCM pipelines with "
                    "pluggable starting-node finders, metrics, and an "
                    "envelope Cholesky benchmark.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_re = sub.add_parser("reorder", help="reorder a single matrix")
    p_re.add_argument("--algo", choices=tuple(_ALGO_NAMES), default="rcm++")
    p_re.add_argument("--in", dest="input", required=True, help="input .mtx file")
    p_re.add_argument("--out", help="write the permuted matrix here")
    p_re.add_argument("--perm-out", help="write the permutation here "
                                         "(header n, then one new position per line)")
    p_re.add_argument("--report", help="write a JSON reorder report here")
    _add_start_options(p_re)
    p_re.set_defaults(func=lambda a: _cmd_reorder(a))

    for name, solve, span in (("bench", False, 100), ("solve-bench", True, 10)):
        p = sub.add_parser(name, help=f"run the {name} sweep over a corpus directory")
        p.add_argument("--dir", required=True, help="corpus directory of .mtx files")
        p.add_argument("--out", required=True, help="report output path")
        p.add_argument("--algo", default="rcm++,gl,mind",
                       help="comma-separated algorithms (rcm++, gl, mind, none)")
        p.add_argument("--span", type=int, default=span,
                       help="exponential smoothing span")
        p.add_argument("--repeats", type=int, default=100,
                       help="timing repetitions (median is reported)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--plots", help="also render figures into this directory")
        _add_start_options(p)
        p.set_defaults(func=lambda a, s=solve: _run_sweep(a, s))

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
