"""Command-line interface.

Subcommands:

  generate   write seeded initial conditions to a snapshot file
  bench      sweep the variant matrix and write results.csv + sidecar
  verify     run one variant against the reference oracle
  sloc       count source lines with a comment profile
  variants   list the optimization ladder and availability

Exit codes: 0 success, 1 a verification or benchmark cell failed,
2 bad usage or I/O trouble.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, bench, envinfo, sloc, variants, verify
from .backends import build_profile
from .initial_conditions import generate, write_snapshot
from .system import (
    DEFAULT_DT,
    PRECISIONS,
    InvalidConfigError,
    SimulationConfig,
    VariantUnavailableError,
)

DEFAULT_BENCH_NS = (1024, 4096, 16384)
DEFAULT_BENCH_BLOCKS = (8, 16, 32)


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated integers: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError(f"{what} list is empty: {text!r}")
    return values


def _parse_threads_list(text: str) -> tuple:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok == "auto":
            out.append("auto")
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise argparse.ArgumentTypeError(
                    f'threads must be integers or "auto": {tok!r}')
    if not out:
        raise argparse.ArgumentTypeError(f"threads list is empty: {text!r}")
    return tuple(out)


def _parse_variants_list(text: str) -> tuple:
    if text == "all":
        return variants.VARIANT_IDS
    chosen = tuple(tok.strip() for tok in text.split(",") if tok.strip())
    for tok in chosen:
        if tok not in variants.VARIANT_IDS:
            raise argparse.ArgumentTypeError(
                f"unknown variant {tok!r}; expected 'all' or a subset of "
                f"{', '.join(variants.VARIANT_IDS)}")
    if not chosen:
        raise argparse.ArgumentTypeError("variant list is empty")
    return chosen


def _parse_precisions_list(text: str) -> tuple:
    chosen = tuple(tok.strip() for tok in text.split(",") if tok.strip())
    for tok in chosen:
        if tok not in PRECISIONS:
            raise argparse.ArgumentTypeError(
                f"unknown precision {tok!r}; expected a subset of {', '.join(PRECISIONS)}")
    if not chosen:
        raise argparse.ArgumentTypeError("precision list is empty")
    return chosen


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbodybench",
        description="All-pairs N-body simulation benchmark suite",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write seeded initial conditions to a snapshot")
    p_gen.add_argument("--n", type=int, required=True, help="number of bodies")
    p_gen.add_argument("--seed", type=int, default=0, help="SplitMix64 seed (default 0)")
    p_gen.add_argument("--out", required=True, help="output snapshot path")

    p_bench = sub.add_parser("bench", help="run the benchmark matrix")
    p_bench.add_argument("--variants", type=_parse_variants_list, default=variants.VARIANT_IDS,
                         help="comma-separated variant ids, or 'all' (default)")
    p_bench.add_argument("--n", type=lambda s: _parse_int_list(s, "n"),
                         default=DEFAULT_BENCH_NS, dest="ns",
                         help="comma-separated body counts (default 1024,4096,16384)")
    p_bench.add_argument("--threads", type=_parse_threads_list, default=("auto",),
                         help="comma-separated thread counts or 'auto' (default auto)")
    p_bench.add_argument("--precision", type=_parse_precisions_list, default=("double",),
                         help="comma-separated precisions (default double)")
    p_bench.add_argument("--blocks", type=lambda s: _parse_int_list(s, "blocks"),
                         default=DEFAULT_BENCH_BLOCKS,
                         help="block sizes for parallel-blocked (default 8,16,32)")
    p_bench.add_argument("--steps", type=int, default=10, help="simulation steps per run")
    p_bench.add_argument("--reps", type=int, default=5, help="timed repetitions per cell")
    p_bench.add_argument("--warmup", type=int, default=1, help="untimed warmup runs per cell")
    p_bench.add_argument("--seed", type=int, default=0, help="initial-conditions seed")
    p_bench.add_argument("--dt", type=float, default=DEFAULT_DT, help="time step")
    p_bench.add_argument("--backend", default=None, choices=("auto", "compiled", "fallback"),
                         help="kernel backend (default: best available)")
    p_bench.add_argument("--out", required=True,
                         help="output directory for results.csv and results.meta.json")

    p_verify = sub.add_parser("verify", help="check one variant against the oracle")
    p_verify.add_argument("--variant", required=True, choices=variants.VARIANT_IDS)
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--steps", type=int, required=True)
    p_verify.add_argument("--precision", default="double", choices=PRECISIONS)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--threads", default="auto",
                          help='thread count or "auto" (default auto)')
    p_verify.add_argument("--block-size", type=int, default=None,
                          help="block size for parallel-blocked")
    p_verify.add_argument("--dt", type=float, default=DEFAULT_DT)
    p_verify.add_argument("--backend", default=None, choices=("auto", "compiled", "fallback"))

    p_sloc = sub.add_parser("sloc", help="count source lines of code")
    p_sloc.add_argument("--profile", required=True, choices=sorted(sloc.PROFILES),
                        help="comment profile")
    p_sloc.add_argument("paths", nargs="+", help="files or directories to count")
    p_sloc.add_argument("--json", dest="json_out", default=None,
                        help="also write the full report as JSON to this path")

    p_var = sub.add_parser("variants", help="list the variant ladder")
    p_var.add_argument("--backend", default=None, choices=("auto", "compiled", "fallback"))

    return parser


def _cmd_generate(args) -> int:
    try:
        system = generate(args.n, args.seed)
        write_snapshot(system, args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: could not write {args.out!r}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.n} bodies (seed {args.seed}) to {args.out}")
    return 0


def _cmd_bench(args) -> int:
    matrix = bench.BenchMatrix(
        variants=args.variants, ns=args.ns, threads=args.threads,
        precisions=args.precision, block_sizes=args.blocks,
    )

    def progress(record):
        if record.ok:
            print(f"{record.variant:24s} n={record.n:<7d} threads={record.threads_resolved:<3d} "
                  f"{record.precision:6s} "
                  f"{'' if record.block_size is None else f'block={record.block_size:<3d} '}"
                  f"mean={record.mean_seconds:.6f}s gflops={record.gflops:.3f}")
        else:
            print(f"{record.variant:24s} n={record.n:<7d} {record.status}")

    try:
        records = bench.run_benchmark(
            matrix, steps=args.steps, repetitions=args.reps, warmup=args.warmup,
            seed=args.seed, dt=args.dt, backend=args.backend, progress=progress,
        )
        os.makedirs(args.out, exist_ok=True)
        csv_path = os.path.join(args.out, "results.csv")
        meta_path = bench.write_results(records, bench.EnvironmentReport.capture(), csv_path)
    except (InvalidConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {csv_path} and {meta_path}")
    errors = [r for r in records if r.status.startswith("error:")]
    for record in errors:
        print(f"cell failed: {record.variant} n={record.n}: {record.status}", file=sys.stderr)
    return 1 if errors else 0


def _cmd_verify(args) -> int:
    threads = args.threads if args.threads == "auto" else int(args.threads)
    try:
        config = SimulationConfig(
            dt=args.dt, steps=args.steps, precision=args.precision,
            threads=threads, block_size=args.block_size,
        )
        desc = variants.get_variant(args.variant, args.backend)
        system = generate(args.n, args.seed)
        candidate = variants.run_simulation(desc, system, config, args.backend)
        reference = verify.reference_simulate(system, config)
    except (InvalidConfigError, VariantUnavailableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    tolerance = verify.tolerance_for(desc.strict_math, args.precision)
    report = verify.compare_states(candidate.astype("double"), reference)
    if tolerance == 0.0:
        passed = report.bitwise_equal
        requirement = "bitwise equality"
    else:
        passed = report.max_rel_error <= tolerance
        requirement = f"max relative error <= {tolerance:g}"
    print(f"variant={args.variant} n={args.n} steps={args.steps} "
          f"precision={args.precision} seed={args.seed}")
    print(f"requirement: {requirement}")
    print(f"max_rel_pos_error={report.max_rel_pos_error:.3e} "
          f"max_rel_vel_error={report.max_rel_vel_error:.3e} "
          f"argmax_body={report.argmax_body} bitwise={report.bitwise_equal}")
    print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def _cmd_sloc(args) -> int:
    try:
        report = sloc.count_sloc(args.paths, args.profile)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for entry in report.files:
        if entry.error is not None:
            print(f"{entry.path}: unreadable: {entry.error}", file=sys.stderr)
        else:
            c = entry.counts
            print(f"{entry.path}: code={c.code} comment={c.comment} blank={c.blank}")
    totals = report.totals
    print(f"total: code={totals.code} comment={totals.comment} blank={totals.blank}")
    for name, counts in sorted(report.regions.items()):
        print(f"region {name}: code={counts.code} comment={counts.comment} "
              f"blank={counts.blank}")
    if args.json_out:
        try:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
                fh.write("\n")
        except OSError as exc:
            print(f"error: could not write {args.json_out!r}: {exc}", file=sys.stderr)
            return 2
    return 0


def _cmd_variants(args) -> int:
    print(f"build profile: {build_profile()}")
    allocator = envinfo.loaded_allocator()
    print(f"allocator: {allocator or 'system malloc'}")
    for desc in variants.list_variants(args.backend):
        status = "available" if desc.available else f"unavailable ({desc.unavailable_reason})"
        print(f"{desc.id:24s} {status}")
        print(f"{'':24s}   {desc.summary}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "generate": _cmd_generate,
        "bench": _cmd_bench,
        "verify": _cmd_verify,
        "sloc": _cmd_sloc,
        "variants": _cmd_variants,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
