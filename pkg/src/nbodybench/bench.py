"""Benchmark harness: timed sweeps over the variant matrix, CSV output.

The throughput model counts 20 floating-point operations per pairwise
interaction, so a run of `steps` steps over n bodies is credited with
20 * n^2 * steps flops regardless of how many force passes the integrator
actually performs.  That keeps figures comparable across implementations
of the same algorithm.

Results go to a CSV file with a fixed column set plus a JSON sidecar
(same stem, .meta.json) carrying the environment report, the ladder
order, raw per-repetition timings, and final-state checksums.
"""

from __future__ import annotations

import datetime
import statistics
import time
from dataclasses import dataclass, field

from . import envinfo, variants
from .backends import build_profile
from .initial_conditions import generate, state_checksum
from .system import (
    DEFAULT_DT,
    InvalidConfigError,
    SimulationConfig,
    VariantUnavailableError,
)

CSV_COLUMNS = (
    "variant", "n", "steps", "threads_requested", "threads_resolved",
    "precision", "block_size", "repetitions", "mean_seconds",
    "stddev_seconds", "gflops", "status",
)

FLOPS_PER_INTERACTION = 20


def gflops(n: int, steps: int, seconds: float) -> float:
    """Model throughput in GFLOPS: 20 * n^2 * steps / (seconds * 1e9)."""
    if not (isinstance(n, int) and n >= 0):
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if not (isinstance(steps, int) and steps >= 0):
        raise ValueError(f"steps must be a non-negative integer, got {steps!r}")
    seconds = float(seconds)
    if not seconds > 0:
        raise ValueError(f"seconds must be positive, got {seconds!r}")
    return (FLOPS_PER_INTERACTION * n * n * steps) / (seconds * 1e9)


@dataclass(frozen=True)
class EnvironmentReport:
    """Host facts recorded alongside benchmark results; every field non-empty."""

    logical_cpus: int
    physical_cpus: int
    simd_tag: str
    build_profile: str
    allocator: str
    artifact_version: str
    timestamp: str

    @classmethod
    def capture(cls) -> "EnvironmentReport":
        from . import __version__

        return cls(
            logical_cpus=envinfo.logical_cpus(),
            physical_cpus=envinfo.physical_cpus(),
            simd_tag=envinfo.simd_tag(),
            build_profile=build_profile(),
            allocator=envinfo.loaded_allocator() or "system",
            artifact_version=__version__,
            timestamp=datetime.datetime.now(datetime.timezone.utc).isoformat(),
        )

    def as_dict(self) -> dict:
        return {
            "logical_cpus": self.logical_cpus,
            "physical_cpus": self.physical_cpus,
            "simd_tag": self.simd_tag,
            "build_profile": self.build_profile,
            "allocator": self.allocator,
            "artifact_version": self.artifact_version,
            "timestamp": self.timestamp,
        }


@dataclass(frozen=True)
class BenchMatrix:
    """The sweep: every combination of the listed axes is one cell."""

    variants: tuple
    ns: tuple
    threads: tuple = ("auto",)
    precisions: tuple = ("double",)
    block_sizes: tuple = (16,)

    def __post_init__(self):
        for name in ("variants", "ns", "threads", "precisions", "block_sizes"):
            if not getattr(self, name):
                raise InvalidConfigError(f"benchmark matrix axis {name!r} is empty")


@dataclass
class BenchmarkRecord:
    """Outcome of one matrix cell.

    status is "ok", "skipped:<reason>", or "error:<reason>"; timing fields
    are None unless status is "ok".
    """

    variant: str
    n: int
    steps: int
    threads_requested: str
    threads_resolved: int | None
    precision: str
    block_size: int | None
    repetitions: int
    mean_seconds: float | None = None
    stddev_seconds: float | None = None
    gflops: float | None = None
    status: str = "ok"
    raw_seconds: list = field(default_factory=list)
    checksum: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def csv_row(self) -> list:
        def fmt(value):
            return "" if value is None else repr(value) if isinstance(value, float) else str(value)

        return [
            self.variant, str(self.n), str(self.steps), self.threads_requested,
            fmt(self.threads_resolved), self.precision, fmt(self.block_size),
            str(self.repetitions), fmt(self.mean_seconds), fmt(self.stddev_seconds),
            fmt(self.gflops), self.status,
        ]

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "n": self.n,
            "steps": self.steps,
            "threads_requested": self.threads_requested,
            "threads_resolved": self.threads_resolved,
            "precision": self.precision,
            "block_size": self.block_size,
            "repetitions": self.repetitions,
            "mean_seconds": self.mean_seconds,
            "stddev_seconds": self.stddev_seconds,
            "gflops": self.gflops,
            "status": self.status,
            "raw_seconds": list(self.raw_seconds),
            "checksum": self.checksum,
        }


def run_benchmark(matrix: BenchMatrix, *, steps: int = 10, repetitions: int = 5,
                  warmup: int = 1, seed: int = 0, dt: float = DEFAULT_DT,
                  backend=None, progress=None) -> list[BenchmarkRecord]:
    """Time every cell of the matrix; returns one record per cell.

    Each repetition restarts from the same seeded initial state, so final
    states (and their checksums) are comparable across repetitions and
    runs.  Cells whose variant cannot run are emitted as skipped records,
    never dropped; unexpected failures become error records.
    """
    if repetitions < 1:
        raise InvalidConfigError(f"repetitions must be >= 1, got {repetitions}")
    if warmup < 0:
        raise InvalidConfigError(f"warmup must be >= 0, got {warmup}")
    records: list[BenchmarkRecord] = []
    for n in matrix.ns:
        base = generate(n, seed)
        for variant_id in matrix.variants:
            for precision in matrix.precisions:
                for threads in matrix.threads:
                    for block in _blocks_for(matrix, variant_id):
                        record = _run_cell(
                            variant_id, base, n, steps, threads, precision,
                            block, repetitions, warmup, dt, backend,
                        )
                        records.append(record)
                        if progress is not None:
                            progress(record)
    return records


def _blocks_for(matrix: BenchMatrix, variant_id: str):
    try:
        desc = variants.get_variant(variant_id)
    except InvalidConfigError:
        return (None,)
    return matrix.block_sizes if desc.requires_block_size else (None,)


def _run_cell(variant_id, base, n, steps, threads, precision, block,
              repetitions, warmup, dt, backend) -> BenchmarkRecord:
    record = BenchmarkRecord(
        variant=variant_id, n=n, steps=steps,
        threads_requested=str(threads), threads_resolved=None,
        precision=precision, block_size=block, repetitions=repetitions,
    )
    try:
        desc = variants.get_variant(variant_id, backend)
        if not desc.available:
            record.status = f"skipped:{desc.unavailable_reason}"
            return record
        config = SimulationConfig(
            dt=dt, steps=steps, precision=precision, threads=threads,
            block_size=block,
        )
        record.threads_resolved = (
            variants.resolve_thread_count(threads) if desc.uses_threads else 1
        )
        final = None
        for _ in range(warmup):
            variants.run_simulation(desc, base, config, backend)
        timings = []
        for _ in range(repetitions):
            start = time.perf_counter()
            final = variants.run_simulation(desc, base, config, backend)
            timings.append(time.perf_counter() - start)
        record.raw_seconds = timings
        record.mean_seconds = statistics.fmean(timings)
        record.stddev_seconds = statistics.pstdev(timings)
        record.gflops = gflops(n, steps, record.mean_seconds)
        record.checksum = state_checksum(final)
        record.status = "ok"
    except (InvalidConfigError, VariantUnavailableError) as exc:
        record.status = f"skipped:{exc}"
    except Exception as exc:  # noqa: BLE001 - cells must never abort the sweep
        record.status = f"error:{type(exc).__name__}: {exc}"
    return record


def write_results(records, env: EnvironmentReport, csv_path) -> str:
    """Write the CSV and its .meta.json sidecar; returns the sidecar path.

    I/O failures raise OSError annotated with the offending path.
    """
    import csv as csv_mod
    import json
    import os

    if not records:
        raise ValueError("no benchmark records to write")
    csv_path = os.fspath(csv_path)
    meta_path = (csv_path[:-4] if csv_path.endswith(".csv") else csv_path) + ".meta.json"
    try:
        with open(csv_path, "w", newline="", encoding="ascii") as fh:
            writer = csv_mod.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for record in records:
                writer.writerow(record.csv_row())
    except OSError as exc:
        raise OSError(f"could not write benchmark CSV {csv_path!r}: {exc}") from exc
    meta = {
        "environment": env.as_dict(),
        "variant_ladder": list(variants.VARIANT_IDS),
        "flops_per_interaction": FLOPS_PER_INTERACTION,
        "records": [r.as_dict() for r in records],
    }
    try:
        with open(meta_path, "w", encoding="ascii") as fh:
            json.dump(meta, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"could not write benchmark sidecar {meta_path!r}: {exc}") from exc
    return meta_path
