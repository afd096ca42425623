"""Tests for the benchmark harness: throughput model, sweeps, CSV output."""

from __future__ import annotations

import csv
import json
import math
import statistics

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbodybench.bench import (
    CSV_COLUMNS,
    BenchMatrix,
    BenchmarkRecord,
    EnvironmentReport,
    FLOPS_PER_INTERACTION,
    gflops,
    run_benchmark,
    write_results,
)
from nbodybench.system import InvalidConfigError
from nbodybench.variants import VARIANT_IDS


class TestGflops:
    def test_small_exact_value(self):
        # 20 * 2^2 * 1 flops in one second is 80 / 1e9 GFLOPS.
        assert gflops(2, 1, 1.0) == 80 / 1e9

    def test_full_scale_value(self):
        # 20 * 65536^2 * 100 flops over 100 s.
        assert math.isclose(gflops(65536, 100, 100.0), 85.89934592, rel_tol=1e-9)

    def test_zero_steps_is_zero(self):
        assert gflops(1024, 0, 5.0) == 0.0

    @pytest.mark.parametrize("bad", [(-1, 1, 1.0), (1.5, 1, 1.0), ("8", 1, 1.0)])
    def test_rejects_bad_n(self, bad):
        with pytest.raises(ValueError):
            gflops(*bad)

    @pytest.mark.parametrize("bad", [(8, -1, 1.0), (8, 0.5, 1.0)])
    def test_rejects_bad_steps(self, bad):
        with pytest.raises(ValueError):
            gflops(*bad)

    @pytest.mark.parametrize("seconds", [0.0, -1.0, float("nan")])
    def test_rejects_non_positive_seconds(self, seconds):
        with pytest.raises(ValueError):
            gflops(8, 1, seconds)

    @given(
        n=st.integers(min_value=0, max_value=1 << 20),
        steps=st.integers(min_value=0, max_value=10_000),
        seconds=st.floats(min_value=1e-9, max_value=1e6),
    )
    @settings(max_examples=200)
    def test_model_invariant(self, n, steps, seconds):
        value = gflops(n, steps, seconds)
        assert math.isclose(value * seconds * 1e9,
                            FLOPS_PER_INTERACTION * n * n * steps,
                            rel_tol=1e-9, abs_tol=0.0)


class TestBenchMatrix:
    @pytest.mark.parametrize("axis", ["variants", "ns", "threads", "precisions",
                                      "block_sizes"])
    def test_empty_axis_rejected(self, axis):
        kwargs = dict(variants=("seq-baseline",), ns=(8,))
        kwargs[axis] = ()
        with pytest.raises(InvalidConfigError, match=axis):
            BenchMatrix(**kwargs)


class TestEnvironmentReport:
    def test_capture_fills_every_field(self):
        env = EnvironmentReport.capture()
        assert env.logical_cpus >= 1
        assert env.physical_cpus >= 1
        assert env.simd_tag
        assert env.build_profile
        assert env.allocator
        assert env.artifact_version
        assert env.timestamp

    def test_as_dict_round_trips_fields(self):
        env = EnvironmentReport.capture()
        data = env.as_dict()
        assert data == EnvironmentReport(**data).as_dict()


class TestRunBenchmark:
    def test_single_cell_shape(self):
        matrix = BenchMatrix(variants=("seq-baseline",), ns=(32,), threads=(1,))
        records = run_benchmark(matrix, steps=2, repetitions=3, warmup=1)
        assert len(records) == 1
        record = records[0]
        assert record.ok and record.status == "ok"
        assert record.variant == "seq-baseline"
        assert record.n == 32 and record.steps == 2
        assert record.threads_requested == "1" and record.threads_resolved == 1
        assert record.block_size is None
        assert len(record.raw_seconds) == 3
        assert record.mean_seconds == statistics.fmean(record.raw_seconds)
        assert record.stddev_seconds == statistics.pstdev(record.raw_seconds)
        assert record.gflops == gflops(32, 2, record.mean_seconds)
        assert record.checksum

    def test_final_state_checksum_reproducible(self):
        matrix = BenchMatrix(variants=("parallel",), ns=(24,))
        first = run_benchmark(matrix, steps=3, repetitions=2, warmup=0, seed=7)
        second = run_benchmark(matrix, steps=3, repetitions=2, warmup=0, seed=7)
        assert first[0].checksum == second[0].checksum
        third = run_benchmark(matrix, steps=3, repetitions=1, warmup=0, seed=8)
        assert third[0].checksum != first[0].checksum

    def test_matrix_expands_to_42_cells(self):
        matrix = BenchMatrix(variants=VARIANT_IDS, ns=(8, 12, 16),
                             threads=(1, "auto"), block_sizes=(16,))
        records = run_benchmark(matrix, steps=1, repetitions=1, warmup=0)
        assert len(records) == len(VARIANT_IDS) * 3 * 2
        seen = {(r.variant, r.n, r.threads_requested) for r in records}
        assert len(seen) == 42

    def test_unavailable_cells_become_skipped_records(self):
        matrix = BenchMatrix(variants=("parallel-fastmath-simd",), ns=(8,))
        records = run_benchmark(matrix, steps=1, repetitions=1, warmup=0,
                                backend="fallback")
        assert len(records) == 1
        assert records[0].status.startswith("skipped:")
        assert records[0].mean_seconds is None
        assert records[0].gflops is None

    def test_unknown_variant_becomes_skipped_record(self):
        matrix = BenchMatrix(variants=("parallel-quantum",), ns=(8,))
        records = run_benchmark(matrix, steps=1, repetitions=1, warmup=0)
        assert len(records) == 1
        assert records[0].status.startswith("skipped:")

    def test_blocked_rows_expand_over_block_sizes(self):
        matrix = BenchMatrix(variants=("parallel-blocked", "parallel"),
                             ns=(16,), block_sizes=(8, 16, 32))
        records = run_benchmark(matrix, steps=1, repetitions=1, warmup=0)
        blocked = [r for r in records if r.variant == "parallel-blocked"]
        plain = [r for r in records if r.variant == "parallel"]
        assert sorted(r.block_size for r in blocked) == [8, 16, 32]
        assert [r.block_size for r in plain] == [None]

    def test_progress_callback_sees_every_record(self):
        seen = []
        matrix = BenchMatrix(variants=("seq-baseline", "parallel"), ns=(8, 16))
        records = run_benchmark(matrix, steps=1, repetitions=1, warmup=0,
                                progress=seen.append)
        assert seen == records

    @pytest.mark.parametrize("kwargs", [{"repetitions": 0}, {"warmup": -1}])
    def test_rejects_bad_run_parameters(self, kwargs):
        matrix = BenchMatrix(variants=("seq-baseline",), ns=(8,))
        with pytest.raises(InvalidConfigError):
            run_benchmark(matrix, steps=1, **kwargs)


class TestWriteResults:
    def run_small(self):
        matrix = BenchMatrix(
            variants=("seq-baseline", "parallel-fastmath-alloc"), ns=(16,))
        return run_benchmark(matrix, steps=2, repetitions=2, warmup=0)

    def test_header_and_row_count(self, tmp_path):
        records = self.run_small()
        env = EnvironmentReport.capture()
        csv_path = tmp_path / "results.csv"
        write_results(records, env, csv_path)
        lines = csv_path.read_text(encoding="ascii").splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 1 + len(records)

    def test_single_record_gives_two_lines(self, tmp_path):
        record = BenchmarkRecord(
            variant="seq-baseline", n=8, steps=1, threads_requested="1",
            threads_resolved=1, precision="double", block_size=None,
            repetitions=1, mean_seconds=0.5, stddev_seconds=0.0,
            gflops=gflops(8, 1, 0.5), status="ok",
        )
        csv_path = tmp_path / "one.csv"
        write_results([record], EnvironmentReport.capture(), csv_path)
        lines = csv_path.read_text(encoding="ascii").splitlines()
        assert len(lines) == 2

    def test_rows_rederive_flop_model(self, tmp_path):
        records = self.run_small()
        csv_path = tmp_path / "results.csv"
        write_results(records, EnvironmentReport.capture(), csv_path)
        with open(csv_path, newline="", encoding="ascii") as fh:
            rows = list(csv.DictReader(fh))
        ok_rows = [row for row in rows if row["status"] == "ok"]
        assert ok_rows
        for row in ok_rows:
            n = int(row["n"])
            steps = int(row["steps"])
            flops = float(row["gflops"]) * float(row["mean_seconds"]) * 1e9
            assert math.isclose(flops, FLOPS_PER_INTERACTION * n * n * steps,
                                rel_tol=1e-9)

    def test_skipped_rows_present_with_empty_timings(self, tmp_path):
        records = self.run_small()
        csv_path = tmp_path / "results.csv"
        write_results(records, EnvironmentReport.capture(), csv_path)
        with open(csv_path, newline="", encoding="ascii") as fh:
            rows = list(csv.DictReader(fh))
        skipped = [row for row in rows if row["status"].startswith("skipped:")]
        assert skipped  # the allocator rung cannot run without a preload
        for row in skipped:
            assert row["mean_seconds"] == ""
            assert row["stddev_seconds"] == ""
            assert row["gflops"] == ""

    def test_sidecar_contents(self, tmp_path):
        records = self.run_small()
        env = EnvironmentReport.capture()
        csv_path = tmp_path / "results.csv"
        meta_path = write_results(records, env, csv_path)
        assert meta_path == str(tmp_path / "results.meta.json")
        with open(meta_path, encoding="ascii") as fh:
            meta = json.load(fh)
        assert meta["environment"] == env.as_dict()
        assert meta["variant_ladder"] == list(VARIANT_IDS)
        assert meta["flops_per_interaction"] == FLOPS_PER_INTERACTION
        assert len(meta["records"]) == len(records)
        assert meta["records"][0]["raw_seconds"]

    def test_empty_record_list_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            write_results([], EnvironmentReport.capture(), tmp_path / "x.csv")

    def test_float_cells_round_trip_exactly(self, tmp_path):
        records = self.run_small()
        csv_path = tmp_path / "results.csv"
        write_results(records, EnvironmentReport.capture(), csv_path)
        with open(csv_path, newline="", encoding="ascii") as fh:
            rows = list(csv.DictReader(fh))
        by_key = {(r.variant, r.n): r for r in records}
        for row in rows:
            record = by_key[(row["variant"], int(row["n"]))]
            if row["status"] == "ok":
                assert float(row["gflops"]) == record.gflops
                assert float(row["mean_seconds"]) == record.mean_seconds
