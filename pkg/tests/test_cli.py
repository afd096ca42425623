"""Tests for the command-line interface: exit codes, output, file artifacts."""

from __future__ import annotations

import csv
import json
import subprocess
import sys

import pytest

from nbodybench import __version__, envinfo
from nbodybench.cli import main
from nbodybench.initial_conditions import generate, read_snapshot
from nbodybench.variants import VARIANT_IDS


class TestGenerateCommand:
    def test_round_trip(self, tmp_path, capsys):
        out = tmp_path / "state.nbody"
        rc = main(["generate", "--n", "16", "--seed", "3", "--out", str(out)])
        assert rc == 0
        assert "wrote 16 bodies" in capsys.readouterr().out
        assert read_snapshot(out).bitwise_equal(generate(16, seed=3))

    def test_bad_count_is_usage_error(self, tmp_path, capsys):
        rc = main(["generate", "--n", "0", "--out", str(tmp_path / "x.nbody")])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_unwritable_path_is_usage_error(self, tmp_path, capsys):
        rc = main(["generate", "--n", "2",
                   "--out", str(tmp_path / "missing" / "x.nbody")])
        assert rc == 2
        assert "error:" in capsys.readouterr().err


class TestVerifyCommand:
    def test_strict_variant_passes(self, capsys):
        rc = main(["verify", "--variant", "seq-baseline", "--n", "8",
                   "--steps", "2"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "requirement: bitwise equality" in out
        assert out.strip().endswith("PASS")

    def test_relaxed_variant_passes_with_tolerance(self, capsys):
        rc = main(["verify", "--variant", "parallel-fastmath", "--n", "8",
                   "--steps", "2"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "max relative error <= 1e-06" in out
        assert out.strip().endswith("PASS")

    def test_blocked_requires_block_size(self, capsys):
        rc = main(["verify", "--variant", "parallel-blocked", "--n", "8",
                   "--steps", "1"])
        assert rc == 2
        assert "block_size" in capsys.readouterr().err

    def test_blocked_passes_with_block_size(self, capsys):
        rc = main(["verify", "--variant", "parallel-blocked", "--n", "8",
                   "--steps", "1", "--block-size", "8"])
        assert rc == 0
        assert capsys.readouterr().out.strip().endswith("PASS")

    def test_unavailable_variant_is_usage_error(self, capsys):
        if envinfo.loaded_allocator():
            pytest.skip("a scalable allocator is preloaded here")
        rc = main(["verify", "--variant", "parallel-fastmath-alloc",
                   "--n", "8", "--steps", "1"])
        assert rc == 2
        assert "unavailable" in capsys.readouterr().err

    def test_unknown_variant_rejected_by_parser(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--variant", "warp-drive", "--n", "8", "--steps", "1"])
        assert excinfo.value.code == 2


class TestBenchCommand:
    def test_small_sweep_writes_artifacts(self, tmp_path, capsys):
        rc = main(["bench", "--n", "8", "--steps", "1", "--reps", "1",
                   "--warmup", "0", "--blocks", "16", "--out", str(tmp_path)])
        out = capsys.readouterr().out
        assert rc == 0
        assert "wrote" in out
        csv_path = tmp_path / "results.csv"
        meta_path = tmp_path / "results.meta.json"
        assert csv_path.exists() and meta_path.exists()
        with open(csv_path, newline="", encoding="ascii") as fh:
            rows = list(csv.DictReader(fh))
        assert {row["variant"] for row in rows} == set(VARIANT_IDS)
        statuses = {row["variant"]: row["status"] for row in rows}
        if not envinfo.loaded_allocator():
            assert statuses["parallel-fastmath-alloc"].startswith("skipped:")
        with open(meta_path, encoding="ascii") as fh:
            meta = json.load(fh)
        assert meta["variant_ladder"] == list(VARIANT_IDS)

    def test_variant_subset(self, tmp_path):
        rc = main(["bench", "--variants", "seq-baseline,parallel", "--n", "8",
                   "--steps", "1", "--reps", "1", "--warmup", "0",
                   "--out", str(tmp_path)])
        assert rc == 0
        with open(tmp_path / "results.csv", newline="", encoding="ascii") as fh:
            rows = list(csv.DictReader(fh))
        assert [row["variant"] for row in rows] == ["seq-baseline", "parallel"]

    def test_bad_body_count_is_usage_error(self, tmp_path, capsys):
        rc = main(["bench", "--n", "0", "--steps", "1", "--reps", "1",
                   "--warmup", "0", "--out", str(tmp_path)])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_unknown_variant_rejected_by_parser(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["bench", "--variants", "bogus", "--out", str(tmp_path)])
        assert excinfo.value.code == 2


class TestSlocCommand:
    def test_counts_and_totals_printed(self, tmp_path, capsys):
        path = tmp_path / "sample.py"
        path.write_text("x = 1\n# setup\ny = 2\n\nz = x + y\n\n", encoding="ascii")
        rc = main(["sloc", "--profile", "python", str(path)])
        out = capsys.readouterr().out
        assert rc == 0
        assert f"{path}: code=3 comment=1 blank=2" in out
        assert "total: code=3 comment=1 blank=2" in out

    def test_regions_reported(self, tmp_path, capsys):
        path = tmp_path / "sample.py"
        path.write_text("# SLOC-REGION:core\nx = 1\n# SLOC-END\n", encoding="ascii")
        rc = main(["sloc", "--profile", "python", str(path)])
        assert rc == 0
        assert "region core: code=1 comment=0 blank=0" in capsys.readouterr().out

    def test_json_report_written(self, tmp_path):
        src = tmp_path / "sample.py"
        src.write_text("x = 1\n", encoding="ascii")
        report_path = tmp_path / "report.json"
        rc = main(["sloc", "--profile", "python", "--json", str(report_path),
                   str(src)])
        assert rc == 0
        data = json.loads(report_path.read_text(encoding="utf-8"))
        assert data["totals"]["code"] == 1

    def test_unreadable_file_noted_but_run_continues(self, tmp_path, capsys):
        good = tmp_path / "good.py"
        good.write_text("x = 1\n", encoding="ascii")
        rc = main(["sloc", "--profile", "python",
                   str(tmp_path / "absent.py"), str(good)])
        captured = capsys.readouterr()
        assert rc == 0
        assert "unreadable" in captured.err
        assert "total: code=1" in captured.out

    def test_unknown_profile_rejected_by_parser(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["sloc", "--profile", "cobol", str(tmp_path)])
        assert excinfo.value.code == 2


class TestVariantsCommand:
    def test_lists_full_ladder(self, capsys):
        rc = main(["variants"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.startswith("build profile:")
        for vid in VARIANT_IDS:
            assert vid in out


class TestTopLevel:
    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_missing_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_module_entry_point(self, tmp_path):
        out = tmp_path / "state.nbody"
        proc = subprocess.run(
            [sys.executable, "-m", "nbodybench", "generate", "--n", "4",
             "--out", str(out)],
            capture_output=True, text=True, timeout=60,
        )
        assert proc.returncode == 0, proc.stderr
        assert read_snapshot(out).bitwise_equal(generate(4, seed=0))
