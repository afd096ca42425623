"""Tests for the optimization ladder: ordering, dispatch, and equivalence."""

from __future__ import annotations

import os
import warnings

import numpy as np
import pytest
from conftest import (
    RELAXED_VARIANTS,
    STRICT_VARIANTS,
    cached_reference,
    cached_system,
    cached_variant_run,
    sim_config,
)

from nbodybench.system import InvalidConfigError, VariantUnavailableError
from nbodybench.variants import (
    VARIANT_IDS,
    get_variant,
    list_variants,
    resolve_thread_count,
    run_simulation,
)
from nbodybench.verify import compare_states


class TestLadderCatalogue:
    def test_ladder_order_is_fixed(self):
        assert VARIANT_IDS == (
            "seq-baseline",
            "parallel",
            "parallel-fold",
            "parallel-fastmath",
            "parallel-fastmath-simd",
            "parallel-fastmath-alloc",
            "parallel-blocked",
        )

    def test_list_variants_matches_ladder(self):
        assert tuple(v.id for v in list_variants()) == VARIANT_IDS

    def test_strict_flags(self):
        for vid in STRICT_VARIANTS:
            assert get_variant(vid).strict_math
        for vid in RELAXED_VARIANTS:
            assert not get_variant(vid).strict_math

    def test_thread_usage_flags(self):
        assert not get_variant("seq-baseline").uses_threads
        for vid in VARIANT_IDS[1:]:
            assert get_variant(vid).uses_threads

    def test_only_blocked_needs_block_size(self):
        for vid in VARIANT_IDS:
            assert get_variant(vid).requires_block_size == (vid == "parallel-blocked")

    def test_most_rungs_available_here(self):
        available = [v.id for v in list_variants() if v.available]
        assert len(available) >= 5
        for vid in (*STRICT_VARIANTS, "parallel-fastmath", "parallel-blocked"):
            assert vid in available

    def test_unknown_variant_rejected(self):
        with pytest.raises(InvalidConfigError):
            get_variant("parallel-quantum")
        with pytest.raises(InvalidConfigError):
            run_simulation("parallel-quantum", cached_system(4), sim_config(1))

    def test_unavailable_rungs_carry_reasons_and_raise(self):
        for descriptor in list_variants():
            if descriptor.available:
                continue
            assert descriptor.unavailable_reason
            with pytest.raises(VariantUnavailableError):
                run_simulation(descriptor.id, cached_system(4),
                               sim_config(1, block_size=16))

    def test_simd_rung_unavailable_on_fallback_backend(self):
        with pytest.raises(VariantUnavailableError):
            run_simulation("parallel-fastmath-simd", cached_system(4),
                           sim_config(1), backend="fallback")


class TestThreadResolution:
    def test_explicit_counts_pass_through(self):
        assert resolve_thread_count(56) == 56
        assert resolve_thread_count(1) == 1

    def test_auto_resolves_to_logical_cpus(self):
        assert resolve_thread_count("auto") == os.cpu_count()

    @pytest.mark.parametrize("bad", [0, -2, True, 1.5, "four", None])
    def test_invalid_counts_rejected(self, bad):
        with pytest.raises(InvalidConfigError):
            resolve_thread_count(bad)


class TestBlockSizeHandling:
    @pytest.mark.parametrize("bad", [0, 4, 12, 64, "16"])
    def test_blocked_rejects_unsupported_sizes(self, bad):
        with pytest.raises(InvalidConfigError):
            run_simulation("parallel-blocked", cached_system(8),
                           sim_config(1, block_size=bad))

    def test_blocked_requires_block_size(self):
        with pytest.raises(InvalidConfigError):
            run_simulation("parallel-blocked", cached_system(8), sim_config(1))

    def test_other_variants_warn_when_block_size_given(self):
        with pytest.warns(UserWarning, match="block_size"):
            run_simulation("parallel", cached_system(8),
                           sim_config(1, block_size=16))

    def test_blocked_sizes_agree_with_each_other(self):
        runs = {
            bs: cached_variant_run("parallel-blocked", 64, 5, "double",
                                   block_size=bs)
            for bs in (8, 16, 32)
        }
        for bs in (16, 32):
            report = compare_states(runs[bs], runs[8])
            assert report.max_rel_error < 1e-12


class TestZeroStepRuns:
    @pytest.mark.parametrize("precision", ["double", "single"])
    def test_zero_steps_returns_input_bits(self, precision):
        system = cached_system(32).astype(precision)
        result = run_simulation("seq-baseline", system,
                                sim_config(0, precision=precision))
        assert result.bitwise_equal(system)
        assert result is not system

    def test_input_never_mutated(self):
        system = cached_system(32)
        before = system.copy()
        run_simulation("parallel", system, sim_config(5))
        assert system.bitwise_equal(before)


class TestStrictEquivalence:
    @pytest.mark.parametrize("variant", STRICT_VARIANTS)
    @pytest.mark.parametrize("threads", [1, 3, "auto"])
    def test_bitwise_against_reference(self, variant, threads):
        reference = cached_reference(256, 10)
        result = run_simulation(variant, cached_system(256),
                                sim_config(10, threads=threads))
        assert result.bitwise_equal(reference)

    def test_long_run_parallel_tracks_sequential(self):
        # Many short steps hammer the per-step phase barrier; any torn
        # update between the force and drift phases would show up here.
        cfg = sim_config(300)
        seq = run_simulation("seq-baseline", cached_system(64), cfg)
        par = run_simulation("parallel", cached_system(64), cfg)
        assert par.bitwise_equal(seq)


class TestRelaxedEquivalence:
    @pytest.mark.parametrize("variant", RELAXED_VARIANTS)
    @pytest.mark.parametrize("precision", ["double", "single"])
    def test_within_published_tolerance(self, variant, precision):
        block = 16 if variant == "parallel-blocked" else None
        try:
            result = cached_variant_run(variant, 256, 10, precision,
                                        block_size=block)
        except VariantUnavailableError as exc:
            pytest.skip(str(exc))
        reference = cached_reference(256, 10).astype(precision)
        report = compare_states(result, reference)
        tolerance = 1e-6 if precision == "double" else 1e-3
        assert report.max_rel_error < tolerance

    def test_fastmath_insensitive_to_thread_count(self):
        cfg_1 = sim_config(10, threads=1)
        cfg_4 = sim_config(10, threads=4)
        one = run_simulation("parallel-fastmath", cached_system(128), cfg_1)
        four = run_simulation("parallel-fastmath", cached_system(128), cfg_4)
        assert compare_states(four, one).max_rel_error < 1e-12


class TestPrecisionHandling:
    @pytest.mark.parametrize("variant", ["seq-baseline", "parallel-fastmath"])
    def test_single_runs_stay_single(self, variant):
        system = cached_system(16).astype("single")
        result = run_simulation(variant, system, sim_config(3, precision="single"))
        assert result.precision == "single"
        assert result.positions.dtype == np.float32

    def test_config_precision_governs_output(self):
        # A double input run under a single config is cast on entry.
        result = run_simulation("seq-baseline", cached_system(8),
                                sim_config(1, precision="single"))
        assert result.precision == "single"


def test_no_warnings_in_normal_runs():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        run_simulation("parallel", cached_system(8), sim_config(2))
