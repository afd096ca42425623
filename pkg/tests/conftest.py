"""Shared fixtures: frozen run configurations, cached oracle states, and the
acceptance-summary reporting hook.

The equivalence and conservation runs share one deliberately gentle
configuration (TEST_G, TEST_SOFTENING, TEST_DT): coupling strong enough
that trajectories move and drift is measurable, weak enough that dt=0.01
keeps the integrator comfortably inside its stable regime.
"""

from __future__ import annotations

import math
from functools import lru_cache

import pytest

from nbodybench.initial_conditions import generate
from nbodybench.system import ParticleSystem, SimulationConfig, make_system
from nbodybench.variants import run_simulation
from nbodybench.verify import reference_simulate

TEST_G = 1e-3
TEST_SOFTENING = 0.1
TEST_DT = 0.01
TEST_SEED = 0

STRICT_VARIANTS = ("seq-baseline", "parallel", "parallel-fold")
RELAXED_VARIANTS = ("parallel-fastmath", "parallel-fastmath-simd",
                    "parallel-fastmath-alloc", "parallel-blocked")


def sim_config(steps: int, precision: str = "double", threads="auto",
               block_size=None) -> SimulationConfig:
    """A SimulationConfig in the frozen test regime."""
    return SimulationConfig(dt=TEST_DT, steps=steps, g=TEST_G,
                            softening=TEST_SOFTENING, precision=precision,
                            threads=threads, block_size=block_size)


@lru_cache(maxsize=None)
def cached_system(n: int, seed: int = TEST_SEED) -> ParticleSystem:
    """Seeded input state; treat as read-only (copy before mutating)."""
    return generate(n, seed)


@lru_cache(maxsize=None)
def cached_reference(n: int, steps: int, seed: int = TEST_SEED) -> ParticleSystem:
    """Oracle result for cached_system(n, seed) in the frozen regime."""
    return reference_simulate(cached_system(n, seed), sim_config(steps))


@lru_cache(maxsize=None)
def cached_variant_run(variant: str, n: int, steps: int, precision: str,
                       block_size=None, seed: int = TEST_SEED) -> ParticleSystem:
    """One variant advanced in the frozen regime (results shared across tests)."""
    return run_simulation(variant, cached_system(n, seed),
                          sim_config(steps, precision=precision,
                                     block_size=block_size))


def circular_orbit() -> tuple[ParticleSystem, float]:
    """Two unit masses on a circular orbit: separation 1, g=1, no softening.

    Tangential speed per body satisfies v^2 = g * m_total / (4 * separation);
    with omega = 2 * v / separation the period is 2 * pi / omega.
    """
    v = math.sqrt(0.5)
    system = make_system(
        positions=[[-0.5, 0.0, 0.0], [0.5, 0.0, 0.0]],
        velocities=[[0.0, -v, 0.0], [0.0, v, 0.0]],
        masses=[1.0, 1.0],
    )
    period = 2.0 * math.pi / (2.0 * v)
    return system, period


ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


@pytest.fixture
def acceptance():
    """Recorder for acceptance criteria; one PASS/FAIL/SKIP line each."""

    def record(name: str, passed: bool, detail: str, skip: bool = False):
        status = "SKIP" if skip else ("PASS" if passed else "FAIL")
        ACCEPTANCE_RESULTS.append((name, status, detail))
        if skip:
            pytest.skip(f"{name}: {detail}")
        assert passed, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status:4s} {name}: {detail}")
