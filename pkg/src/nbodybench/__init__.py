"""All-pairs gravitational N-body simulation benchmark suite.

The package provides an optimization ladder of kernel variants over one
shared physical model, a verification oracle, a GFLOPS benchmark harness,
deterministic initial conditions with lossless snapshots, and a source
line counting tool.
"""

__version__ = "0.1.0"

from .initial_conditions import SplitMix64, generate, read_snapshot, write_snapshot
from .system import ParticleSystem, SimulationConfig
from .variants import VARIANT_IDS, list_variants, run_simulation
from .verify import compare_states, reference_simulate

__all__ = [
    "ParticleSystem",
    "SimulationConfig",
    "SplitMix64",
    "VARIANT_IDS",
    "__version__",
    "compare_states",
    "generate",
    "list_variants",
    "read_snapshot",
    "reference_simulate",
    "run_simulation",
    "write_snapshot",
]
