"""Particle state containers and simulation configuration.

State is stored struct-of-arrays: three (n, 3) float arrays for positions,
velocities, and accelerations plus an (n,) array of masses, all sharing one
dtype.  Two precisions are supported, float32 ("single") and float64
("double").
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Union

import numpy as np

DEFAULT_G = 6.674e-11
DEFAULT_SOFTENING = 1e-9
DEFAULT_DT = 0.01

PRECISIONS = ("single", "double")
VALID_BLOCK_SIZES = (8, 16, 32)

_DTYPE_FOR_PRECISION = {"single": np.float32, "double": np.float64}
_PRECISION_FOR_DTYPE = {np.dtype(np.float32): "single", np.dtype(np.float64): "double"}


class InvalidConfigError(ValueError):
    """A simulation or benchmark configuration failed validation."""


class VariantUnavailableError(RuntimeError):
    """A requested kernel variant cannot run in this build or process."""


def dtype_for_precision(precision: str) -> np.dtype:
    """Map a precision name to its numpy dtype."""
    try:
        return np.dtype(_DTYPE_FOR_PRECISION[precision])
    except KeyError:
        raise InvalidConfigError(
            f"precision must be one of {PRECISIONS}, got {precision!r}"
        ) from None


def precision_for_dtype(dtype) -> str:
    try:
        return _PRECISION_FOR_DTYPE[np.dtype(dtype)]
    except KeyError:
        raise InvalidConfigError(f"unsupported dtype {dtype!r}") from None


@dataclass
class ParticleSystem:
    """State of n bodies in one shared floating-point precision.

    positions, velocities, accelerations: shape (n, 3)
    masses: shape (n,), strictly positive
    """

    positions: np.ndarray
    velocities: np.ndarray
    masses: np.ndarray
    accelerations: np.ndarray = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.accelerations is None:
            self.accelerations = np.zeros_like(self.positions)
        self.validate()

    @property
    def n(self) -> int:
        return self.positions.shape[0]

    @property
    def dtype(self) -> np.dtype:
        return self.positions.dtype

    @property
    def precision(self) -> str:
        return precision_for_dtype(self.positions.dtype)

    def validate(self) -> None:
        """Check shapes, dtype consistency, finiteness, and positive masses."""
        pos, vel, mas, acc = self.positions, self.velocities, self.masses, self.accelerations
        for name, arr in (("positions", pos), ("velocities", vel),
                          ("masses", mas), ("accelerations", acc)):
            if not isinstance(arr, np.ndarray):
                raise ValueError(f"{name} must be a numpy array, got {type(arr).__name__}")
        if pos.dtype not in _PRECISION_FOR_DTYPE:
            raise ValueError(f"unsupported dtype {pos.dtype}; use float32 or float64")
        if not (pos.dtype == vel.dtype == mas.dtype == acc.dtype):
            raise ValueError(
                "dtype mismatch: positions %s, velocities %s, masses %s, accelerations %s"
                % (pos.dtype, vel.dtype, mas.dtype, acc.dtype)
            )
        n = pos.shape[0]
        if n < 1:
            raise ValueError("a system must contain at least one body")
        for name, arr, shape in (("positions", pos, (n, 3)),
                                 ("velocities", vel, (n, 3)),
                                 ("accelerations", acc, (n, 3)),
                                 ("masses", mas, (n,))):
            if arr.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
        if not np.isfinite(pos).all() or not np.isfinite(vel).all():
            raise ValueError("positions and velocities must be finite")
        if not np.isfinite(mas).all() or not (mas > 0).all():
            raise ValueError("masses must be finite and strictly positive")

    def copy(self) -> "ParticleSystem":
        return ParticleSystem(
            positions=self.positions.copy(),
            velocities=self.velocities.copy(),
            masses=self.masses.copy(),
            accelerations=self.accelerations.copy(),
        )

    def astype(self, precision: str) -> "ParticleSystem":
        """Return a copy of the system converted to the given precision."""
        dtype = dtype_for_precision(precision)
        return ParticleSystem(
            positions=np.ascontiguousarray(self.positions, dtype=dtype).copy(),
            velocities=np.ascontiguousarray(self.velocities, dtype=dtype).copy(),
            masses=np.ascontiguousarray(self.masses, dtype=dtype).copy(),
            accelerations=np.ascontiguousarray(self.accelerations, dtype=dtype).copy(),
        )

    def bitwise_equal(self, other: "ParticleSystem") -> bool:
        """True when both systems match bit for bit (dtype, shape, payload)."""
        if self.dtype != other.dtype or self.n != other.n:
            return False
        return (
            self.positions.tobytes() == other.positions.tobytes()
            and self.velocities.tobytes() == other.velocities.tobytes()
            and self.masses.tobytes() == other.masses.tobytes()
        )


def make_system(positions, velocities, masses, precision: str = "double") -> ParticleSystem:
    """Build a validated ParticleSystem from array-likes in the given precision."""
    dtype = dtype_for_precision(precision)
    return ParticleSystem(
        positions=np.array(positions, dtype=dtype),
        velocities=np.array(velocities, dtype=dtype),
        masses=np.array(masses, dtype=dtype),
    )


ThreadSpec = Union[int, str]


@dataclass(frozen=True)
class SimulationConfig:
    """Parameters for one simulation run.

    threads is a positive int or "auto" (resolve to the host logical CPU
    count).  block_size only applies to the blocked variant and must then be
    one of VALID_BLOCK_SIZES.
    """

    dt: float = DEFAULT_DT
    steps: int = 0
    g: float = DEFAULT_G
    softening: float = DEFAULT_SOFTENING
    precision: str = "double"
    threads: ThreadSpec = "auto"
    block_size: int | None = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if not (isinstance(self.dt, (int, float)) and self.dt > 0):
            raise InvalidConfigError(f"dt must be a positive number, got {self.dt!r}")
        if not (isinstance(self.steps, int) and self.steps >= 0):
            raise InvalidConfigError(f"steps must be a non-negative integer, got {self.steps!r}")
        if not (isinstance(self.g, (int, float)) and self.g > 0):
            raise InvalidConfigError(f"g must be a positive number, got {self.g!r}")
        if not (isinstance(self.softening, (int, float)) and self.softening >= 0):
            raise InvalidConfigError(
                f"softening must be a non-negative number, got {self.softening!r}"
            )
        if self.precision not in PRECISIONS:
            raise InvalidConfigError(
                f"precision must be one of {PRECISIONS}, got {self.precision!r}"
            )
        if self.threads != "auto":
            if not (isinstance(self.threads, int) and not isinstance(self.threads, bool)
                    and self.threads >= 1):
                raise InvalidConfigError(
                    f'threads must be a positive integer or "auto", got {self.threads!r}'
                )
        if self.block_size is not None:
            if not (isinstance(self.block_size, int) and self.block_size >= 1):
                raise InvalidConfigError(
                    f"block_size must be a positive integer or None, got {self.block_size!r}"
                )

    def with_updates(self, **kwargs) -> "SimulationConfig":
        return replace(self, **kwargs)

    @property
    def dtype(self) -> np.dtype:
        return dtype_for_precision(self.precision)
