"""Deterministic initial conditions and lossless text snapshots.

Generation draws from SplitMix64, a 64-bit mixing PRNG with a closed-form
jump, so the k-th draw for a given seed is identical on every platform.
Each body consumes exactly seven draws, in order: three position
components, three velocity components, then the mass.  Draw u in [0, 1)
maps to

    position component   u
    velocity component   0.02 * u - 0.01
    mass                 0.1 + 0.9 * u

Snapshots are plain text with hexadecimal float literals, which round-trip
every finite IEEE-754 value exactly::

    NBODY 1 <n> <single|double>
    <mass> <x> <y> <z> <vx> <vy> <vz>      (one line per body)
"""

from __future__ import annotations

import hashlib
import math
import os
import re

import numpy as np

from .system import ParticleSystem, dtype_for_precision

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TWO64 = float(2**64)

DRAWS_PER_BODY = 7

SNAPSHOT_MAGIC = "NBODY"
SNAPSHOT_VERSION = 1


class SplitMix64:
    """SplitMix64 PRNG; next_unit yields float64 values in [0, 1)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def next_unit(self) -> float:
        return self.next_u64() / _TWO64


def _bulk_u64(seed: int, count: int) -> np.ndarray:
    """Vectorized SplitMix64: the first `count` outputs for a seed."""
    with np.errstate(over="ignore"):
        steps = np.arange(1, count + 1, dtype=np.uint64)
        z = np.uint64(seed & _MASK64) + np.uint64(_GAMMA) * steps
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        return z ^ (z >> np.uint64(31))


def generate(n: int, seed: int) -> ParticleSystem:
    """Seeded initial conditions for n bodies, in double precision.

    Positions fall in [0, 1)^3, velocity components in [-0.01, 0.01), and
    masses in [0.1, 1.0).  The same (n, seed) pair always produces the same
    bits.
    """
    if not (isinstance(n, int) and n >= 1):
        raise ValueError(f"n must be a positive integer, got {n!r}")
    draws = _bulk_u64(seed, n * DRAWS_PER_BODY).astype(np.float64) * 2.0**-64
    table = draws.reshape(n, DRAWS_PER_BODY)
    positions = table[:, 0:3].copy()
    velocities = 0.02 * table[:, 3:6] - 0.01
    masses = 0.1 + 0.9 * table[:, 6]
    return ParticleSystem(positions=positions, velocities=velocities, masses=masses)


class SnapshotFormatError(ValueError):
    """A snapshot file failed to parse; .line is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None, path=None):
        where = ""
        if path is not None:
            where += str(path)
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.path = path


def format_scalar(value: float) -> str:
    """Shortest lossless hex literal for a float, e.g. 1.0 -> '0x1p+0'."""
    text = float(value).hex()
    mantissa, exponent = text.split("p")
    if "." in mantissa:
        head, frac = mantissa.split(".")
        frac = frac.rstrip("0")
        mantissa = f"{head}.{frac}" if frac else head
    return f"{mantissa}p{exponent}"


_HEX_FLOAT = re.compile(
    r"[+-]?0x[0-9a-f]+(?:\.[0-9a-f]*)?p[+-]?[0-9]+\Z", re.IGNORECASE
)


def parse_scalar(token: str) -> float:
    """Parse a hex float literal; raises ValueError on anything else."""
    if not _HEX_FLOAT.match(token):
        raise ValueError(f"not a hexadecimal float literal: {token!r}")
    try:
        return float.fromhex(token)
    except OverflowError:
        # fromhex raises OverflowError for exponents past the double range
        raise ValueError(f"hexadecimal float out of range: {token!r}") from None


def snapshot_bytes(system: ParticleSystem) -> bytes:
    """The exact byte content write_snapshot produces."""
    lines = [f"{SNAPSHOT_MAGIC} {SNAPSHOT_VERSION} {system.n} {system.precision}"]
    pos, vel, mas = system.positions, system.velocities, system.masses
    for i in range(system.n):
        fields = (mas[i], pos[i, 0], pos[i, 1], pos[i, 2],
                  vel[i, 0], vel[i, 1], vel[i, 2])
        lines.append(" ".join(format_scalar(v) for v in fields))
    return ("\n".join(lines) + "\n").encode("ascii")


def write_snapshot(system: ParticleSystem, path: str | os.PathLike) -> None:
    """Write a system to a snapshot file (atomically via a temp file)."""
    tmp = f"{os.fspath(path)}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(snapshot_bytes(system))
    os.replace(tmp, path)


def read_snapshot(path: str | os.PathLike) -> ParticleSystem:
    """Read a snapshot file back into a validated ParticleSystem."""
    try:
        with open(path, encoding="ascii", errors="strict") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise SnapshotFormatError(f"snapshot is not ASCII text: {exc}", path=path) from None

    raw_lines = text.splitlines()
    if not raw_lines:
        raise SnapshotFormatError("empty snapshot file", line=1, path=path)

    header = raw_lines[0].split()
    if len(header) != 4 or header[0] != SNAPSHOT_MAGIC:
        raise SnapshotFormatError(
            f"malformed header; expected '{SNAPSHOT_MAGIC} <version> <n> <precision>'",
            line=1, path=path)
    if header[1] != str(SNAPSHOT_VERSION):
        raise SnapshotFormatError(
            f"unsupported snapshot version {header[1]!r}", line=1, path=path)
    try:
        n = int(header[2])
    except ValueError:
        raise SnapshotFormatError(
            f"body count is not an integer: {header[2]!r}", line=1, path=path) from None
    if n < 1:
        raise SnapshotFormatError(f"body count must be positive, got {n}", line=1, path=path)
    precision = header[3]
    try:
        dtype = dtype_for_precision(precision)
    except ValueError:
        raise SnapshotFormatError(
            f"unknown precision {precision!r}; expected 'single' or 'double'",
            line=1, path=path) from None

    records = []
    for idx, line in enumerate(raw_lines[1:], start=2):
        if not line.strip():
            raise SnapshotFormatError("blank line inside body records", line=idx, path=path)
        records.append((idx, line.split()))
    if len(records) != n:
        raise SnapshotFormatError(
            f"header declares {n} bodies but file contains {len(records)} records",
            line=len(raw_lines), path=path)

    masses = np.empty(n, dtype=dtype)
    positions = np.empty((n, 3), dtype=dtype)
    velocities = np.empty((n, 3), dtype=dtype)
    for row, (lineno, tokens) in enumerate(records):
        if len(tokens) != 7:
            raise SnapshotFormatError(
                f"expected 7 fields (mass x y z vx vy vz), got {len(tokens)}",
                line=lineno, path=path)
        try:
            values = [parse_scalar(tok) for tok in tokens]
        except ValueError as exc:
            raise SnapshotFormatError(str(exc), line=lineno, path=path) from None
        if not all(math.isfinite(v) for v in values):
            raise SnapshotFormatError("non-finite value in record", line=lineno, path=path)
        if values[0] <= 0:
            raise SnapshotFormatError(
                f"mass must be strictly positive, got {values[0]!r}",
                line=lineno, path=path)
        masses[row] = values[0]
        positions[row] = values[1:4]
        velocities[row] = values[4:7]

    try:
        return ParticleSystem(positions=positions, velocities=velocities, masses=masses)
    except ValueError as exc:
        raise SnapshotFormatError(str(exc), path=path) from None


def state_checksum(system: ParticleSystem) -> str:
    """SHA-256 over the canonical snapshot bytes of a system."""
    return hashlib.sha256(snapshot_bytes(system)).hexdigest()
