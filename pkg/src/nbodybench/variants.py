"""The kernel variant ladder and the simulation driver.

Variants, in ladder order:

  seq-baseline             sequential strict-math kernel
  parallel                 strict-math kernel parallelized over bodies
  parallel-fold            parallel kernel with the inner sum written as a fold
  parallel-fastmath        parallel kernel compiled under fast-math rules
  parallel-fastmath-simd   fast-math kernel built with host-specific SIMD flags
  parallel-fastmath-alloc  fast-math/SIMD kernel run under a scalable allocator
  parallel-blocked         fast-math kernel with the j loop tiled (block 8/16/32)

The three strict variants are bitwise identical to each other and to the
scalar reference for any thread count.  The fast-math rungs trade that
guarantee for speed and carry relative-error bounds instead.

run_simulation advances a system with velocity half-offsets: the first kick
uses dt/2, later kicks use dt, each kick is followed by a position drift of
dt, and a trailing half kick synchronizes velocities at the end.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np

from . import envinfo
from .backends import active_backend, get_backend
from .system import (
    VALID_BLOCK_SIZES,
    InvalidConfigError,
    ParticleSystem,
    SimulationConfig,
    VariantUnavailableError,
)


@dataclass(frozen=True)
class VariantDescriptor:
    """One rung of the optimization ladder."""

    id: str
    summary: str
    kernel: str
    strict_math: bool
    uses_threads: bool
    requires_block_size: bool = False
    available: bool = True
    unavailable_reason: str | None = None


_LADDER = (
    VariantDescriptor(
        "seq-baseline", "sequential strict-math baseline",
        kernel="seq", strict_math=True, uses_threads=False),
    VariantDescriptor(
        "parallel", "strict-math kernel parallelized over bodies",
        kernel="parallel", strict_math=True, uses_threads=True),
    VariantDescriptor(
        "parallel-fold", "parallel kernel with the inner sum written as a fold",
        kernel="fold", strict_math=True, uses_threads=True),
    VariantDescriptor(
        "parallel-fastmath", "parallel kernel compiled under fast-math rules",
        kernel="fast", strict_math=False, uses_threads=True),
    VariantDescriptor(
        "parallel-fastmath-simd", "fast-math kernel built with host-specific SIMD",
        kernel="fast_simd", strict_math=False, uses_threads=True),
    VariantDescriptor(
        "parallel-fastmath-alloc", "fast-math kernel under a scalable allocator",
        kernel="alloc", strict_math=False, uses_threads=True),
    VariantDescriptor(
        "parallel-blocked", "fast-math kernel with a tiled j loop",
        kernel="blocked", strict_math=False, uses_threads=True,
        requires_block_size=True),
)

VARIANT_IDS = tuple(d.id for d in _LADDER)
_BY_ID = {d.id: d for d in _LADDER}


def _availability(desc: VariantDescriptor, backend) -> tuple[bool, str | None]:
    if desc.kernel == "fast_simd":
        if not getattr(backend, "is_compiled", False):
            return False, "requires the compiled SIMD build (pure-Python backend active)"
        if not getattr(backend, "has_simd", False):
            return False, "requires the compiled SIMD build (extension not built)"
    if desc.kernel == "alloc":
        if envinfo.loaded_allocator() is None:
            return False, ("requires a scalable allocator (tbbmalloc, jemalloc, or "
                           "tcmalloc) preloaded into the process")
    return True, None


def list_variants(backend=None) -> list[VariantDescriptor]:
    """All variants in ladder order, with availability resolved for a backend."""
    if backend is None or isinstance(backend, str):
        backend = get_backend(backend)
    out = []
    for desc in _LADDER:
        ok, reason = _availability(desc, backend)
        out.append(replace(desc, available=ok, unavailable_reason=reason))
    return out


def get_variant(variant_id: str, backend=None) -> VariantDescriptor:
    """Look up one variant by id, with availability resolved."""
    if variant_id not in _BY_ID:
        raise InvalidConfigError(
            f"unknown variant {variant_id!r}; expected one of {', '.join(VARIANT_IDS)}"
        )
    if backend is None or isinstance(backend, str):
        backend = get_backend(backend)
    desc = _BY_ID[variant_id]
    ok, reason = _availability(desc, backend)
    return replace(desc, available=ok, unavailable_reason=reason)


def resolve_thread_count(threads) -> int:
    """Resolve a thread request ("auto" or a positive int) to a concrete count."""
    if threads == "auto":
        return envinfo.logical_cpus()
    if isinstance(threads, int) and not isinstance(threads, bool) and threads >= 1:
        return threads
    raise InvalidConfigError(f'threads must be a positive integer or "auto", got {threads!r}')


def _select_kernels(desc: VariantDescriptor, backend):
    """Pick the (accel, integrate, kick) callables for a variant on a backend."""
    kind = desc.kernel
    if kind == "alloc":
        # the allocator rung runs the best fast kernel available
        kind = "fast_simd" if getattr(backend, "has_simd", False) else "fast"
    if kind == "seq":
        return backend.accel_seq, backend.integrate_seq, backend.kick_seq
    if kind == "parallel":
        return backend.accel_parallel, backend.integrate, backend.kick
    if kind == "fold":
        return backend.accel_fold, backend.integrate, backend.kick
    if kind == "fast":
        return backend.accel_fast, backend.integrate_fast, backend.kick_fast
    if kind == "fast_simd":
        return (backend.accel_fast_simd, backend.integrate_fast_simd,
                backend.kick_fast_simd)
    if kind == "blocked":
        return backend.accel_blocked, backend.integrate_fast, backend.kick_fast
    raise AssertionError(f"unhandled kernel kind {kind!r}")


def run_simulation(variant, system: ParticleSystem, config: SimulationConfig,
                   backend=None) -> ParticleSystem:
    """Advance a system by config.steps using one kernel variant.

    The input system is never mutated; the returned system is in
    config.precision.  Raises VariantUnavailableError when the variant
    cannot run here and InvalidConfigError for bad parameters.
    """
    if backend is None or isinstance(backend, str):
        backend = get_backend(backend)
    desc = variant if isinstance(variant, VariantDescriptor) else get_variant(variant, backend)
    ok, reason = _availability(desc, backend)
    if not ok:
        raise VariantUnavailableError(f"variant {desc.id!r} unavailable: {reason}")

    config.validate()
    if desc.requires_block_size:
        if config.block_size not in VALID_BLOCK_SIZES:
            raise InvalidConfigError(
                f"variant {desc.id!r} requires block_size in {VALID_BLOCK_SIZES}, "
                f"got {config.block_size!r}"
            )
    elif config.block_size is not None:
        warnings.warn(
            f"block_size is ignored by variant {desc.id!r}",
            UserWarning, stacklevel=2,
        )

    work = system.astype(config.precision)
    dtype = work.dtype
    t = dtype.type

    x = np.ascontiguousarray(work.positions[:, 0])
    y = np.ascontiguousarray(work.positions[:, 1])
    z = np.ascontiguousarray(work.positions[:, 2])
    vx = np.ascontiguousarray(work.velocities[:, 0])
    vy = np.ascontiguousarray(work.velocities[:, 1])
    vz = np.ascontiguousarray(work.velocities[:, 2])
    m = np.ascontiguousarray(work.masses)
    ax = np.zeros_like(x)
    ay = np.zeros_like(y)
    az = np.zeros_like(z)

    g = t(config.g)
    eps = t(config.softening)
    dt = t(config.dt)
    half_dt = t(0.5) * dt
    threads = resolve_thread_count(config.threads) if desc.uses_threads else 1

    accel_fn, integrate_fn, kick_fn = _select_kernels(desc, backend)

    def accel():
        if desc.kernel == "seq":
            accel_fn(x, y, z, m, ax, ay, az, g, eps)
        elif desc.kernel == "blocked":
            accel_fn(x, y, z, m, ax, ay, az, g, eps, threads, config.block_size)
        else:
            accel_fn(x, y, z, m, ax, ay, az, g, eps, threads)

    if config.steps > 0:
        for k in range(config.steps):
            accel()
            kick_dt = half_dt if k == 0 else dt
            if desc.kernel == "seq":
                integrate_fn(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt)
            else:
                integrate_fn(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt, threads)
        accel()
        if desc.kernel == "seq":
            kick_fn(vx, vy, vz, ax, ay, az, half_dt)
        else:
            kick_fn(vx, vy, vz, ax, ay, az, half_dt, threads)

    return ParticleSystem(
        positions=np.stack([x, y, z], axis=1),
        velocities=np.stack([vx, vy, vz], axis=1),
        masses=m,
        accelerations=np.stack([ax, ay, az], axis=1),
    )
