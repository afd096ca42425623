"""Verification oracle and state comparison.

reference_simulate is a deliberately simple, self-contained implementation:
plain Python floats, explicit loops, no shared kernel code.  It exists so
every optimized variant has something independent to be checked against.
Reference runs are always carried out in double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .physics import total_energy, total_momentum
from .system import ParticleSystem, SimulationConfig

DENOMINATOR_GUARD = 1e-12
CONSERVATION_GUARD = 1e-30


def reference_simulate(system: ParticleSystem, config: SimulationConfig) -> ParticleSystem:
    """Advance a system with the scalar double-precision reference loops.

    Uses the same kick-drift scheme as run_simulation: first kick dt/2,
    later kicks dt, drift dt after each kick, trailing half kick.  The
    result is always double precision regardless of config.precision.
    """
    pos = system.positions.astype(np.float64)
    vel = system.velocities.astype(np.float64)
    x = pos[:, 0].tolist()
    y = pos[:, 1].tolist()
    z = pos[:, 2].tolist()
    vx = vel[:, 0].tolist()
    vy = vel[:, 1].tolist()
    vz = vel[:, 2].tolist()
    m = system.masses.astype(np.float64).tolist()
    n = len(m)
    g = float(config.g)
    eps = float(config.softening)
    dt = float(config.dt)
    half_dt = 0.5 * dt
    ax = [0.0] * n
    ay = [0.0] * n
    az = [0.0] * n

    def accelerations():
        for i in range(n):
            xi, yi, zi = x[i], y[i], z[i]
            sx = 0.0
            sy = 0.0
            sz = 0.0
            for j in range(n):
                dx = x[j] - xi
                dy = y[j] - yi
                dz = z[j] - zi
                r2 = ((dx * dx + dy * dy) + dz * dz) + eps * eps
                if r2 > 0.0:
                    den = r2 * math.sqrt(r2)
                    w = g / den if den > 0.0 else math.inf
                    sx = sx + (w * dx) * m[j]
                    sy = sy + (w * dy) * m[j]
                    sz = sz + (w * dz) * m[j]
            ax[i] = sx
            ay[i] = sy
            az[i] = sz

    if config.steps > 0:
        for k in range(config.steps):
            accelerations()
            kick_dt = half_dt if k == 0 else dt
            for i in range(n):
                vx[i] = vx[i] + ax[i] * kick_dt
                vy[i] = vy[i] + ay[i] * kick_dt
                vz[i] = vz[i] + az[i] * kick_dt
                x[i] = x[i] + vx[i] * dt
                y[i] = y[i] + vy[i] * dt
                z[i] = z[i] + vz[i] * dt
        accelerations()
        for i in range(n):
            vx[i] = vx[i] + ax[i] * half_dt
            vy[i] = vy[i] + ay[i] * half_dt
            vz[i] = vz[i] + az[i] * half_dt

    return ParticleSystem(
        positions=np.stack([x, y, z], axis=1).astype(np.float64),
        velocities=np.stack([vx, vy, vz], axis=1).astype(np.float64),
        masses=np.array(m, dtype=np.float64),
        accelerations=np.stack([ax, ay, az], axis=1).astype(np.float64),
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Relative position/velocity error of a candidate state against a reference."""

    max_rel_pos_error: float
    max_rel_vel_error: float
    argmax_body: int
    bitwise_equal: bool

    @property
    def max_rel_error(self) -> float:
        return max(self.max_rel_pos_error, self.max_rel_vel_error)


def compare_states(candidate: ParticleSystem, reference: ParticleSystem,
                   denominator_guard: float = DENOMINATOR_GUARD) -> ComparisonReport:
    """Componentwise relative error of candidate against reference.

    Error per component is |c - r| / (|r| + guard); the guard keeps
    near-zero reference components from exploding the quotient.  Also
    reports whether the two states match bit for bit.
    """
    if candidate.n != reference.n:
        raise ValueError(f"body count mismatch: {candidate.n} vs {reference.n}")
    bitwise = candidate.bitwise_equal(reference)
    cp = candidate.positions.astype(np.float64)
    cv = candidate.velocities.astype(np.float64)
    rp = reference.positions.astype(np.float64)
    rv = reference.velocities.astype(np.float64)
    pos_err = np.abs(cp - rp) / (np.abs(rp) + denominator_guard)
    vel_err = np.abs(cv - rv) / (np.abs(rv) + denominator_guard)
    max_pos = float(pos_err.max())
    max_vel = float(vel_err.max())
    if max_pos >= max_vel:
        body = int(pos_err.max(axis=1).argmax())
    else:
        body = int(vel_err.max(axis=1).argmax())
    return ComparisonReport(
        max_rel_pos_error=max_pos,
        max_rel_vel_error=max_vel,
        argmax_body=body,
        bitwise_equal=bitwise,
    )


@dataclass(frozen=True)
class ConservationReport:
    """Normalized drift of the conserved quantities between two states."""

    momentum_drift: float
    energy_drift: float


def check_conservation(initial: ParticleSystem, final: ParticleSystem,
                       g: float, softening: float) -> ConservationReport:
    """Momentum and energy drift of final relative to initial.

    Momentum drift is |P_final - P_initial| / (sum_i m_i |v_i| + guard)
    over the initial state; energy drift is |E_final - E_initial| /
    (|E_initial| + guard).
    """
    p0 = total_momentum(initial)
    p1 = total_momentum(final)
    vel = initial.velocities.astype(np.float64)
    mas = initial.masses.astype(np.float64)
    momentum_scale = float((mas * np.linalg.norm(vel, axis=1)).sum())
    momentum_drift = float(np.linalg.norm(p1 - p0)) / (momentum_scale + CONSERVATION_GUARD)
    e0 = total_energy(initial, g, softening)
    e1 = total_energy(final, g, softening)
    energy_drift = abs(e1 - e0) / (abs(e0) + CONSERVATION_GUARD)
    return ConservationReport(momentum_drift=momentum_drift, energy_drift=energy_drift)


def tolerance_for(variant_strict: bool, precision: str) -> float:
    """Acceptance tolerance for comparing a variant run against the oracle.

    Strict double runs must match bitwise (tolerance 0).  Fast-math double
    runs are allowed 1e-6 relative error; any single-precision run is
    allowed 1e-3 against the double-precision oracle.
    """
    if precision == "single":
        return 1e-3
    return 0.0 if variant_strict else 1e-6
