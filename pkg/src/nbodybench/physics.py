"""Normative definitions of the core numerical operations.

Every backend, compiled or not, must reproduce the arithmetic written here.
The evaluation order is part of the contract for the strict variants:

Pairwise acceleration contribution of body j on body i::

    dx = x[j] - x[i]            (likewise dy, dz)
    r2 = ((dx*dx + dy*dy) + dz*dz) + eps*eps
    if r2 > 0:
        w = g / (r2 * sqrt(r2))
        ax += (w * dx) * m[j]   (likewise ay, az)

The mass multiplies last so that the pair's geometry factor w and the
products w * d are computed from identical bits in both directions of a
pair, which keeps the scaled action/reaction contributions within 2 ulp
of exact antisymmetry.

Contributions accumulate over j ascending from 0 to n-1; the self pair is
included and contributes zero (when eps == 0 it is skipped by the r2 > 0
guard, otherwise dx = dy = dz = 0 makes w * dx vanish exactly).  Should
r2 * sqrt(r2) underflow to zero (separations below ~1e-108), the quotient
is +infinity under IEEE rules; the scalar paths here reproduce that rather
than raising, to stay consistent with the compiled kernels.

Simulation loops advance with velocity half-offsets (see
variants.run_simulation): each kernel integration phase is, per body, per
component::

    v = v + a * kick_dt        (kick_dt is dt/2 on the first step, else dt)
    p = p + v * dt

with a trailing half kick after the final force evaluation to synchronize
velocities with positions.  The equivalent synchronized single-step rule
is exposed as integrate_step.

The functions in this module are scalar reference implementations meant for
clarity and for oracle-style checks at small n, not for throughput.
"""

from __future__ import annotations

import math

import numpy as np

from .system import DEFAULT_G, DEFAULT_SOFTENING, ParticleSystem, SimulationConfig


def pairwise_acceleration(pos_i, pos_j, mass_j: float,
                          g: float = DEFAULT_G,
                          softening: float = DEFAULT_SOFTENING) -> np.ndarray:
    """Acceleration induced on a body at pos_i by a body of mass mass_j at pos_j.

    Returns a float64 vector of shape (3,).  Follows the normative evaluation
    order documented in the module docstring.
    """
    xi, yi, zi = (float(c) for c in pos_i)
    xj, yj, zj = (float(c) for c in pos_j)
    g = float(g)
    eps = float(softening)
    mj = float(mass_j)
    dx = xj - xi
    dy = yj - yi
    dz = zj - zi
    r2 = ((dx * dx + dy * dy) + dz * dz) + eps * eps
    if r2 > 0.0:
        den = r2 * math.sqrt(r2)
        # den can underflow to zero for absurdly small separations; IEEE
        # division then yields +inf, which is what the compiled kernels do
        w = g / den if den > 0.0 else math.inf
        return np.array([(w * dx) * mj, (w * dy) * mj, (w * dz) * mj], dtype=np.float64)
    return np.zeros(3, dtype=np.float64)


def compute_accelerations(system: ParticleSystem, config: SimulationConfig) -> np.ndarray:
    """All-pairs accelerations for every body, in the system's precision.

    Scalar double-nested loop over bodies, j ascending, self pair included.
    Arithmetic is carried out in the system dtype so that results in single
    precision match the single-precision kernels bit for bit.
    """
    n = system.n
    dtype = system.dtype
    if dtype == np.float64:
        x, y, z = (system.positions[:, c].tolist() for c in range(3))
        m = system.masses.tolist()
        g = float(config.g)
        eps = float(config.softening)
        out = np.empty((n, 3), dtype=dtype)
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
            out[i, 0] = sx
            out[i, 1] = sy
            out[i, 2] = sz
        return out

    # float32 path: numpy scalars keep every intermediate rounded to single
    x = system.positions[:, 0]
    y = system.positions[:, 1]
    z = system.positions[:, 2]
    m = system.masses
    g = dtype.type(config.g)
    eps = dtype.type(config.softening)
    eps2 = eps * eps
    zero = dtype.type(0.0)
    out = np.empty((n, 3), dtype=dtype)
    for i in range(n):
        xi, yi, zi = x[i], y[i], z[i]
        sx = zero
        sy = zero
        sz = zero
        for j in range(n):
            dx = x[j] - xi
            dy = y[j] - yi
            dz = z[j] - zi
            r2 = ((dx * dx + dy * dy) + dz * dz) + eps2
            if r2 > zero:
                w = g / (r2 * dtype.type(math.sqrt(r2)))
                sx = sx + (w * dx) * m[j]
                sy = sy + (w * dy) * m[j]
                sz = sz + (w * dz) * m[j]
        out[i, 0] = sx
        out[i, 1] = sy
        out[i, 2] = sz
    return out


def integrate_step(system: ParticleSystem, accelerations: np.ndarray, dt: float) -> ParticleSystem:
    """One isolated position/velocity update; returns a new system.

    Per body: dv = a * dt; the position advances by (v + dv/2) * dt using
    the old velocity plus half the increment, then the velocity gains the
    full dv.  All arithmetic happens in the system's dtype.

    This is the single-step update rule; full runs interleave the velocity
    increment with fresh accelerations (see variants.run_simulation), which
    is what keeps energy bounded over long integrations.
    """
    dtype = system.dtype
    t = dtype.type
    dt_t = t(dt)
    half = t(0.5)
    acc = np.asarray(accelerations, dtype=dtype)
    if acc.shape != system.positions.shape:
        raise ValueError(
            f"accelerations must have shape {system.positions.shape}, got {acc.shape}"
        )
    out = system.copy()
    dv = acc * dt_t
    out.positions = out.positions + (out.velocities + half * dv) * dt_t
    out.velocities = out.velocities + dv
    out.accelerations = acc.copy()
    return out


def total_momentum(system: ParticleSystem) -> np.ndarray:
    """Total linear momentum, accumulated in float64 over bodies in index order."""
    px = 0.0
    py = 0.0
    pz = 0.0
    vel = system.velocities
    mas = system.masses
    for i in range(system.n):
        mi = float(mas[i])
        px += mi * float(vel[i, 0])
        py += mi * float(vel[i, 1])
        pz += mi * float(vel[i, 2])
    return np.array([px, py, pz], dtype=np.float64)


def total_energy(system: ParticleSystem,
                 g: float = DEFAULT_G,
                 softening: float = DEFAULT_SOFTENING) -> float:
    """Kinetic plus softened pairwise potential energy, accumulated in float64.

    Kinetic sums over bodies in index order; potential sums over unordered
    pairs i < j in lexicographic order using the softened separation
    sqrt(dx^2 + dy^2 + dz^2 + eps^2).
    """
    g = float(g)
    eps = float(softening)
    pos = system.positions.astype(np.float64, copy=False)
    vel = system.velocities.astype(np.float64, copy=False)
    mas = system.masses.astype(np.float64, copy=False)
    n = system.n
    kinetic = 0.0
    for i in range(n):
        vx, vy, vz = vel[i]
        kinetic += 0.5 * float(mas[i]) * (vx * vx + vy * vy + vz * vz)
    potential = 0.0
    for i in range(n):
        xi, yi, zi = pos[i]
        for j in range(i + 1, n):
            dx = pos[j, 0] - xi
            dy = pos[j, 1] - yi
            dz = pos[j, 2] - zi
            r2 = ((dx * dx + dy * dy) + dz * dz) + eps * eps
            potential -= g * float(mas[i]) * float(mas[j]) / math.sqrt(r2)
    return kinetic + potential
