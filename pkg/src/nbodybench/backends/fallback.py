"""Pure-Python backend.

Mirrors the compiled kernels exactly.  The strict entry points reuse the
scalar loops from nbodybench.physics, so they are bitwise identical to the
strict compiled extension.  The fast entry points use numpy row-at-a-time
vectorization; they play the role of the fast-math kernels when no compiled
extension is available and carry the same relaxed accuracy contract.
"""

from __future__ import annotations

import math

import numpy as np

name = "fallback"
is_compiled = False
has_simd = False


def _accel_strict(x, y, z, m, ax, ay, az, g, eps):
    n = x.shape[0]
    if x.dtype == np.float64:
        xl, yl, zl, ml = x.tolist(), y.tolist(), z.tolist(), m.tolist()
        g = float(g)
        eps2 = float(eps) * float(eps)
        for i in range(n):
            xi, yi, zi = xl[i], yl[i], zl[i]
            sx = 0.0
            sy = 0.0
            sz = 0.0
            for j in range(n):
                dx = xl[j] - xi
                dy = yl[j] - yi
                dz = zl[j] - zi
                r2 = ((dx * dx + dy * dy) + dz * dz) + eps2
                if r2 > 0.0:
                    den = r2 * math.sqrt(r2)
                    # underflowed cube -> +inf quotient, as IEEE division gives
                    w = g / den if den > 0.0 else math.inf
                    sx = sx + (w * dx) * ml[j]
                    sy = sy + (w * dy) * ml[j]
                    sz = sz + (w * dz) * ml[j]
            ax[i] = sx
            ay[i] = sy
            az[i] = sz
        return
    t = x.dtype.type
    g = t(g)
    eps2 = t(eps) * t(eps)
    zero = t(0.0)
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
                w = g / (r2 * t(math.sqrt(r2)))
                sx = sx + (w * dx) * m[j]
                sy = sy + (w * dy) * m[j]
                sz = sz + (w * dz) * m[j]
        ax[i] = sx
        ay[i] = sy
        az[i] = sz


def accel_seq(x, y, z, m, ax, ay, az, g, eps):
    _accel_strict(x, y, z, m, ax, ay, az, g, eps)


def accel_parallel(x, y, z, m, ax, ay, az, g, eps, threads):
    # thread count only affects scheduling, never arithmetic
    _accel_strict(x, y, z, m, ax, ay, az, g, eps)


def accel_fold(x, y, z, m, ax, ay, az, g, eps, threads):
    _accel_strict(x, y, z, m, ax, ay, az, g, eps)


def _accel_rows(x, y, z, m, ax, ay, az, g, eps):
    t = x.dtype.type
    g = t(g)
    eps2 = t(eps) * t(eps)
    one = t(1.0)
    for i in range(x.shape[0]):
        dx = x - x[i]
        dy = y - y[i]
        dz = z - z[i]
        r2 = dx * dx + dy * dy + dz * dz + eps2
        # pairs at zero softened distance contribute nothing
        zero_sep = r2 <= 0
        if zero_sep.any():
            r2[zero_sep] = one
        w = g / (r2 * np.sqrt(r2))
        if zero_sep.any():
            w[zero_sep] = 0
        ax[i] = ((w * dx) * m).sum()
        ay[i] = ((w * dy) * m).sum()
        az[i] = ((w * dz) * m).sum()


def accel_fast(x, y, z, m, ax, ay, az, g, eps, threads):
    _accel_rows(x, y, z, m, ax, ay, az, g, eps)


def accel_blocked(x, y, z, m, ax, ay, az, g, eps, threads, block):
    t = x.dtype.type
    g = t(g)
    eps2 = t(eps) * t(eps)
    n = x.shape[0]
    one = t(1.0)
    for i in range(n):
        sx = t(0.0)
        sy = t(0.0)
        sz = t(0.0)
        for jb in range(0, n, block):
            je = min(jb + block, n)
            dx = x[jb:je] - x[i]
            dy = y[jb:je] - y[i]
            dz = z[jb:je] - z[i]
            r2 = dx * dx + dy * dy + dz * dz + eps2
            zero_sep = r2 <= 0
            if zero_sep.any():
                r2[zero_sep] = one
            w = g / (r2 * np.sqrt(r2))
            if zero_sep.any():
                w[zero_sep] = 0
            mj = m[jb:je]
            sx = sx + ((w * dx) * mj).sum()
            sy = sy + ((w * dy) * mj).sum()
            sz = sz + ((w * dz) * mj).sum()
        ax[i] = sx
        ay[i] = sy
        az[i] = sz


def _integrate_strict(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt):
    n = x.shape[0]
    t = x.dtype.type
    kick_dt = t(kick_dt)
    dt = t(dt)
    for i in range(n):
        vx[i] = vx[i] + ax[i] * kick_dt
        vy[i] = vy[i] + ay[i] * kick_dt
        vz[i] = vz[i] + az[i] * kick_dt
        x[i] = x[i] + vx[i] * dt
        y[i] = y[i] + vy[i] * dt
        z[i] = z[i] + vz[i] * dt


def integrate(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt, threads):
    _integrate_strict(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt)


def integrate_seq(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt):
    _integrate_strict(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt)


def integrate_fast(x, y, z, vx, vy, vz, ax, ay, az, kick_dt, dt, threads):
    t = x.dtype.type
    kick_dt = t(kick_dt)
    dt = t(dt)
    vx += ax * kick_dt
    vy += ay * kick_dt
    vz += az * kick_dt
    x += vx * dt
    y += vy * dt
    z += vz * dt


def _kick_strict(vx, vy, vz, ax, ay, az, kick_dt):
    n = vx.shape[0]
    kick_dt = vx.dtype.type(kick_dt)
    for i in range(n):
        vx[i] = vx[i] + ax[i] * kick_dt
        vy[i] = vy[i] + ay[i] * kick_dt
        vz[i] = vz[i] + az[i] * kick_dt


def kick(vx, vy, vz, ax, ay, az, kick_dt, threads):
    _kick_strict(vx, vy, vz, ax, ay, az, kick_dt)


def kick_seq(vx, vy, vz, ax, ay, az, kick_dt):
    _kick_strict(vx, vy, vz, ax, ay, az, kick_dt)


def kick_fast(vx, vy, vz, ax, ay, az, kick_dt, threads):
    kick_dt = vx.dtype.type(kick_dt)
    vx += ax * kick_dt
    vy += ay * kick_dt
    vz += az * kick_dt
