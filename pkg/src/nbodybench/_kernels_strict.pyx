# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
# cython: language_level=3
"""Strict-math kernels: sequential, parallel, and parallel-fold.

Compiled with contraction and fast-math disabled so results are bitwise
identical to the scalar reference loops for any thread count.  Each body's
accumulators are thread private; writes to distinct i never alias.
"""

from cython.parallel cimport prange

from libc.math cimport sqrt, sqrtf


ctypedef fused real:
    float
    double


cdef inline real _geom_w(real g, real r2) noexcept nogil:
    # mass-free pair factor w = g / (r2 * sqrt(r2)), precision-matched sqrt
    if real is float:
        return g / (r2 * sqrtf(r2))
    else:
        return g / (r2 * sqrt(r2))


# SLOC-REGION:seq-baseline
def accel_seq(real[::1] x, real[::1] y, real[::1] z, real[::1] m,
              real[::1] ax, real[::1] ay, real[::1] az,
              real g, real eps):
    """Sequential all-pairs accelerations."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    cdef real dx, dy, dz, r2, w, sx, sy, sz
    cdef real eps2 = eps * eps
    with nogil:
        for i in range(n):
            sx = 0
            sy = 0
            sz = 0
            for j in range(n):
                dx = x[j] - x[i]
                dy = y[j] - y[i]
                dz = z[j] - z[i]
                r2 = ((dx * dx + dy * dy) + dz * dz) + eps2
                if r2 > 0:
                    w = _geom_w(g, r2)
                    sx = sx + (w * dx) * m[j]
                    sy = sy + (w * dy) * m[j]
                    sz = sz + (w * dz) * m[j]
            ax[i] = sx
            ay[i] = sy
            az[i] = sz
# SLOC-END


# SLOC-REGION:parallel
def accel_parallel(real[::1] x, real[::1] y, real[::1] z, real[::1] m,
                   real[::1] ax, real[::1] ay, real[::1] az,
                   real g, real eps, int threads):
    """Parallel all-pairs accelerations, one body per loop iteration."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    cdef real dx, dy, dz, r2, w, sx, sy, sz
    cdef real eps2 = eps * eps
    for i in prange(n, nogil=True, num_threads=threads, schedule='static'):
        sx = 0
        sy = 0
        sz = 0
        for j in range(n):
            dx = x[j] - x[i]
            dy = y[j] - y[i]
            dz = z[j] - z[i]
            r2 = ((dx * dx + dy * dy) + dz * dz) + eps2
            if r2 > 0:
                w = _geom_w(g, r2)
                sx = sx + (w * dx) * m[j]
                sy = sy + (w * dy) * m[j]
                sz = sz + (w * dz) * m[j]
        ax[i] = sx
        ay[i] = sy
        az[i] = sz
# SLOC-END


cdef inline real _fold_add(real acc, real w, real d, real mj) noexcept nogil:
    # combining step of the fold: acc' = acc + (w * d) * m_j
    return acc + (w * d) * mj


# SLOC-REGION:parallel-fold
def accel_fold(real[::1] x, real[::1] y, real[::1] z, real[::1] m,
               real[::1] ax, real[::1] ay, real[::1] az,
               real g, real eps, int threads):
    """Parallel accelerations with the inner sum expressed as a fold.

    The per-body reduction threads its running value through _fold_add, the
    closest a C-level loop comes to a fold-over-pairs formulation.  The
    arithmetic is identical to accel_parallel.
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    cdef real dx, dy, dz, r2, w, sx, sy, sz
    cdef real eps2 = eps * eps
    for i in prange(n, nogil=True, num_threads=threads, schedule='static'):
        sx = 0
        sy = 0
        sz = 0
        for j in range(n):
            dx = x[j] - x[i]
            dy = y[j] - y[i]
            dz = z[j] - z[i]
            r2 = ((dx * dx + dy * dy) + dz * dz) + eps2
            if r2 > 0:
                w = _geom_w(g, r2)
                sx = _fold_add(sx, w, dx, m[j])
                sy = _fold_add(sy, w, dy, m[j])
                sz = _fold_add(sz, w, dz, m[j])
        ax[i] = sx
        ay[i] = sy
        az[i] = sz
# SLOC-END


def integrate(real[::1] x, real[::1] y, real[::1] z,
              real[::1] vx, real[::1] vy, real[::1] vz,
              real[::1] ax, real[::1] ay, real[::1] az,
              real kick_dt, real dt, int threads):
    """Kick velocities by kick_dt, then drift positions by dt (parallel)."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i
    for i in prange(n, nogil=True, num_threads=threads, schedule='static'):
        vx[i] = vx[i] + ax[i] * kick_dt
        vy[i] = vy[i] + ay[i] * kick_dt
        vz[i] = vz[i] + az[i] * kick_dt
        x[i] = x[i] + vx[i] * dt
        y[i] = y[i] + vy[i] * dt
        z[i] = z[i] + vz[i] * dt


def integrate_seq(real[::1] x, real[::1] y, real[::1] z,
                  real[::1] vx, real[::1] vy, real[::1] vz,
                  real[::1] ax, real[::1] ay, real[::1] az,
                  real kick_dt, real dt):
    """Sequential kick-then-drift."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            vx[i] = vx[i] + ax[i] * kick_dt
            vy[i] = vy[i] + ay[i] * kick_dt
            vz[i] = vz[i] + az[i] * kick_dt
            x[i] = x[i] + vx[i] * dt
            y[i] = y[i] + vy[i] * dt
            z[i] = z[i] + vz[i] * dt


def kick(real[::1] vx, real[::1] vy, real[::1] vz,
         real[::1] ax, real[::1] ay, real[::1] az,
         real kick_dt, int threads):
    """Kick velocities by kick_dt without drifting (parallel)."""
    cdef Py_ssize_t n = vx.shape[0]
    cdef Py_ssize_t i
    for i in prange(n, nogil=True, num_threads=threads, schedule='static'):
        vx[i] = vx[i] + ax[i] * kick_dt
        vy[i] = vy[i] + ay[i] * kick_dt
        vz[i] = vz[i] + az[i] * kick_dt


def kick_seq(real[::1] vx, real[::1] vy, real[::1] vz,
             real[::1] ax, real[::1] ay, real[::1] az,
             real kick_dt):
    """Sequential velocity kick."""
    cdef Py_ssize_t n = vx.shape[0]
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            vx[i] = vx[i] + ax[i] * kick_dt
            vy[i] = vy[i] + ay[i] * kick_dt
            vz[i] = vz[i] + az[i] * kick_dt
