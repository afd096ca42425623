"""Compiled backend: thin dispatch over the Cython extension modules.

The strict extension provides seq-baseline, parallel, and parallel-fold;
the fast and fast-simd extensions provide the fast-math and blocked
kernels.  Importing this module raises ImportError when the strict or fast
extension is missing, in which case the pure-Python fallback takes over.
"""

from __future__ import annotations

from nbodybench import _kernels_fast as _fast
from nbodybench import _kernels_strict as _strict

try:
    from nbodybench import _kernels_fast_simd as _fast_simd
except ImportError:
    _fast_simd = None

name = "compiled"
is_compiled = True
has_simd = _fast_simd is not None

accel_seq = _strict.accel_seq
accel_parallel = _strict.accel_parallel
accel_fold = _strict.accel_fold
integrate = _strict.integrate
integrate_seq = _strict.integrate_seq
kick = _strict.kick
kick_seq = _strict.kick_seq

accel_fast = _fast.accel_fast
accel_blocked = _fast.accel_blocked
integrate_fast = _fast.integrate
kick_fast = _fast.kick

if has_simd:
    accel_fast_simd = _fast_simd.accel_fast
    accel_blocked_simd = _fast_simd.accel_blocked
    integrate_fast_simd = _fast_simd.integrate
    kick_fast_simd = _fast_simd.kick
