# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
# cython: language_level=3
"""Fast-math kernels built without host-specific SIMD flags."""

include "_fast_impl.pxi"
