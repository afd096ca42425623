# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
# cython: language_level=3
"""Fast-math kernels compiled with -march=native for host-specific SIMD."""

include "_fast_impl.pxi"
