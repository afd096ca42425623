"""Build script for the optional compiled kernels.

Three extension modules are built from the same logical kernels but with
different compiler flag sets, because the optimization ladder distinguishes
strict-IEEE math from fast-math and from fast-math plus host-specific SIMD:

  _kernels_strict    -O3, OpenMP, contraction and fast-math disabled
  _kernels_fast      -O3, OpenMP, -ffast-math
  _kernels_fast_simd -O3, OpenMP, -ffast-math, -march=native

Every extension is marked optional: if a compiler or OpenMP is missing the
install still succeeds and the package falls back to the pure-Python
backend.  Set NBODYBENCH_NO_EXT=1 to skip compiling extensions entirely.
"""

import os

from setuptools import Extension, setup

STRICT_FLAGS = ["-O3", "-fopenmp", "-ffp-contract=off", "-fno-fast-math"]
FAST_FLAGS = ["-O3", "-fopenmp", "-ffast-math"]
SIMD_FLAGS = FAST_FLAGS + ["-march=native"]
OMP_LINK = ["-fopenmp"]


def extensions():
    if os.environ.get("NBODYBENCH_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    exts = [
        Extension(
            "nbodybench._kernels_strict",
            ["src/nbodybench/_kernels_strict.pyx"],
            extra_compile_args=STRICT_FLAGS,
            extra_link_args=OMP_LINK,
            optional=True,
        ),
        Extension(
            "nbodybench._kernels_fast",
            ["src/nbodybench/_kernels_fast.pyx"],
            extra_compile_args=FAST_FLAGS,
            extra_link_args=OMP_LINK,
            optional=True,
        ),
        Extension(
            "nbodybench._kernels_fast_simd",
            ["src/nbodybench/_kernels_fast_simd.pyx"],
            extra_compile_args=SIMD_FLAGS,
            extra_link_args=OMP_LINK,
            optional=True,
        ),
    ]
    return cythonize(exts, language_level=3)


setup(ext_modules=extensions())
