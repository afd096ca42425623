"""Host environment probes: CPU topology, SIMD level, loaded allocator."""

from __future__ import annotations

import ctypes
import glob
import os

import psutil

# symbol exported by each scalable allocator when preloaded into the process
_ALLOCATOR_SYMBOLS = (
    ("tbbmalloc", "scalable_malloc"),
    ("jemalloc", "mallctl"),
    ("tcmalloc", "tc_malloc"),
)

_ALLOCATOR_LIB_PATTERNS = (
    "libtbbmalloc_proxy.so*",
    "libjemalloc.so*",
    "libtcmalloc.so*",
    "libtcmalloc_minimal.so*",
)

_LIB_DIRS = (
    "/usr/lib/x86_64-linux-gnu",
    "/usr/lib/aarch64-linux-gnu",
    "/usr/lib64",
    "/usr/lib",
    "/usr/local/lib",
)


def logical_cpus() -> int:
    return os.cpu_count() or 1


def physical_cpus() -> int:
    count = psutil.cpu_count(logical=False)
    return count if count else logical_cpus()


def simd_tag() -> str:
    """Best instruction-set extension reported by the CPU, as a short tag."""
    flags: set[str] = set()
    try:
        with open("/proc/cpuinfo", encoding="ascii", errors="replace") as fh:
            for line in fh:
                if line.startswith(("flags", "Features")):
                    flags.update(line.split(":", 1)[1].split())
                    break
    except OSError:
        return "unknown"
    for tag in ("avx512f", "avx2", "avx", "sse4_2", "sse2", "neon", "asimd"):
        if tag in flags:
            return tag
    return "unknown"


def loaded_allocator() -> str | None:
    """Name of the scalable allocator active in this process, if any.

    Preloading tbbmalloc, jemalloc, or tcmalloc exposes a characteristic
    symbol in the global namespace; probing for it tells us whether malloc
    has actually been replaced.
    """
    try:
        proc = ctypes.CDLL(None)
    except OSError:
        return None
    for name, symbol in _ALLOCATOR_SYMBOLS:
        if hasattr(proc, symbol):
            return name
    return None


def find_preloadable_allocator() -> str | None:
    """Path to a scalable allocator shared library on this host, if present.

    Useful for constructing an LD_PRELOAD environment for child processes.
    """
    for pattern in _ALLOCATOR_LIB_PATTERNS:
        for lib_dir in _LIB_DIRS:
            hits = sorted(glob.glob(os.path.join(lib_dir, pattern)))
            if hits:
                return hits[0]
    return None
