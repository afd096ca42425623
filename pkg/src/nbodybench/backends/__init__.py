"""Backend selection.

The compiled Cython backend is preferred when its extensions imported
successfully; otherwise the pure-Python fallback is used.  Set
NBODYBENCH_BACKEND=fallback (or =compiled) to force a choice, for example
when benchmarking the two against each other.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import fallback

try:
    from . import compiled
except ImportError:
    compiled = None  # type: ignore[assignment]

BACKEND_NAMES = ("compiled", "fallback")


def available_backends() -> dict[str, ModuleType]:
    out: dict[str, ModuleType] = {}
    if compiled is not None:
        out["compiled"] = compiled
    out["fallback"] = fallback
    return out


def get_backend(name: str | None = None) -> ModuleType:
    """Return a backend module by name, or the active default for None."""
    if name is None or name == "auto":
        return active_backend()
    if name == "fallback":
        return fallback
    if name == "compiled":
        if compiled is None:
            raise RuntimeError(
                "compiled backend requested but no compiled kernels are installed"
            )
        return compiled
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKEND_NAMES}")


def active_backend() -> ModuleType:
    forced = os.environ.get("NBODYBENCH_BACKEND")
    if forced:
        return get_backend(forced)
    return compiled if compiled is not None else fallback


def build_profile() -> str:
    """Short description of what this installation can run."""
    if compiled is None:
        return "fallback:pure-python"
    parts = ["strict", "fast"]
    if compiled.has_simd:
        parts.append("fast-simd")
    return "compiled:" + "+".join(parts)
