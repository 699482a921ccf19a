"""Engine selection for the uninstrumented timed kernels.

The compiled extension (``scoutstr._kernels``, built from Cython) and the
pure-Python module (``scoutstr._kernels_py``) expose the same thirteen
functions; whichever is importable wins, compiled first.  Both stay
importable side by side so benchmarks can compare the two engines.
"""

from __future__ import annotations

from types import ModuleType
from typing import Callable

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    _kernels = None

DEFAULT_ENGINE: str = "compiled" if _kernels is not None else "python"

_ENGINES: dict[str, ModuleType] = {"python": _kernels_py}
if _kernels is not None:
    _ENGINES["compiled"] = _kernels


def available_engines() -> tuple[str, ...]:
    return tuple(sorted(_ENGINES))


def get_engine(name: str | None = None) -> ModuleType:
    """Return the kernel module for ``name`` (default: best available)."""
    if name is None or name == "auto":
        name = DEFAULT_ENGINE
    try:
        return _ENGINES[name]
    except KeyError:
        raise ValueError(
            f"unknown engine {name!r}; available: {', '.join(available_engines())}"
        ) from None


def get_kernel(kernel_name: str, engine: str | None = None) -> Callable:
    """Look up an uninstrumented kernel function by registry name."""
    module = get_engine(engine)
    return getattr(module, kernel_name)
