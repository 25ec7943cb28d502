"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The backend is fixed at import time. Set ``HYPERSPARSE_DISABLE_NUMBA=1`` to
force the numpy implementations; they are also used when numba cannot be
imported. :func:`backend` returns either implementation by name so both can
be exercised side by side (tests, benchmarks).
"""
import importlib
import os

_NAMES = (
    "quad_forms",
    "subgradient",
    "codegree",
    "min_pair_codegree",
    "cut_values",
    "certificate_scan",
    "minimize",
)


def _numba_disabled():
    return os.environ.get("HYPERSPARSE_DISABLE_NUMBA", "").strip().lower() in {
        "1", "true", "yes", "on"}


def backend(name):
    """Return the kernel module for ``name`` (``"numba"`` or ``"numpy"``)."""
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel backend {name!r}")
    return importlib.import_module(f"{__name__}._{name}")


if _numba_disabled():
    _impl = backend("numpy")
else:
    try:
        _impl = backend("numba")
    except ImportError:
        _impl = backend("numpy")

BACKEND = _impl.__name__.rsplit("._", 1)[-1]

quad_forms = _impl.quad_forms
subgradient = _impl.subgradient
codegree = _impl.codegree
min_pair_codegree = _impl.min_pair_codegree
cut_values = _impl.cut_values
certificate_scan = _impl.certificate_scan
minimize = _impl.minimize

__all__ = ["BACKEND", "backend", *_NAMES]
