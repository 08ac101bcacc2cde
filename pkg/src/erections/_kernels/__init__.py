"""Backend selection for the numeric kernels.

``ERECTIONS_BACKEND=numpy`` forces the pure numpy/Python path; the default is
numba when it imports, numpy otherwise. Both backends expose the same functions
and must agree exactly (tests cross-check them).
"""
import importlib
import os
import warnings

BACKENDS = ("numba", "numpy")


def get_backend(name: str):
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
    return importlib.import_module(f"{__name__}._{name}")


def available_backends() -> list[str]:
    out = []
    for name in BACKENDS:
        try:
            get_backend(name)
        except ImportError:
            continue
        out.append(name)
    return out


def _select():
    requested = os.environ.get("ERECTIONS_BACKEND", "numba").strip().lower()
    try:
        return get_backend(requested)
    except ImportError:
        warnings.warn(f"{requested} backend unavailable, using numpy", RuntimeWarning)
        return get_backend("numpy")


_impl = _select()

BACKEND = _impl.name
refine = _impl.refine
perm_bound = _impl.perm_bound
exact_scan = _impl.exact_scan
beta_linear = _impl.beta_linear
