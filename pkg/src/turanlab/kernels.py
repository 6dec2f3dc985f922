"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``TURANLAB_PURE_PYTHON=1`` to force the fallback.  :data:`BACKEND`
names the active implementation.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("TURANLAB_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as _native
except ImportError:
    _native = None

BACKEND = "cython" if _native is not None else "python"

_INT63 = 1 << 63


def embed_count(host, back, degmask, stop_first=False, backend=None):
    impl = _pick(backend)
    if impl is not _pykernels and len(host) > 64:
        impl = _pykernels
    return impl.embed_count(host, back, degmask, stop_first)


def path_embeddings(sizes, ell, backend=None):
    impl = _pick(backend)
    # every factor is at most n, so n**ell bounds the result
    if impl is not _pykernels and (len(sizes) > 64 or sum(sizes) ** max(ell, 0) >= _INT63):
        impl = _pykernels
    return impl.path_embeddings(list(sizes), ell)


def _pick(backend):
    if backend is None:
        return _native or _pykernels
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _native is None:
            raise RuntimeError("compiled kernels are not available")
        return _native
    raise ValueError(f"unknown backend {backend!r}")


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _native is not None else [])
