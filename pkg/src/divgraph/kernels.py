"""Kernel backend selection.

Prefers the compiled extension (divgraph._kernels_c, built from Cython);
falls back to the pure-Python reference when the extension is missing or
DIVGRAPH_PURE is set in the environment.
"""

from __future__ import annotations

import os

from divgraph import _kernels_py

if os.environ.get("DIVGRAPH_PURE"):
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from divgraph import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

enumerate_nodes = _impl.enumerate_nodes
closure_arcs = _impl.closure_arcs
hasse_arcs = _impl.hasse_arcs


def active_backend() -> str:
    """Name of the kernel lane in use: "compiled" or "pure"."""
    return BACKEND
