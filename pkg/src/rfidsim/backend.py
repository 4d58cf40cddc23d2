"""Kernel backend selection.

The compiled extension is used when it imports cleanly; otherwise the pure
Python reference kernels run. Set RFIDSIM_PURE=1 to force the pure backend
even when the extension is available (the equivalence tests rely on this).
"""

from __future__ import annotations

import os

import numpy as np

from . import _pure
from .network import RfidNetwork

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

__all__ = ["available_backends", "default_backend_name", "get_backend", "Backend"]


class Backend:
    """Uniform entry to one kernel set: run(token, net, order) -> 5 arrays."""

    def __init__(self, name: str):
        if name not in available_backends():
            raise ValueError(f"unknown or unavailable backend {name!r}")
        self.name = name

    def run(self, token: str, net: RfidNetwork, order) -> tuple:
        if self.name == "compiled":
            order_arr = np.asarray(order, dtype=np.int64)
            return getattr(_compiled, token)(*net.csr(), order_arr)
        return getattr(_pure, token)(net, order)

    def __repr__(self) -> str:
        return f"Backend({self.name!r})"


def available_backends() -> tuple[str, ...]:
    if _compiled is not None:
        return ("compiled", "pure")
    return ("pure",)


def default_backend_name() -> str:
    if _compiled is None or os.environ.get("RFIDSIM_PURE") == "1":
        return "pure"
    return "compiled"


def get_backend(name: str | None = None) -> Backend:
    return Backend(name or default_backend_name())
