"""Exact invariants of cyclic root covers of threefolds."""

from ._core import *  # noqa: F401,F403
from ._core import RootcoverError

__all__ = [name for name in dir() if not name.startswith("_")]
