"""Order dimension toolkit: posets, realizers, chain and point bounds, linear separation."""

from ._core import *  # noqa: F401,F403
from ._core import OrderDimError, Poset, SeparatorInstance, SeparatorMode

__all__ = [name for name in dir() if not name.startswith("_")]
