"""Exact skeleton ideals of graph parking functions."""

try:
    from ._parkideal import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _parkideal import *  # noqa: F401,F403  (in-tree build layout)

__version__ = "0.1.0"
