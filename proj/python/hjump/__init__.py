"""Colouring-or-subgraph problems, their reductions, and brute-force checks."""

from ._hjump import *  # noqa: F401,F403
from ._hjump import Error, ParseError, ResourceError, Graph

__all__ = [name for name in dir() if not name.startswith("_")]
