"""Geodesics on invariant surfaces of three-dimensional Riemannian manifolds.

The heavy lifting lives in the compiled `_core` module; this package simply
re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
