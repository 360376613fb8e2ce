"""Quantum information (I_Q) and surplus knowledge (K_Q) over finite-dimensional
density matrices, with the state catalog, measurement model and experiment
harness exposed from the C++ core."""

from qinfo._core import *  # noqa: F401,F403
from qinfo._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
