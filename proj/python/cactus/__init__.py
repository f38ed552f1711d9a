"""Cactus group words, J_3 canonical forms, Cayley windows, and the
correspondence between PJ_3 and the compactified configuration space X(4)."""

from ._cactus import *  # noqa: F401,F403
from ._cactus import CactusError, DomainError, ParseError  # noqa: F401

__version__ = "0.1.0"
