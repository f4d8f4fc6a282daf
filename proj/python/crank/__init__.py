"""Rank, degree and Cantor-Bendixson analysis of closed families of
infinite bit words, backed by the C++ engine."""

from ._crank import *  # noqa: F401,F403
from ._crank import __doc__  # noqa: F401
