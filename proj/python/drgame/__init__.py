"""Residential demand-response game: NSGA-II best responses to a Nash equilibrium."""

from ._drgame import *  # noqa: F401,F403
from ._drgame import __version__  # noqa: F401
