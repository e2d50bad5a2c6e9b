"""Orientational expansions on S1, S2 and SO(3): fitting, conversion between
angular and Cartesian coefficients, rotation, evaluation and order parameters."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
