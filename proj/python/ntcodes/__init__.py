"""Exact weight enumerators of number-theoretic codes."""

from ._ntcodes import *  # noqa: F401,F403
from ._ntcodes import __doc__  # noqa: F401
