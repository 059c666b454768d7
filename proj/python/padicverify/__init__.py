"""Exact p-adic arithmetic and class-number congruence verification."""

from padicverify._core import *  # noqa: F401,F403
from padicverify._core import __version__  # noqa: F401
