"""Maximal commuting and anticommuting Pauli set toolkit."""

from ._core import *  # noqa: F401,F403
from ._core import oracle  # noqa: F401
