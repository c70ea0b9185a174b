"""Partial difference sets in finite abelian groups."""

from ._pdskit import *  # noqa: F401,F403
from ._pdskit import __version__  # noqa: F401
