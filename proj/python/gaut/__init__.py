"""Typed automata over graph alphabets."""

from ._gaut import *  # noqa: F401,F403
from ._gaut import __doc__  # noqa: F401
