"""Exact computations with modified r-matrices on Lie algebras."""

from ._modr import *  # noqa: F401,F403
from ._modr import InputError, PreconditionError  # noqa: F401
