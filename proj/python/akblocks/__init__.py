"""Cores, weights and blocks of Ariki-Koike algebras via the Uglov map."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
