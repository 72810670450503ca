"""Chlodowsky-variant generalized Szasz operators driven by Sheffer families."""

from ._sszops import *  # noqa: F401,F403
from ._sszops import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
