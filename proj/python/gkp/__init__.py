"""Exact two-term triangular recurrences.

Rationals cross the boundary as :class:`fractions.Fraction`; inputs may be
``int``, ``Fraction`` or strings in the ``"p"`` / ``"p/q"`` format.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
