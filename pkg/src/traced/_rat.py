"""Exact rational scalar type.

Uses gmpy2.mpq when available (noticeably faster), falling back to
fractions.Fraction.  Both print as "p/q" (or "p" for integers), compare
equal across types, and support negative integer powers, which is all the
rest of the package relies on.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as rat

RAT_ZERO = rat(0)
RAT_ONE = rat(1)


def rat_str(x) -> str:
    """Canonical string form: "p" or "p/q" with q > 0."""
    return str(x)


def parse_rat(text: str):
    """Parse "p" or "p/q" into an exact rational."""
    return rat(text.strip())
