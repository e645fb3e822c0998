"""Wire format for exact rationals.

Numbers cross process boundaries as strings: "p" for integers and "p/q"
for non-integers, q > 0, gcd(p, q) = 1.  fractions.Fraction already
normalizes to that form, so these helpers are thin.
"""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact Fraction."""
    return Fraction(text.strip())


def format_rational(value: Fraction | int) -> str:
    """Render a rational as "p" or "p/q" with positive denominator."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_vector(items: list[str]) -> tuple[Fraction, ...]:
    return tuple(parse_rational(t) for t in items)


def format_vector(vec) -> list[str]:
    return [format_rational(v) for v in vec]
