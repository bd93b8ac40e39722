"""Exact integer and rational helpers.

Python integers are already arbitrary precision, and
:class:`fractions.Fraction` keeps itself reduced with a positive
denominator, so the functions here are thin, explicit wrappers. Every
statistic in the package is compared as a ``Fraction``; floats only
appear when something is printed for a human.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def rat(num: int, den: int = 1) -> Fraction:
    """Build a reduced rational ``num/den``; raises ZeroDivisionError for ``den == 0``."""
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError("rat() takes integer numerator and denominator")
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise ZeroDivisionError("division by zero rational")
    return a / b


def pow2(n: int) -> int:
    if n < 0:
        raise ValueError(f"pow2 needs n >= 0, got {n}")
    return 1 << n


def exact_div(num: int, den: int) -> int:
    """Integer division that refuses to round.

    Closed forms such as ``(... ) / 9`` must divide evenly; a remainder
    means the formula or its inputs are wrong, so it is raised instead of
    truncated.
    """
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def format_rational(q: Fraction) -> str:
    """Serialize as ``"num/den"``, keeping ``/1`` for integers."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    return rat(int(num), int(den) if sep else 1)
