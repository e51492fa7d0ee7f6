"""Membership grades: exact rationals in the closed unit interval.

A grade is a plain :class:`fractions.Fraction` that has been range checked.
Fractions are always stored reduced, so equality of grades is equality of
reduced forms and ``min``/``max`` return one of their arguments exactly.
"""

import re
from fractions import Fraction
from typing import Union

from .errors import MalformedGrade, OutOfRange

Grade = Fraction
GradeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_GRADE_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


def grade_parse(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.

    >>> grade_parse("2/4")
    Fraction(1, 2)
    """
    text = text.strip()
    if not _GRADE_RE.fullmatch(text):
        raise MalformedGrade(f"not a grade: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise MalformedGrade(f"zero denominator: {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return check_grade(value)


def check_grade(value: Fraction) -> Fraction:
    if value < 0 or value > 1:
        raise OutOfRange(f"grade {value} outside [0, 1]")
    return value


def grade(value: GradeLike) -> Fraction:
    """Coerce a Fraction, int or string to a validated grade."""
    if isinstance(value, str):
        return grade_parse(value)
    if isinstance(value, float):
        raise MalformedGrade("float grades are not accepted; use a Fraction or 'p/q'")
    return check_grade(Fraction(value))


def grade_complement(g: Fraction) -> Fraction:
    return ONE - g


def format_grade(g: Fraction) -> str:
    # Fraction.__str__ already prints integers without "/1"
    return str(g)
