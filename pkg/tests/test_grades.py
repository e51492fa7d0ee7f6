from fractions import Fraction

import pytest
from hypothesis import given

from conftest import grades
from hyperq.errors import MalformedGrade, OutOfRange
from hyperq.grades import format_grade, grade, grade_complement, grade_parse


@pytest.mark.parametrize(
    "text, expected",
    [("1/2", Fraction(1, 2)), ("0", Fraction(0)), ("1", Fraction(1)), ("2/4", Fraction(1, 2)), ("6/6", Fraction(1))],
)
def test_parse(text, expected):
    g = grade_parse(text)
    assert g == expected
    assert (g.numerator, g.denominator) == (expected.numerator, expected.denominator)


@pytest.mark.parametrize("text", ["7/5", "-1/2", "2", "-3"])
def test_parse_out_of_range(text):
    with pytest.raises(OutOfRange):
        grade_parse(text)


@pytest.mark.parametrize("text", ["", "1/", "/2", "0.5", "a", "1/0", "1 /2", "1/2/3", "+1"])
def test_parse_malformed(text):
    with pytest.raises(MalformedGrade):
        grade_parse(text)


def test_zero_is_reduced():
    g = grade_parse("0")
    assert (g.numerator, g.denominator) == (0, 1)


def test_complement_examples():
    assert grade_complement(Fraction(0)) == 1
    assert grade_complement(Fraction(1, 3)) == Fraction(2, 3)
    assert grade_complement(grade_complement(Fraction(2, 7))) == Fraction(2, 7)


def test_grade_rejects_float():
    with pytest.raises(MalformedGrade):
        grade(0.5)


@given(grades(12))
def test_complement_involution_and_range(g):
    c = grade_complement(g)
    assert 0 <= c <= 1
    assert grade_complement(c) == g


@given(grades(12))
def test_format_round_trip(g):
    assert grade_parse(format_grade(g)) == g


@given(grades(12), grades(12))
def test_total_order(g, h):
    assert [g < h, g == h, g > h].count(True) == 1


@given(grades(12), grades(12), grades(12))
def test_min_max_exact(a, b, c):
    assert min(a, b, c) in (a, b, c)
    assert max(a, b, c) in (a, b, c)
