from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hyperquasigroups, ifs_on
from hyperq import (
    IntuitionisticFuzzySet,
    LevelChain,
    Quasigroup,
    fundamental_quasigroup,
    parse_chain,
    parse_hqg,
    parse_ifs,
    parse_qsg,
    serialize_chain,
    serialize_hqg,
    serialize_ifs,
    serialize_quasigroup,
)
from hyperq.errors import ParseError
from hyperq.families import FIXTURES, block4, total, zgroup

Z2 = Quasigroup.from_mult([[0, 1], [1, 0]])


def test_parse_hqg_examples():
    assert parse_hqg("hqg 2\n0 0 : 0 1\n0 1 : 0 1\n1 0 : 0 1\n1 1 : 0 1") == total(2)
    assert parse_hqg("hqg 2\n0 0 : 0\n0 1 : 1\n1 0 : 1\n1 1 : 0") == zgroup(2)
    with pytest.raises(ParseError) as exc:
        parse_hqg("hqg 2\n0 0 :\n0 1 : 1\n1 0 : 1\n1 1 : 0")
    assert exc.value.line == 2


def test_parse_hqg_any_order_and_comments():
    text = "# z2\nhqg 2   # header\n\n1 1 : 0\n0 1 : 1\n1 0 : 1\n0 0 : 0 # identity\n"
    h = parse_hqg(text)
    assert h == zgroup(2)
    assert serialize_hqg(h) == "hqg 2\n0 0 : 0\n0 1 : 1\n1 0 : 1\n1 1 : 0"


def test_parse_ifs_examples():
    assert parse_ifs("ifs 2\n0 : 9/10 1/20\n1 : 2/10 6/10") == ((F(9, 10), F(1, 5)), (F(1, 20), F(3, 5)))
    mu, lam = parse_ifs("ifs 2\n0 : 0 1\n1 : 0 1")
    assert IntuitionisticFuzzySet(mu, lam) == IntuitionisticFuzzySet((0, 0), (1, 1))
    with pytest.raises(ParseError) as exc:
        parse_ifs("ifs 2\n0 : 3/2 0\n1 : 0 1")
    assert (exc.value.line, exc.value.column) == (2, 5)


def test_serialize_quasigroup_examples():
    q1 = Quasigroup.from_mult([[0]])
    assert serialize_quasigroup(q1) == "qsg 1\nmult\n0\nldiv\n0\nrdiv\n0"
    assert serialize_quasigroup(Z2) == "qsg 2\nmult\n0 1\n1 0\nldiv\n0 1\n1 0\nrdiv\n0 1\n1 0"
    text = serialize_quasigroup(fundamental_quasigroup(block4()).quasigroup)
    assert serialize_quasigroup(parse_qsg(text)) == text


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_hqg_round_trip_fixtures(name):
    h = FIXTURES[name]()
    text = serialize_hqg(h)
    assert parse_hqg(text) == h
    assert serialize_hqg(parse_hqg(text)) == text
    assert not text.endswith("\n")


def test_chain_round_trip():
    chain = LevelChain.from_levels([(F(1, 5), 0b1111), (F(9, 10), 0b0001), (F(1, 2), 0b0011)])
    text = serialize_chain(chain, 4)
    assert text == "chain 4\n9/10 : 0\n1/2 : 0 1\n1/5 : 0 1 2 3"
    assert parse_chain(text) == chain


MALFORMED_HQG = [
    ("", 1, 1),
    ("hqg", 1, 4),
    ("hqg x", 1, 5),
    ("hqg 0", 1, 5),
    ("hqg 5000", 1, 5),
    ("hqg 2 3", 1, 7),
    ("hq 2", 1, 1),
    ("hqg 1\n0 0 0", 2, 5),
    ("hqg 1\n0 0", 2, 4),
    ("hqg 1\n0 0 : 1", 2, 7),
    ("hqg 1\n0 0 : 0 0", 2, 9),
    ("hqg 1\n0 0 : -1", 2, 7),
    ("hqg 1\n0 0 : 0\n0 0 : 0", 3, 1),
    ("hqg 1\n1 0 : 0", 2, 1),
    ("hqg 2\n0 0 : 0\n0 1 : 1\n1 0 : 1", 5, 1),
    ("hqg 1\n0 0 : a", 2, 7),
]


@pytest.mark.parametrize("text,line,column", MALFORMED_HQG)
def test_malformed_hqg_positions(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_hqg(text)
    assert (exc.value.line, exc.value.column) == (line, column)


MALFORMED_OTHER = [
    (parse_ifs, "ifs 1\n0 : 1/0 0", 2, 5),
    (parse_ifs, "ifs 1\n0 : 1/2", 2, 8),
    (parse_ifs, "ifs 1\n0 : 1/2 1/2 1", 2, 13),
    (parse_ifs, "ifs 1\n0 1/2 1/2", 2, 3),
    (parse_ifs, "ifs 2\n0 : 0 0", 3, 1),
    (parse_ifs, "ifs 1\n0 : 0.5 0", 2, 5),
    (parse_qsg, "qsg 2\nmult\n0 1\n1 0\nldiv\n0 1\n1 0", 8, 1),
    (parse_qsg, "qsg 2\nmult\n0 1\n1\n", 4, 2),
    (parse_qsg, "qsg 2\nmul\n0 1\n1 0", 2, 1),
    (parse_qsg, "qsg 2\nmult\n0 0\n1 1\nldiv\n0 1\n1 0\nrdiv\n0 1\n1 0", 2, 1),
    (parse_qsg, "qsg 1\nmult\n0\nldiv\n0\nrdiv\n0\nextra", 8, 1),
    (parse_chain, "chain 2", 2, 1),
    (parse_chain, "chain 2\n1/2 : 0\n1/2 : 0 1", 3, 1),
    (parse_chain, "chain 2\n1/2 :", 2, 6),
    (parse_chain, "chain 2\n2 : 0", 2, 1),
]


@pytest.mark.parametrize("parser,text,line,column", MALFORMED_OTHER)
def test_malformed_other_positions(parser, text, line, column):
    with pytest.raises(ParseError) as exc:
        parser(text)
    assert (exc.value.line, exc.value.column) == (line, column)
    assert f"line {line}" in str(exc.value)


@settings(max_examples=100, deadline=None)
@given(hyperquasigroups(1, 5))
def test_hqg_round_trip(h):
    assert parse_hqg(serialize_hqg(h)) == h


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: ifs_on(n, 12)))
def test_ifs_round_trip(a):
    text = serialize_ifs(a)
    assert IntuitionisticFuzzySet(*parse_ifs(text)) == a
    assert serialize_ifs(parse_ifs(text)) == text


@settings(max_examples=60, deadline=None)
@given(hyperquasigroups(1, 4))
def test_qsg_round_trip(h):
    q = fundamental_quasigroup(h).quasigroup
    text = serialize_quasigroup(q)
    assert parse_qsg(text) == q
    assert serialize_quasigroup(parse_qsg(text)) == text


_ALPHABET = st.sampled_from(list("hqgifsmultdvrcan0123456789/: -#\n\tx"))


@settings(max_examples=400, deadline=None)
@given(
    st.sampled_from([parse_hqg, parse_ifs, parse_qsg, parse_chain]),
    st.sampled_from(["hqg 2\n", "ifs 2\n", "qsg 2\n", "chain 2\n", ""]),
    st.lists(_ALPHABET, max_size=60).map("".join),
)
def test_parsing_is_total(parser, prefix, body):
    try:
        parser(prefix + body)
    except ParseError as exc:
        assert exc.line >= 1 and exc.column >= 1
