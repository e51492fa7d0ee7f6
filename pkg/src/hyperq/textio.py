"""Line-oriented text formats: HQG (hypergroupoids), IFS, QSG (quasigroups), CHAIN.

All formats share the lexical rules: UTF-8, LF line endings, ``#`` starts a
comment running to end of line, blank lines are ignored, tokens are separated
by whitespace and ``:`` is always its own token.  Line and column numbers in
:class:`ParseError` are 1-based.  Serializers emit the canonical form without
a trailing newline, and ``serialize(parse(text)) == text`` for canonical text.
"""

import re
from typing import List, Tuple

from .errors import MalformedGrade, NotALatinSquare, OutOfRange, ParseError
from .fundamental import Quasigroup
from .grades import format_grade, grade_parse
from .hyperstructures import Hypergroupoid, elements
from .ifs import IntuitionisticFuzzySet
from .ifsh import LevelChain

_TOKEN = re.compile(r"[^\s:#]+|:")
_DIGITS = re.compile(r"[0-9]+")
MAX_ORDER = 4096

Token = Tuple[int, str]  # (column, text)


def _lines(text: str) -> List[Tuple[int, List[Token]]]:
    out = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if tokens:
            out.append((lineno, tokens))
    return out


def _end_column(text: str, lineno: int) -> int:
    line = text.split("\n")[lineno - 1].split("#", 1)[0]
    return len(line.rstrip()) + 1


def _int(lineno: int, tok: Token, what: str, bound: int = None) -> int:
    col, s = tok
    if not _DIGITS.fullmatch(s):
        raise ParseError(lineno, col, f"expected {what}, got {s!r}")
    value = int(s)
    if bound is not None and value >= bound:
        raise ParseError(lineno, col, f"{what} {value} out of range (must be < {bound})")
    return value


def _header(text: str, lines, keyword: str) -> int:
    if not lines:
        raise ParseError(1, 1, f"missing '{keyword} <n>' header")
    lineno, tokens = lines[0]
    if tokens[0][1] != keyword:
        raise ParseError(lineno, tokens[0][0], f"expected '{keyword}', got {tokens[0][1]!r}")
    if len(tokens) < 2:
        raise ParseError(lineno, _end_column(text, lineno), f"missing order after '{keyword}'")
    if len(tokens) > 2:
        raise ParseError(lineno, tokens[2][0], "unexpected token after order")
    n = _int(lineno, tokens[1], "order")
    if not 1 <= n <= MAX_ORDER:
        raise ParseError(lineno, tokens[1][0], f"order must be between 1 and {MAX_ORDER}")
    return n


def _colon(text, lineno, tokens, index):
    if len(tokens) <= index:
        raise ParseError(lineno, _end_column(text, lineno), "expected ':'")
    if tokens[index][1] != ":":
        raise ParseError(lineno, tokens[index][0], f"expected ':', got {tokens[index][1]!r}")


def _element_list(text, lineno, tokens, n):
    if not tokens:
        raise ParseError(lineno, _end_column(text, lineno), "empty element list")
    mask = 0
    for tok in tokens:
        e = _int(lineno, tok, "element", n)
        if mask >> e & 1:
            raise ParseError(lineno, tok[0], f"element {e} listed twice")
        mask |= 1 << e
    return mask


def parse_hqg(text: str) -> Hypergroupoid:
    lines = _lines(text)
    n = _header(text, lines, "hqg")
    cells = {}
    for lineno, tokens in lines[1:]:
        if len(tokens) < 2:
            raise ParseError(lineno, _end_column(text, lineno), "expected 'i j : elements'")
        i = _int(lineno, tokens[0], "row index", n)
        j = _int(lineno, tokens[1], "column index", n)
        _colon(text, lineno, tokens, 2)
        if (i, j) in cells:
            raise ParseError(lineno, tokens[0][0], f"cell ({i}, {j}) listed twice")
        cells[i, j] = _element_list(text, lineno, tokens[3:], n)
    for i in range(n):
        for j in range(n):
            if (i, j) not in cells:
                last = lines[-1][0] + 1 if lines else 1
                raise ParseError(last, 1, f"missing cell ({i}, {j})")
    return Hypergroupoid(n, tuple(tuple(cells[i, j] for j in range(n)) for i in range(n)))


def serialize_hqg(h: Hypergroupoid) -> str:
    out = [f"hqg {h.order}"]
    for i in range(h.order):
        for j in range(h.order):
            out.append(f"{i} {j} : " + " ".join(map(str, elements(h.table[i][j]))))
    return "\n".join(out)


def _grade(lineno, tok):
    col, s = tok
    try:
        return grade_parse(s)
    except MalformedGrade as exc:
        raise ParseError(lineno, col, str(exc)) from None
    except OutOfRange as exc:
        raise ParseError(lineno, col, f"grade out of range: {exc}") from None


def parse_ifs(text: str):
    """Return the raw ``(mu, lam)`` pair; the sum constraint is not checked here."""
    lines = _lines(text)
    n = _header(text, lines, "ifs")
    mu = [None] * n
    lam = [None] * n
    for lineno, tokens in lines[1:]:
        i = _int(lineno, tokens[0], "element index", n)
        _colon(text, lineno, tokens, 1)
        if len(tokens) < 4:
            raise ParseError(lineno, _end_column(text, lineno), "expected '<mu> <lambda>'")
        if len(tokens) > 4:
            raise ParseError(lineno, tokens[4][0], "unexpected token after lambda grade")
        if mu[i] is not None:
            raise ParseError(lineno, tokens[0][0], f"element {i} listed twice")
        mu[i] = _grade(lineno, tokens[2])
        lam[i] = _grade(lineno, tokens[3])
    for i in range(n):
        if mu[i] is None:
            last = lines[-1][0] + 1
            raise ParseError(last, 1, f"missing element {i}")
    return tuple(mu), tuple(lam)


def serialize_ifs(a) -> str:
    """Accepts an :class:`IntuitionisticFuzzySet` or a raw ``(mu, lam)`` pair."""
    mu, lam = (a.mu, a.lam) if isinstance(a, IntuitionisticFuzzySet) else a
    out = [f"ifs {len(mu)}"]
    for i, (m, l) in enumerate(zip(mu, lam)):
        out.append(f"{i} : {format_grade(m)} {format_grade(l)}")
    return "\n".join(out)


def parse_qsg(text: str) -> Quasigroup:
    lines = _lines(text)
    m = _header(text, lines, "qsg")
    tables = {}
    pos = 1
    for name in ("mult", "ldiv", "rdiv"):
        if pos >= len(lines):
            last = lines[-1][0] + 1
            raise ParseError(last, 1, f"missing '{name}' block")
        lineno, tokens = lines[pos]
        if tokens[0][1] != name or len(tokens) != 1:
            raise ParseError(lineno, tokens[0][0], f"expected '{name}'")
        label_line = lineno
        rows = []
        for r in range(m):
            pos += 1
            if pos >= len(lines):
                raise ParseError(lines[-1][0] + 1, 1, f"{name} block has {r} rows, expected {m}")
            lineno, tokens = lines[pos]
            if len(tokens) != m:
                col = tokens[m][0] if len(tokens) > m else _end_column(text, lineno)
                raise ParseError(lineno, col, f"expected {m} entries")
            rows.append(tuple(_int(lineno, tok, "entry", m) for tok in tokens))
        tables[name] = (label_line, tuple(rows))
        pos += 1
    if pos < len(lines):
        lineno, tokens = lines[pos]
        raise ParseError(lineno, tokens[0][0], "unexpected content after rdiv block")
    try:
        return Quasigroup(m, tables["mult"][1], tables["ldiv"][1], tables["rdiv"][1])
    except NotALatinSquare as exc:
        raise ParseError(tables["mult"][0], 1, f"inconsistent quasigroup: {exc}") from None


def serialize_quasigroup(q: Quasigroup) -> str:
    out = [f"qsg {q.order}"]
    for name in ("mult", "ldiv", "rdiv"):
        out.append(name)
        out.extend(" ".join(map(str, row)) for row in getattr(q, name))
    return "\n".join(out)


def parse_chain(text: str) -> LevelChain:
    """``chain <n>`` then lines ``<grade> : k1 k2 ...``.  Hypotheses are checked on use."""
    lines = _lines(text)
    n = _header(text, lines, "chain")
    levels = []
    seen = {}
    for lineno, tokens in lines[1:]:
        t = _grade(lineno, tokens[0])
        if t in seen:
            raise ParseError(lineno, tokens[0][0], f"threshold {t} listed twice")
        seen[t] = lineno
        _colon(text, lineno, tokens, 1)
        levels.append((t, _element_list(text, lineno, tokens[2:], n)))
    if not levels:
        raise ParseError(lines[0][0] + 1, 1, "chain needs at least one level")
    return LevelChain.from_levels(levels)


def serialize_chain(chain: LevelChain, order: int) -> str:
    out = [f"chain {order}"]
    for t, k in zip(chain.omega, chain.sets):
        out.append(f"{format_grade(t)} : " + " ".join(map(str, elements(k))))
    return "\n".join(out)
