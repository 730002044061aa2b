"""Text formats: Salamon structure strings, form literals, matrices, JSON algebras.

A Salamon string lists ``d e^k`` in slot k, e.g. ``(0,-13,12,0)`` means
``de^2 = -e^13`` and ``de^3 = e^12``.  Since ``(d alpha)(x, y) = -alpha([x, y])``,
the structure constants are ``c^k_ij = -(coefficient of e^ij in de^k)``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import IndexOutOfRange, ParseError
from .exactmath import Mat, fmt_rat
from .exterior import KForm, basis_differentials
from .liealg import LieAlgebra

_WS = re.compile(r"\s*")
_INT = re.compile(r"\d+")
_COEFF = re.compile(r"(\d+)(?:/(\d+))?\s*\*?\s*")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        self.pos = _WS.match(self.text, self.pos).end()

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() != ch:
            self.fail("expected %r" % ch)
        self.pos += 1

    def match(self, rx):
        self.skip()
        m = rx.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def at_end(self):
        self.skip()
        return self.pos >= len(self.text)

    def fail(self, msg):
        raise ParseError(msg, self.text, self.pos)


# -- Salamon ---------------------------------------------------------------------

_PAIR = re.compile(r"(\d)(\d)")
_EXT_PAIR = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def _salamon_slot(sc: _Scanner):
    """Terms ``(coeff, i, j)`` of one slot, indices as written."""
    terms = []
    first = True
    while True:
        ch = sc.peek()
        sign = 1
        if ch in "+-":
            sign = -1 if ch == "-" else 1
            sc.pos += 1
        elif not first:
            break
        coeff = Fraction(1)
        start = sc.pos
        m = sc.match(re.compile(r"(\d+)\s*\*"))
        if m:
            coeff = Fraction(int(m.group(1)))
        m = sc.match(_EXT_PAIR) or sc.match(_PAIR)
        if not m:
            sc.pos = start
            if first and sc.match(re.compile(r"0(?![0-9])")) and sign == 1:
                return []
            sc.fail("expected an index pair such as 12")
        terms.append((sign * coeff, int(m.group(1)), int(m.group(2))))
        first = False
        if sc.peek() not in "+-":
            break
    return terms


def parse_salamon(text: str, offset: int = 1, name: str | None = None) -> LieAlgebra:
    sc = _Scanner(text)
    sc.eat("(")
    slots = [_salamon_slot(sc)]
    while sc.peek() == ",":
        sc.pos += 1
        slots.append(_salamon_slot(sc))
    sc.eat(")")
    if not sc.at_end():
        sc.fail("trailing characters")
    n = len(slots)
    brackets = {}
    for k, terms in enumerate(slots):
        for c, i, j in terms:
            for idx in (i, j):
                if not offset <= idx < n + offset:
                    raise IndexOutOfRange("index %d out of range for dimension %d in %r" % (idx, n, text))
            if i == j:
                raise ParseError("repeated index in e^%d%d" % (i, j), text)
            if i > j:
                i, j, c = j, i, -c
            key = (i - offset, j - offset)
            vec = brackets.setdefault(key, [Fraction(0)] * n)
            vec[k] -= c
    return LieAlgebra(n, {k: v for k, v in brackets.items()}, name=name, offset=offset)


def _coef_str(c: Fraction, first: bool) -> str:
    mag = abs(c)
    body = "" if mag == 1 else fmt_rat(mag) + "*"
    if first:
        return ("-" if c < 0 else "") + body
    return ("-" if c < 0 else "+") + body


def format_salamon(g: LieAlgebra) -> str:
    """Canonical structure string; ``parse_salamon(format_salamon(g)) == g``."""
    slots = []
    big = g.dim + g.offset > 10
    for de in basis_differentials(g):
        if de.is_zero():
            slots.append("0")
            continue
        parts = []
        for (i, j), c in sorted(de.coeffs.items()):
            a, b = i + g.offset, j + g.offset
            pair = "[%d,%d]" % (a, b) if big else "%d%d" % (a, b)
            parts.append(_coef_str(c, not parts) + pair)
        slots.append("".join(parts))
    return "(" + ",".join(slots) + ")"


# -- forms and vectors ---------------------------------------------------------------

_MONO = re.compile(r"e(\d+)")
_NUM = re.compile(r"(\d+)(?:/(\d+))?")


def parse_form(text: str, n: int, offset: int = 1, degree: int | None = None) -> KForm:
    """Parse ``"e12 - 2*e34"``; each digit after ``e`` is one index."""
    sc = _Scanner(text)
    if sc.at_end():
        raise ParseError("empty form", text, 0)
    if sc.match(re.compile(r"0\s*$")):
        if degree is None:
            raise ParseError("the zero form needs an explicit degree", text, 0)
        return KForm.zero(n, degree, offset)
    coeffs = {}
    deg = None
    first = True
    while not sc.at_end():
        ch = sc.peek()
        sign = 1
        if ch in "+-":
            sign = -1 if ch == "-" else 1
            sc.pos += 1
        elif not first:
            sc.fail("expected + or -")
        c = Fraction(1)
        m = sc.match(_NUM)
        if m:
            if m.group(2) is not None and int(m.group(2)) == 0:
                sc.fail("zero denominator")
            c = Fraction(int(m.group(1)), int(m.group(2) or 1))
            star = sc.match(re.compile(r"\*"))
            if not star and sc.peek() != "e":
                sc.fail("expected '*' after a coefficient")
        m = sc.match(_MONO)
        if not m:
            sc.fail("expected a monomial such as e12")
        idx = tuple(int(d) - offset for d in m.group(1))
        if any(not 0 <= i < n for i in idx):
            raise IndexOutOfRange("index out of range in e%s for dimension %d" % (m.group(1), n))
        if len(set(idx)) != len(idx):
            raise ParseError("repeated index in e%s" % m.group(1), text, m.start())
        if deg is None:
            deg = len(idx)
        elif deg != len(idx):
            raise ParseError("mixed degrees in form literal", text, m.start())
        coeffs[idx] = coeffs.get(idx, 0) + sign * c
        first = False
    if degree is not None and deg != degree:
        raise ParseError("expected a %d-form" % degree, text)
    return KForm(n, deg, coeffs, offset)


def parse_vector(text: str, n: int, offset: int = 1) -> tuple:
    """A vector written as ``"e4 + 2*e6"`` or as comma-separated coordinates."""
    s = text.strip()
    if "e" in s:
        return parse_form(s, n, offset, degree=1).to_vector()
    parts = [p for p in re.split(r"[,\s]+", s.strip("()[] ")) if p]
    if len(parts) != n:
        raise ParseError("expected %d coordinates" % n, text)
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), text) from None


def format_vector(v, offset: int = 1) -> str:
    return KForm.covector(v, offset).fmt()


def parse_matrix(text: str) -> Mat:
    """Rows separated by ``;``, entries by commas or spaces: ``"0 -1; 1 0"``."""
    rows = []
    for r in text.strip().strip("[]").split(";"):
        parts = [p for p in re.split(r"[,\s]+", r.strip().strip("[]")) if p]
        try:
            rows.append([Fraction(p) for p in parts])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), text) from None
    if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
        raise ParseError("matrix rows must be non-empty and of equal length", text)
    return Mat(rows)


# -- JSON schema ---------------------------------------------------------------------


def algebra_from_json(data) -> LieAlgebra:
    """``{"dim": n, "basis_offset": 0|1, "brackets": [{"x": i, "y": j, "out": {"k": "p/q"}}]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["dim"])
        off = int(data.get("basis_offset", 1))
        br = {}
        for item in data.get("brackets", []):
            i, j = int(item["x"]), int(item["y"])
            out = {int(k): Fraction(str(v)) for k, v in item["out"].items()}
            if (i, j) in br:
                raise ParseError("bracket [%d,%d] given twice" % (i, j), json.dumps(data))
            br[(i, j)] = out
    except (KeyError, TypeError, ValueError, ZeroDivisionError, AttributeError) as exc:
        raise ParseError("malformed algebra JSON (%s)" % exc, str(data)) from None
    for (i, j), out in br.items():
        for idx in (i, j, *out):
            if not off <= idx < n + off:
                raise IndexOutOfRange("index %d out of range" % idx)
    return LieAlgebra.from_display(n, br, name=data.get("name"), offset=off)


def algebra_to_json(g: LieAlgebra) -> dict:
    out = []
    for (i, j), v in sorted(g.constants.items()):
        out.append({
            "x": i + g.offset,
            "y": j + g.offset,
            "out": {str(k + g.offset): fmt_rat(c) for k, c in enumerate(v) if c},
        })
    d = {"dim": g.dim, "basis_offset": g.offset, "brackets": out}
    if g.name:
        d["name"] = g.name
    return d
