"""Recursive-descent parser for exact expressions and differential 1-forms.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/' | <implicit>) unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    atom   := INT | 'i' | VAR | 'd'VAR | 'sqrt' '(' expr ')' | '(' expr ')'

Variables are single letters.  ``dx`` (``dz`` ...) is the differential of
the corresponding variable.  ``i`` is the imaginary unit and is never a
variable.  Division is allowed everywhere; coefficients of a form may be
rational functions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra.quad import QuadNumber
from .algebra.ratfunc import RatFunc
from .errors import FormSyntaxError

# preferred chart variable pairs; anything else falls back to alphabetical order
KNOWN_PAIRS = [
    ("x", "y"), ("z", "w"), ("u", "v"), ("x", "t"), ("s", "y"),
    ("s", "w"), ("z", "t"), ("s", "t"),
]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(\S))")


@dataclass
class _Tok:
    kind: str  # int, var, diff, sqrt, imag, op, end
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        assert m is not None
        start = m.start(m.lastindex)
        num, word, op = m.groups()
        if num is not None:
            toks.append(_Tok("int", num, start))
        elif word is not None:
            if word == "sqrt":
                toks.append(_Tok("sqrt", word, start))
            elif word == "i":
                toks.append(_Tok("imag", word, start))
            elif len(word) == 1:
                toks.append(_Tok("var", word, start))
            elif len(word) == 2 and word[0] == "d" and word[1] != "i":
                toks.append(_Tok("diff", word[1], start))
            else:
                raise FormSyntaxError(f"unknown identifier {word!r}", start, text)
        else:
            if op not in "+-*/^()":
                raise FormSyntaxError(f"unexpected character {op!r}", start, text)
            toks.append(_Tok("op", op, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def variable_order(names: Sequence[str]) -> tuple[str, str]:
    """Deterministic ordering of the (at most two) variables of an expression."""
    found = set(names)
    if len(found) > 2:
        raise ValueError(f"more than two variables: {sorted(found)}")
    for pair in KNOWN_PAIRS:
        if found <= set(pair):
            return pair
    ordered = sorted(found)
    if len(ordered) == 2:
        return ordered[0], ordered[1]
    if len(ordered) == 1:
        v = ordered[0]
        return (v, "y") if v != "y" else ("x", "y")
    return ("x", "y")


class _Val:
    """Either a scalar rational function or a 1-form (dict index -> coefficient)."""

    __slots__ = ("scalar", "form")

    def __init__(self, scalar: Optional[RatFunc] = None, form: Optional[dict[int, RatFunc]] = None):
        self.scalar = scalar
        self.form = form

    @property
    def is_form(self) -> bool:
        return self.form is not None


class _Parser:
    def __init__(self, text: str, names: tuple[str, str]) -> None:
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0
        self.names = names

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def take(self) -> _Tok:
        t = self.toks[self.k]
        self.k += 1
        return t

    def error(self, msg: str, tok: Optional[_Tok] = None) -> FormSyntaxError:
        tok = tok or self.peek()
        return FormSyntaxError(msg, tok.pos, self.text)

    def expect(self, op: str) -> None:
        t = self.take()
        if t.kind != "op" or t.value != op:
            raise self.error(f"expected {op!r}", t)

    def parse(self) -> _Val:
        v = self.expr()
        if self.peek().kind != "end":
            raise self.error("unexpected trailing input")
        return v

    def expr(self) -> _Val:
        v = self.term()
        while self.peek().kind == "op" and self.peek().value in "+-":
            op = self.take()
            w = self.term()
            v = self.combine(v, w, op)
        return v

    def term(self) -> _Val:
        v = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "*/":
                self.take()
                w = self.unary()
                v = self.mul(v, w, t) if t.value == "*" else self.div(v, w, t)
            elif t.kind in ("int", "var", "diff", "sqrt", "imag") or (t.kind == "op" and t.value == "("):
                w = self.power()
                v = self.mul(v, w, t)
            else:
                return v

    def unary(self) -> _Val:
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            v = self.unary()
            if t.value == "-":
                return self.scale(v, RatFunc(-1))
            return v
        return self.power()

    def power(self) -> _Val:
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.value == "^":
            self.take()
            n = self.exponent()
            if base.is_form:
                raise self.error("cannot raise a differential to a power", t)
            try:
                return _Val(base.scalar ** n)
            except ZeroDivisionError:
                raise self.error("negative power of zero", t) from None
        return base

    def exponent(self) -> int:
        paren = False
        t = self.peek()
        if t.kind == "op" and t.value == "(":
            self.take()
            paren = True
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            sign = -1 if t.value == "-" else 1
        t = self.take()
        if t.kind != "int":
            raise self.error("exponent must be an integer", t)
        if paren:
            self.expect(")")
        return sign * int(t.value)

    def atom(self) -> _Val:
        t = self.take()
        if t.kind == "int":
            return _Val(RatFunc(int(t.value)))
        if t.kind == "imag":
            return _Val(RatFunc(QuadNumber(0, 1, -1)))
        if t.kind == "var":
            return _Val(RatFunc.var(self.index(t)))
        if t.kind == "diff":
            return _Val(form={self.index(t): RatFunc(1)})
        if t.kind == "sqrt":
            self.expect("(")
            inner = self.expr()
            close = self.peek()
            self.expect(")")
            if inner.is_form or not inner.scalar.is_constant():
                raise self.error("sqrt() needs a constant argument", close)
            c = inner.scalar.constant_value()
            try:
                return _Val(RatFunc(c.sqrt()))
            except ArithmeticError as exc:
                raise type(exc)(f"{exc} (at position {t.pos})") from None
        if t.kind == "op" and t.value == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise self.error("unexpected token" if t.kind != "end" else "unexpected end of input", t)

    def index(self, t: _Tok) -> int:
        if t.value not in self.names:
            raise self.error(f"variable {t.value!r} is not a chart variable {self.names}", t)
        return self.names.index(t.value)

    # -- value algebra --------------------------------------------------
    def combine(self, v: _Val, w: _Val, op: _Tok) -> _Val:
        if op.value == "-":
            w = self.scale(w, RatFunc(-1))
        if v.is_form != w.is_form:
            scal = w if v.is_form else v
            if scal.scalar.is_zero():
                return v if v.is_form else w
            raise self.error("cannot add a function to a differential form", op)
        if not v.is_form:
            return _Val(v.scalar + w.scalar)
        out = dict(v.form)
        for k, c in w.form.items():
            out[k] = out[k] + c if k in out else c
        return _Val(form=out)

    def scale(self, v: _Val, s: RatFunc) -> _Val:
        if v.is_form:
            return _Val(form={k: c * s for k, c in v.form.items()})
        return _Val(v.scalar * s)

    def mul(self, v: _Val, w: _Val, op: _Tok) -> _Val:
        if v.is_form and w.is_form:
            raise self.error("product of two differentials", op)
        if v.is_form:
            return self.scale(v, w.scalar)
        return self.scale(w, v.scalar)

    def div(self, v: _Val, w: _Val, op: _Tok) -> _Val:
        if w.is_form:
            raise self.error("division by a differential", op)
        if w.scalar.is_zero():
            raise self.error("division by zero", op)
        return self.scale(v, w.scalar.inverse())


def _scan_names(text: str) -> list[str]:
    names = []
    for t in _tokenize(text):
        if t.kind in ("var", "diff"):
            names.append(t.value)
    return names


def parse_expression(text: str, names: Optional[Sequence[str]] = None) -> tuple[RatFunc, tuple[str, str]]:
    """Parse a scalar rational function; returns it with the variable names used."""
    pair = tuple(names) if names else variable_order(_scan_names(text))
    v = _Parser(text, pair).parse()
    if v.is_form:
        raise FormSyntaxError("expected a function, found a differential form", 0, text)
    return v.scalar, pair


def parse_form_coefficients(
    text: str, names: Optional[Sequence[str]] = None
) -> tuple[RatFunc, RatFunc, tuple[str, str]]:
    """Parse ``P d(var0) + Q d(var1)``; returns ``(P, Q, names)``."""
    try:
        pair = tuple(names) if names else variable_order(_scan_names(text))
    except ValueError as exc:
        raise FormSyntaxError(str(exc), 0, text) from None
    v = _Parser(text, pair).parse()
    if not v.is_form:
        if v.scalar.is_zero():
            return RatFunc(0), RatFunc(0), pair
        raise FormSyntaxError("expected a differential form (use dx, dy, ...)", 0, text)
    return v.form.get(0, RatFunc(0)), v.form.get(1, RatFunc(0)), pair


def parse_number(text: str) -> QuadNumber:
    """Parse a constant such as ``-3/2``, ``1+sqrt(2)`` or ``i``."""
    value, _ = parse_expression(text, ("_", "__"))
    if not value.is_constant():
        raise FormSyntaxError("expected a constant", 0, text)
    return value.constant_value()
