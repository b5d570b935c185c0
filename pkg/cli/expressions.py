"""
Vector expressions, e.g.

    Wt(-3)Wt(-3)vac - 19/36*L(-3)L(-3)vac + 44/9*L(-6)vac

term := [rational ['*']] mode* 'vac' ;  mode := ('L' | 'Wt') '(' integer ')'
A lone `0` is the zero vector. Words are applied right to left and need not
be in PBW order.
"""
from __future__ import annotations

import re
from fractions import Fraction

from exact.rational import parse_rational
from w3core.module import HighestWeightModule, vacuum_module
from w3core.modes import ModeSymbol
from w3core.states import StateVector, format_vector

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*()]))"
)
FAMILIES = ("L", "Wt")


class ExpressionSyntaxError(ValueError):
    """Malformed vector expression; `position` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if not match or match.end() == position:
            start = len(text) - len(text[position:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, module: HighestWeightModule):
        self.text = text
        self.module = module
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def take(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, message: str, position: int | None = None):
        raise ExpressionSyntaxError(message, self.text, self.peek()[2] if position is None else position)

    def expect(self, value: str) -> None:
        kind, text, position = self.take()
        if text != value:
            self.fail(f"expected {value!r}, found {text or 'end of input'!r}", position)

    def parse(self) -> StateVector:
        kind, value, _ = self.peek()
        if kind == "number" and value == "0" and self.tokens[self.index + 1][0] == "end":
            return self.module.vector({})
        total = self.module.vector({})
        sign = 1
        if value in "+-" and kind == "op":
            sign = -1 if value == "-" else 1
            self.take()
        while True:
            total = total + self.term().scale(sign)
            kind, value, position = self.take()
            if kind == "end":
                return total
            if value not in ("+", "-"):
                self.fail(f"expected '+' or '-', found {value!r}", position)
            sign = -1 if value == "-" else 1

    def term(self) -> StateVector:
        coefficient = Fraction(1)
        kind, value, position = self.peek()
        if kind == "number":
            coefficient = parse_rational(value)
            self.take()
            if self.peek()[1] == "*":
                self.take()
        word = []
        while True:
            kind, value, position = self.take()
            if kind != "name":
                self.fail(f"expected a mode or 'vac', found {value or 'end of input'!r}", position)
            if value == "vac":
                return self.module.from_word(word, coefficient)
            if value not in FAMILIES:
                self.fail(f"unknown generator family {value!r}", position)
            word.append(self.mode(value, position))

    def mode(self, family: str, position: int) -> ModeSymbol:
        self.expect("(")
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        kind, value, number_position = self.take()
        if kind != "number" or "/" in value:
            self.fail("expected an integer mode index", number_position)
        self.expect(")")
        index = sign * int(value)
        if index > 0:
            self.fail(f"{family}({index}) is not a creation operator on the vacuum", position)
        return ModeSymbol(family, index)


def parse_vector(text: str, module: HighestWeightModule | None = None) -> StateVector:
    """Exact StateVector for an expression in the vacuum module (or another module)."""
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression", text or "", 0)
    return _Parser(text, module or vacuum_module(-2)).parse()


__all__ = ["ExpressionSyntaxError", "parse_vector", "format_vector"]
