"""Recursive-descent parser for polynomial expressions.

Grammar: variables from a caller-supplied ordered list; integer and rational
literals ``n`` or ``n/m``; operators ``+ - * ^`` with ``^`` binding tightest,
then ``*``, then ``+``/``-``; parentheses; whitespace ignored. Implicit
multiplication is rejected. Unary ``+``/``-`` is accepted in front of a
factor.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    pass


_TOKEN_CHARS = set("+-*^()/")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: list[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = list(variables)
        self.index = {name: i for i, name in enumerate(self.variables)}
        self.nvars = len(self.variables)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        value = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expression(self) -> Polynomial:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "*":
                self.advance()
                value = value * self.factor()
            elif tok[0] in ("int", "name", "("):
                raise ParseError("implicit multiplication is not allowed", tok[2])
            else:
                return value

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.advance()
            value = self.factor()
            return value if tok[0] == "+" else -value
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            etok = self.expect("int")
            return base ** int(etok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok[0] == "int":
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.advance()
                dtok = self.expect("int")
                den = int(dtok[1])
                if den == 0:
                    raise ParseError("zero denominator", dtok[2])
                value /= den
            return Polynomial.constant(self.nvars, value)
        if tok[0] == "name":
            if tok[1] not in self.index:
                raise UnknownVariableError(f"unknown variable {tok[1]!r}", tok[2])
            return Polynomial.variable(self.nvars, self.index[tok[1]], Fraction(1))
        if tok[0] == "(":
            value = self.expression()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])


def parse_polynomial(text: str, variables: list[str]) -> Polynomial:
    """Parse ``text`` into an expanded, collected polynomial."""
    return _Parser(text, variables).parse()
