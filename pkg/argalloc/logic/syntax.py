"""
Textual form of expressions:

    expression := term ("|" term)*
    term       := factor ("&" factor)*
    factor     := "!" factor | "(" expression ")" | "T" | "U" | "F" | identifier
    identifier := [A-Za-z0-9_]+ (except T, U and F)

Parentheses are printed only where precedence (! > & > |) requires them, and
around a conjunction (disjunction) nested directly inside another one, so
that `parse_expression(to_string(p)) == p` for every expression.
"""
import re

from . import (
    CONSTANTS,
    Conjunction,
    Constant,
    Disjunction,
    ExpressionSyntaxError,
    Negation,
    TriValue,
    Variable,
)

_TOKEN = re.compile(r"\s*(?:(?P<op>[!&|()])|(?P<word>[A-Za-z0-9_]+)|(?P<bad>\S))")

SYMBOLS = {Conjunction: "&", Disjunction: "|"}


def _tokenize(text):
    tokens = []
    for match in _TOKEN.finditer(text):
        if match.group("bad") is not None:
            raise ExpressionSyntaxError(
                f"Unexpected character `{match.group('bad')}`", match.start("bad")
            )
        kind = "op" if match.group("op") is not None else "word"
        tokens.append((match.group(kind), match.start(kind)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i][0]
        return None

    def position(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i][1]
        return len(self.text)

    def take(self):
        token = self.tokens[self.i][0]
        self.i += 1
        return token

    def parse(self):
        if self.peek() is None:
            raise ExpressionSyntaxError("Empty expression", 0)
        p = self.expression()
        if self.peek() is not None:
            raise ExpressionSyntaxError(
                f"Unexpected `{self.peek()}`", self.position()
            )
        return p

    def _sequence(self, symbol, kind, parse_operand):
        operands = [parse_operand()]
        while self.peek() == symbol:
            self.take()
            operands.append(parse_operand())
        if len(operands) == 1:
            return operands[0]
        return kind(tuple(operands))

    def expression(self):
        return self._sequence("|", Disjunction, self.term)

    def term(self):
        return self._sequence("&", Conjunction, self.factor)

    def factor(self):
        token = self.peek()
        if token is None:
            raise ExpressionSyntaxError("Unexpected end of expression", self.position())
        if token == "!":
            self.take()
            return Negation(self.factor())
        if token == "(":
            self.take()
            p = self.expression()
            if self.peek() != ")":
                raise ExpressionSyntaxError("Expected `)`", self.position())
            self.take()
            return p
        if token in ("&", "|", ")"):
            raise ExpressionSyntaxError(f"Unexpected `{token}`", self.position())
        self.take()
        if token in TriValue.__members__:
            return CONSTANTS[TriValue[token]]
        return Variable(token)


def parse_expression(text):
    return _Parser(text).parse()


def to_string(p):
    if isinstance(p, Constant):
        return p.value.name
    elif isinstance(p, Variable):
        return p.name
    elif isinstance(p, Negation):
        child = to_string(p.child)
        if isinstance(p.child, (Conjunction, Disjunction)):
            child = f"({child})"
        return f"!{child}"

    parts = []
    for child in p.children:
        s = to_string(child)
        needs_parens = isinstance(child, type(p)) or (
            isinstance(p, Conjunction) and isinstance(child, Disjunction)
        )
        parts.append(f"({s})" if needs_parens else s)
    return f" {SYMBOLS[type(p)]} ".join(parts)
