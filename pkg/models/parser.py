"""
Recursive-descent parser for polynomial expressions in x and y.

Grammar (whitespace insignificant):

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ['^' nat]
    base     := rational | 'x' | 'y' | '(' expr ')'
    rational := nat ['/' nat]

Multiplication must be written explicitly.
"""
import re
from fractions import Fraction
from typing import List, NamedTuple

from exceptions import PolynomialParseError
from models.polynomial import Poly, X, Y

_TOKEN_PATTERN = re.compile(r'\s*(?:(?P<nat>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()])|(?P<bad>\S))')


class Token(NamedTuple):
    kind: str  # 'nat', 'name', 'op', 'end'
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            # only trailing whitespace is left
            break
        kind = match.lastgroup
        start = match.start(kind)
        if kind == 'bad':
            raise PolynomialParseError(f"unexpected character {match.group(kind)!r}", start)
        tokens.append(Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != 'end':
            self.index += 1
        return token

    def accept(self, op: str) -> bool:
        if self.current.kind == 'op' and self.current.text == op:
            self.advance()
            return True
        return False

    def fail(self, message: str, token: Token = None):
        token = token or self.current
        found = 'end of input' if token.kind == 'end' else repr(token.text)
        raise PolynomialParseError(f"{message}, found {found}", token.position)

    def parse(self) -> Poly:
        result = self.expr()
        if self.current.kind != 'end':
            self.fail("expected an operator")
        return result

    def expr(self) -> Poly:
        negate = self.accept('-')
        result = self.term()
        if negate:
            result = -result
        while True:
            if self.accept('+'):
                result = result + self.term()
            elif self.accept('-'):
                result = result - self.term()
            else:
                return result

    def term(self) -> Poly:
        result = self.factor()
        while self.accept('*'):
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        base = self.base()
        if self.accept('^'):
            token = self.current
            if token.kind != 'nat':
                self.fail("exponent must be a natural number", token)
            self.advance()
            return base ** int(token.text)
        return base

    def base(self) -> Poly:
        token = self.current
        if token.kind == 'nat':
            return Poly.constant(self.rational())
        if token.kind == 'name':
            self.advance()
            if token.text == 'x':
                return X
            if token.text == 'y':
                return Y
            self.fail("unknown variable (only x and y are allowed)", token)
        if self.accept('('):
            inner = self.expr()
            if not self.accept(')'):
                self.fail("expected ')'")
            return inner
        self.fail("expected a number, x, y or '('")

    def rational(self) -> Fraction:
        numerator = self.advance()
        if not self.accept('/'):
            return Fraction(int(numerator.text))
        denominator = self.current
        if denominator.kind != 'nat':
            self.fail("expected a natural number denominator", denominator)
        self.advance()
        if int(denominator.text) == 0:
            raise PolynomialParseError("zero denominator in rational coefficient", denominator.position)
        return Fraction(int(numerator.text), int(denominator.text))


def parse_poly(text: str) -> Poly:
    """Parse a polynomial expression into its canonical Poly"""
    if not isinstance(text, str):
        raise TypeError("polynomial expressions must be strings")
    return _Parser(text).parse()


__all__ = ['parse_poly', 'tokenize', 'Token']
