"""Expression language for soft-set algebra over named soft sets.

Grammar (loosest binding first):

    expression := term { "|" term }
    term       := factor { ("&" | "-" | "\\") factor }
    factor     := atom { "^c" }
    atom       := NAME | "EMPTY" | "UNIVERSAL" | "(" expression ")"

`&` and `-` share a precedence level and all binary operators associate
to the left; `^c` is postfix.  Names match [A-Za-z_][A-Za-z0-9_]*, with
EMPTY and UNIVERSAL reserved as constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import algebra
from .errors import ContextMismatch, LexError, ParseError, UnboundName
from .model import Context, SoftSet, empty_soft_set, universal_soft_set

__all__ = [
    "Token",
    "Expr",
    "Name",
    "Empty",
    "Universal",
    "Complement",
    "Intersect",
    "Union",
    "Difference",
    "tokenize",
    "parse",
    "parse_text",
    "evaluate",
    "render",
]

# Token kinds.
NAME = "NAME"
AMP = "AMP"
PIPE = "PIPE"
MINUS = "MINUS"
CARET_C = "CARET_C"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
EMPTY_KW = "EMPTY_KW"
UNIV_KW = "UNIV_KW"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


class Expr:
    """Base class for expression tree nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Name(Expr):
    identifier: str

    def __post_init__(self):
        if not self.identifier:
            raise ValueError("Name identifier must be nonempty")


@dataclass(frozen=True)
class Empty(Expr):
    pass


@dataclass(frozen=True)
class Universal(Expr):
    pass


@dataclass(frozen=True)
class Complement(Expr):
    child: Expr


@dataclass(frozen=True)
class Intersect(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Union(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Difference(Expr):
    left: Expr
    right: Expr


# ---------------------------------------------------------------------------
# Lexer

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

_SINGLE = {
    "&": AMP,
    "|": PIPE,
    "-": MINUS,
    "\\": MINUS,
    "(": LPAREN,
    ")": RPAREN,
}

_KEYWORDS = {"EMPTY": EMPTY_KW, "UNIVERSAL": UNIV_KW}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch in " \t\r":
            column += 1
            i += 1
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, line, column))
            column += 1
            i += 1
            continue
        if ch == "^":
            if i + 1 < len(text) and text[i + 1] == "c":
                tokens.append(Token(CARET_C, "^c", line, column))
                column += 2
                i += 2
                continue
            raise LexError("expected 'c' after '^'", line, column)
        m = _NAME_RE.match(text, i)
        if m:
            word = m.group()
            kind = _KEYWORDS.get(word, NAME)
            tokens.append(Token(kind, word, line, column))
            column += len(word)
            i += len(word)
            continue
        raise LexError(f"illegal character {ch!r}", line, column)
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        self.tokens = list(tokens)
        self.pos = 0

    def _end_position(self) -> tuple[int, int]:
        if self.tokens:
            last = self.tokens[-1]
            return last.line, last.column + len(last.text)
        return 1, 1

    def peek(self) -> Token | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expression(self) -> Expr:
        node = self.term()
        while (tok := self.peek()) is not None and tok.kind == PIPE:
            self.advance()
            node = Union(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while (tok := self.peek()) is not None and tok.kind in (AMP, MINUS):
            op = self.advance()
            right = self.factor()
            node = Intersect(node, right) if op.kind == AMP else Difference(node, right)
        return node

    def factor(self) -> Expr:
        node = self.atom()
        while (tok := self.peek()) is not None and tok.kind == CARET_C:
            self.advance()
            node = Complement(node)
        return node

    def atom(self) -> Expr:
        tok = self.peek()
        if tok is None:
            line, column = self._end_position()
            raise ParseError("unexpected end of input", line, column)
        if tok.kind == NAME:
            self.advance()
            return Name(tok.text)
        if tok.kind == EMPTY_KW:
            self.advance()
            return Empty()
        if tok.kind == UNIV_KW:
            self.advance()
            return Universal()
        if tok.kind == LPAREN:
            self.advance()
            node = self.expression()
            closing = self.peek()
            if closing is None or closing.kind != RPAREN:
                raise ParseError("unbalanced parenthesis", tok.line, tok.column)
            self.advance()
            return node
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.column)


def parse(tokens: Sequence[Token]) -> Expr:
    parser = _Parser(tokens)
    node = parser.expression()
    trailing = parser.peek()
    if trailing is not None:
        raise ParseError(
            f"trailing input starting at {trailing.text!r}", trailing.line, trailing.column
        )
    return node


def parse_text(text: str) -> Expr:
    return parse(tokenize(text))


# ---------------------------------------------------------------------------
# Evaluation and rendering


def evaluate(ast: Expr, env: Mapping[str, SoftSet], ctx: Context) -> SoftSet:
    """Evaluate bottom-up, delegating each operator to the algebra."""
    if isinstance(ast, Name):
        if ast.identifier not in env:
            raise UnboundName(ast.identifier)
        value = env[ast.identifier]
        if value.context != ctx:
            raise ContextMismatch(
                f"name {ast.identifier} is bound in a different context"
            )
        return value
    if isinstance(ast, Empty):
        return empty_soft_set(ctx)
    if isinstance(ast, Universal):
        return universal_soft_set(ctx)
    if isinstance(ast, Complement):
        return algebra.complement(evaluate(ast.child, env, ctx))
    if isinstance(ast, Intersect):
        return algebra.intersection(evaluate(ast.left, env, ctx), evaluate(ast.right, env, ctx))
    if isinstance(ast, Union):
        return algebra.union(evaluate(ast.left, env, ctx), evaluate(ast.right, env, ctx))
    if isinstance(ast, Difference):
        return algebra.difference(evaluate(ast.left, env, ctx), evaluate(ast.right, env, ctx))
    raise TypeError(f"not an expression node: {ast!r}")


def render(ast: Expr) -> str:
    """Fully parenthesized text that reparses to an identical tree."""
    if isinstance(ast, Name):
        return ast.identifier
    if isinstance(ast, Empty):
        return "EMPTY"
    if isinstance(ast, Universal):
        return "UNIVERSAL"
    if isinstance(ast, Complement):
        return f"{render(ast.child)}^c"
    if isinstance(ast, Intersect):
        return f"({render(ast.left)} & {render(ast.right)})"
    if isinstance(ast, Union):
        return f"({render(ast.left)} | {render(ast.right)})"
    if isinstance(ast, Difference):
        return f"({render(ast.left)} - {render(ast.right)})"
    raise TypeError(f"not an expression node: {ast!r}")
