"""Text grammar for mappings, round-tripping with canonical printing.

Grammar (whitespace insignificant):

    expr     := ["-"] term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := atom ("^" uint)?
    atom     := "z" | "zbar" | "i" | rational
              | "conj" "(" expr ")" | "abs2" "(" expr ")" | "(" expr ")"
    rational := uint ("/" uint)?

There is no unary minus node: a leading "-" is binary subtraction with an
implicit 0 on the left.  Implicit multiplication ("2z") is rejected.
Rejections carry a byte offset and the set of expected tokens.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bipoly import BiPoly, GR_I, canonical_print
from .errors import DivisionByZero, ParseError

# --- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Add:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Sub:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Mul:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class Conj:
    operand: "ExprAst"


@dataclass(frozen=True)
class Abs2:
    operand: "ExprAst"


@dataclass(frozen=True)
class VarZ:
    pass


@dataclass(frozen=True)
class VarZbar:
    pass


@dataclass(frozen=True)
class ImagUnit:
    pass


@dataclass(frozen=True)
class RationalLit:
    value: Fraction


ExprAst = Union[Add, Sub, Mul, Pow, Conj, Abs2, VarZ, VarZbar, ImagUnit, RationalLit]

# --- Lexer -----------------------------------------------------------------

_KEYWORDS = ("z", "zbar", "i", "conj", "abs2")
_SYMBOLS = "+-*/^()"


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", one of the keywords, a symbol, or "end"
    text: str
    position: int  # byte offset into the source


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    n = len(text)
    idx = 0
    while idx < n:
        ch = text[idx]
        if ch.isspace():
            idx += 1
            continue
        pos = _byte_offset(text, idx)
        if ch.isdigit():
            start = idx
            while idx < n and text[idx].isdigit():
                idx += 1
            tokens.append(_Token("int", text[start:idx], pos))
            continue
        if ch.isalpha():
            start = idx
            while idx < n and (text[idx].isalnum() or text[idx] == "_"):
                idx += 1
            word = text[start:idx]
            if word not in _KEYWORDS:
                raise ParseError(f"unknown name {word!r}", pos, _KEYWORDS)
            tokens.append(_Token(word, word, pos))
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, pos))
            idx += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(_Token("end", "", _byte_offset(text, n)))
    return tokens


# --- Recursive descent -----------------------------------------------------

_ATOM_EXPECTED = ("(", "abs2", "conj", "i", "integer", "z", "zbar")


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, label: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
                tok.position,
                (label or kind,),
            )
        return self.advance()

    def parse_expr(self) -> ExprAst:
        if self.peek().kind == "-":
            self.advance()
            node: ExprAst = Sub(RationalLit(Fraction(0)), self.parse_term())
        else:
            node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            right = self.parse_term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def parse_term(self) -> ExprAst:
        node = self.parse_factor()
        while self.peek().kind == "*":
            self.advance()
            node = Mul(node, self.parse_factor())
        return node

    def parse_factor(self) -> ExprAst:
        node = self.parse_atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("int", "integer exponent")
            node = Pow(node, int(tok.text))
        return node

    def parse_atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/":
                self.advance()
                den_tok = self.expect("int", "integer denominator")
                if int(den_tok.text) == 0:
                    raise DivisionByZero(den_tok.position)
                value = Fraction(int(tok.text), int(den_tok.text))
            return RationalLit(value)
        if tok.kind == "z":
            self.advance()
            return VarZ()
        if tok.kind == "zbar":
            self.advance()
            return VarZbar()
        if tok.kind == "i":
            self.advance()
            return ImagUnit()
        if tok.kind in ("conj", "abs2"):
            self.advance()
            self.expect("(")
            inner = self.parse_expr()
            self.expect(")")
            return Conj(inner) if tok.kind == "conj" else Abs2(inner)
        if tok.kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(
            f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
            tok.position,
            _ATOM_EXPECTED,
        )


def parse_ast(text: str) -> ExprAst:
    """Parse text to an ExprAst, or raise ParseError with a byte offset."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(
            f"unexpected {trailing.text!r} after expression",
            trailing.position,
            ("+", "-", "*", "^", "end of input"),
        )
    return node


def lower(node: ExprAst) -> BiPoly:
    """Evaluate an ExprAst to a BiPoly by exact ring operations."""
    if isinstance(node, Add):
        return lower(node.left) + lower(node.right)
    if isinstance(node, Sub):
        return lower(node.left) - lower(node.right)
    if isinstance(node, Mul):
        return lower(node.left) * lower(node.right)
    if isinstance(node, Pow):
        return lower(node.base) ** node.exponent
    if isinstance(node, Conj):
        return lower(node.operand).conjugate()
    if isinstance(node, Abs2):
        inner = lower(node.operand)
        return inner * inner.conjugate()
    if isinstance(node, VarZ):
        return BiPoly.z()
    if isinstance(node, VarZbar):
        return BiPoly.zbar()
    if isinstance(node, ImagUnit):
        return BiPoly.constant(GR_I)
    if isinstance(node, RationalLit):
        return BiPoly.constant(node.value)
    raise TypeError(f"unknown AST node {node!r}")


def parse(text: str) -> BiPoly:
    """Parse the grammar above down to a canonical BiPoly."""
    return lower(parse_ast(text))


def unparse(f: BiPoly) -> str:
    """Canonical text for f; parse(unparse(f)) == f for every f."""
    return canonical_print(f)
