"""A small expression language for sheaf classes on P^N.

Grammar (whitespace insignificant, integers may be negative):

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'O' '(' int ')' | 'O' | 'Omega'
            | 'dual' '(' expr ')'
            | 'Sym' nat '(' expr ')' | 'Wedge' nat '(' expr ')'
            | 'J' nat '(' 'O' '(' int ')' ',' ('left'|'right') ')'
            | '(' expr ')'

'+' is direct sum, '*' is tensor product; both parse left associated.
A bare 'O' is the structure sheaf.  The jet argument is restricted to a
single twist, and the jet side, while ignored by class evaluation, is
kept in the syntax so splitting queries can dispatch on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import jetcalc, kring
from .kring import KClass, LineBundleSum


class ParseError(ValueError):
    """Syntax error with the offending position and the expected tokens."""

    def __init__(self, position: int, expected, found: str):
        self.position = position
        self.expected = frozenset(expected)
        self.found = found
        wanted = ", ".join(sorted(self.expected))
        super().__init__(
            f"at position {position}: expected {wanted}, found {found}"
        )


class RangeError(ParseError):
    """A structurally valid expression with an out-of-range parameter."""

    def __init__(self, position: int, message: str):
        self.position = position
        self.expected = frozenset()
        self.found = message
        ValueError.__init__(self, f"at position {position}: {message}")


class EvaluationError(ValueError):
    """Evaluation failed; the message names the offending subexpression."""


@dataclass(frozen=True)
class Twist:
    d: int


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class Structure:
    pass


@dataclass(frozen=True)
class Sum:
    left: object
    right: object


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class Dual:
    arg: object


@dataclass(frozen=True)
class Sym:
    power: int
    arg: object

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("Sym power must be nonnegative")


@dataclass(frozen=True)
class Wedge:
    power: int
    arg: object

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("Wedge power must be nonnegative")


@dataclass(frozen=True)
class Jet:
    order: int
    arg: Twist
    side: str

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("jet order must be at least 1")
        if not isinstance(self.arg, Twist):
            raise ValueError("jet argument must be a twist")
        if self.side not in jetcalc.SIDES:
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")


_SYMBOLS = "()+*,-"


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        n = len(text)
        while pos < n:
            ch = text[pos]
            if ch.isspace():
                pos += 1
            elif ch in _SYMBOLS:
                self.tokens.append((ch, ch, pos))
                pos += 1
            elif ch.isdigit():
                start = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                self.tokens.append(("nat", text[start:pos], start))
            elif ch.isalpha():
                start = pos
                while pos < n and text[pos].isalpha():
                    pos += 1
                self.tokens.append(("word", text[start:pos], start))
            else:
                raise ParseError(pos, {"a token"}, repr(ch))
        self.tokens.append(("end", "", n))
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        if tok[0] != "end":
            self.index += 1
        return tok

    def expect(self, kind: str, description: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], {description}, repr(tok[1]) if tok[1] else "end of input")
        return self.advance()


_FACTOR_EXPECTED = {"'O'", "'Omega'", "'dual'", "'Sym'", "'Wedge'", "'J'", "'('"}


class _Parser:
    def __init__(self, text: str):
        self.toks = _Tokenizer(text)

    def parse(self):
        expr = self._expr()
        tok = self.toks.peek()
        if tok[0] != "end":
            raise ParseError(tok[2], {"'+'", "'*'", "end of input"}, repr(tok[1]))
        return expr

    def _expr(self):
        node = self._term()
        while self.toks.peek()[0] == "+":
            self.toks.advance()
            node = Sum(node, self._term())
        return node

    def _term(self):
        node = self._factor()
        while self.toks.peek()[0] == "*":
            self.toks.advance()
            node = Tensor(node, self._factor())
        return node

    def _int(self) -> int:
        tok = self.toks.peek()
        negative = False
        if tok[0] == "-":
            self.toks.advance()
            negative = True
        tok = self.toks.expect("nat", "an integer")
        value = int(tok[1])
        return -value if negative else value

    def _nat(self, what: str) -> tuple:
        tok = self.toks.expect("nat", what)
        return int(tok[1]), tok[2]

    def _factor(self):
        tok = self.toks.peek()
        if tok[0] == "(":
            self.toks.advance()
            node = self._expr()
            self.toks.expect(")", "')'")
            return node
        if tok[0] != "word":
            raise ParseError(tok[2], _FACTOR_EXPECTED, repr(tok[1]) if tok[1] else "end of input")
        word = tok[1]
        if word == "O":
            self.toks.advance()
            if self.toks.peek()[0] == "(":
                self.toks.advance()
                d = self._int()
                self.toks.expect(")", "')'")
                return Twist(d)
            return Structure()
        if word == "Omega":
            self.toks.advance()
            return Omega()
        if word == "dual":
            self.toks.advance()
            self.toks.expect("(", "'('")
            node = self._expr()
            self.toks.expect(")", "')'")
            return Dual(node)
        if word in ("Sym", "Wedge"):
            self.toks.advance()
            k, _ = self._nat("a power")
            self.toks.expect("(", "'('")
            node = self._expr()
            self.toks.expect(")", "')'")
            return Sym(k, node) if word == "Sym" else Wedge(k, node)
        if word == "J":
            self.toks.advance()
            k, kpos = self._nat("a jet order")
            if k < 1:
                raise RangeError(kpos, f"jet order must be at least 1, got {k}")
            self.toks.expect("(", "'('")
            otok = self.toks.expect("word", "'O'")
            if otok[1] != "O":
                raise ParseError(otok[2], {"'O'"}, repr(otok[1]))
            self.toks.expect("(", "'('")
            l = self._int()
            self.toks.expect(")", "')'")
            self.toks.expect(",", "','")
            stok = self.toks.expect("word", "'left' or 'right'")
            if stok[1] not in jetcalc.SIDES:
                raise ParseError(stok[2], {"'left'", "'right'"}, repr(stok[1]))
            self.toks.expect(")", "')'")
            return Jet(k, Twist(l), stok[1])
        raise ParseError(tok[2], _FACTOR_EXPECTED, repr(word))


def parse(text: str):
    """Parse an expression; raises ParseError/RangeError on bad input."""
    return _Parser(text).parse()


def print_expr(e) -> str:
    """Canonical text for an expression; parse(print_expr(e)) == e."""
    if isinstance(e, Twist):
        return f"O({e.d})"
    if isinstance(e, Structure):
        return "O"
    if isinstance(e, Omega):
        return "Omega"
    if isinstance(e, Sum):
        right = print_expr(e.right)
        if isinstance(e.right, Sum):
            right = f"({right})"
        return f"{print_expr(e.left)} + {right}"
    if isinstance(e, Tensor):
        left = print_expr(e.left)
        if isinstance(e.left, Sum):
            left = f"({left})"
        right = print_expr(e.right)
        if isinstance(e.right, (Sum, Tensor)):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(e, Dual):
        return f"dual({print_expr(e.arg)})"
    if isinstance(e, Sym):
        return f"Sym{e.power}({print_expr(e.arg)})"
    if isinstance(e, Wedge):
        return f"Wedge{e.power}({print_expr(e.arg)})"
    if isinstance(e, Jet):
        return f"J{e.order}(O({e.arg.d}), {e.side})"
    raise TypeError(f"not an expression node: {e!r}")


def _as_split(e, N: int) -> LineBundleSum:
    """Interpret the split fragment as an explicit sum of twists."""
    if isinstance(e, Twist):
        return LineBundleSum.line(N, e.d)
    if isinstance(e, Structure):
        return LineBundleSum.line(N, 0)
    if isinstance(e, Sum):
        return _as_split(e.left, N) + _as_split(e.right, N)
    if isinstance(e, Tensor):
        return _as_split(e.left, N).tensor(_as_split(e.right, N))
    if isinstance(e, Dual):
        return _as_split(e.arg, N).dual()
    if isinstance(e, Sym):
        return _split_power(kring.sym_power, e, N)
    if isinstance(e, Wedge):
        return _split_power(kring.wedge_power, e, N)
    raise EvaluationError(
        f"subexpression {print_expr(e)!r} is not a sum of twists"
    )


def _split_power(op, e, N: int) -> LineBundleSum:
    inner = _as_split(e.arg, N)
    if not inner.is_effective():
        raise EvaluationError(
            f"subexpression {print_expr(e.arg)!r} has negative multiplicities; "
            f"{type(e).__name__} needs an effective sum"
        )
    return op(inner, e.power)


def evaluate(e, N: int) -> KClass:
    """Evaluate an expression to its class in K(P^N)."""
    if N < 1:
        raise ValueError("N must be positive")
    if isinstance(e, Twist):
        return kring.class_of_twist(N, e.d)
    if isinstance(e, Structure):
        return KClass.one(N)
    if isinstance(e, Omega):
        return kring.sym_omega(N, 1)
    if isinstance(e, Sum):
        return evaluate(e.left, N) + evaluate(e.right, N)
    if isinstance(e, Tensor):
        return evaluate(e.left, N) * evaluate(e.right, N)
    if isinstance(e, Dual):
        return kring.sum_to_class(_as_split(e, N))
    if isinstance(e, Sym):
        if isinstance(e.arg, Omega):
            return kring.sym_omega(N, e.power)
        return kring.sum_to_class(_as_split(e, N))
    if isinstance(e, Wedge):
        if isinstance(e.arg, Omega):
            if N >= 2:
                raise EvaluationError(
                    f"subexpression {print_expr(e)!r}: wedge powers of Omega "
                    "are only supported on the line"
                )
            if e.power == 0:
                return KClass.one(N)
            if e.power == 1:
                return kring.sym_omega(N, 1)
            return KClass.zero(N)
        return kring.sum_to_class(_as_split(e, N))
    if isinstance(e, Jet):
        return jetcalc.jet_class(jetcalc.JetSpec(N, e.order, e.arg.d, e.side))
    raise TypeError(f"not an expression node: {e!r}")
