"""Canonical text form: tokenizer, parser, and printer.

Grammar (EBNF, whitespace insignificant):

    expr     = term , { ("+" | "-") , term } ;
    term     = unary , { ("*" | "/") , unary } ;
    unary    = { "-" | "+" } , power ;
    power    = atom , [ "^" , integer ] ;
    atom     = integer | "i" | "h" | variable | "(" , expr , ")" ;
    variable = ("z" | "q" | "p") , integer ;
    integer  = digit , { digit } ;

Precedence is ^ above unary minus above * and / above + and -.  Exact
rationals are written p/q ("/" divides, and the divisor must be a nonzero
constant); floating-point literals are rejected.  "q<k>"/"p<k>" alias the
base/fiber pair "z<2k-1>"/"z<2k>".  The symbol "h" is the deformation
parameter and is only accepted where a series is expected.  Exponents are
nonnegative integer literals.

The printer emits one canonical form: terms in descending graded
lexicographic order, series coefficients in ascending powers of h, and
``parse(print(x)) == x`` exactly.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction

from .errors import ArityError, ParseError
from .poly import SparsePoly, grlex_key
from .scalars import ExactComplex, format_rational
from .series import HbarSeries

_TOKEN_RE = _re.compile(r"\s*(?:(\d+)|([zqp]\d+)|([ih])|([-+*/^()])|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            end = m.end(1)
            if end < len(text) and text[end] == ".":
                raise ParseError(
                    "float literals are not supported; use an exact rational "
                    "like 1/2", col)
            tokens.append(("int", m.group(1), col))
        elif m.group(2):
            tokens.append(("name", m.group(2), col))
        elif m.group(3):
            tokens.append((m.group(3), m.group(3), col))
        elif m.group(4):
            tokens.append((m.group(4), m.group(4), col))
        else:
            ch = m.group(5)
            if ch == ".":
                raise ParseError(
                    "float literals are not supported; use an exact rational "
                    "like 1/2", col)
            raise ParseError(f"unexpected character {ch!r}", col)
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    """Recursive-descent parser producing a SparsePoly in arity+1 variables,
    the last variable standing for h."""

    def __init__(self, text: str, arity: int, allow_h: bool):
        self.tokens = _tokenize(text)
        self.idx = 0
        self.arity = arity
        self.allow_h = allow_h
        self.width = arity + 1

    def peek(self):
        return self.tokens[self.idx]

    def take(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def parse(self) -> SparsePoly:
        value = self.expr()
        kind, text, col = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", col)
        return value

    def expr(self) -> SparsePoly:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> SparsePoly:
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, col = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant():
                    raise ParseError(
                        "division is only defined by nonzero constants", col)
                c = rhs.constant_value()
                if c.is_zero():
                    raise ParseError("division by zero", col)
                value = value.scale(ExactComplex(1) / c)
        return value

    def unary(self) -> SparsePoly:
        sign = 1
        while self.peek()[0] in ("-", "+"):
            op, _, _ = self.take()
            if op == "-":
                sign = -sign
        value = self.power()
        return -value if sign < 0 else value

    def power(self) -> SparsePoly:
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, text, col = self.peek()
            if kind == "-":
                raise ParseError("exponents must be nonnegative integers", col)
            if kind != "int":
                raise ParseError("exponent must be an integer literal", col)
            self.take()
            value = value ** int(text)
        return value

    def atom(self) -> SparsePoly:
        kind, text, col = self.take()
        if kind == "int":
            return SparsePoly.const(self.width, int(text))
        if kind == "i":
            return SparsePoly.const(self.width, ExactComplex(0, 1))
        if kind == "h":
            if not self.allow_h:
                raise ParseError(
                    "'h' is only allowed where a series is expected", col)
            return SparsePoly.variable(self.width, self.width)
        if kind == "name":
            return SparsePoly.variable(self.width, self._var_index(text, col))
        if kind == "(":
            value = self.expr()
            kind2, text2, col2 = self.take()
            if kind2 != ")":
                raise ParseError("expected ')'", col2)
            return value
        if kind == "end":
            raise ParseError("expected an operand", col)
        raise ParseError(f"unexpected {text!r}", col)

    def _var_index(self, name: str, col: int) -> int:
        letter, k = name[0], int(name[1:])
        if k < 1:
            raise ParseError(f"unknown variable {name!r}", col)
        if letter == "z":
            idx = k
        elif letter == "q":
            idx = 2 * k - 1
        else:
            idx = 2 * k
        if idx > self.arity:
            raise ParseError(
                f"unknown variable {name!r} (arity {self.arity})", col)
        return idx


def parse_poly(text: str, arity: int) -> SparsePoly:
    """Parse a polynomial in z1..z<arity>; 'h' is rejected."""
    wide = _Parser(text, arity, allow_h=False).parse()
    raw = {exps[:-1]: coeff for exps, coeff in wide._terms.items()}
    return SparsePoly._from_raw(arity, raw)


def parse_series(text: str, arity: int, order: int) -> HbarSeries:
    """Parse a series in z1..z<arity> and h, truncated at the given order."""
    wide = _Parser(text, arity, allow_h=True).parse()
    coeffs = [dict() for _ in range(order + 1)]
    for exps, coeff in wide._terms.items():
        k = exps[-1]
        if k <= order:
            coeffs[k][exps[:-1]] = coeff
    return HbarSeries([SparsePoly._from_raw(arity, raw) for raw in coeffs])


def parse_expr(text: str, arity: int, order: int | None = None):
    """Parse to a SparsePoly, or to an HbarSeries when order is given."""
    if order is None:
        return parse_poly(text, arity)
    return parse_series(text, arity, order)


def parse_scalar(text: str) -> ExactComplex:
    """Parse a constant expression such as "-1/2+3*i"."""
    value = parse_poly(text, 1)
    if not value.is_constant():
        raise ParseError("expected a constant expression")
    return value.constant_value()


# -- printing ---------------------------------------------------------------


def _default_names(arity: int):
    return tuple(f"z{k}" for k in range(1, arity + 1))


def _monomial_str(exps, names) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _term_piece(exps, coeff: ExactComplex, names) -> tuple[int, str]:
    """Return (sign, body) for one term; mixed coefficients keep sign +1."""
    mono = _monomial_str(exps, names)
    re_, im = coeff.re, coeff.im
    if im == 0:
        sign = 1 if re_ > 0 else -1
        mag = format_rational(abs(re_))
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        return sign, body
    if re_ == 0:
        sign = 1 if im > 0 else -1
        mag = abs(im)
        unit = "i" if mag == 1 else f"{format_rational(mag)}*i"
        body = f"{unit}*{mono}" if mono else unit
        return sign, body
    body = f"({coeff})"
    if mono:
        body = f"{body}*{mono}"
    return 1, body


def _join(pieces) -> str:
    out = []
    for k, (sign, body) in enumerate(pieces):
        if k == 0:
            out.append(f"-{body}" if sign < 0 else body)
        else:
            out.append(f" - {body}" if sign < 0 else f" + {body}")
    return "".join(out)


def poly_to_str(p: SparsePoly, names=None) -> str:
    if p.is_zero():
        return "0"
    names = names or _default_names(p.arity)
    pieces = [_term_piece(e, c, names) for e, c in p.terms()]
    return _join(pieces)


def series_to_str(s: HbarSeries, names=None) -> str:
    names = names or _default_names(s.arity)
    pieces = []
    for k in range(s.order + 1):
        p = s.coeffs[k]
        if p.is_zero():
            continue
        if k == 0:
            pieces.extend(_term_piece(e, c, names) for e, c in p.terms())
            continue
        hpow = "h" if k == 1 else f"h^{k}"
        if len(p) == 1:
            ((exps, coeff),) = p.terms()
            sign, body = _term_piece(exps, coeff, names)
            body = hpow if body == "1" else f"{body}*{hpow}"
            pieces.append((sign, body))
        else:
            pieces.append((1, f"({poly_to_str(p, names)})*{hpow}"))
    if not pieces:
        return "0"
    return _join(pieces)
