"""Parser and evaluator for ideal and element expressions.

Ideal expressions, loosest binding first::

    sum    := inter ('+' inter)*
    inter  := prod ('&' prod)*
    prod   := power ('*' power)*
    power  := atom ('^' ['-'] INT)?
    atom   := '<' elem (',' elem)* '>'
            | '[' INT (',' INT '+' INT 'w')? ']' 'den' INT
            | NAME '(' sum (',' sum)* ')'          NAME in inv, gcd, lcm, conj
            | '(' sum ')'

Elements use ``+ - * /``, unary minus, ``^`` with an integer exponent,
parentheses, integers and ``w``; a number directly followed by ``w`` or ``(``
multiplies (``2w``, ``3(1+w)``).  Errors carry the byte offset of the token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .ideals import (
    FractionalIdeal,
    IntegralIdeal,
    ideal_add,
    ideal_conjugate,
    ideal_from_generators,
    ideal_intersect,
    ideal_inverse,
    ideal_mul,
    ideal_pow,
    is_ideal_lattice,
)
from .quadratic import Element, OrderSpec

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")
FUNCTIONS = {"inv": 1, "gcd": 2, "lcm": 2, "conj": 1}


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        offset = len(text[:start].encode("utf-8"))
        if m.group(1):
            out.append(Token("int", m.group(1), offset))
        elif m.group(2):
            out.append(Token("name", m.group(2), offset))
        else:
            ch = m.group(3)
            if ch not in "<>[](),+-*/^&":
                raise ParseError(f"unexpected character {ch!r}", offset)
            out.append(Token("op", ch, offset))
        pos = m.end()
    out.append(Token("end", "", len(text.encode("utf-8"))))
    return out


# syntax trees

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Omega:
    offset: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class EBin:
    op: str
    left: object
    right: object
    offset: int


@dataclass(frozen=True)
class EPow:
    base: object
    k: int


@dataclass(frozen=True)
class IdealLit:
    gens: tuple
    offset: int


@dataclass(frozen=True)
class HnfLit:
    a: int
    b: int
    c: int
    den: int
    offset: int


@dataclass(frozen=True)
class IBin:
    op: str  # '+', '&' or '*'
    left: object
    right: object


@dataclass(frozen=True)
class IPow:
    base: object
    k: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    offset: int


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("op", "name") and t.text == text

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str, what: str | None = None) -> Token:
        if not self.at(text):
            self.fail(f"expected {what or repr(text)}")
        return self.take()

    def fail(self, msg: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"{msg}, found {found}", t.offset)

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.fail("expected an integer")
        return int(self.take().text)

    def signed_integer(self) -> int:
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        k = self.integer()
        return -k if neg else k

    def finish(self):
        if self.tok.kind != "end":
            self.fail("unexpected trailing input")

    # ideals

    def ideal_sum(self):
        node = self.ideal_inter()
        while self.at("+"):
            self.take()
            node = IBin("+", node, self.ideal_inter())
        return node

    def ideal_inter(self):
        node = self.ideal_prod()
        while self.at("&"):
            self.take()
            node = IBin("&", node, self.ideal_prod())
        return node

    def ideal_prod(self):
        node = self.ideal_power()
        while self.at("*"):
            self.take()
            node = IBin("*", node, self.ideal_power())
        return node

    def ideal_power(self):
        node = self.ideal_atom()
        if self.at("^"):
            self.take()
            node = IPow(node, self.signed_integer())
        return node

    def ideal_atom(self):
        t = self.tok
        if self.at("<"):
            self.take()
            if self.at(">"):
                self.fail("expected an element")
            gens = [self.elem_sum()]
            while self.at(","):
                self.take()
                gens.append(self.elem_sum())
            self.expect(">", "',' or '>'")
            return IdealLit(tuple(gens), t.offset)
        if self.at("["):
            self.take()
            a = self.integer()
            b, c = 0, None
            if self.at(","):
                self.take()
                b = self.integer()
                self.expect("+")
                c = self.integer()
                self.expect("w")
            self.expect("]")
            self.expect("den", "'den'")
            return HnfLit(a, b, c, self.integer(), t.offset)
        if self.at("("):
            self.take()
            node = self.ideal_sum()
            self.expect(")")
            return node
        if t.kind == "name" and t.text in FUNCTIONS:
            self.take()
            self.expect("(")
            args = [self.ideal_sum()]
            while self.at(","):
                self.take()
                args.append(self.ideal_sum())
            self.expect(")", "',' or ')'")
            if len(args) != FUNCTIONS[t.text]:
                raise ParseError(f"{t.text} takes {FUNCTIONS[t.text]} argument(s)", t.offset)
            return Call(t.text, tuple(args), t.offset)
        self.fail("expected an ideal")

    # elements

    def elem_sum(self):
        node = self.elem_term()
        while self.at("+") or self.at("-"):
            t = self.take()
            node = EBin(t.text, node, self.elem_term(), t.offset)
        return node

    def elem_term(self):
        node = self.elem_unary()
        while True:
            if self.at("*") or self.at("/"):
                t = self.take()
                node = EBin(t.text, node, self.elem_unary(), t.offset)
            elif self.at("w") or self.at("("):
                node = EBin("*", node, self.elem_power(), self.tok.offset)
            else:
                return node

    def elem_unary(self):
        if self.at("-"):
            self.take()
            return Neg(self.elem_unary())
        return self.elem_power()

    def elem_power(self):
        node = self.elem_atom()
        if self.at("^"):
            self.take()
            node = EPow(node, self.signed_integer())
        return node

    def elem_atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            return Num(Fraction(int(t.text)))
        if self.at("w"):
            self.take()
            return Omega(t.offset)
        if self.at("("):
            self.take()
            node = self.elem_sum()
            self.expect(")")
            return node
        self.fail("expected an element")


def parse(text: str):
    """Syntax tree of an ideal expression."""
    p = _Parser(text)
    node = p.ideal_sum()
    p.finish()
    return node


def parse_element(text: str):
    p = _Parser(text)
    node = p.elem_sum()
    p.finish()
    return node


def eval_element(node, order: OrderSpec) -> Element:
    if isinstance(node, Num):
        return order.element(node.value)
    if isinstance(node, Omega):
        return order.omega
    if isinstance(node, Neg):
        return -eval_element(node.arg, order)
    if isinstance(node, EPow):
        base = eval_element(node.base, order)
        if not base and node.k < 0:
            raise DomainError("zero has no negative powers")
        return base ** node.k
    if isinstance(node, EBin):
        a, b = eval_element(node.left, order), eval_element(node.right, order)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if not b:
            raise DomainError("division by zero")
        return a / b
    raise TypeError(f"not an element node: {node!r}")


def eval_ideal(node, order: OrderSpec) -> FractionalIdeal:
    if isinstance(node, IdealLit):
        return ideal_from_generators([eval_element(g, order) for g in node.gens], order)
    if isinstance(node, HnfLit):
        return _hnf_literal(node, order)
    if isinstance(node, IBin):
        a, b = eval_ideal(node.left, order), eval_ideal(node.right, order)
        return {"+": ideal_add, "&": ideal_intersect, "*": ideal_mul}[node.op](a, b)
    if isinstance(node, IPow):
        return ideal_pow(eval_ideal(node.base, order), node.k)
    if isinstance(node, Call):
        args = [eval_ideal(a, order) for a in node.args]
        if node.name == "inv":
            return ideal_inverse(args[0])
        if node.name == "conj":
            return ideal_conjugate(args[0])
        if node.name == "gcd":
            return ideal_add(*args)
        return ideal_intersect(*args)
    raise TypeError(f"not an ideal node: {node!r}")


def _hnf_literal(node: HnfLit, order: OrderSpec) -> FractionalIdeal:
    if order.is_rational != (node.c is None):
        shape = "[a] den k" if order.is_rational else "[a, b+cw] den k"
        raise DomainError(f"HNF literal must have the form {shape} in this ring")
    c = 1 if node.c is None else node.c
    if not is_ideal_lattice(order, node.a, node.b, c):
        raise DomainError(f"[{node.a}, {node.b}+{c}w] is not an ideal in HNF")
    if node.den < 1:
        raise DomainError("denominator must be positive")
    return FractionalIdeal(IntegralIdeal(node.a, node.b, c, order), node.den)


def evaluate(text: str, order: OrderSpec) -> FractionalIdeal:
    return eval_ideal(parse(text), order)


def evaluate_element(text: str, order: OrderSpec) -> Element:
    return eval_element(parse_element(text), order)
