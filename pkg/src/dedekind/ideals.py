"""Nonzero fractional ideals as HNF lattices with a denominator.

An integral ideal of ``Z[w]`` is the lattice ``a*Z + (b + c*w)*Z`` with
``c | a``, ``c | b`` and ``0 <= b < a``.  A fractional ideal is such a lattice
divided by a positive integer ``den`` with ``gcd(den, c) == 1`` (for ``Z``:
``gcd(den, a) == 1``), which makes the representation unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from . import lattice as lat
from .errors import DomainError, OrderMismatchError, ZeroIdealError
from .quadratic import Element, OrderSpec


@dataclass(frozen=True, order=False)
class IntegralIdeal:
    a: int
    b: int
    c: int
    order: OrderSpec

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if self.order.is_rational:
            if a <= 0 or b != 0 or c != 1:
                raise DomainError(f"bad HNF for an ideal of Z: {(a, b, c)}")
            return
        if a <= 0 or c <= 0 or not 0 <= b < a or a % c or b % c:
            raise DomainError(f"{(a, b, c)} is not the HNF of an ideal lattice")

    @property
    def rows(self):
        if self.order.is_rational:
            return ((self.a,),)
        return ((self.a, 0), (self.b, self.c))

    @property
    def hnf(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def norm(self) -> int:
        return self.a if self.order.is_rational else self.a * self.c

    def generators(self) -> list[Element]:
        return [Element.from_coords(r, self.order) for r in self.rows]

    def as_fractional(self) -> "FractionalIdeal":
        return FractionalIdeal(self, 1)

    def __str__(self):
        return str(self.as_fractional())


def _is_closed_under_omega(order: OrderSpec, rows) -> bool:
    w = order.omega
    for r in rows:
        g = Element.from_coords(r, order) * w
        if not lat.contains(rows, 1, g.coords):
            return False
    return True


def is_ideal_lattice(order: OrderSpec, a: int, b: int, c: int) -> bool:
    """True when ``a*Z + (b + c*w)*Z`` is an ideal of ``order`` in HNF."""
    if order.is_rational:
        return a > 0 and b == 0 and c == 1
    if a <= 0 or c <= 0 or not 0 <= b < a or a % c or b % c:
        return False
    return _is_closed_under_omega(order, ((a, 0), (b, c)))


@dataclass(frozen=True)
class FractionalIdeal:
    lattice: IntegralIdeal
    den: int = 1

    def __post_init__(self):
        if self.den <= 0:
            raise DomainError("denominator must be positive")
        g = self.lattice.a if self.order.is_rational else self.lattice.c
        if gcd(g, self.den) != 1:
            raise DomainError("fractional ideal is not in canonical form")

    @property
    def order(self) -> OrderSpec:
        return self.lattice.order

    @property
    def rows(self):
        return self.lattice.rows

    @property
    def hnf(self) -> tuple[int, int, int]:
        return self.lattice.hnf

    def lattice_pair(self):
        return self.lattice.rows, self.den

    def basis_vectors(self) -> list[tuple[Fraction, ...]]:
        return lat.basis_vectors(self.rows, self.den)

    def generators(self) -> list[Element]:
        """The two canonical generators (one for ideals of Z)."""
        return [Element.from_coords(v, self.order) for v in self.basis_vectors()]

    def is_integral(self) -> bool:
        return self.den == 1

    def is_unit(self) -> bool:
        return self.den == 1 and self.lattice.norm() == 1

    def norm(self) -> Fraction:
        return ideal_norm(self)

    def integral(self) -> IntegralIdeal:
        if self.den != 1:
            raise DomainError(f"{self} is not an integral ideal")
        return self.lattice

    def __contains__(self, x) -> bool:
        return member(x, self)

    def __add__(self, other):
        return ideal_add(self, other)

    def __mul__(self, other):
        if isinstance(other, (Element, int, Fraction)):
            return scale(self, other)
        return ideal_mul(self, other)

    __rmul__ = __mul__

    def __and__(self, other):
        return ideal_intersect(self, other)

    def __pow__(self, k: int):
        return ideal_pow(self, k)

    def __le__(self, other) -> bool:
        return is_subset(self, other)

    def __lt__(self, other) -> bool:
        return self != other and is_subset(self, other)

    def inverse(self) -> "FractionalIdeal":
        return ideal_inverse(self)

    def conj(self) -> "FractionalIdeal":
        return ideal_conjugate(self)

    def __str__(self):
        return format_ideal(self)


def format_ideal(I: FractionalIdeal) -> str:
    """``[a, b+cw] den k`` (``[a] den k`` over Z); parseable by the CLI."""
    a, b, c = I.hnf
    if I.order.is_rational:
        return f"[{a}] den {I.den}"
    return f"[{a}, {b}+{c}w] den {I.den}"


def _as_fractional(I) -> FractionalIdeal:
    if isinstance(I, FractionalIdeal):
        return I
    if isinstance(I, IntegralIdeal):
        return I.as_fractional()
    raise TypeError(f"expected an ideal, got {type(I).__name__}")


def _same_order(*ideals) -> OrderSpec:
    order = ideals[0].order
    for I in ideals[1:]:
        if I.order != order:
            raise OrderMismatchError("ideals belong to different orders")
    return order


def from_lattice(order: OrderSpec, rows, den) -> FractionalIdeal:
    if order.is_rational:
        return FractionalIdeal(IntegralIdeal(rows[0][0], 0, 1, order), den)
    (a, _), (b, c) = rows
    return FractionalIdeal(IntegralIdeal(a, b, c, order), den)


def from_vectors(order: OrderSpec, vectors: Iterable[Sequence]) -> FractionalIdeal:
    """Ideal spanned over Z by coordinate vectors that already form an R-module."""
    vectors = [tuple(Fraction(x) for x in v) for v in vectors]
    if not any(any(v) for v in vectors):
        raise ZeroIdealError("the zero module is not a fractional ideal")
    rows, den = lat.rational_hnf(vectors, order.degree)
    return from_lattice(order, rows, den)


def ideal_from_generators(gens: Sequence, order: OrderSpec | None = None) -> FractionalIdeal:
    """Smallest R-submodule of K containing ``gens``.

    Plain numbers are allowed next to elements; pass ``order`` when there are
    no elements at all.
    """
    gens = list(gens)
    if not gens:
        raise ZeroIdealError("empty generator list")
    if order is None:
        order = next((g.order for g in gens if isinstance(g, Element)), None)
        if order is None:
            raise DomainError("cannot infer the order from plain numbers")
    vectors = []
    for g in gens:
        if not isinstance(g, Element):
            g = order.element(g)
        if g.order != order:
            raise OrderMismatchError("generators belong to different orders")
        vectors.append(g.coords)
        if not order.is_rational:
            vectors.append((g * order.omega).coords)
    return from_vectors(order, vectors)


def principal(x: Element) -> FractionalIdeal:
    return ideal_from_generators([x])


def unit_ideal(order: OrderSpec) -> FractionalIdeal:
    return from_lattice(order, ((1,),) if order.is_rational else ((1, 0), (0, 1)), 1)


def member(x, I) -> bool:
    I = _as_fractional(I)
    if not isinstance(x, Element):
        x = I.order.element(x)
    if x.order != I.order:
        raise OrderMismatchError("element and ideal belong to different orders")
    return lat.contains(I.rows, I.den, x.coords)


def is_subset(I, J) -> bool:
    """``I ⊆ J``."""
    I, J = _as_fractional(I), _as_fractional(J)
    _same_order(I, J)
    return all(lat.contains(J.rows, J.den, v) for v in I.basis_vectors())


def ideal_add(I, J) -> FractionalIdeal:
    I, J = _as_fractional(I), _as_fractional(J)
    order = _same_order(I, J)
    return from_vectors(order, I.basis_vectors() + J.basis_vectors())


def ideal_mul(I, J) -> FractionalIdeal:
    I, J = _as_fractional(I), _as_fractional(J)
    order = _same_order(I, J)
    prods = [(g * h).coords for g in I.generators() for h in J.generators()]
    return from_vectors(order, prods)


def scale(I, x) -> FractionalIdeal:
    I = _as_fractional(I)
    if not isinstance(x, Element):
        x = I.order.element(x)
    if not x:
        raise ZeroIdealError("scaling by zero gives the zero module")
    return from_vectors(I.order, [(g * x).coords for g in I.generators()])


def ideal_intersect(I, J) -> FractionalIdeal:
    I, J = _as_fractional(I), _as_fractional(J)
    order = _same_order(I, J)
    rows, den = lat.lattice_intersection(I.lattice_pair(), J.lattice_pair())
    return from_lattice(order, rows, den)


def colon(I, J) -> FractionalIdeal:
    """``(I : J) = {x in K : x*J ⊆ I}``."""
    I, J = _as_fractional(I), _as_fractional(J)
    _same_order(I, J)
    parts = [scale(I, g.inverse()) for g in J.generators()]
    return reduce(ideal_intersect, parts)


def ideal_inverse(I) -> FractionalIdeal:
    """``I^{-1} = {x in K : x*I ⊆ R}``; a true inverse only when I is invertible."""
    I = _as_fractional(I)
    return colon(unit_ideal(I.order), I)


def multiplier_ring(I) -> FractionalIdeal:
    """``{x in K : x*I ⊆ I}``, a ring containing R."""
    I = _as_fractional(I)
    return colon(I, I)


def is_invertible(I) -> bool:
    I = _as_fractional(I)
    return ideal_mul(I, ideal_inverse(I)).is_unit()


def ideal_norm(I) -> Fraction:
    I = _as_fractional(I)
    return Fraction(I.lattice.norm(), I.den ** I.order.degree)


def ideal_pow(I, k: int) -> FractionalIdeal:
    I = _as_fractional(I)
    if k < 0:
        return ideal_pow(ideal_inverse(I), -k)
    result, base = unit_ideal(I.order), I
    while k:
        if k & 1:
            result = ideal_mul(result, base)
        k >>= 1
        if k:
            base = ideal_mul(base, base)
    return result


def ideal_conjugate(I) -> FractionalIdeal:
    I = _as_fractional(I)
    if I.order.is_rational:
        return I
    return from_vectors(I.order, [g.conjugate().coords for g in I.generators()])


def integral_part(I) -> FractionalIdeal:
    """``I ∩ R``."""
    I = _as_fractional(I)
    return ideal_intersect(I, unit_ideal(I.order))
