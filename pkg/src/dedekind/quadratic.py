"""Exact arithmetic in the integers and in quadratic orders.

Every element is stored by its rational coordinates ``x + y*w`` against the
basis ``1, w`` of a fixed order.  The order is ``Z[w]`` where ``w`` satisfies
``w**2 = t*w - n`` with integers ``t`` (trace) and ``n`` (norm).  The ring of
rational integers is modelled as the degree-one order with ``d == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from sympy import factorint

from .errors import DomainError, OrderMismatchError

Rat = Fraction

SQRT_D = "sqrt_d"
HALF_TRACE = "half_trace"


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(a, b) > 0`` and ``u*a + v*b == g``."""
    if a == 0 and b == 0:
        raise DomainError("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _is_squarefree(d: int) -> bool:
    return all(e == 1 for e in factorint(abs(d)).values())


@dataclass(frozen=True)
class OrderSpec:
    """The order ``Z + conductor * O_K`` of ``K = Q(sqrt(d))``.

    ``d == 1`` stands for the rational integers.  ``conductor`` is the true
    index of the order in the maximal order.  When ``d % 4 == 1`` and the
    conductor is even the generator is ``(conductor/2)*sqrt(d)``, so
    ``OrderSpec(-3, 2)`` is ``Z[sqrt(-3)]``.
    """

    d: int
    conductor: int = 1
    omega_convention: str = field(init=False, compare=False)
    trace_w: int = field(init=False, compare=False, repr=False)
    norm_w: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        d, f = self.d, self.conductor
        if f < 1:
            raise DomainError("conductor must be a positive integer")
        if d == 1:
            if f != 1:
                raise DomainError("the rational integers have conductor 1")
            conv, t, n = SQRT_D, 0, 0
        else:
            if d == 0 or not _is_squarefree(d):
                raise DomainError(f"d={d} is not a squarefree integer other than 0, 1")
            if d % 4 == 1 and f % 2 == 1:
                conv, t, n = HALF_TRACE, f, f * f * (1 - d) // 4
            elif d % 4 == 1:
                conv, t, n = SQRT_D, 0, -(f // 2) ** 2 * d
            else:
                conv, t, n = SQRT_D, 0, -f * f * d
        object.__setattr__(self, "omega_convention", conv)
        object.__setattr__(self, "trace_w", t)
        object.__setattr__(self, "norm_w", n)

    @classmethod
    def integers(cls) -> "OrderSpec":
        return cls(1)

    @property
    def degree(self) -> int:
        return 1 if self.d == 1 else 2

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    @property
    def is_maximal(self) -> bool:
        return self.conductor == 1

    @property
    def is_imaginary(self) -> bool:
        return self.d < 0

    @property
    def discriminant(self) -> int:
        if self.is_rational:
            return 1
        return self.trace_w ** 2 - 4 * self.norm_w

    @property
    def field_discriminant(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    # convenient element constructors
    def element(self, x=0, y=0) -> "Element":
        return Element(Fraction(x), Fraction(y), self)

    @property
    def one(self) -> "Element":
        return self.element(1)

    @property
    def zero(self) -> "Element":
        return self.element(0)

    @property
    def omega(self) -> "Element":
        if self.is_rational:
            raise DomainError("the rational integers have no quadratic generator")
        return self.element(0, 1)

    def describe(self) -> str:
        if self.is_rational:
            return "Z"
        w = "sqrt(%d)" % self.d
        if self.omega_convention == HALF_TRACE:
            w = "(1+%s)/2" % w
        scale = self.conductor if self.omega_convention == HALF_TRACE else (
            self.conductor // 2 if self.d % 4 == 1 else self.conductor)
        if scale != 1:
            w = f"{scale}*{w}"
        return f"Z[w], w = {w}"

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "conductor": self.conductor,
            "omega": self.omega_convention if not self.is_rational else None,
            "discriminant": self.discriminant,
        }


def _coerce(value, order: OrderSpec) -> "Element":
    if isinstance(value, Element):
        if value.order != order:
            raise OrderMismatchError("elements belong to different orders")
        return value
    if isinstance(value, (int, Fraction)):
        return Element(Fraction(value), Fraction(0), order)
    return NotImplemented


@dataclass(frozen=True)
class Element:
    """An exact element ``x + y*w`` of the fraction field of ``order``."""

    x: Fraction
    y: Fraction
    order: OrderSpec

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", Fraction(self.x))
        if not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", Fraction(self.y))
        if self.order.is_rational and self.y:
            raise DomainError("rational elements have no w-coordinate")

    @property
    def coords(self) -> tuple:
        if self.order.is_rational:
            return (self.x,)
        return (self.x, self.y)

    @classmethod
    def from_coords(cls, coords: Sequence, order: OrderSpec) -> "Element":
        if order.is_rational:
            return cls(Fraction(coords[0]), Fraction(0), order)
        return cls(Fraction(coords[0]), Fraction(coords[1]), order)

    def __bool__(self):
        return bool(self.x) or bool(self.y)

    def __add__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return Element(self.x + other.x, self.y + other.y, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Element(-self.x, -self.y, self.order)

    def __sub__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return Element(self.x - other.x, self.y - other.y, self.order)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        t, n = self.order.trace_w, self.order.norm_w
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        yy = y1 * y2
        return Element(x1 * x2 - n * yy, x1 * y2 + x2 * y1 + t * yy, self.order)

    __rmul__ = __mul__

    def inverse(self) -> "Element":
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("zero element has no inverse")
        if self.order.is_rational:
            return Element(1 / self.x, Fraction(0), self.order)
        c = self.conjugate()
        return Element(c.x / nm, c.y / nm, self.order)

    def __truediv__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.order.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Element":
        # conj(w) = t - w
        return Element(self.x + self.y * self.order.trace_w, -self.y, self.order)

    def norm(self) -> Fraction:
        if self.order.is_rational:
            return self.x
        t, n = self.order.trace_w, self.order.norm_w
        return self.x * self.x + t * self.x * self.y + n * self.y * self.y

    def trace(self) -> Fraction:
        if self.order.is_rational:
            return self.x
        return 2 * self.x + self.order.trace_w * self.y

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def denominator(self) -> int:
        return lcm(self.x.denominator, self.y.denominator)

    def __str__(self):
        return format_element(self)


def format_element(a: Element) -> str:
    """Canonical text form, ``x+yw`` for quadratic orders and ``x`` for Z."""
    if a.order.is_rational:
        return str(a.x)
    sign = "-" if a.y < 0 else "+"
    return f"{a.x}{sign}{abs(a.y)}w"


def norm(a: Element) -> Fraction:
    return a.norm()


def trace(a: Element) -> Fraction:
    return a.trace()


def conjugate(a: Element) -> Element:
    return a.conjugate()


def is_integral(a: Element) -> bool:
    return a.is_integral()


def elem_mul(a: Element, b: Element) -> Element:
    return a * b


class Poly:
    """Dense polynomial over the fraction field of an order, low degree first."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: OrderSpec):
        cs = [_coerce(c, order) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.order = order

    def __repr__(self):
        return f"Poly([{', '.join(map(str, self.coeffs))}])"

    def __eq__(self, other):
        return isinstance(other, Poly) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _check(self, other: "Poly"):
        if other.order != self.order:
            raise OrderMismatchError("polynomials over different orders")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.order.zero
        a = self.coeffs + (zero,) * (n - len(self.coeffs))
        b = other.coeffs + (zero,) * (n - len(other.coeffs))
        return Poly([u + v for u, v in zip(a, b)], self.order)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _coerce(other, self.order)
            return Poly([c * a for a in self.coeffs], self.order)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly([], self.order)
        out = [self.order.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.order)

    __rmul__ = __mul__

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.order.one

    def __call__(self, value: Element) -> Element:
        acc = self.order.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

