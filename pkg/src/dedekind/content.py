"""Content ideals of polynomials, Gauss's lemma and the induced valuation on K(X)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, UnsupportedError
from .ideals import FractionalIdeal, _as_fractional, _same_order, ideal_from_generators
from .primes import INF, PrimeIdealData, element_valuation
from .quadratic import Element, OrderSpec, Poly


def content(f: Poly) -> FractionalIdeal:
    """The fractional ideal generated by the coefficients of ``f``."""
    if not f:
        raise DomainError("the zero polynomial has no content")
    return ideal_from_generators([c for c in f.coeffs if c])


def poly_valuation(f: Poly, P: PrimeIdealData):
    """Minimum coefficient valuation; ``INF`` for the zero polynomial."""
    if not f:
        return INF
    return min(element_valuation(c, P) for c in f.coeffs if c)


@dataclass(frozen=True)
class RatFunc:
    """``num/den`` in K(X); kept unreduced since the valuation ignores the representative."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if not self.den:
            raise DomainError("zero denominator")
        if self.num.order != self.den.order:
            raise DomainError("numerator and denominator over different orders")

    @property
    def order(self) -> OrderSpec:
        return self.den.order

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def scale(self, c) -> "RatFunc":
        return RatFunc(self.num * c, self.den)


def ratfunc_valuation(h: RatFunc, P: PrimeIdealData):
    if not h.num:
        return INF
    return poly_valuation(h.num, P) - poly_valuation(h.den, P)


def basis_polynomial(gens) -> Poly:
    """``g0 + g1*X + ...`` from a generator list (or an ideal's canonical generators)."""
    if not isinstance(gens, (list, tuple)):
        gens = _as_fractional(gens).generators()
    gens = list(gens)
    if not gens:
        raise DomainError("empty generator list")
    return Poly(gens, gens[0].order)


def gauss_product(gens_i: Sequence[Element], gens_j: Sequence[Element]) -> Poly:
    """Product of the two basis polynomials; its coefficients generate ``I*J``."""
    return basis_polynomial(list(gens_i)) * basis_polynomial(list(gens_j))


def gauss_mul(I, J) -> FractionalIdeal:
    """``I*J`` computed as the content of a product of basis polynomials."""
    I, J = _as_fractional(I), _as_fractional(J)
    order = _same_order(I, J)
    if not order.is_maximal:
        raise UnsupportedError("content multiplicativity needs a Dedekind instance")
    return content(gauss_product(I.generators(), J.generators()))
