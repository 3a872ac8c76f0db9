"""Prime ideals, valuations and unique factorization of fractional ideals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from sympy import factorint, isprime
from sympy.ntheory import sqrt_mod

from .errors import DomainError, SingularPrimeError
from .ideals import (
    FractionalIdeal,
    IntegralIdeal,
    _as_fractional,
    colon,
    ideal_add,
    ideal_intersect,
    ideal_inverse,
    ideal_mul,
    ideal_pow,
    integral_part,
    is_subset,
    member,
    unit_ideal,
)
from .quadratic import Element, OrderSpec

INF = math.inf


@dataclass(frozen=True)
class PrimeIdealData:
    p: int
    ideal: IntegralIdeal
    residue_degree: int
    ramification: int
    singular: bool = field(default=False)

    @property
    def order(self) -> OrderSpec:
        return self.ideal.order

    def as_ideal(self) -> FractionalIdeal:
        return self.ideal.as_fractional()

    def sort_key(self):
        return (self.p, self.ideal.a, self.ideal.b, self.ideal.c)

    def label(self) -> str:
        """``(p, b+cw)``, or ``(p)`` over Z."""
        if self.order.is_rational:
            return f"({self.p})"
        return f"({self.p}, {self.ideal.b}+{self.ideal.c}w)"

    def __str__(self):
        return self.label()


def _quadratic_roots_mod(t: int, n: int, p: int) -> list[int]:
    """Roots of X^2 - t*X + n modulo the prime p, sorted, with multiplicity."""
    if p == 2:
        roots = [r for r in range(2) if (r * r - t * r + n) % 2 == 0]
        if len(roots) == 1:
            # only possible when t is even: X^2 or (X+1)^2
            return roots * 2
        return roots
    disc = (t * t - 4 * n) % p
    half = pow(2, -1, p)
    if disc == 0:
        r = t * half % p
        return [r, r]
    if pow(disc, (p - 1) // 2, p) != 1:
        return []
    s = sqrt_mod(disc, p)
    return sorted({(t + s) * half % p, (t - s) * half % p})


def primes_above(order: OrderSpec, p: int) -> list[PrimeIdealData]:
    """The distinct primes above ``p``, from the minimal polynomial of w mod p."""
    if p < 2 or not isprime(p):
        raise DomainError(f"{p} is not a rational prime")
    if order.is_rational:
        return [PrimeIdealData(p, IntegralIdeal(p, 0, 1, order), 1, 1)]
    if order.conductor % p == 0:
        raise SingularPrimeError(
            f"{p} divides the conductor {order.conductor}; use primary_decomposition")
    roots = _quadratic_roots_mod(order.trace_w, order.norm_w, p)
    if not roots:
        return [PrimeIdealData(p, IntegralIdeal(p, 0, p, order), 2, 1)]
    if len(roots) == 2 and roots[0] == roots[1]:
        return [PrimeIdealData(p, IntegralIdeal(p, -roots[0] % p, 1, order), 1, 2)]
    out = [PrimeIdealData(p, IntegralIdeal(p, -r % p, 1, order), 1, 1) for r in roots]
    return sorted(out, key=PrimeIdealData.sort_key)


@lru_cache(maxsize=None)
def _anti_uniformizer(P: PrimeIdealData) -> Element:
    # an element of P^{-1} outside R has valuation -1 at P and >= 0 elsewhere
    for g in ideal_inverse(P.ideal).generators():
        if not g.is_integral():
            return g
    raise DomainError(f"{P} is not invertible")


def _v_p(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _check_prime(x_order: OrderSpec, P: PrimeIdealData):
    if x_order != P.order:
        raise DomainError("element and prime belong to different orders")
    if P.singular:
        raise SingularPrimeError(f"{P} is singular; no discrete valuation is attached to it")


def element_valuation(x: Element, P: PrimeIdealData):
    """``v_P(x)``; ``INF`` for ``x == 0``."""
    _check_prime(x.order, P)
    if not x:
        return INF
    m = x.denominator()
    alpha = x * m
    if P.order.is_rational:
        return _v_p(int(alpha.x), P.p) - _v_p(m, P.p)
    tau = _anti_uniformizer(P)
    k = 0
    while member(alpha, P.ideal):
        alpha = alpha * tau
        k += 1
    return k - P.ramification * _v_p(m, P.p)


def ideal_valuation(I, P: PrimeIdealData) -> int:
    """``v_P(I)`` as the minimum over the canonical generators of I."""
    I = _as_fractional(I)
    return min(element_valuation(g, P) for g in I.generators())


@dataclass(frozen=True)
class Factorization:
    order: OrderSpec
    factors: tuple  # ((PrimeIdealData, exponent), ...) sorted, exponents nonzero

    def __iter__(self) -> Iterator:
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def as_dict(self) -> dict:
        return dict(self.factors)

    def exponent(self, P: PrimeIdealData) -> int:
        return self.as_dict().get(P, 0)

    def product(self) -> FractionalIdeal:
        out = unit_ideal(self.order)
        for P, e in self.factors:
            out = ideal_mul(out, ideal_pow(P.as_ideal(), e))
        return out

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for P, e in self.factors:
            parts.append(P.label() if e == 1 else f"{P.label()}^{e}")
        return " * ".join(parts)


def make_factorization(order: OrderSpec, exps: dict) -> Factorization:
    items = sorted(((P, e) for P, e in exps.items() if e), key=lambda t: t[0].sort_key())
    return Factorization(order, tuple(items))


def rational_primes_of(I) -> list[int]:
    """Rational primes below any prime where ``v_P(I) != 0``."""
    I = _as_fractional(I)
    ps = set(factorint(I.lattice.norm())) | set(factorint(I.den))
    return sorted(ps)


def factor_ideal(I) -> Factorization:
    """Unique factorization of a fractional ideal into prime powers."""
    I = _as_fractional(I)
    exps = {}
    for p in rational_primes_of(I):
        for P in primes_above(I.order, p):
            exps[P] = ideal_valuation(I, P)
    return make_factorization(I.order, exps)


def divides(I, J) -> bool:
    """``I | J``, decided as containment ``J ⊆ I``."""
    return is_subset(J, I)


def has_cofactor(I, J) -> bool:
    """True iff ``J = I*X`` for some integral ideal X (valid in any order)."""
    X = integral_part(colon(J, I))
    return ideal_mul(I, X) == _as_fractional(J)


def ideal_gcd(I, J) -> FractionalIdeal:
    return ideal_add(I, J)


def ideal_lcm(I, J) -> FractionalIdeal:
    return ideal_intersect(I, J)


def uniformizer_at(P: PrimeIdealData) -> Element:
    """An element of ``P`` outside ``P^2``."""
    gens = P.ideal.generators()
    for g in gens + [sum(gens, P.order.zero)]:
        if element_valuation(g, P) == 1:
            return g
    raise DomainError(f"no uniformizer found for {P}")  # pragma: no cover


def valuation_vector(I, primes) -> dict:
    return {P: ideal_valuation(I, P) for P in primes}


def from_exponents(order: OrderSpec, exps: dict) -> FractionalIdeal:
    return make_factorization(order, exps).product()


def norm_primes(x: Element) -> list[int]:
    """Rational primes dividing the numerator or denominator of ``N(x)``."""
    nm = Fraction(x.norm())
    if not nm:
        return []
    return sorted(set(factorint(abs(nm.numerator))) | set(factorint(nm.denominator)))
