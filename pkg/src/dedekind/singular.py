"""Primary ideals, saturation and primary decomposition in possibly non-maximal orders."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, isprime

from .approximation import CongruenceSystem, crt_system
from .errors import DomainError
from .ideals import (
    FractionalIdeal,
    IntegralIdeal,
    _as_fractional,
    colon,
    ideal_mul,
    integral_part,
    is_ideal_lattice,
    is_invertible,
    is_subset,
    principal,
    unit_ideal,
)
from .primes import PrimeIdealData, primes_above
from .quadratic import OrderSpec


@dataclass(frozen=True)
class PrimaryComponent:
    prime: PrimeIdealData
    component: FractionalIdeal

    def __str__(self):
        return f"{self.prime.label()}: {self.component}"


@lru_cache(maxsize=None)
def _enumerated_primes(order: OrderSpec, p: int) -> tuple:
    # Index-p ideals are automatically maximal; pR is prime only if nothing of
    # index p sits above it.
    found = [IntegralIdeal(p, b, 1, order) for b in range(p) if is_ideal_lattice(order, p, b, 1)]
    if found:
        out = []
        for J in found:
            sing = not is_invertible(J)
            out.append(PrimeIdealData(p, J, 1, 2 if sing else 1, singular=sing))
        return tuple(out)
    J = IntegralIdeal(p, 0, p, order)
    return (PrimeIdealData(p, J, 2, 1, singular=not is_invertible(J)),)


def primes_over(order: OrderSpec, p: int) -> list[PrimeIdealData]:
    """All primes above ``p``, including singular ones above conductor primes."""
    if p < 2 or not isprime(p):
        raise DomainError(f"{p} is not a rational prime")
    if order.is_rational or order.conductor % p:
        return primes_above(order, p)
    return list(_enumerated_primes(order, p))


def singular_primes(order: OrderSpec) -> list[PrimeIdealData]:
    """The non-invertible primes; empty exactly for maximal orders."""
    if order.is_rational:
        return []
    out = []
    for p in sorted(factorint(order.conductor)):
        out.extend(P for P in primes_over(order, p) if P.singular)
    return out


def primes_containing(I) -> list[PrimeIdealData]:
    I = _as_fractional(I)
    if not I.is_integral():
        raise DomainError(f"{I} is not integral")
    out = []
    for p in sorted(factorint(I.lattice.norm())):
        out.extend(P for P in primes_over(I.order, p) if is_subset(I, P.ideal))
    return out


def is_primary(I) -> PrimeIdealData | None:
    """The unique prime containing ``I``, or ``None`` if there are several."""
    I = _as_fractional(I)
    if I.is_unit():
        raise DomainError("the unit ideal is not primary")
    ps = primes_containing(I)
    return ps[0] if len(ps) == 1 else None


def saturate(I, P: PrimeIdealData) -> FractionalIdeal:
    """The ``P``-primary component of ``I``: elements ``x`` of R with ``s*x`` in
    ``I`` for some ``s`` outside ``P``."""
    I = _as_fractional(I)
    if not I.is_integral() or not is_subset(I, P.ideal):
        raise DomainError(f"{P} does not contain {I}")
    others = [Q for Q in primes_containing(I) if Q != P]
    if not others:
        return I
    order = I.order
    sys = CongruenceSystem.of(order, [(Q.ideal, 0) for Q in others] + [(P.ideal, 1)])
    s = principal(crt_system(sys))
    J = I
    while True:
        nxt = integral_part(colon(J, s))
        if nxt == J:
            return J
        J = nxt


def primary_decomposition(I) -> list[PrimaryComponent]:
    """Primary components, one per prime containing ``I``; their product is ``I``."""
    I = _as_fractional(I)
    if not I.is_integral():
        raise DomainError(f"{I} is not integral")
    comps = [PrimaryComponent(P, saturate(I, P)) for P in primes_containing(I)]
    prod = unit_ideal(I.order)
    for c in comps:
        prod = ideal_mul(prod, c.component)
    if prod != I:  # pragma: no cover
        raise ArithmeticError("primary components do not multiply back")
    return comps
