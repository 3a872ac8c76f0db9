"""Ideal classes modulo principal ideals for Z and imaginary quadratic orders.

The norm form is positive definite on these orders, so principality and
equivalence reduce to finding the shortest elements of a lattice.  Brute-force
enumeration of the elements of a given norm is kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .errors import DomainError, NoComplementError, UnsupportedError
from .ideals import (
    FractionalIdeal,
    IntegralIdeal,
    _as_fractional,
    _same_order,
    colon,
    ideal_conjugate,
    ideal_mul,
    is_ideal_lattice,
    is_invertible,
    principal,
    unit_ideal,
)
from .quadratic import Element, OrderSpec


def _require_supported(order: OrderSpec):
    if not order.is_rational and not order.is_imaginary:
        raise UnsupportedError(
            "principality is only decided for Z and imaginary quadratic orders")


def elements_of_norm(order: OrderSpec, n: int) -> list[Element]:
    """Every element of R with norm ``n`` (finite for imaginary orders)."""
    _require_supported(order)
    if n <= 0:
        return []
    if order.is_rational:
        return [order.element(n), order.element(-n)]
    t, D = order.trace_w, -order.discriminant
    out = []
    ymax = isqrt(4 * n // D)
    for y in range(-ymax, ymax + 1):
        rest = 4 * n - D * y * y
        if rest < 0:
            continue
        s = isqrt(rest)
        if s * s != rest:
            continue
        for u in {s, -s}:
            if (u - t * y) % 2 == 0:
                out.append(order.element((u - t * y) // 2, y))
    return out


def _element_key(g: Element):
    # deterministic choice among unit multiples: small |y|, then |x|, positive first
    return (abs(g.y), abs(g.x), g.x < 0, g.y < 0)


def _reduced_basis(gens: list[Element]) -> tuple[Element, Element]:
    """Lagrange-Gauss reduction of a rank-2 lattice under the norm form."""
    u, v = gens
    Q = lambda z: z.norm()
    B = lambda a, b: ((a + b).norm() - a.norm() - b.norm()) / 2
    if Q(v) < Q(u):
        u, v = v, u
    while True:
        m = round(B(u, v) / Q(u))
        v = v - u * m
        if Q(v) >= Q(u):
            return u, v
        u, v = v, u


def shortest_elements(I) -> list[Element]:
    """All nonzero elements of least norm in ``I`` (imaginary orders and Z)."""
    I = _as_fractional(I)
    _require_supported(I.order)
    gens = I.generators()
    if I.order.is_rational:
        return [gens[0], -gens[0]]
    u, v = _reduced_basis(gens)
    # in a reduced basis every shortest vector is among these
    cands = {u, v, u + v, u - v}
    cands |= {-z for z in cands}
    least = min(z.norm() for z in cands)
    return sorted((z for z in cands if z.norm() == least), key=_element_key)


def find_multiplier(I, J) -> Element | None:
    """Some ``g`` with ``g*J == I``, or ``None`` if I and J are not equivalent.

    Every ``g`` in ``(I : J)`` has ``N(g) >= N(I)/N(J)``, with equality exactly
    when ``g*J == I``; so it is enough to look at the shortest elements.
    """
    I, J = _as_fractional(I), _as_fractional(J)
    order = _same_order(I, J)
    _require_supported(order)
    best = shortest_elements(colon(I, J))
    g = best[0]
    if abs(g.norm()) != I.norm() / J.norm():
        return None
    return g


def is_principal(I) -> Element | None:
    """A generator of ``I``, or ``None`` when ``I`` is not principal."""
    I = _as_fractional(I)
    return find_multiplier(I, unit_ideal(I.order))


def equivalent(I, J) -> bool:
    """True when ``a*I == b*J`` for some nonzero a, b."""
    return find_multiplier(I, J) is not None


def ideals_of_norm(order: OrderSpec, n: int) -> list[FractionalIdeal]:
    """All integral ideals of index ``n``, sorted by HNF."""
    if n < 1:
        raise DomainError("norm must be positive")
    if order.is_rational:
        return [IntegralIdeal(n, 0, 1, order).as_fractional()]
    out = []
    for c in range(1, isqrt(n) + 1):
        if n % (c * c):
            continue
        a = n // c
        for b in range(0, a, c):
            if is_ideal_lattice(order, a, b, c):
                out.append(IntegralIdeal(a, b, c, order).as_fractional())
    return sorted(out, key=lambda I: I.hnf)


def integral_ideals(order: OrderSpec, bound: int) -> list[FractionalIdeal]:
    out = []
    for n in range(1, bound + 1):
        out.extend(ideals_of_norm(order, n))
    return out


@dataclass(frozen=True)
class IdealClass:
    representative: FractionalIdeal
    members: tuple = field(default=(), compare=False)

    @property
    def invertible(self) -> bool:
        return is_invertible(self.representative)

    def contains(self, I) -> bool:
        return equivalent(self.representative, I)

    def __str__(self):
        return str(self.representative)


def class_monoid(order: OrderSpec, norm_bound: int) -> list[IdealClass]:
    """Classes met by integral ideals of norm at most ``norm_bound``.

    Representatives have least norm, ties broken by the HNF triple.
    """
    _require_supported(order)
    if norm_bound < 1:
        raise DomainError("norm bound must be at least 1")
    reps: list[FractionalIdeal] = []
    members: list[list[FractionalIdeal]] = []
    for I in integral_ideals(order, norm_bound):
        for k, R in enumerate(reps):
            if equivalent(I, R):
                members[k].append(I)
                break
        else:
            reps.append(I)
            members.append([I])
    return [IdealClass(r, tuple(m)) for r, m in zip(reps, members)]


def class_table(classes: list[IdealClass]) -> list[list[int | None]]:
    """Index of the class of each pairwise product (``None`` if not discovered)."""
    table = []
    for A in classes:
        row = []
        for B in classes:
            prod = ideal_mul(A.representative, B.representative)
            row.append(next((k for k, C in enumerate(classes) if equivalent(prod, C.representative)),
                            None))
        table.append(row)
    return table


def principal_complement(I) -> FractionalIdeal:
    """An integral ``J`` with ``I*J`` principal: the conjugate of ``I``, or R over Z."""
    I = _as_fractional(I)
    _require_supported(I.order)
    if not I.is_integral():
        raise DomainError(f"{I} is not integral")
    if not is_invertible(I):
        raise NoComplementError(f"{I} is not invertible, so no product with it is principal")
    if I.order.is_rational:
        # Z is a PID; conjugation is trivial there
        return unit_ideal(I.order)
    J = ideal_conjugate(I)
    n = I.norm()
    if ideal_mul(I, J) != principal(I.order.element(n)):  # pragma: no cover
        raise ArithmeticError("I times its conjugate is not N(I)R")
    return J


def principal_complement_by_cycle(I, max_power: int = 1000) -> FractionalIdeal:
    """``I**(k-1)`` for the least ``k`` with ``I**k`` principal."""
    I = _as_fractional(I)
    _require_supported(I.order)
    if not is_invertible(I):
        raise NoComplementError(f"{I} is not invertible")
    prev, power = unit_ideal(I.order), I
    for _ in range(max_power):
        if is_principal(power) is not None:
            return prev
        prev, power = power, ideal_mul(power, I)
    raise DomainError(f"no principal power of {I} up to exponent {max_power}")  # pragma: no cover
