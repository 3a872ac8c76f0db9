"""Chinese remainder theorem, approximation theorems and two-element generation."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from sympy import factorint

from . import lattice as lat
from .errors import DomainError, NotComaximalError
from .ideals import (
    FractionalIdeal,
    _as_fractional,
    ideal_add,
    ideal_from_generators,
    ideal_mul,
    ideal_pow,
    member,
    unit_ideal,
)
from .primes import (
    PrimeIdealData,
    element_valuation,
    factor_ideal,
    norm_primes,
    primes_above,
    uniformizer_at,
)
from .quadratic import Element, OrderSpec


@dataclass(frozen=True)
class CongruenceSystem:
    """Congruences ``x = residue mod modulus`` with pairwise comaximal moduli."""

    order: OrderSpec
    targets: tuple = ()  # ((modulus, residue), ...)

    @classmethod
    def of(cls, order: OrderSpec, pairs) -> "CongruenceSystem":
        out = []
        for I, r in pairs:
            I = _integral(I)
            if not isinstance(r, Element):
                r = order.element(r)
            out.append((I, r))
        return cls(order, tuple(out))

    def modulus(self) -> FractionalIdeal:
        out = unit_ideal(self.order)
        for I, _ in self.targets:
            out = ideal_mul(out, I)
        return out

    def satisfied_by(self, x: Element) -> bool:
        return all(member(x - r, I) for I, r in self.targets)


@dataclass(frozen=True)
class ApproximationSpec:
    """Constraints ``v_P(x - target) >= bound`` at distinct primes."""

    order: OrderSpec
    constraints: tuple = ()  # ((PrimeIdealData, Element, int), ...)

    @classmethod
    def of(cls, order: OrderSpec, triples) -> "ApproximationSpec":
        out = []
        for P, t, n in triples:
            if not isinstance(t, Element):
                t = order.element(t)
            out.append((P, t, int(n)))
        spec = cls(order, tuple(out))
        _distinct([P for P, _, _ in out])
        return spec

    def satisfied_by(self, x: Element) -> bool:
        for P, t, n in self.constraints:
            if element_valuation(x - t, P) < n:
                return False
        given = {P for P, _, _ in self.constraints}
        for Q in _primes_of_denominator(x):
            if Q not in given and element_valuation(x, Q) < 0:
                return False
        return True


def _integral(I) -> FractionalIdeal:
    I = _as_fractional(I)
    if not I.is_integral():
        raise DomainError(f"modulus {I} is not an integral ideal")
    return I


def _distinct(primes):
    seen = set()
    for P in primes:
        if P in seen:
            raise DomainError(f"prime {P} appears twice")
        seen.add(P)


def _primes_of_denominator(x: Element) -> list[PrimeIdealData]:
    out = []
    for p in factorint(x.denominator()):
        out.extend(primes_above(x.order, p))
    return out


def reduce_mod(x: Element, I) -> Element:
    """Canonical representative of ``x`` modulo the integral ideal ``I``.

    Coordinates land in the HNF fundamental domain: ``0 <= y < c`` and then
    ``0 <= x < a``.
    """
    I = _integral(I)
    if not x.is_integral():
        raise DomainError(f"{x} is not integral; residues live in R")
    rows = I.rows
    v = [int(u) for u in x.coords]
    for j in reversed(range(len(rows))):
        q = v[j] // rows[j][j]
        v = [u - q * r for u, r in zip(v, rows[j])]
    return Element.from_coords(v, x.order)


def _idempotents(I: FractionalIdeal, J: FractionalIdeal):
    """``(e1, e2)`` with ``e2 in I``, ``e1 in J`` and ``e1 + e2 == 1``."""
    rows_i = [list(r) for r in I.rows]
    rows_j = [list(r) for r in J.rows]
    dim = I.order.degree
    basis, coef = lat.hnf(rows_i + rows_j, dim, transform=True)
    if lat.index(basis) != 1:
        raise NotComaximalError(f"{I} and {J} are not comaximal", pair=(I, J))
    unit_row = coef[0]  # the pivot row for column 0 is (1, 0, ...)
    e2 = [sum(unit_row[k] * rows_i[k][m] for k in range(len(rows_i))) for m in range(dim)]
    e2 = Element.from_coords(e2, I.order)
    return I.order.one - e2, e2


def crt_pair(I, J, a, b) -> Element:
    """``x`` with ``x = a mod I`` and ``x = b mod J``, reduced mod ``I*J``."""
    I, J = _integral(I), _integral(J)
    order = I.order
    a = a if isinstance(a, Element) else order.element(a)
    b = b if isinstance(b, Element) else order.element(b)
    e1, e2 = _idempotents(I, J)
    return reduce_mod(a * e1 + b * e2, ideal_mul(I, J))


def crt_system(system: CongruenceSystem) -> Element:
    """Single solution of every congruence, reduced mod the product of moduli."""
    targets = system.targets
    for i in range(len(targets)):
        for j in range(i + 1, len(targets)):
            I, J = targets[i][0], targets[j][0]
            if not ideal_add(I, J).is_unit():
                raise NotComaximalError(
                    f"moduli {i} and {j} ({I} and {J}) are not comaximal", pair=(i, j))
    if not targets:
        return system.order.zero
    M, x = targets[0][0], reduce_mod(targets[0][1], targets[0][0])
    for J, r in targets[1:]:
        x = crt_pair(M, J, x, r)
        M = ideal_mul(M, J)
    return x


def approximate(spec: ApproximationSpec) -> Element:
    """An ``x`` meeting every valuation bound and integral at all other primes."""
    order = spec.order
    cons = spec.constraints
    _distinct([P for P, _, _ in cons])
    if not cons:
        return order.zero
    d = 1
    for _, t, _ in cons:
        d = lcm(d, t.denominator())
    dd = order.element(d)
    pairs = []
    given = set()
    for P, t, n in cons:
        given.add(P)
        k = max(n, 0) + element_valuation(dd, P)
        if k > 0:
            pairs.append((ideal_pow(P.as_ideal(), k), t * d))
    for p in factorint(d):
        for Q in primes_above(order, p):
            if Q not in given:
                pairs.append((ideal_pow(Q.as_ideal(), element_valuation(dd, Q)), order.zero))
    # no valuation lives at a singular prime; keep x a unit there instead
    for S in _singular_primes(order):
        pairs.append((S.as_ideal(), order.element(d)))
    x = crt_system(CongruenceSystem.of(order, pairs)) / d
    if not spec.satisfied_by(x):  # pragma: no cover - construction is exact
        raise ArithmeticError("approximation failed its own postcondition")
    return x


def approximate_exact(primes: Sequence[PrimeIdealData], exponents: Sequence[int],
                      order: OrderSpec | None = None) -> Element:
    """An ``x`` with ``v_P(x)`` equal to the given exponent at each listed prime
    and ``v_Q(x) >= 0`` at every other prime."""
    primes, exponents = list(primes), [int(e) for e in exponents]
    if len(primes) != len(exponents):
        raise DomainError("need one exponent per prime")
    _distinct(primes)
    if not primes:
        if order is None:
            raise DomainError("an empty constraint list needs an explicit order")
        return order.one
    order = primes[0].order
    cons = [(P, uniformizer_at(P) ** n, n + 1) for P, n in zip(primes, exponents)]
    x = approximate(ApproximationSpec.of(order, cons))
    for P, n in zip(primes, exponents):
        if element_valuation(x, P) != n:  # pragma: no cover
            raise ArithmeticError("exact approximation missed a valuation")
    return x


def _singular_primes(order: OrderSpec) -> list[PrimeIdealData]:
    from .singular import singular_primes  # the singular module builds on this one
    return singular_primes(order)


def _primes_dividing(x: Element) -> list[PrimeIdealData]:
    # conductor primes are skipped: approximate() keeps its output a unit there
    out = []
    for p in norm_primes(x):
        if x.order.conductor % p == 0:
            continue
        out.extend(P for P in primes_above(x.order, p) if element_valuation(x, P) != 0)
    return out


def two_generators(I) -> tuple[Element, Element]:
    """``(a, b)`` with ``<a, b> == I``.

    In a non-maximal order ``I`` must avoid the singular primes.
    """
    I = _integral(I)
    order = I.order
    F = factor_ideal(I)
    exps = F.as_dict()
    a = order.element(I.lattice.a)
    if any(element_valuation(a, P) != e for P, e in exps.items()):
        a = approximate_exact(list(exps), list(exps.values()), order)
    primes = list(exps)
    for Q in _primes_dividing(a):
        if Q not in exps:
            primes.append(Q)
    b = approximate_exact(primes, [exps.get(P, 0) for P in primes], order)
    b = reduce_mod(b, ideal_mul(I, ideal_from_generators([a])))
    if ideal_from_generators([a, b]) != I:  # pragma: no cover
        raise ArithmeticError("two-generator construction failed")
    return a, b
