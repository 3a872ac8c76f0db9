from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind import (
    FractionalIdeal,
    ZeroIdealError,
    colon,
    ideal_conjugate,
    ideal_from_generators,
    ideal_inverse,
    ideal_mul,
    ideal_norm,
    ideal_pow,
    is_invertible,
    member,
    multiplier_ring,
    principal,
    unit_ideal,
)
from dedekind.errors import DomainError, OrderMismatchError
from dedekind.ideals import IntegralIdeal, is_subset, scale

from strategies import K5, K14, MAXIMAL, Q2, S3, Z, elements, ideals
from test_lattice import minors_gcd

w = K5.omega
R5 = unit_ideal(K5)


def coset_norm(I):
    """|R/I| for an integral ideal, by counting the residues of (Z/a)^2 that lie in I.

    Membership is decided by index: v is in a lattice L iff adding v keeps the index.
    """
    a = I.hnf[0]
    order = I.order
    gens = [g for g in I.generators()]
    vecs = [tuple(int(t) for t in g.coords) for g in gens]
    if order.is_rational:
        return a
    vecs += [tuple(int(t) for t in (g * order.omega).coords) for g in gens]
    vecs += [(a, 0), (0, a)]
    base = minors_gcd(vecs)
    inside = sum(1 for x in range(a) for y in range(a) if minors_gcd(vecs + [(x, y)]) == base)
    return a * a // inside


def test_generator_examples():
    assert ideal_from_generators([3, 1 + 2 * w]).hnf == (3, 2, 1)
    assert ideal_from_generators([K5.one]) == R5
    half = ideal_from_generators([K5.element(Fraction(1, 2))])
    assert half.hnf == (1, 0, 1) and half.den == 2
    with pytest.raises(ZeroIdealError):
        ideal_from_generators([K5.zero])
    with pytest.raises(ZeroIdealError):
        ideal_from_generators([])
    with pytest.raises(OrderMismatchError):
        ideal_from_generators([K5.one, K14.one])


def test_membership_examples():
    P2 = ideal_from_generators([2, 1 + w])
    assert member(1 + w, P2)
    assert not member(1, P2)
    assert member(0, P2)


def test_showcase_product_is_3R():
    A = ideal_from_generators([3, 1 + 2 * w])
    B = ideal_from_generators([3, 1 - 2 * w])
    assert ideal_mul(A, B) == principal(K5.element(3))
    assert str(ideal_mul(A, B)) == "[3, 0+3w] den 1"


def test_intersection_example():
    P2 = ideal_from_generators([2, 1 + w])
    two = principal(K5.element(2))
    assert (two & P2) == two


def test_inverse_examples():
    assert ideal_inverse(principal(K5.element(3))) == principal(K5.element(Fraction(1, 3)))
    assert ideal_inverse(R5) == R5
    m = ideal_from_generators([2, 1 + S3.omega])
    assert ideal_mul(m, ideal_inverse(m)) == m
    assert not is_invertible(m)
    assert is_invertible(principal(1 + 2 * w)) and is_invertible(R5)


def test_multiplier_ring_examples():
    P2 = ideal_from_generators([2, 1 + w])
    assert multiplier_ring(P2) == R5
    assert multiplier_ring(principal(3 - w)) == R5
    m = ideal_from_generators([2, 1 + S3.omega])
    O = multiplier_ring(m)
    assert O == scale(m, Fraction(1, 2))
    assert is_subset(unit_ideal(S3), O) and O != unit_ideal(S3)
    # O is the ring of Eisenstein integers: closed under products
    assert ideal_mul(O, O) == O


def test_norm_examples():
    assert ideal_norm(ideal_from_generators([2, 1 + w])) == 2
    assert ideal_norm(R5) == 1
    assert ideal_norm(principal(K5.element(3))) == 9
    assert ideal_norm(principal(K5.element(Fraction(1, 3)))) == Fraction(1, 9)
    assert ideal_norm(principal(Z.element(Fraction(-2, 3)))) == Fraction(2, 3)


@pytest.mark.parametrize("order", [K5, K14, S3])
def test_norm_matches_coset_count(order):
    for gens in [[2, 1 + order.omega], [3], [7, order.omega + 3], [5 + order.omega, 12]]:
        I = ideal_from_generators(gens, order)
        assert I.norm() == coset_norm(I)


def test_canonical_form_is_enforced():
    with pytest.raises(DomainError):
        IntegralIdeal(3, 3, 1, K5)
    with pytest.raises(DomainError):
        FractionalIdeal(IntegralIdeal(2, 0, 2, K5), 2)
    with pytest.raises(DomainError):
        FractionalIdeal(IntegralIdeal(4, 0, 1, Z), 2)


def test_conjugate():
    P3 = ideal_from_generators([3, 1 + w])
    P3c = ideal_from_generators([3, 1 - w])
    assert ideal_conjugate(P3) == P3c and P3 != P3c
    assert ideal_mul(P3, P3c) == principal(K5.element(3))


orders = st.sampled_from(MAXIMAL)


@given(st.data())
def test_monoid_laws(data):
    R = data.draw(orders)
    I, J, K = (data.draw(ideals(R)) for _ in range(3))
    assert (I * J) * K == I * (J * K)
    assert I * J == J * I
    assert I * unit_ideal(R) == I
    assert (I + J) + K == I + (J + K)
    assert I + J == J + I
    assert I * (J + K) == I * J + I * K


@given(st.data())
def test_monotonicity(data):
    R = data.draw(orders)
    I, J, K = (data.draw(ideals(R)) for _ in range(3))
    small = I & J
    assert small <= I
    assert small + K <= I + K
    assert small * K <= I * K
    assert small & K <= I & K


@given(st.data())
def test_inverse_laws_in_maximal_orders(data):
    R = data.draw(orders)
    I = data.draw(ideals(R))
    inv = ideal_inverse(I)
    assert I * inv == unit_ideal(R)
    assert multiplier_ring(I) == unit_ideal(R)
    assert ideal_pow(I, -2) == inv * inv
    assert colon(I, I) == unit_ideal(R)


@given(st.data())
def test_norm_is_multiplicative_on_invertibles(data):
    R = data.draw(orders)
    I, J = data.draw(ideals(R)), data.draw(ideals(R))
    assert ideal_norm(I * J) == ideal_norm(I) * ideal_norm(J)
    g = data.draw(elements(R, max_den=5, nonzero=True))
    assert ideal_norm(principal(g)) == abs(g.norm())


@given(st.data())
def test_singular_order_laws(data):
    I, J = data.draw(ideals(S3)), data.draw(ideals(S3))
    R = unit_ideal(S3)
    prod = I * ideal_inverse(I)
    assert prod <= R
    assert is_invertible(I) == (prod == R)
    # R(I) sits inside (I I^-1)^-1
    assert multiplier_ring(I) <= ideal_inverse(prod)
    assert I * (J + R) == I * J + I


@given(st.data())
def test_member_agrees_with_scaled_integrality(data):
    R = data.draw(st.sampled_from([K5, Q2, S3]))
    g = data.draw(elements(R, bound=20, nonzero=True))
    x = data.draw(elements(R, bound=60, max_den=3))
    I = principal(g)
    assert member(x, I) == (x / g).is_integral()
