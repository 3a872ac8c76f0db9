from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind import (
    INF,
    Poly,
    RatFunc,
    content,
    gauss_mul,
    gauss_product,
    ideal_from_generators,
    ideal_mul,
    poly_valuation,
    primes_above,
    principal,
    ratfunc_valuation,
    uniformizer_at,
    unit_ideal,
)
from dedekind.content import basis_polynomial
from dedekind.errors import DomainError, UnsupportedError

from strategies import K5, MAXIMAL, S3, Z, elements, ideals, pool

w = K5.omega
orders = st.sampled_from(MAXIMAL)


def zpoly(*cs):
    return Poly(cs, Z)


def polys(order, max_degree=5):
    return st.lists(elements(order, bound=30, max_den=6), min_size=1, max_size=max_degree + 1).map(
        lambda cs: Poly(cs, order)).filter(bool)


def test_showcase_basis_polynomials():
    f = Poly([1 + 2 * w, 3], K5)
    g = Poly([1 - 2 * w, 3], K5)
    assert content(f) == ideal_from_generators([3, 1 + 2 * w])
    fg = f * g
    assert fg.coeffs == (K5.element(21), K5.element(6), K5.element(9))
    assert content(fg) == principal(K5.element(3))
    assert gauss_mul(content(f), content(g)) == principal(K5.element(3))


def test_content_examples():
    a = K5.element(4, -2)
    assert content(Poly([a], K5)) == principal(a)
    assert content(zpoly(1, 6, 4)) == unit_ideal(Z)
    with pytest.raises(DomainError):
        content(Poly([], K5))


def test_poly_valuation_examples():
    (Q2,) = primes_above(Z, 2)
    assert poly_valuation(zpoly(1, 6, 4), Q2) == 0
    assert poly_valuation(zpoly(4, 2), Q2) == 1
    P3 = primes_above(K5, 3)[0]
    assert poly_valuation(Poly([1 + 2 * w, 3], K5), P3) == 0
    assert poly_valuation(Poly([], K5), P3) == INF


def test_ratfunc_valuation_examples():
    (Q2,) = primes_above(Z, 2)
    f = zpoly(3, 0, 5)
    assert ratfunc_valuation(RatFunc(f, f), Q2) == 0
    assert ratfunc_valuation(RatFunc(zpoly(4, 2), zpoly(1, 1)), Q2) == 1
    h = RatFunc(zpoly(Fraction(1, 3), 6), zpoly(8, 1))
    assert ratfunc_valuation(h.scale(2), Q2) == 1 + ratfunc_valuation(h, Q2)
    with pytest.raises(DomainError):
        RatFunc(f, zpoly())


def test_gauss_mul_identity():
    I = ideal_from_generators([7, 3 + w])
    assert gauss_mul(I, unit_ideal(K5)) == I
    assert basis_polynomial(I).coeffs == tuple(I.generators())


def test_gauss_fails_in_the_singular_order():
    m_gens = [S3.element(2), 1 + S3.omega]
    f, g = Poly(m_gens, S3), Poly([S3.element(2), 1 - S3.omega], S3)
    m = content(f)
    assert content(g) == m
    # content(fg) = 4R is strictly smaller than m^2 = 2m
    assert content(f * g) == principal(S3.element(4))
    assert content(f * g) < ideal_mul(m, m)
    with pytest.raises(UnsupportedError):
        gauss_mul(m, m)


@given(st.data())
def test_content_is_multiplicative(data):
    R = data.draw(orders)
    f, g = data.draw(polys(R)), data.draw(polys(R))
    assert content(f * g) == content(f) * content(g)


@given(st.data())
def test_valuation_of_products(data):
    R = data.draw(orders)
    f, g = data.draw(polys(R)), data.draw(polys(R))
    for P in pool(R):
        assert poly_valuation(f * g, P) == poly_valuation(f, P) + poly_valuation(g, P)


@given(st.data())
def test_ratfunc_valuation_is_well_defined(data):
    R = data.draw(orders)
    P = data.draw(st.sampled_from(pool(R)))
    f, g, k = (data.draw(polys(R, 3)) for _ in range(3))
    h = RatFunc(f, g)
    assert ratfunc_valuation(RatFunc(f * k, g * k), P) == ratfunc_valuation(h, P)
    assert ratfunc_valuation(h.scale(uniformizer_at(P)), P) == 1 + ratfunc_valuation(h, P)
    s = h + RatFunc(k, g)
    if s.num:
        assert ratfunc_valuation(s, P) >= min(ratfunc_valuation(h, P), ratfunc_valuation(RatFunc(k, g), P))


@given(st.data())
def test_integral_content_and_primitivity(data):
    R = data.draw(orders)
    f = data.draw(polys(R))
    integral = all(c.is_integral() for c in f.coeffs)
    assert content(f).is_integral() == integral
    cs = [c * c.denominator() for c in f.coeffs] + [R.one]
    assert content(Poly(cs, R)) == unit_ideal(R)


@given(st.data())
def test_content_of_sum(data):
    R = data.draw(orders)
    f, g = data.draw(polys(R)), data.draw(polys(R))
    if f + g:
        assert content(f + g) <= content(f) + content(g)


@given(st.data())
def test_gauss_mul_agrees_with_ideal_mul(data):
    R = data.draw(orders)
    I, J = data.draw(ideals(R)), data.draw(ideals(R))
    assert gauss_mul(I, J) == ideal_mul(I, J)
    assert content(gauss_product(I.generators(), J.generators())) == I * J
