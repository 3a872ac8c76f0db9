from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind import DomainError, OrderSpec, Poly, conjugate, egcd, is_integral, norm, trace
from dedekind.errors import OrderMismatchError
from dedekind.quadratic import elem_mul, format_element

from strategies import ALL, K5, S3, Z, elements

orders = st.sampled_from(ALL)


def test_egcd_examples():
    g, u, v = egcd(4, 9)
    assert g == 1 and 4 * u + 9 * v == 1
    assert egcd(6, 0) == (6, 1, 0)
    g, u, v = egcd(-5, 5)
    assert g == 5 and -5 * u + 5 * v == 5
    with pytest.raises(DomainError):
        egcd(0, 0)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_egcd_bezout(a, b):
    if a == 0 and b == 0:
        return
    g, u, v = egcd(a, b)
    assert g > 0 and a % g == 0 and b % g == 0
    assert u * a + v * b == g


def test_multiplication_in_z_sqrt_minus_5():
    w = K5.omega
    assert elem_mul(1 + w, 1 - w) == K5.element(6)
    assert w * w == K5.element(-5)
    a = K5.element(3, -7)
    assert a * 1 == a


def test_norm_trace_conjugate():
    w = K5.omega
    assert norm(1 + 2 * w) == 21
    assert norm(K5.one) == 1
    assert conjugate(K5.element(3)) == K5.element(3)
    assert trace(1 + 2 * w) == 2


def test_integrality():
    w = K5.omega
    assert not is_integral((1 + w) / 2)
    assert is_integral(K5.element(7))
    assert is_integral(w)


def test_order_conventions():
    assert K5.discriminant == -20
    assert OrderSpec(-3).discriminant == -3
    # Z[sqrt(-3)] sits at index 2 in the Eisenstein integers
    assert S3.discriminant == -12 and S3.omega * S3.omega == S3.element(-3)
    assert OrderSpec(5).omega_convention == "half_trace"
    assert OrderSpec(-1, 3).discriminant == -36
    assert Z.degree == 1 and Z.describe() == "Z"
    for bad in [(4, 1), (0, 1), (-5, 0), (1, 2)]:
        with pytest.raises(DomainError):
            OrderSpec(*bad)
    with pytest.raises(DomainError):
        Z.omega


def test_mixed_orders_rejected():
    with pytest.raises(OrderMismatchError):
        K5.one + OrderSpec(-14).one
    with pytest.raises(OrderMismatchError):
        Poly([K5.one], K5) + Poly([OrderSpec(2).one], OrderSpec(2))


def test_formatting():
    assert format_element(K5.element(Fraction(1, 2), -3)) == "1/2-3w"
    assert format_element(K5.element(0, 0)) == "0+0w"
    assert str(Z.element(-4)) == "-4"


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        K5.zero.inverse()


@given(st.data())
def test_norm_multiplicative(data):
    R = data.draw(orders)
    a = data.draw(elements(R, max_den=6))
    b = data.draw(elements(R, max_den=6))
    assert norm(a * b) == norm(a) * norm(b)


@given(st.data())
def test_conjugation_is_an_involutive_automorphism(data):
    R = data.draw(orders)
    a = data.draw(elements(R, max_den=4))
    b = data.draw(elements(R, max_den=4))
    assert conjugate(conjugate(a)) == a
    assert conjugate(a * b) == conjugate(a) * conjugate(b)
    assert a * conjugate(a) == R.element(norm(a)) or R.is_rational


@given(st.data())
def test_integral_elements_satisfy_their_char_poly(data):
    R = data.draw(orders)
    a = data.draw(elements(R, bound=1000))
    t, n = trace(a), norm(a)
    assert t.denominator == 1 and n.denominator == 1
    if not R.is_rational:
        assert a * a - a * t + n == R.zero


@given(st.data())
def test_inverse(data):
    R = data.draw(orders)
    a = data.draw(elements(R, max_den=5, nonzero=True))
    assert a * a.inverse() == R.one
    assert a / a == R.one
    assert a ** -2 * a ** 2 == R.one


@given(st.integers(-500, 500), st.integers(1, 500), st.integers(1, 20))
def test_rationals_canonical(p, q, k):
    a = K5.element(Fraction(p * k, q * k), Fraction(-p * k, q * k))
    b = K5.element(Fraction(p, q), Fraction(-p, q))
    assert a == b and hash(a) == hash(b) and str(a) == str(b)


@given(st.data())
def test_polynomial_ring_laws(data):
    R = data.draw(orders)
    coeffs = st.lists(elements(R, bound=9), max_size=4)
    f, g, h = (Poly(data.draw(coeffs), R) for _ in range(3))
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f) == Poly([], R)
    x = data.draw(elements(R, bound=5))
    assert (f * g)(x) == f(x) * g(x)
