from fractions import Fraction

from hypothesis import strategies as st

from dedekind import OrderSpec, ideal_mul, ideal_pow, principal, unit_ideal
from dedekind.singular import primes_over

Z = OrderSpec(1)
K5 = OrderSpec(-5)
K14 = OrderSpec(-14)
K23 = OrderSpec(-23)
Q2 = OrderSpec(2)
S3 = OrderSpec(-3, 2)  # Z[sqrt(-3)], the classic singular order

MAXIMAL = [Z, K5, K14, Q2, OrderSpec(-1), OrderSpec(-3), OrderSpec(5), OrderSpec(13)]
ALL = MAXIMAL + [S3, OrderSpec(-1, 3), OrderSpec(5, 2)]


def pool(order, rational_primes=(2, 3, 5, 7)):
    out = []
    for p in rational_primes:
        out.extend(primes_over(order, p))
    return out


def rationals(bound=50, max_den=12):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


@st.composite
def elements(draw, order, bound=50, max_den=1, nonzero=False):
    x = draw(st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den)))
    y = Fraction(0)
    if not order.is_rational:
        y = draw(st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den)))
    e = order.element(x, y)
    if nonzero and not e:
        e = order.one
    return e


@st.composite
def ideals(draw, order, integral=False, max_exp=3, bound=30, regular_only=False):
    """Prime-power product over a small pool times a principal ideal."""
    out = unit_ideal(order)
    for P in pool(order):
        if regular_only and P.singular:
            continue
        lo = 0 if (integral or P.singular) else -max_exp
        e = draw(st.integers(lo, max_exp))
        if e:
            out = ideal_mul(out, ideal_pow(P.as_ideal(), e))
    g = draw(elements(order, bound, nonzero=True))
    return ideal_mul(out, principal(g))
