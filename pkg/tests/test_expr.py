from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind import ParseError, evaluate, evaluate_element, ideal_inverse, parse, principal
from dedekind.errors import DomainError
from dedekind.expr import Call, IBin, IdealLit, IPow, tokenize
from dedekind.quadratic import format_element

from strategies import ALL, K5, S3, Z, elements, ideals


def test_parse_shapes():
    node = parse("<3, 1+2w> * <3, 1-2w>")
    assert isinstance(node, IBin) and node.op == "*"
    assert isinstance(node.left, IdealLit) and len(node.left.gens) == 2
    node = parse("inv(<2, 1+w>)^2")
    assert isinstance(node, IPow) and node.k == 2 and isinstance(node.base, Call)


def test_precedence():
    # + is loosest, then &, then *, then ^
    assert evaluate("<2> + <3> * <5>", Z) == principal(Z.element(1))
    assert evaluate("<2> & <3> + <5>", Z) == principal(Z.element(1))
    assert evaluate("<2> & (<3> + <5>)", Z) == principal(Z.element(2))
    assert evaluate("<2> * <3>^2", Z) == principal(Z.element(18))
    assert evaluate("<4> & <6> * <5>", Z) == principal(Z.element(60))


def test_eval_examples():
    assert str(evaluate("<3,1+2w> * <3,1-2w>", K5)) == "[3, 0+3w] den 1"
    assert evaluate("<6> + <4>", Z) == principal(Z.element(2))
    assert evaluate("inv(<5>)", K5) == principal(K5.element(Fraction(1, 5)))
    assert evaluate("<2, 1+w>^-1", K5) == ideal_inverse(evaluate("<2, 1+w>", K5))
    assert evaluate("gcd(<4>, <6>)", Z) == evaluate("<2>", Z)
    assert evaluate("lcm(<4>, <6>)", Z) == evaluate("<12>", Z)
    assert evaluate("conj(<3, 1+w>)", K5) == evaluate("<3, 1-w>", K5)
    assert evaluate("[3, 2+1w] den 2", K5) == evaluate("<3/2, (2+w)/2>", K5)
    assert evaluate("[4] den 3", Z) == evaluate("<4/3>", Z)


def test_element_grammar():
    w = K5.omega
    assert evaluate_element("2w", K5) == 2 * w
    assert evaluate_element("3(1+w)", K5) == 3 + 3 * w
    assert evaluate_element("-(1-w)^2/4", K5) == -(1 - w) ** 2 / 4
    assert evaluate_element("w^-1", K5) == w.inverse()
    assert evaluate_element("1 - 2 - 3", K5) == K5.element(-4)
    assert evaluate_element("12/8/3", K5) == K5.element(Fraction(1, 2))


@pytest.mark.parametrize("text, offset", [
    ("<>", 1),
    ("<2> $", 4),
    ("<2, 3", 5),
    ("<2> + ", 6),
    ("foo(<2>)", 0),
    ("gcd(<2>)", 0),
    ("<2> <3>", 4),
    ("[3, 1+w] den 1", 6),
    ("<é>", 1),
    ("<2> + é", 6),
    ("<ω, 2> + 1", 1),
])
def test_parse_errors_report_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        evaluate(text, K5)
    assert info.value.offset == offset
    assert str(info.value).startswith(f"parse error at byte {offset}: ")


def test_tokens_use_byte_offsets():
    # a no-break space is whitespace but two bytes wide
    toks = tokenize("<2,\u00a03>")
    assert [t.offset for t in toks] == [0, 1, 2, 5, 6, 7]


@pytest.mark.parametrize("text", ["<0>", "<1/0>", "<0>^-1", "[3, 0+1w] den 1", "[3] den 1", "[2, 0+2w] den 2"])
def test_domain_errors(text):
    with pytest.raises(DomainError):
        evaluate(text, K5)


def test_w_is_not_defined_over_z():
    with pytest.raises(DomainError):
        evaluate("<w>", Z)


@given(st.data())
def test_ideal_round_trip(data):
    R = data.draw(st.sampled_from(ALL))
    I = data.draw(ideals(R))
    assert evaluate(str(I), R) == I
    assert str(evaluate(str(I), R)) == str(I)


@given(st.data())
def test_element_round_trip(data):
    R = data.draw(st.sampled_from(ALL))
    x = data.draw(elements(R, bound=10**6, max_den=10**3))
    assert evaluate_element(format_element(x), R) == x


@given(st.text(alphabet="<>[](),+-*/^& w0123456789denivgcdlcmconj", max_size=20))
def test_parser_never_crashes(text):
    try:
        evaluate(text, S3)
    except (ParseError, DomainError, ZeroDivisionError):
        pass
