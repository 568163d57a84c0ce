import pytest
from fractions import Fraction

from hypothesis import given, settings
import hypothesis.strategies as st

from minorcert.ring import (
    ExactDivisionError,
    MultiPoly,
    exact_div,
    poly_eval,
    poly_is_zero,
    poly_mul,
    variables,
)
from minorcert.rng import SplitMix64, random_poly, substream


@st.composite
def polys(draw, nvars, max_terms=4, max_exp=3, coeff=9):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, max_exp)) for _ in range(nvars))
        terms[exps] = draw(st.integers(-coeff, coeff))
    return MultiPoly(nvars, terms)


def test_variable_square():
    b1, = variables(1)
    assert b1 * b1 == MultiPoly(1, {(2,): 1})


def test_difference_of_squares():
    b1, b2 = variables(2)
    assert (1 + b1) * (1 - b1) == 1 - b1 * b1
    assert poly_is_zero(poly_mul(b1 + b2, b1 - b2) - (b1 * b1 - b2 * b2))


def test_eval_examples():
    b1, b2 = variables(2)
    assert poly_eval(1 - b1 * b1, [1, 0]) == 0
    assert poly_eval(b1 + b2, [1, 2]) == 3
    assert poly_eval(b1 + b2, [Fraction(1, 2), Fraction(1, 3)]) == Fraction(5, 6)


def test_eval_length_mismatch():
    b1, _ = variables(2)
    with pytest.raises(ValueError):
        b1.evaluate([1])


def test_nvars_mismatch_is_usage_error():
    with pytest.raises(ValueError):
        variables(2)[0] * variables(3)[0]


def test_is_zero():
    assert MultiPoly.zero(3).is_zero
    assert not MultiPoly.var(3, 3).is_zero
    p = MultiPoly.var(1, 1)
    assert (p - p).is_zero


def test_canonical_text_and_parse_roundtrip():
    b1, b2 = variables(2)
    p = 3 * b1 * b1 * b2 - b2 + 5
    text = str(p)
    assert text == "3 * b1^2 b2 + -1 * b2 + 5"
    assert MultiPoly.parse(text, 2) == p
    assert str(MultiPoly.zero(2)) == "0"
    assert MultiPoly.parse("0", 2).is_zero


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        MultiPoly.parse("3 * c1", 2)
    with pytest.raises(ValueError):
        MultiPoly.parse("x + +", 2)
    with pytest.raises(ValueError):
        MultiPoly.parse("1 * b5", 2)


def test_exponent_overflow_detected():
    with pytest.raises(OverflowError):
        MultiPoly(1, {(40000,): 1})
    big = MultiPoly(1, {(30000,): 1})
    with pytest.raises(OverflowError):
        big * big


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_ring_axioms(data):
    nvars = data.draw(st.integers(1, 4))
    p = data.draw(polys(nvars))
    q = data.draw(polys(nvars))
    r = data.draw(polys(nvars))
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_eval_is_homomorphism(data):
    nvars = data.draw(st.integers(1, 3))
    p = data.draw(polys(nvars))
    q = data.draw(polys(nvars))
    r = data.draw(polys(nvars))
    point = [data.draw(st.integers(-5, 5)) for _ in range(nvars)]
    lhs = (p * q + r).evaluate(point)
    rhs = p.evaluate(point) * q.evaluate(point) + r.evaluate(point)
    assert lhs == rhs


def test_mul_matches_eval_oracle_on_random_assignments():
    # evaluation-homomorphism oracle: eval(p*q) == eval(p)*eval(q) at 20
    # random integer points, for random degree-<=2 polynomials in 3 vars
    stream = substream(2024, 0)
    for _ in range(10):
        p = random_poly(stream, 3, max_terms=4, max_exp=2, coeff_bound=5)
        q = random_poly(stream, 3, max_terms=4, max_exp=2, coeff_bound=5)
        prod = poly_mul(p, q)
        for _ in range(20):
            a = [stream.randint(-6, 6) for _ in range(3)]
            assert prod.evaluate(a) == p.evaluate(a) * q.evaluate(a)


def test_integral_domain_no_zero_divisors():
    stream = substream(99, 1)
    count = 0
    while count < 100:
        p = random_poly(stream, 3, max_terms=3, max_exp=2, coeff_bound=4)
        q = random_poly(stream, 3, max_terms=3, max_exp=2, coeff_bound=4)
        if p.is_zero or q.is_zero:
            continue
        count += 1
        assert not (p * q).is_zero


def test_exact_division_inverts_multiplication():
    stream = substream(5, 2)
    for _ in range(50):
        p = random_poly(stream, 3, max_terms=4, max_exp=2, coeff_bound=4)
        q = random_poly(stream, 3, max_terms=3, max_exp=2, coeff_bound=4)
        if q.is_zero:
            continue
        assert (p * q).exact_div(q) == p


def test_exact_division_failures():
    b1, b2 = variables(2)
    with pytest.raises(ExactDivisionError):
        b1.exact_div(b2)
    with pytest.raises(ExactDivisionError):
        (2 * b1 + 1).exact_div(MultiPoly.const(2, 2))
    with pytest.raises(ZeroDivisionError):
        b1.exact_div(MultiPoly.zero(2))


def test_generic_exact_div_dispatch():
    assert exact_div(12, 3) == 4
    assert exact_div(-12, 3) == -4
    with pytest.raises(ExactDivisionError):
        exact_div(7, 2)
    assert exact_div(Fraction(1, 2), 3) == Fraction(1, 6)
    assert exact_div(1.5, 0.5) == 3.0
    b1, _ = variables(2)
    assert exact_div(b1 * b1, b1) == b1


def test_rational_agrees_with_integer_arithmetic():
    stream = SplitMix64(17)
    for _ in range(50):
        a, b = stream.randint(-20, 20), stream.randint(-20, 20)
        assert Fraction(a) + Fraction(b) == a + b
        assert Fraction(a) * Fraction(b) == a * b
    f = Fraction(6, -4)
    assert f.denominator > 0 and f == Fraction(-3, 2)


def test_pow():
    b1, = variables(1)
    assert b1 ** 0 == 1
    assert (1 + b1) ** 2 == 1 + 2 * b1 + b1 * b1
