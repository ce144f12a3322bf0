import pytest
from hypothesis import given
from hypothesis import strategies as st

from plactic.polynomials import MultiPoly, QPoly

qpolys = st.dictionaries(st.integers(0, 6), st.integers(-5, 5), max_size=5).map(QPoly)
multipolys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-4, 4), max_size=5
).map(lambda d: MultiPoly(2, d))


@given(qpolys, qpolys, qpolys)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QPoly()


@given(qpolys, st.integers(-3, 3))
def test_qpoly_evaluation_is_a_homomorphism(a, q):
    assert (a * a)(q) == a(q) ** 2
    assert a.shift(2)(q) == q**2 * a(q)


@given(qpolys)
def test_qpoly_json_round_trip(a):
    assert QPoly.from_json(a.to_json()) == a


def test_qpoly_formatting():
    p = QPoly({2: 1, 3: 1, 4: 1})
    assert str(p) == "q^2 + q^3 + q^4"
    assert p.to_json() == {"q": {"2": 1, "3": 1, "4": 1}}
    assert str(QPoly({0: 2, 1: 1})) == "2 + q"
    assert str(QPoly()) == "0"
    assert QPoly({0: 1}) == 1
    with pytest.raises(ValueError):
        QPoly({-1: 1})


@given(multipolys, multipolys, multipolys)
def test_multipoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(multipolys, st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_multipoly_evaluation(a, x):
    assert (a * a).evaluate(x) == a.evaluate(x) ** 2
    assert a.reversed_variables().evaluate(x[::-1]) == a.evaluate(x)
    assert a.permute_variables((2, 1)) == a.reversed_variables()


@given(multipolys)
def test_multipoly_json_round_trip(a):
    assert MultiPoly.from_json(a.to_json()) == a


def test_multipoly_formatting_and_checks():
    x1, x2 = MultiPoly.variable(2, 1), MultiPoly.variable(2, 2)
    p = x1 * x1 + x1 * x2 + x2 * x2
    assert str(p) == "x1^2 + x1*x2 + x2^2"
    assert p.to_json() == {
        "vars": 2,
        "terms": [{"exp": [0, 2], "coef": 1}, {"exp": [1, 1], "coef": 1}, {"exp": [2, 0], "coef": 1}],
    }
    assert str(MultiPoly(2)) == "0"
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        x1 + MultiPoly.one(3)
