from hypothesis import given, strategies as st
import pytest

from expansive.cl_ring import CLRing
from expansive.monomial import (
    Order,
    compare,
    degree,
    divides,
    format_monomial,
    is_nonzero,
    lcm,
    monomials_of_degree,
    multiply,
    parse_monomial,
)

R = CLRing.parse("2,3,inf,inf")


def test_parse_and_format():
    m = parse_monomial(R, "x1*x2^2*x4")
    assert m == (1, 2, 0, 1)
    assert format_monomial(m) == "x1*x2^2*x4"
    assert parse_monomial(R, "1") == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        parse_monomial(R, "x")


def test_nonzero_respects_pure_powers():
    assert is_nonzero(R, (1, 2, 5, 0))
    assert not is_nonzero(R, (2, 0, 0, 0))
    assert not is_nonzero(R, (0, 3, 0, 0))
    assert multiply(R, (1, 0, 0, 0), (1, 0, 0, 0)) is None


def test_orders():
    # x1 > x2 in lex; opposite lex gives the last variable top priority
    assert compare((1, 0, 0), (0, 1, 0), Order.LEX) > 0
    assert compare((1, 0, 1), (0, 2, 0), Order.LEX) > 0
    assert compare((2, 0, 0), (0, 1, 1), Order.OPP) < 0
    assert compare((1, 0, 1), (0, 2, 0), Order.OPP) > 0


def test_monomials_of_degree_counts():
    P2 = CLRing.polynomial(3)
    assert [len(monomials_of_degree(P2, j)) for j in range(5)] == [1, 3, 6, 10, 15]
    r = CLRing.parse("2,2,inf")
    assert [len(monomials_of_degree(r, j)) for j in range(4)] == [1, 3, 4, 4]
    ms = monomials_of_degree(R, 3)
    assert all(degree(m) == 3 and is_nonzero(R, m) for m in ms)
    assert ms == sorted(ms, reverse=True)


exps = st.tuples(*[st.integers(0, 4)] * 4)


@given(exps, exps)
def test_lcm_divides(a, b):
    m = lcm(a, b)
    assert divides(a, m) and divides(b, m)
    assert degree(m) <= degree(a) + degree(b)


@given(exps, exps)
def test_lex_is_total(a, b):
    assert compare(a, b) == -compare(b, a)
    assert (compare(a, b) == 0) == (a == b)
