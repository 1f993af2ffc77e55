from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hvkit.errors import ConfigurationError, DimensionMismatchError
from hvkit.polys import (
    JetQuotient,
    PolyB,
    PolyT,
    exponents_upto,
    jet_expand,
    jets_multiply,
    poly_eval,
    polyt_shift,
)
from hvkit.scalars import ONE, ZERO, Scalar

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)
scalars = st.builds(Scalar, rationals)

polyts = st.lists(scalars, max_size=5).map(PolyT)


def polybs(k, max_deg=3, max_terms=4):
    exps = st.tuples(*([st.integers(min_value=0, max_value=max_deg)] * k))
    return st.dictionaries(exps, scalars, max_size=max_terms).map(lambda t: PolyB(k, t))


# -- PolyT ------------------------------------------------------------------


@given(polyts, polyts, polyts)
def test_polyt_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


def test_polyt_degree_of_product_adds():
    f = PolyT((1, 2, 3))
    g = PolyT((0, 5))
    assert (f * g).degree == f.degree + g.degree


def test_shift_examples():
    t = PolyT.t_power(1)
    assert polyt_shift(t, 1) == PolyT((-1, 1))
    assert polyt_shift(PolyT((0, 0, 1)), -2) == PolyT((4, 4, 1))
    assert polyt_shift(t, 0) == t


def test_shift_composes_additively():
    f = PolyT((0, 1, 0, 1))  # t^3 + t
    lhs = polyt_shift(polyt_shift(f, 2), 3)
    rhs = polyt_shift(f, 5)
    assert lhs == rhs
    # independent oracle: values agree at interpolation points
    for x in range(-4, 5):
        assert lhs(Scalar(x)) == f(Scalar(x - 5))


@given(polyts, st.integers(min_value=-4, max_value=4))
def test_shift_matches_pointwise_evaluation(f, n):
    g = polyt_shift(f, n)
    assert g.degree == f.degree
    for x in range(-3, 4):
        assert g(Scalar(x)) == f(Scalar(x - n))


@given(polyts, polyts, st.integers(min_value=-3, max_value=3))
def test_shift_is_ring_automorphism(f, g, n):
    assert polyt_shift(f * g, n) == polyt_shift(f, n) * polyt_shift(g, n)
    assert polyt_shift(f + g, n) == polyt_shift(f, n) + polyt_shift(g, n)


# -- PolyB ------------------------------------------------------------------


@given(polybs(2), polybs(2), polybs(2))
def test_polyb_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


def test_polyb_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        PolyB.const(1, 1) + PolyB.const(2, 1)


def test_poly_eval_examples():
    p = PolyB(2, {(1, 2): 1})  # b1 * b2^2
    assert poly_eval(p, (Scalar(2), Scalar(3))) == Scalar(18)
    assert poly_eval(PolyB.const(2, 1), (Scalar(7), Scalar(-1))) == ONE
    mu = Scalar(Fraction(5, 3))
    p = PolyB.variable(1, 0) - PolyB.const(1, mu)
    assert poly_eval(p, (mu,)) == ZERO


@given(polybs(2), polybs(2))
def test_poly_eval_is_ring_map(p, q):
    point = (Scalar(2), Scalar(Fraction(-1, 2)))
    assert poly_eval(p * q, point) == poly_eval(p, point) * poly_eval(q, point)
    assert poly_eval(p + q, point) == poly_eval(p, point) + poly_eval(q, point)


def test_poly_eval_dimension_error():
    with pytest.raises(DimensionMismatchError):
        poly_eval(PolyB.const(2, 1), (Scalar(1),))


# -- jets -------------------------------------------------------------------


def _derivative(p: PolyB, var: int) -> PolyB:
    out = {}
    for exps, c in p.terms.items():
        if exps[var] == 0:
            continue
        e = list(exps)
        e[var] -= 1
        out[tuple(e)] = c * exps[var]
    return PolyB(p.k, out)


def _jet_by_derivatives(p: PolyB, q: JetQuotient):
    """Independent oracle: coefficient at r is (d^r p)(mu) / r!."""
    out = {}
    for r in exponents_upto(q.k, q.order - 1):
        dp = p
        for var, times in enumerate(r):
            for _ in range(times):
                dp = _derivative(dp, var)
        value = poly_eval(dp, q.point)
        for e in r:
            value = value / factorial(e)
        if not value.is_zero:
            out[r] = value
    return out


def test_jet_examples():
    q2 = JetQuotient((ZERO,), 2)
    b1 = PolyB.variable(1, 0)
    assert jet_expand(b1, q2) == {(1,): ONE}
    assert jet_expand(b1 * b1, q2) == {}
    q_at_1 = JetQuotient((ONE,), 2)
    assert jet_expand(b1 * b1, q_at_1) == {(0,): ONE, (1,): Scalar(2)}


@given(polybs(1), st.integers(min_value=1, max_value=3))
def test_jet_matches_derivative_oracle(p, order):
    q = JetQuotient((Scalar(Fraction(1, 2)),), order)
    assert jet_expand(p, q) == _jet_by_derivatives(p, q)


@given(polybs(2, max_deg=2, max_terms=3), polybs(2, max_deg=2, max_terms=3),
       st.integers(min_value=1, max_value=3))
def test_jet_expand_is_ring_map(p, q_poly, order):
    q = JetQuotient((Scalar(1), Scalar(-2)), order)
    lhs = jet_expand(p * q_poly, q)
    rhs = jets_multiply(q, jet_expand(p, q), jet_expand(q_poly, q))
    assert lhs == rhs


def test_jet_degree_zero_is_evaluation():
    p = PolyB(1, {(0,): 3, (1,): -2, (3,): 1})
    for order in (1, 2, 4):
        q = JetQuotient((Scalar(2),), order)
        jets = jet_expand(p, q)
        assert jets.get((0,), ZERO) == poly_eval(p, q.point)


def test_jet_quotient_dimension():
    assert JetQuotient((ZERO,), 3).dimension == 3
    assert JetQuotient((ZERO, ZERO), 2).dimension == 3  # 1, b1, b2 directions
    assert JetQuotient((ZERO, ZERO), 3).dimension == 6


def test_jet_quotient_validation():
    with pytest.raises(ConfigurationError):
        JetQuotient((ZERO,), 0)
    with pytest.raises(DimensionMismatchError):
        jet_expand(PolyB.const(2, 1), JetQuotient((ZERO,), 2))


def test_exponents_upto():
    assert exponents_upto(0, 3) == [()]
    assert exponents_upto(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert len(exponents_upto(2, 2)) == 6
