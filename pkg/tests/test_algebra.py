from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hvkit.algebra import (
    HV,
    AlgebraElement,
    C,
    C_D,
    C_I,
    Generator,
    PolynomialCoefficients,
    QuotientCoefficients,
    bracket,
    d,
    element,
    gen_elt,
    grade_split,
    hv_structure,
    I,
    jacobi_antisymmetry_sweep,
    jacobi_check,
    parse_element,
    project_element,
    render_element,
    sweep_terms,
    zero_element,
)
from hvkit.errors import ConfigurationError, DimensionMismatchError, ParseError
from hvkit.polys import JetQuotient
from hvkit.scalars import IMAG, ONE, ZERO, Scalar

P1 = PolynomialCoefficients(1)
P2 = PolynomialCoefficients(2)

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
scalars = st.builds(Scalar, rationals)
indices = st.integers(min_value=-4, max_value=4)
monos2 = st.tuples(st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2))


@st.composite
def elements2(draw, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        kind = draw(st.sampled_from(["d", "I", "C", "CD", "CI"]))
        idx = draw(indices) if kind in ("d", "I") else 0
        terms[(Generator(kind, idx), draw(monos2))] = draw(scalars)
    return AlgebraElement(P2, terms)


# -- frozen bracket values ---------------------------------------------------


def test_bracket_d_d_with_cocycle():
    assert bracket(gen_elt(HV, d(2)), gen_elt(HV, d(-2))) == element(
        HV, {(d(0), ()): -4, (C, ()): Fraction(1, 2)}
    )


def test_bracket_d_I_with_central_term():
    assert bracket(gen_elt(HV, d(2)), gen_elt(HV, I(-2))) == element(
        HV, {(I(0), ()): -2, (C_D, ()): 6}
    )


def test_bracket_I_I():
    assert bracket(gen_elt(HV, I(2)), gen_elt(HV, I(-2))) == element(HV, {(C_I, ()): 2})
    assert bracket(gen_elt(HV, I(3)), gen_elt(HV, I(2))).is_zero


def test_bracket_monomials_multiply():
    x = gen_elt(P2, d(1), (1, 0))
    y = gen_elt(P2, I(1), (0, 1))
    assert bracket(x, y) == element(P2, {(I(2), (1, 1)): 1})


def test_bracket_witt_relation():
    for n in range(-3, 4):
        for m in range(-3, 4):
            got = bracket(gen_elt(HV, d(n)), gen_elt(HV, d(m)))
            expect = {}
            if n != m:
                expect[(d(n + m), ())] = Scalar(m - n)
            if n == -m:
                c = Fraction(n**3 - n, 12)
                if c:
                    expect[(C, ())] = Scalar(c)
            assert got == element(HV, expect)


# -- structural laws ---------------------------------------------------------


@given(elements2(), elements2())
def test_antisymmetry(x, y):
    assert (bracket(x, y) + bracket(y, x)).is_zero


@given(elements2())
def test_self_bracket_vanishes(x):
    assert bracket(x, x).is_zero


@given(elements2(), elements2(), elements2())
def test_bilinearity(x, y, z):
    assert bracket(x + y, z) == bracket(x, z) + bracket(y, z)
    assert bracket(x, y + z) == bracket(x, y) + bracket(x, z)


def test_jacobi_frozen_triples():
    assert jacobi_check(gen_elt(HV, d(1)), gen_elt(HV, d(2)), gen_elt(HV, d(3))).is_zero
    assert jacobi_check(gen_elt(HV, d(2)), gen_elt(HV, d(-2)), gen_elt(HV, I(1))).is_zero
    assert jacobi_check(
        gen_elt(P2, d(1), (1, 0)), gen_elt(P2, I(2), (0, 1)), gen_elt(P2, d(-3), (1, 0))
    ).is_zero


@given(elements2(max_terms=2), elements2(max_terms=2), elements2(max_terms=2))
def test_jacobi_random(x, y, z):
    assert jacobi_check(x, y, z).is_zero


def test_grading_of_brackets():
    for n in range(-4, 5):
        for m in range(-4, 5):
            got = bracket(gen_elt(HV, d(n)), gen_elt(HV, I(m)))
            deg = got.degree()
            assert deg is None or got.is_zero or deg == n + m
            # central terms only ever occur at degree zero
            for (g, _key), _c in got.terms.items():
                if g.is_central_kind:
                    assert n + m == 0


def test_centrality():
    candidates = [gen_elt(P1, C, (2,)), gen_elt(P1, C_D, (0,)), gen_elt(P1, C_I, (1,))]
    others = [gen_elt(P1, d(n), (1,)) for n in range(-3, 4)]
    others += [gen_elt(P1, I(n), (0,)) for n in range(-3, 4)]
    for z in candidates:
        for x in others:
            assert bracket(z, x).is_zero
            assert bracket(x, z).is_zero
    # I_0 (x) b brackets to zero against every d_n (x) c
    i0b = gen_elt(P1, I(0), (1,))
    for n in range(-4, 5):
        assert bracket(i0b, gen_elt(P1, d(n), (2,))).is_zero


def test_grade_split():
    x = element(P1, {(d(3), (1,)): 1, (I(0), (0,)): 1, (d(-1), (0,)): 1})
    neg, zero, pos = grade_split(x)
    assert neg == element(P1, {(d(-1), (0,)): 1})
    assert zero == element(P1, {(I(0), (0,)): 1})
    assert pos == element(P1, {(d(3), (1,)): 1})
    assert neg + zero + pos == x
    neg, zero, pos = grade_split(gen_elt(HV, C_D))
    assert neg.is_zero and pos.is_zero and zero == gen_elt(HV, C_D)
    neg, zero, pos = grade_split(zero_element(HV))
    assert neg.is_zero and zero.is_zero and pos.is_zero


@given(elements2())
def test_grade_split_recombines(x):
    neg, zero, pos = grade_split(x)
    assert neg + zero + pos == x


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        bracket(gen_elt(P1, d(1), (0,)), gen_elt(P2, d(1), (0, 0)))


# -- quotient algebras -------------------------------------------------------


def test_quotient_requires_distinct_points():
    q = JetQuotient((ZERO,), 1)
    with pytest.raises(ConfigurationError):
        QuotientCoefficients((q, JetQuotient((ZERO,), 2)))


def test_projection_is_lie_map():
    quot = QuotientCoefficients((JetQuotient((ZERO,), 2), JetQuotient((ONE,), 1)))
    xs = [gen_elt(P1, d(2), (1,)), gen_elt(P1, I(-1), (2,)), gen_elt(P1, d(0), (0,))]
    for x in xs:
        for y in xs:
            lhs = project_element(bracket(x, y), quot)
            rhs = bracket(project_element(x, quot), project_element(y, quot))
            assert lhs == rhs


def test_projection_order_one_collapses_to_scalars():
    quot = QuotientCoefficients((JetQuotient((Scalar(3),), 1),))
    img = project_element(gen_elt(P1, d(2), (2,)), quot)  # b1^2 evaluates to 9
    assert img == AlgebraElement(quot, {(d(2), (0, (0,))): Scalar(9)})


def test_projection_two_points_componentwise():
    quot = QuotientCoefficients((JetQuotient((ZERO,), 1), JetQuotient((ONE,), 1)))
    img = project_element(gen_elt(P1, d(0), (1,)), quot)
    # b1 vanishes at the first point and is 1 at the second
    assert img == AlgebraElement(quot, {(d(0), (1, (0,))): ONE})


def test_quotient_bracket_antisymmetry_survives():
    quot = QuotientCoefficients((JetQuotient((ZERO,), 2),))
    x = AlgebraElement(quot, {(d(1), (0, (1,))): ONE})
    assert bracket(x, x).is_zero


# -- sweep -------------------------------------------------------------------


def test_sweep_clean_small():
    report = jacobi_antisymmetry_sweep(3, 1, 1)
    assert report.clean
    nterms = len(sweep_terms(3, 1, 1))
    assert report.triples_checked == nterms**3
    assert report.pairs_checked == nterms * (nterms + 1) // 2


def corrupt_cocycle(k1, n1, k2, n2):
    """Quadratic instead of cubic central growth: not a cocycle."""
    out = hv_structure(k1, n1, k2, n2)
    if k1 == "d" and k2 == "d" and n1 == -n2:
        out = tuple(t for t in out if t[0] != "C")
        c = Fraction(n1**2 - n1, 12)
        if c:
            out += (("C", 0, c),)
    return out


def corrupt_drop_cd(k1, n1, k2, n2):
    """C_D missing from the (d, I) branch only; the mirrored branch keeps it."""
    out = hv_structure(k1, n1, k2, n2)
    if k1 == "d" and k2 == "I":
        out = tuple(t for t in out if t[0] != "CD")
    return out


def test_sweep_catches_corrupted_cocycle():
    report = jacobi_antisymmetry_sweep(3, 0, 0, structure=corrupt_cocycle)
    assert report.jacobi_violations


def test_sweep_catches_dropped_central_term():
    report = jacobi_antisymmetry_sweep(3, 0, 0, structure=corrupt_drop_cd)
    assert report.jacobi_violations or report.antisymmetry_violations


# -- rendering / parsing -----------------------------------------------------


def test_render_examples():
    x = element(HV, {(d(0), ()): -4, (C, ()): Fraction(1, 2)})
    assert render_element(x) == "-4*d(0) + 1/2*C"
    y = element(P2, {(I(2), (1, 1)): 1})
    assert render_element(y) == "I(2)⊗b[1,1]"
    assert render_element(zero_element(HV)) == "0"


@given(elements2())
def test_render_parse_round_trip(x):
    assert parse_element(render_element(x), P2) == x


def test_parse_gaussian_coefficient():
    x = element(HV, {(d(1), ()): Scalar(1, 1), (C_D, ()): -IMAG})
    assert parse_element(render_element(x), HV) == x


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_element("q(3)", HV)
    with pytest.raises(ParseError):
        parse_element("d(x)", HV)
