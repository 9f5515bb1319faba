"""Polynomial and truncated series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superweyl.errors import (
    ConstantTermNotOne,
    NegativeExponentAfterCollapse,
    NonIntegralExponent,
    RingMismatch,
)
from superweyl.series import (
    EMPTY_MONO,
    Poly,
    ZSeries,
    collapse,
    mono_degree,
    mono_from_pairs,
    mono_key,
    mono_mul,
    neg_log,
    theta,
    weight_monomial,
)

F = Fraction


def xvar(i, exp=1):
    return Poly.x_monomial(((i, exp),))


def test_mono_helpers():
    m = mono_from_pairs([(2, 1), (0, 2), (2, 1)])
    assert m == ((0, 2), (2, 2))
    assert mono_degree(m) == 4
    assert mono_mul(m, ((1, 3),)) == ((0, 2), (1, 3), (2, 2))
    assert mono_from_pairs([(0, 1), (0, -1)]) == EMPTY_MONO


def test_mono_key_orders_by_degree_then_exponents():
    a = ((0, 2), (1, 5))
    b = ((0, 5), (1, 3))
    c = ((0, 2),)
    assert mono_key(c, 2) < mono_key(a, 2)
    assert mono_key(a, 2) < mono_key(b, 2)


def test_poly_canonical_text_golden():
    p = (
        Poly.one()
        - xvar(0, 2)
        - xvar(1, 3)
        + xvar(0, 2) * xvar(1, 5)
        + xvar(0, 5) * xvar(1, 3)
        - xvar(0, 5) * xvar(1, 5)
    )
    names = {0: "a1", 1: "a2"}.__getitem__
    assert (
        p.to_text(2, names)
        == "1 - X[a1]^2 - X[a2]^3 + X[a1]^2*X[a2]^5 + X[a1]^5*X[a2]^3 - X[a1]^5*X[a2]^5"
    )


def test_poly_text_coefficients():
    p = Poly({EMPTY_MONO: F(-1), ((0, 1),): F(5, 2)})
    assert p.to_text() == "-1 + 5/2*X[x1]"
    assert Poly.zero().to_text() == "0"


def test_neg_log_of_one_minus_x():
    p = Poly.one() - xvar(0)
    out = neg_log(p, 3)
    expected = (
        xvar(0) + xvar(0, 2).scale(F(1, 2)) + xvar(0, 3).scale(F(1, 3))
    )
    assert out == expected


def test_neg_log_is_additive_on_products():
    p = Poly.one() - xvar(0)
    q = Poly.one() - xvar(1).scale(2) + xvar(0) * xvar(1)
    bound = 4
    lhs = neg_log((p * q).truncate_x(bound), bound)
    rhs = neg_log(p, bound) + neg_log(q, bound)
    assert lhs.truncate_x(bound) == rhs.truncate_x(bound)


def test_neg_log_requires_constant_one():
    with pytest.raises(ConstantTermNotOne):
        neg_log(xvar(0), 3)
    with pytest.raises(ConstantTermNotOne):
        neg_log(Poly.one().scale(2), 3)


def test_zseries_inverse():
    one_plus = ZSeries.one(3) + ZSeries.var(0, 3)
    inv = one_plus.inverse()
    expected = ZSeries(
        3,
        {
            EMPTY_MONO: F(1),
            ((0, 1),): F(-1),
            ((0, 2),): F(1),
            ((0, 3),): F(-1),
        },
    )
    assert inv == expected
    assert one_plus * inv == ZSeries.one(3)


def test_zseries_truncation():
    t2 = (ZSeries.one(2) + ZSeries.var(0, 2)) * (
        ZSeries.one(2) - ZSeries.var(0, 2) + ZSeries.var(0, 2) * ZSeries.var(0, 2)
    )
    assert t2 == ZSeries.one(2)


def test_zseries_inverse_needs_unit():
    with pytest.raises(ZeroDivisionError):
        ZSeries.var(0, 2).inverse()


def test_zseries_text():
    s = ZSeries.one(2) - ZSeries.var(0, 2) + ZSeries.var(0, 2) * ZSeries.var(0, 2)
    assert s.to_text() == "1 - Z[g1] + Z[g1]^2"


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ZSeries.one(2) + ZSeries.one(3)
    with pytest.raises(RingMismatch):
        Poly.one(2) + Poly.one()
    with pytest.raises(RingMismatch):
        Poly.one(2).to_text()


def test_theta_keeps_exact_support():
    p = xvar(0, 2) * xvar(1) + xvar(0, 3) + xvar(2)
    assert theta(p, {0, 1}) == xvar(0, 2) * xvar(1)
    assert theta(p, {0}) == xvar(0, 3)


def test_theta_on_empty_support_is_constant_term():
    p = Poly.one() + Poly.one() + xvar(0)
    assert theta(p, set()) == Poly.one() + Poly.one()
    assert theta(xvar(1), set()) == Poly({})


def test_collapse_substitutes_z_for_x():
    z = ZSeries.one(2) - ZSeries.var(0, 2)
    p = Poly({EMPTY_MONO: z}, ztrunc=2) + Poly({((0, 1),): ZSeries.var(1, 2)}, ztrunc=2)
    out = collapse(p, [((0, 1),), ((0, 1), (1, 1))])
    expected = Poly.one() - xvar(0) + xvar(0, 2) * xvar(1)
    assert out == expected


def test_collapse_rejects_negative_substitution():
    p = Poly({EMPTY_MONO: ZSeries.var(0, 2)}, ztrunc=2)
    with pytest.raises(NegativeExponentAfterCollapse):
        collapse(p, [((0, -1),)])


def test_weight_monomial():
    assert weight_monomial([F(2), F(0), F(1)]) == ((0, 2), (2, 1))
    with pytest.raises(NonIntegralExponent):
        weight_monomial([F(1, 2)])
    with pytest.raises(NegativeExponentAfterCollapse):
        weight_monomial([F(-1)])


def test_poly_structure_queries():
    p = xvar(0, 2) * xvar(1) + xvar(2)
    assert p.degree() == 3
    assert p.support_vars() == frozenset({0, 1, 2})
    assert p.truncate_x(1) == xvar(2)
    assert p.coefficient(((2, 1),)) == 1


coeffs = st.integers(min_value=-3, max_value=3)


def small_polys():
    mono = st.lists(
        st.tuples(st.integers(0, 1), st.integers(1, 2)), min_size=0, max_size=2
    ).map(mono_from_pairs)
    return st.dictionaries(mono, coeffs, max_size=4).map(
        lambda d: Poly({m: F(c) for m, c in d.items()})
    )


@given(small_polys(), small_polys(), small_polys())
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + Poly.zero() == a
    assert a * Poly.one() == a


@given(small_polys())
def test_neg_log_round_trip_leading_terms(p):
    """-log(1 + q) starts with -q modulo degree-2 terms."""
    q = p.truncate_x(3)
    poly = Poly.one() + Poly(
        {m: c for m, c in q.terms.items() if m != EMPTY_MONO}
    )
    out = neg_log(poly, 1)
    assert out.truncate_x(1) == -poly.truncate_x(1) + Poly.one()


def zmonos():
    return st.lists(
        st.tuples(st.integers(0, 1), st.integers(1, 2)), min_size=0, max_size=2
    ).map(mono_from_pairs)


@given(st.dictionaries(zmonos(), coeffs, max_size=4))
def test_zseries_inverse_round_trip(d):
    s = ZSeries(3, {m: F(c) for m, c in d.items()}) + ZSeries.one(3)
    if s.constant_term() == 0:
        return
    assert s * s.inverse() == ZSeries.one(3)
