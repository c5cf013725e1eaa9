"""Exact polynomials and rational generating series."""

from fractions import Fraction

import pytest

import coxkit as ck
from coxkit.automata import build_automaton, count_by_length
from coxkit.series import (
    Polynomial, RationalSeries, dfa_series, is_palindromic, pal_series,
    poly_divexact, poly_gcd, poly_lcm,
)


def P(*coeffs):
    return Polynomial(list(coeffs))


def test_polynomial_arithmetic():
    a = P(1, 2)
    b = P(3, 0, 1)
    assert (a + b).coeffs == (4, 2, 1)
    assert (a * b).coeffs == (3, 6, 1, 2)
    assert (b - b).coeffs == ()
    assert a.degree == 1
    assert P().degree == -1
    assert b.evaluate(Fraction(1, 2)) == Fraction(13, 4)


def test_trailing_zeros_stripped():
    assert Polynomial([1, 0, 0]).coeffs == (1,)
    assert Polynomial([0, 0]).coeffs == ()


def test_substitute_power_and_shift():
    a = P(1, 2, 3)
    assert a.substitute_power(2).coeffs == (1, 0, 2, 0, 3)
    assert a.shifted(2).coeffs == (0, 0, 1, 2, 3)
    assert P(0, 0, 5).shifted(-2).coeffs == (5,)
    with pytest.raises(ValueError):
        P(1, 1).shifted(-1)


def test_palindromic_detection():
    assert is_palindromic(P(1, 2, 1))
    assert is_palindromic(P(4, 4, 5, 4, 4))
    assert not is_palindromic(P(1, 2))
    assert is_palindromic(P())


def test_gcd_and_lcm():
    a = P(-1, 0, 1)          # q^2 - 1
    b = P(-1, 0, 0, 1)       # q^3 - 1
    g = poly_gcd(a, b)
    assert g.coeffs == (-1, 1)
    l = poly_lcm(a, b)
    assert poly_divexact(l, a).coeffs
    assert poly_divexact(l, b).coeffs
    assert l.degree == 4


def test_divexact_rejects_remainders():
    with pytest.raises(ValueError):
        poly_divexact(P(1, 1, 1), P(1, 1))


def test_series_reduction_and_normal_form():
    s = RationalSeries(P(0, 1, 1), P(1, 1))   # q(1+q)/(1+q) = q
    assert s.num.coeffs == (0, 1)
    assert s.den.coeffs == (1,)
    t = RationalSeries(P(2), P(2, -2))
    assert t.den.coeffs[0] == 1
    assert t.coefficients(4) == [1, 1, 1, 1]


def test_series_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalSeries(P(1), P())
    with pytest.raises(ValueError):
        RationalSeries(P(1), P(0, 1))


def test_series_arithmetic():
    geo = RationalSeries(P(1), P(1, -1))
    sq = geo * geo
    assert sq.coefficients(5) == [1, 2, 3, 4, 5]
    tot = geo + geo
    assert tot.coefficients(3) == [2, 2, 2]
    assert geo.substitute_power(2).coefficients(5) == [1, 0, 1, 0, 1]
    assert geo.times_power(2).coefficients(4) == [0, 0, 1, 1]


def test_series_to_obj():
    geo = RationalSeries(P(3), P(1, 0, -1))
    obj = geo.to_obj(terms=4)
    assert obj["num"] == ["3"]
    assert obj["den"] == ["1", "0", "-1"]
    assert obj["coefficients"] == ["3", "0", "3", "0"]


def test_dfa_series_finite_group_is_polynomial():
    red = build_automaton(ck.CoxeterSystem(matrix=ck.preset("A2")), 0, "red")
    gf = dfa_series(red)
    assert gf.den.coeffs == (1,)
    assert gf.num.coeffs == (1, 2, 2, 2)


def test_dfa_series_matches_counts():
    for name, kind in (("~A2", "red"), ("~A2", "pref"), ("~C2", "red")):
        sysm = ck.CoxeterSystem(matrix=ck.preset(name))
        dfa = build_automaton(sysm, 0, kind)
        gf = dfa_series(dfa)
        n = 14
        assert gf.coefficients(n + 1) == [
            Fraction(c) for c in count_by_length(dfa, n)]


def test_pal_series_shifts_into_odd_degrees():
    # the infinite dihedral group: two palindromes of every odd length
    u2 = ck.CoxeterSystem(matrix=ck.preset("I2(inf)"))
    pref = dfa_series(build_automaton(u2, 0, "pref"))
    pal = pal_series(pref)
    assert pal.coefficients(8) == [0, 2, 0, 2, 0, 2, 0, 2]
