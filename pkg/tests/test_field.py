"""Exact real cyclotomic arithmetic."""

import math
from fractions import Fraction

import pytest

import coxkit as ck
from coxkit.field import CyclotomicField, field_for_matrix


def test_theta_matches_float_value():
    for L in (4, 5, 6, 7, 12):
        f = CyclotomicField(L)
        lo, hi = f._lo, f._hi
        for _ in range(20):
            f.refine_theta()
        assert f._lo <= Fraction(2 * math.cos(math.pi / L)).limit_denominator(10 ** 9) <= f._hi or \
            abs(float((f._lo + f._hi) / 2) - 2 * math.cos(math.pi / L)) < 1e-6


def test_small_l_rational():
    assert CyclotomicField(1).theta.rational() == -2
    assert CyclotomicField(2).theta.rational() == 0
    assert CyclotomicField(3).theta.rational() == 1


def test_theta_satisfies_minpoly():
    for L in (5, 7, 8):
        f = CyclotomicField(L)
        x = f.theta
        acc = f.from_rational(f.minpoly[0])
        p = f.one
        for c in f.minpoly[1:]:
            p = p * x
            acc = acc + p * f.from_rational(c)
        assert acc.is_zero()


def test_golden_ratio_identity():
    # theta = 2cos(pi/5) satisfies theta^2 = theta + 1
    f = CyclotomicField(5)
    t = f.theta
    assert t * t == t + f.one


def test_arithmetic_and_ordering():
    f = CyclotomicField(7)
    t = f.theta
    half = f.from_rational(Fraction(1, 2))
    assert (t - t).is_zero()
    assert (t * t.inverse()) == f.one
    assert t > f.one
    assert f.from_rational(2) > t
    assert half < f.one
    assert (t + half) - half == t


def test_sign_of_tiny_difference():
    # 2cos(pi/12)^2 = 2 + sqrt(3): exact, so the difference is exactly zero
    f = CyclotomicField(12)
    t = f.theta
    # C_2(theta) = theta^2 - 2 = 2cos(2pi/12) = 2cos(pi/6)
    lhs = t * t - f.from_rational(2)
    rhs = f.cos_pi_over(6) * f.from_rational(2)
    assert lhs == rhs
    assert not (lhs - rhs > f.zero)


def test_cos_pi_over_divisor_rule():
    f = CyclotomicField(12)
    assert f.cos_pi_over(2).is_zero()
    assert f.cos_pi_over(3).rational() == Fraction(1, 2)
    with pytest.raises(ValueError):
        f.cos_pi_over(5)


def test_hash_and_dict_keys():
    f = CyclotomicField(5)
    a = f.theta * f.theta
    b = f.theta + f.one
    d = {a: 1}
    assert d[b] == 1


def test_field_for_matrix_lcm():
    m = ck.CoxeterMatrix([[1, 3, 2], [3, 1, 4], [2, 4, 1]])
    f = field_for_matrix(m)
    assert f.L == 12
    rat = field_for_matrix(ck.CoxeterMatrix([[1, 2], [2, 1]]))
    assert rat.L == 1
    assert rat.degree == 1


def test_unitary_h3_roots_have_unit_norm():
    sysm = ck.CoxeterSystem(matrix=ck.preset("H3"))
    poset = ck.root_poset(sysm, max_depth=10)
    for r in poset.roots:
        assert sysm.norm_sq(r.coords) == sysm.one
