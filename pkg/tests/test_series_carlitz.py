"""Truncated series, lambda-adjoined elements, Frobenius twist, the Carlitz period and exponential."""

import random
from fractions import Fraction

import pytest

from carlitzrep.carlitz import (carlitz_action, carlitz_factorial, carlitz_factorial_brute,
                                carlitz_factorial_recursive, e_A, exp_C, u_eval)
from carlitzrep.errors import NotUnit, PointOnBoundary
from carlitzrep.fields import get_field
from carlitzrep.poly import APoly, MPoly
from carlitzrep.series import (LambdaElem, TruncSeries, pitilde, pitilde_unit, solve_tau_fixed,
                               tau_fixed_check)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_geometric_inverse(q):
    F = get_field(q)
    x = TruncSeries.const(F, 1) - TruncSeries.theta_pow(F, -1)
    inv = x.inv(prec=30)
    expect = TruncSeries.from_terms(F, {n: 1 for n in range(30)}, prec=30)
    assert (inv - expect).valuation() >= 30
    assert ((x * inv) - 1).valuation() >= 30


def test_inverse_needs_unit_leading_coefficient():
    F = get_field(3)
    t = MPoly.var(F, 1, 0)
    x = TruncSeries.const(F, t, 1)
    with pytest.raises(NotUnit):
        x.inv(prec=5)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_lambda_relation(q):
    F = get_field(q)
    lam = LambdaElem.lam(F)
    prod = lam * (lam ** (q - 2))
    minus_theta = LambdaElem.from_series(-TruncSeries.theta_pow(F, 1))
    assert (prod - minus_theta).is_zero()


def test_lambda_q2_is_theta():
    F = get_field(2)
    lam = LambdaElem.lam(F)
    assert len(lam.comps) == 1
    assert (lam.comps[0] - TruncSeries.theta_pow(F, 1)).is_zero()


@pytest.mark.parametrize("q", [2, 3, 4])
def test_tau_examples(q):
    F = get_field(q)
    x = TruncSeries.theta_pow(F, -1)
    assert (x.tau() - TruncSeries.theta_pow(F, -q)).is_zero()
    lam = LambdaElem.lam(F)
    lhs = lam.tau()
    rhs = lam * LambdaElem.from_series(-TruncSeries.theta_pow(F, 1))
    assert (lhs - rhs).is_zero()
    t = MPoly.var(F, 1, 0)
    c = TruncSeries.const(F, t * t + 1, 1)
    assert (c.tau() - c).is_zero()  # tau is K_s-linear


def test_tau_fixed():
    F = get_field(7)
    assert tau_fixed_check(TruncSeries.const(F, 5))
    assert not tau_fixed_check(TruncSeries.theta_pow(F, -1))
    basis = solve_tau_fixed(F, 20)
    assert len(basis) == 1 and basis[0].valuation() == 0


@pytest.mark.parametrize("q", [2, 3, 4])
def test_pitilde_leading_behaviour(q):
    F = get_field(q)
    U = pitilde_unit(F, 40)
    assert (U - 1).valuation() == q - 1  # 1 + O(theta^(1-q)), leading term exactly theta^(1-q)
    pi = pitilde(F, 40)
    expect = LambdaElem.lam(F) * U.shift(1)
    assert (pi - expect).valuation() >= 38  # agreement up to the shifted precision of U


def test_pitilde_stable_under_precision_change():
    F = get_field(2)
    a, b = pitilde_unit(F, 12), pitilde_unit(F, 24)
    assert (a - b).valuation() >= 12
    # brute-force product (1 - theta^(1-2^i))^(-1) for 2^i - 1 < 12
    brute = TruncSeries.const(F, 1)
    for i in (1, 2, 3):
        brute = brute * (TruncSeries.const(F, 1) - TruncSeries.theta_pow(F, 1 - 2 ** i)).inv(prec=12)
    assert (brute - a).valuation() >= 12


@pytest.mark.parametrize("q", [2, 3, 4])
def test_exp_of_period_vanishes(q):
    F = get_field(q)
    assert exp_C(pitilde(F, 44), 40).valuation() >= 40


@pytest.mark.parametrize("q", [2, 3, 4])
def test_carlitz_factorials(q):
    F = get_field(q)
    assert carlitz_factorial(F, 0) == APoly.const(F, 1)
    th = APoly.theta(F)
    assert carlitz_factorial(F, 1) == APoly.theta(F, q) - th
    assert carlitz_factorial(F, 2) == (APoly.theta(F, q * q) - th) * (APoly.theta(F, q) - th) ** q
    for i in range(3 if q < 4 else 2):
        assert carlitz_factorial(F, i) == carlitz_factorial_recursive(F, i) == carlitz_factorial_brute(F, i)


def test_carlitz_action():
    F = get_field(3)
    rng = random.Random(0)
    m = TruncSeries.from_terms(F, {k: F.random(rng) for k in range(-2, 10)}, prec=30)
    th = APoly.theta(F)
    lhs = carlitz_action(th, m)
    rhs = m * TruncSeries.theta_pow(F, 1) + m.tau()
    assert (lhs - rhs).is_zero()
    assert (carlitz_action(APoly.const(F, 1), m) - m).is_zero()
    # C_(ab) = C_a C_b
    a, b = th * th + 1, th + 2
    assert (carlitz_action(a * b, m) - carlitz_action(a, carlitz_action(b, m))).is_zero()


@pytest.mark.parametrize("q", [2, 3])
def test_exp_is_A_linear(q):
    F = get_field(q)
    rng = random.Random(q)
    th = APoly.theta(F)
    for _ in range(3):
        f = TruncSeries.from_terms(F, {k: F.random(rng, nonzero=(k == 1)) for k in range(1, 12)}, prec=40)
        lhs = exp_C(f * TruncSeries.theta_pow(F, 1), 30)
        rhs = carlitz_action(th, exp_C(f, 32))
        assert (lhs - rhs).valuation() >= 30
    assert exp_C(TruncSeries.zero(F), 10).is_zero()


def test_uniformizer():
    F = get_field(3)
    z = TruncSeries.theta_pow(F, Fraction(5, 2), ram=2)
    u = u_eval(z, 20)
    assert u.valuation() > 0
    u1 = u_eval(z + 1, 20)
    assert (u - u1).valuation() >= 20 - 1
    with pytest.raises(PointOnBoundary):
        u_eval(TruncSeries.theta_pow(F, 2, ram=2), 10)


def test_e_A_matches_scaled_exponential():
    # e_A(z) = pi^-1 exp_C(pi z) for z = theta^(-1) in F_q((theta^-1))
    F = get_field(3)
    z = TruncSeries.theta_pow(F, -1)
    pi = pitilde(F, 40)
    lhs = LambdaElem.from_series(e_A(z, 20))
    rhs = pi.inv() * exp_C(pi * LambdaElem.from_series(z), 40)
    assert (lhs - rhs).valuation() >= 20
