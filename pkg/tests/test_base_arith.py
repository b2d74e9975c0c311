"""Finite fields, F_q[theta], multivariate polynomials, parsing and exact linear algebra."""

import random
from math import comb

import pytest
import sympy

from carlitzrep.errors import ConfigError
from carlitzrep.fields import FieldConfig, FqElem, extension_field, get_field, up_factor, up_is_irreducible
from carlitzrep.linalg import det, fm_nullspace, fm_rank, inverse, mat_eq, mat_identity, mat_mul, nullspace, rank
from carlitzrep.parse import parse_apoly, parse_x_poly
from carlitzrep.poly import (APoly, MPoly, RatFunc, chi_t_eval, digits_base_p, from_digits, irreducible_enum,
                             lucas_row, monic_enum, monic_upto, necklace_count, phi_p)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms(q):
    F = get_field(q)
    els = list(F.elements())
    assert len(els) == q
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow_int(a, q - 1) == 1
    g = F.generator()
    assert F.multiplicative_order(g) == q - 1
    rng = random.Random(q)
    for _ in range(50):
        a, b, c = (F.random(rng) for _ in range(3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_bad_field_configs():
    with pytest.raises(ConfigError):
        FieldConfig.from_q(6)
    with pytest.raises(ConfigError):
        FieldConfig.from_q(4, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(ConfigError):
        FieldConfig(4, 1).validate()


def test_frobenius_is_field_automorphism():
    F = get_field(9)
    for a in F.elements():
        x = FqElem(F, a)
        assert x.frobenius(2) == x  # x^(p^e) = x
        for b in F.elements():
            y = FqElem(F, b)
            assert (x * y).frobenius() == x.frobenius() * y.frobenius()


def test_extension_field_embedding():
    F = extension_field(2, 6)
    assert F.q == 64 and F.multiplicative_order(F.generator()) == 63


def _sympy_poly(a: APoly):
    th = sympy.Symbol("theta")
    return sympy.Poly(sum(c * th ** i for i, c in enumerate(a.c)), th, modulus=a.F.p)


def test_apoly_division_and_gcd_against_sympy():
    F = get_field(5)
    rng = random.Random(1)
    for _ in range(30):
        a = APoly(F, [F.random(rng) for _ in range(rng.randint(1, 7))])
        b = APoly(F, [F.random(rng) for _ in range(rng.randint(1, 5))] + [1])
        qq, r = divmod(a, b)
        assert qq * b + r == a and r.deg() < b.deg()
        g = a.gcd(b)
        ref = sympy.gcd(_sympy_poly(a), _sympy_poly(b))
        assert g.deg() == ref.degree()
        g2, s, t = a.xgcd(b)
        assert s * a + t * b == g2


def test_chi_t_eval_examples():
    F = get_field(3)
    th = APoly.theta(F)
    t = MPoly.var(F, 1, 0)
    assert chi_t_eval(th * th + 1, t) == t * t + 1
    z = FqElem(F, 2)
    assert chi_t_eval(th, z) == z
    # theta^2 + theta at the companion matrix of x^2 - t, against Cayley-Hamilton (theta^2 = t)
    zero, one = MPoly(F, 1), MPoly.const(F, 1, 1)
    M = [[zero, one], [t, zero]]
    got = chi_t_eval(th * th + th, M)
    expect = [[t, one], [t, t]]
    assert mat_eq(got, expect)


def test_monic_and_irreducible_enumeration():
    F2, F3 = get_field(2), get_field(3)
    assert sorted(m.c for m in monic_enum(F2, 1)) == [(0, 1), (1, 1)]
    assert [m.c for m in monic_enum(F3, 0)] == [(1,)]
    for q in (2, 3, 4):
        F = get_field(q)
        prod = APoly.const(F, 1)
        for m in monic_enum(F, 1):
            prod = prod * m
        assert prod == APoly.theta(F, q) - APoly.theta(F)
    assert sorted(p.c for p in irreducible_enum(F2, 2)) == sorted([(0, 1), (1, 1), (1, 1, 1)])
    assert sum(1 for p in irreducible_enum(F2, 3) if p.deg() == 3) == 2 == necklace_count(2, 3)
    assert len(list(irreducible_enum(F3, 1))) == 3
    # brute force: irreducible iff no monic divisor of degree 1..d/2
    for d in range(1, 5):
        brute = [a for a in monic_enum(F3, d)
                 if not any((a % b).is_zero() for k in range(1, d // 2 + 1) for b in monic_enum(F3, k))]
        assert len(brute) == necklace_count(3, d)
    assert len(list(monic_upto(F3, 2))) == 13


def test_digit_helpers():
    for p in (2, 3, 5):
        row = lucas_row(1 + p, p)
        assert [r for r, v in enumerate(row) if v] == [0, 1, p, p + 1]
        assert phi_p(1 + p, p) == 4
        for l in range(60):
            assert list(lucas_row(l, p)) == [comb(l, r) % p for r in range(l + 1)]
            assert from_digits(digits_base_p(l, p), p) == l
    assert list(lucas_row(0, 2)) == [1]
    assert [r for r, v in enumerate(lucas_row(5, 2)) if v] == [0, 1, 4, 5]
    assert tuple(digits_base_p(1 + 3, 3)) == (1, 1)
    assert tuple(digits_base_p(0, 3)) == ()
    assert tuple(digits_base_p(13, 3)) == (1, 1, 1)


def test_mpoly_and_ratfunc_arithmetic():
    F = get_field(3)
    t1, t2 = MPoly.var(F, 2, 0), MPoly.var(F, 2, 1)
    f = (t1 + t2) ** 3
    assert f == t1 ** 3 + t2 ** 3  # Frobenius in characteristic 3
    r = RatFunc(t1 * t1 - t2 * t2, t1 - t2)
    assert r.is_polynomial() and r.as_poly() == t1 + t2
    assert (r.inv() * r) == RatFunc(MPoly.const(F, 2, 1))
    assert f.derivative(0).is_zero()
    assert (t1 * t2 * t2).derivative(1) == t1 * t2 * 2


def test_parsing():
    F = get_field(3)
    cs = parse_x_poly("x^2 - t*x - 1", F)
    t = MPoly.var(F, 1, 0)
    assert cs[2] == MPoly.const(F, 1, 1) and cs[1] == -t and cs[0] == MPoly.const(F, 1, 2)
    assert parse_apoly("theta^2 + 4", F).c == (1, 0, 1)
    assert parse_apoly("0", F).is_zero()
    with pytest.raises(ConfigError):
        parse_x_poly("x^(1/2)", F)
    with pytest.raises(ConfigError):
        parse_x_poly("x +* 1", F)


def test_exact_linear_algebra():
    F = get_field(5)
    rng = random.Random(3)
    for _ in range(10):
        A = [[F.random(rng) for _ in range(4)] for _ in range(3)]
        ker = fm_nullspace(F, A, 4)
        assert len(ker) == 4 - fm_rank(F, A)
        for v in ker:
            assert all(sum(F.mul(a, x) for a, x in zip(row, v)) % 5 == 0 or
                       F.from_int(sum(F.mul(a, x) for a, x in zip(row, v))) == 0 for row in A)
    t = MPoly.var(F, 1, 0)
    one = RatFunc(MPoly.const(F, 1, 1))
    T = RatFunc(t)
    M = [[T, one], [one, T]]
    assert det(M, one) == T * T - one
    Mi = inverse(M, one)
    assert mat_eq(mat_mul(M, Mi), mat_identity(2, one))
    S = [[T, T * T], [one, T]]
    assert rank(S) == 1
    ns = nullspace(S, one * 0, one)
    assert len(ns) == 1


def test_factorization_and_irreducibility():
    F = get_field(3)
    f = [2, 0, 1]  # x^2 - 1 = (x - 1)(x + 1)
    facs = up_factor(F, f)
    assert sorted(len(g) for g, _ in facs) == [2, 2]
    assert up_is_irreducible(F, [1, 0, 1])  # x^2 + 1 over F_3
