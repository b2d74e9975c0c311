"""Representations of GL_2(A): symmetric powers, digit tensor products, irreducibility, carry-free substitution."""

import random
from math import comb

import pytest
import sympy

from carlitzrep.algrep import CompanionSpec, companion_sigma
from carlitzrep.fields import get_field
from carlitzrep.gamma_reps import (carry_free_check, carry_free_exponents, det_twist, digit_sequence, digits_rep,
                                   generic_irreducible, gl2, intertwiner, rho_bar_irreducible, rho_sigma, rho_tensor_II,
                                   sp_action, star_positions, star_rep, sym_power, sym_rep, tautological)
from carlitzrep.meataxe import meataxe_irreducible, meataxe_verdict
from carlitzrep.parse import parse_x_poly
from carlitzrep.poly import APoly, digits_base_p, phi_p


def test_sym_power_against_sympy():
    a, b, c, d, X, Y = sympy.symbols("a b c d X Y")
    F = get_field(5)
    th = APoly.theta(F)
    g = gl2(F, th + 1, 2, th, 3)
    vals = {a: sympy.Symbol("T") + 1, b: 2, c: sympy.Symbol("T"), d: 3}
    r = 3
    M = sym_power(g, r)
    for i in range(r + 1):
        col = sympy.expand(((a * X + c * Y) ** (r - i) * (b * X + d * Y) ** i).subs(vals))
        P = sympy.Poly(col, X, Y)
        for j in range(r + 1):
            expect = sympy.Poly(P.coeff_monomial(X ** (r - j) * Y ** j), sympy.Symbol("T"), modulus=5)
            got = [int(x) % 5 for x in reversed(expect.all_coeffs())] if not expect.is_zero else []
            assert M[j][i] == APoly(F, got)


@pytest.mark.parametrize("p,l", [(2, 5), (3, 7), (5, 13), (3, 9)])
def test_lucas_positions(p, l):
    pos = star_positions(l, p)
    assert pos == [r for r in range(l + 1) if comb(l, r) % p]
    assert len(pos) == phi_p(l, p)
    prod = 1
    for dgt in digits_base_p(l, p):
        prod *= dgt + 1
    assert phi_p(l, p) == prod


def test_digit_sequence_and_sp_action():
    assert digit_sequence(2, 1) == [1, 2]
    assert digit_sequence(2, 2) == [1, 2, 2, 4]
    assert len(digit_sequence(3, 3)) == 27
    assert sp_action({0: 1, 1: 0}, 1, 2) == 2
    assert sp_action({0: 2, 2: 0}, 5, 3) == 2 * 9 + 1 * 3  # 5 = (2, 1) in base 3
    with pytest.raises(ValueError):
        sp_action({0: 1}, 3, 2)


def test_carry_free_exponents():
    assert carry_free_exponents([1, 2], 2) == ([0, 0], 3)
    ks, total = carry_free_exponents([1, 1], 2)
    assert ks == [0, 1] and total == 3
    ks, total = carry_free_exponents([2, 2], 3)
    assert ks == [0, 1] and total == 8
    with pytest.raises(ValueError):
        carry_free_exponents([0], 3)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_homomorphisms(q):
    F = get_field(q)
    reps = [tautological(F), sym_rep(F, 3), star_rep(F, 5), digits_rep(F, 5), rho_tensor_II(F, [1, 2]),
            rho_sigma(companion_sigma(CompanionSpec(F, parse_x_poly("x^2 - t", F, 1), 1))),
            det_twist(digits_rep(F, 3, var=0), 1)]
    for rep in reps:
        out = rep.check_homomorphism(seed=q, pairs=8, maxdeg=2)
        assert out["ok"], rep.recipe


def test_det_twist_scales_by_determinant():
    F = get_field(3)
    g = gl2(F, 2, 0, 0, 1)  # det = 2 = -1
    rep = det_twist(tautological(F), 1)
    M = rep(g)
    assert M[0][0] == APoly.const(F, 1) and M[1][1] == APoly.const(F, 2)
    assert det_twist(tautological(F), 2).recipe["m"] == 0


def test_star_and_digits_isomorphic():
    F = get_field(3)
    out = intertwiner(star_rep(F, 5, var=0), digits_rep(F, 5, var=0))
    assert out["status"] == "isomorphic"


def test_non_isomorphic_reps_detected():
    F = get_field(3)
    out = intertwiner(sym_rep(F, 2, var=0), digits_rep(F, 3, var=0))
    assert out["status"] == "not isomorphic"


def test_meataxe_on_block_diagonal_is_reducible():
    F = get_field(5)
    rng = random.Random(1)
    gens = []
    for _ in range(2):
        A = [[F.random(rng) for _ in range(2)] for _ in range(2)]
        B = [[F.random(rng) for _ in range(2)] for _ in range(2)]
        gens.append([A[0] + [0, 0], A[1] + [0, 0], [0, 0] + B[0], [0, 0] + B[1]])
    v = meataxe_verdict(F, gens)
    assert v.status == "reducible" and v.certificate["verified"]


def test_meataxe_on_full_matrix_algebra_is_irreducible():
    F = get_field(3)
    e12 = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    e21 = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    assert meataxe_irreducible(F, [e12, e21]).status == "irreducible"


@pytest.mark.parametrize("qq,l,expected", [
    (5, 3, "irreducible"),   # symmetric power below the characteristic
    (4, 3, "irreducible"),   # Steinberg: V (x) V^(2)
    (3, 2, "irreducible"),
    (2, 3, "reducible"),     # V (x) V^(2) = V (x) V over F_2 has the invariant form
])
def test_rho_bar_irreducibility(qq, l, expected):
    assert rho_bar_irreducible(qq, l).status == expected


def test_generic_irreducibility():
    F = get_field(3)
    assert generic_irreducible(digits_rep(F, 4, var=0)).status == "irreducible"
    assert generic_irreducible(rho_tensor_II(F, [1, 1])).status == "irreducible"


def test_generic_irreducibility_inseparable_companion_is_unknown():
    # x^2 - t over F_2: every finite-field specialization turns t into a square
    F = get_field(2)
    rep = rho_sigma(companion_sigma(CompanionSpec(F, parse_x_poly("x^2 + t", F, 1), 1)))
    assert generic_irreducible(rep).status == "unknown"


@pytest.mark.parametrize("q,ls", [(2, [1, 2]), (2, [1, 1]), (3, [2, 2]), (4, [1, 3])])
def test_carry_free_specialization(q, ls):
    out = carry_free_check(get_field(q), ls, count=6, maxdeg=2)
    assert out["ok"], out
