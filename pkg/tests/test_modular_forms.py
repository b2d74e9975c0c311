"""Cosets, orbit-summed Eisenstein series and their certified properties."""


import pytest
import sympy

from carlitzrep.algrep import chi_t
from carlitzrep.fields import get_field
from carlitzrep.gamma_reps import gl2, rho_sigma, tautological
from carlitzrep.lfunc import family
from carlitzrep.modular_forms import (G_equals_LE, OmegaPoint, complete, coset_enum, eisenstein_E,
                                      eisenstein_E_naive, functional_eq_check, infer_depth, matrix_residual,
                                      mobius_and_factor, normal_depth, orbit_reps, rank_and_independence,
                                      ulimit_check, vanishing_check)
from carlitzrep.poly import APoly


def _sympy_coprime_count(p, D):
    T = sympy.Symbol("T")
    polys = []
    import itertools
    for cs in itertools.product(range(p), repeat=D + 1):
        polys.append(sympy.Poly(sum(c * T ** i for i, c in enumerate(cs)), T, modulus=p))
    n = 0
    for c in polys:
        for d in polys:
            if c.is_zero and d.is_zero:
                continue
            if sympy.gcd(c, d).degree() == 0:
                n += 1
    return n


@pytest.mark.parametrize("q,D", [(2, 2), (3, 1), (3, 2)])
def test_coset_enumeration(q, D):
    F = get_field(q)
    cosets = list(coset_enum(F, D))
    assert len(cosets) == _sympy_coprime_count(q, D)
    assert len({(tuple(c.c.c), tuple(c.d.c)) for c in cosets}) == len(cosets)
    assert len(list(orbit_reps(F, D))) * (q - 1) == len(cosets)
    for cr in cosets:
        det = cr.a * cr.d - cr.b * cr.c
        assert det == APoly.const(F, 1)
        if not cr.c.is_zero():
            assert cr.a.deg() < cr.c.deg() or cr.a.is_zero()


def test_complete_rejects_non_coprime():
    F = get_field(3)
    th = APoly.theta(F)
    with pytest.raises(ValueError):
        complete(th, th * th)


def test_mobius_action():
    F = get_field(3)
    pt = OmegaPoint.theta_half(F, 3)
    gz, J = mobius_and_factor(gl2(F, 0, 1, 1, 0), pt, 40)
    assert (J - pt.z).is_zero()
    assert (gz.z * pt.z - 1).valuation() >= 18
    assert gz.valuation() == -pt.valuation()


def test_normal_depth():
    F = get_field(3)
    assert infer_depth(tautological(F)) == 1
    rep = rho_sigma(family(F, "x^2-t"))
    assert normal_depth(rep, 2) and infer_depth(rep) == 2


@pytest.mark.parametrize("q,w", [(2, 3), (3, 3)])
def test_orbit_sum_matches_naive_sum(q, w):
    F = get_field(q)
    rep = rho_sigma(chi_t(F))
    pt = OmegaPoint.theta_half(F, 3)
    D = 2
    E = eisenstein_E(w, 0, rep, pt, D, L=1, max_valuation=8)
    naive = eisenstein_E_naive(w, 0, rep, pt, D, 1, 8)
    assert matrix_residual(E.value, naive) >= 8


def test_vanishing_is_exact():
    F = get_field(3)
    rep = rho_sigma(chi_t(F))
    pt = OmegaPoint.theta_half(F, 3)
    rows = vanishing_check(2, 0, rep, pt, [0, 1, 2])  # w - 1 = 1, 2m = 0 differ mod 2
    assert all(r["exact_zero"] for r in rows)


def test_ulimit_q2_literal():
    F = get_field(2)
    out = ulimit_check(3, rho_sigma(chi_t(F)), OmegaPoint.theta_half(F, 5), 2)
    assert out["residual_valuation"] > 0 and out["literal_residual_valuation"] > 0


def test_ulimit_q3_needs_kappa():
    F = get_field(3)
    out = ulimit_check(3, rho_sigma(chi_t(F)), OmegaPoint.theta_half(F, 5), 2)
    assert out["kappa"] == F.neg(1)
    assert out["residual_valuation"] > 0
    assert out["literal_residual_valuation"] <= 0


def test_G_equals_LE():
    F = get_field(3)
    out = G_equals_LE(1, [chi_t(F)], OmegaPoint.theta_half(F, 1), 2)
    assert out["ok"], out


def test_rank_certificate():
    F = get_field(3)
    rep = rho_sigma(family(F, "x^2-t"))
    pts = [OmegaPoint.theta_half(F, 3), OmegaPoint.theta_half(F, 5)]
    out = rank_and_independence(1, 0, rep, pts, 2)
    assert out["rank_lower_bound"] == 2


def test_functional_equation_diagnostic_shape():
    F = get_field(2)
    rep = rho_sigma(chi_t(F))
    pt = OmegaPoint.theta_half(F, 3)
    out = functional_eq_check(3, 0, rep, pt, gl2(F, 0, 1, 1, 0), [1, 2])
    assert out["status"] == "diagnostic" and len(out["rows"]) == 2


def test_weight_must_be_positive():
    F = get_field(3)
    with pytest.raises(ValueError):
        eisenstein_E(0, 0, rho_sigma(chi_t(F)), OmegaPoint.theta_half(F, 3), 1)
