"""Amalgam normal form in GL_2(k[t]), the embedding into GL_2(k[x_1, x_2, ...]) and essential dimension."""

import random

import pytest

from carlitzrep.amalgam import (BKT, GLK, NotInvertible, essential_dimension_diag, nagao_decompose, normalize,
                                phi_infty, piece, random_glkt, raw_word, sample_entries, scramble)
from carlitzrep.fields import get_field
from carlitzrep.gamma_reps import gl2, rho_tensor_II, tautological
from carlitzrep.linalg import mat_eq, mat_mul
from carlitzrep.poly import APoly, MPoly


def _is_normal(word):
    fs = word.factors
    body = fs[1:] if piece(fs[0]) == "B(k)" else fs
    for f in body:
        if piece(f) == GLK:
            assert f[0][0].is_zero() and f[0][1] == APoly.const(f[0][0].F, 1) and f[1][0] == f[0][1]
        elif piece(f) == BKT:
            assert f[0][0] == f[1][1] == APoly.const(f[0][0].F, 1)
            assert not f[0][1].is_zero() and (not f[0][1].c or f[0][1].c[0] == 0)
        else:
            return False
    return all(piece(a) != piece(b) for a, b in zip(body, body[1:]))


@pytest.mark.parametrize("q", [2, 3, 5])
def test_round_trip_and_normality(q):
    F = get_field(q)
    rng = random.Random(q)
    for _ in range(40):
        g = random_glkt(F, rng)
        w = nagao_decompose(g)
        assert mat_eq(w.product(), g)
        assert _is_normal(w)


@pytest.mark.parametrize("q", [2, 3])
def test_normal_form_unique_under_rewriting(q):
    F = get_field(q)
    rng = random.Random(10 + q)
    for _ in range(20):
        g = random_glkt(F, rng)
        w = nagao_decompose(g)
        w2 = normalize(scramble(w.factors, rng), F)
        assert len(w.factors) == len(w2.factors)
        assert all(mat_eq(a, b) for a, b in zip(w.factors, w2.factors))


def test_piece_classification():
    F = get_field(3)
    th = APoly.theta(F)
    assert piece(gl2(F, 1, 2, 0, 1)) == "B(k)"
    assert piece(gl2(F, 0, 1, 1, 0)) == GLK
    assert piece(gl2(F, 1, th, 0, 1)) == BKT
    assert piece(gl2(F, 1, 0, th, 1)) is None


def test_not_invertible():
    F = get_field(3)
    th = APoly.theta(F)
    with pytest.raises(NotInvertible):
        raw_word(gl2(F, th, 0, 0, 1))


def test_lower_unipotent_example():
    F = get_field(3)
    th = APoly.theta(F)
    g = gl2(F, 1, 0, th, 1)
    w = nagao_decompose(g)
    assert mat_eq(w.product(), g)
    assert [p for p in w.pieces if p != "B(k)"] == [GLK, BKT, GLK]


@pytest.mark.parametrize("q", [2, 3])
def test_phi_is_homomorphism(q):
    F = get_field(q)
    rng = random.Random(q)
    for _ in range(10):
        g, h = random_glkt(F, rng, 3), random_glkt(F, rng, 3)
        n = 8
        lhs = phi_infty(mat_mul(g, h), n)
        rhs = mat_mul(phi_infty(g, n), phi_infty(h, n))
        assert mat_eq(lhs, rhs)


def test_phi_example():
    # (1 t^2; 0 1) -> (1 x_2; 0 1); constant matrices are fixed
    F = get_field(3)
    th = APoly.theta(F)
    out = phi_infty(gl2(F, 1, th * th, 0, 1), 2)
    assert out[0][1] == MPoly.var(F, 2, 1)
    c = phi_infty(gl2(F, 2, 1, 1, 0), 2)
    assert c[0][0] == MPoly.const(F, 2, 2)


def test_essential_dimension():
    F = get_field(3)
    assert essential_dimension_diag(sample_entries(tautological(F)), 1) == (1, 1)
    assert essential_dimension_diag(sample_entries(rho_tensor_II(F, [1, 1])), 2) == (2, 2)
    x1, x2 = MPoly.var(F, 2, 0), MPoly.var(F, 2, 1)
    assert essential_dimension_diag([x1 * x2, x1 * x1 * x2 * x2], 2) == (1, 2)
    assert essential_dimension_diag([MPoly.const(F, 2, 1)], 2) == (0, 0)
