"""Acceptance criteria 1-18, each at its stated scale and tolerance.

Every criterion is tagged with ``@pytest.mark.criterion``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import pytest

from carlitzrep.checks import RunConfig, report_document, run_single, verify_all, with_field
from carlitzrep.fields import get_field
from carlitzrep.gamma_reps import rho_bar_irreducible
from carlitzrep.meataxe import is_invariant_columns
from carlitzrep.serialize import dumps

BASE = RunConfig()


def cfg_q(q, **kw):
    from dataclasses import replace

    return replace(with_field(BASE, q), **kw)


def run(check, q=3, note=None, **params):
    r = run_single(check, params, cfg_q(q))
    if note is not None:
        note(f"{check}(q={q}) residual={r.to_json()['residual']} target={r.to_json()['target']}")
    return r


def _rows(r):
    return r.details.get("rows", [])


# 1 -------------------------------------------------------------------------
@pytest.mark.criterion(1, "omega difference equation")
@pytest.mark.parametrize("q", [2, 3, 4])
def test_c01_omega_difference_equation(q, note):
    r = run("omega_tau", q, note)
    assert {row["family"] for row in _rows(r)} == {"chi", "x^2-t", "x^2-t*x-1"}
    assert all(row["residual_valuation"] >= 60 for row in _rows(r))
    assert r.status == "pass"


# 2 -------------------------------------------------------------------------
@pytest.mark.criterion(2, "exp_C formula and the period in the kernel")
@pytest.mark.parametrize("q", [2, 3, 4])
def test_c02_exp_formula(q, note):
    r = run("exp_formula", q, note)
    fams = {row["family"] for row in _rows(r)}
    assert {"chi", "x^2-t", "x^2-t*x-1", "exp_C(pi)"} <= fams
    assert all(row["residual_valuation"] >= 60 for row in _rows(r))
    assert r.status == "pass"


# 3 -------------------------------------------------------------------------
@pytest.mark.criterion(3, "Dirichlet sum versus Euler product; identity at cutoff 0")
def test_c03_lvalue_consistency(note):
    r = run("lvalue", 3, note, D=6, n=[1, 2])
    assert {(row["family"], row["n"]) for row in _rows(r)} == {(f, n) for f in ("chi", "x^2-t", "x^2-t*x-1")
                                                              for n in (1, 2)}
    for row in _rows(r):
        assert row["residual_valuation"] >= row["n"] * 7
    assert r.details["L_at_cutoff_0_is_identity"]
    assert r.status == "pass"


# 4 -------------------------------------------------------------------------
@pytest.mark.criterion(4, "s = 1 explicit formula and Taelman-type units")
def test_c04_L1_explicit(note):
    r = run("L1_explicit", 3, note, D=6)
    assert r.status == "pass"


@pytest.mark.criterion(4, "s = 1 explicit formula and Taelman-type units")
@pytest.mark.parametrize("q,s", [(2, 1), (3, 1), (3, 3), (2, 2), (2, 3), (3, 2)])
def test_c04_taelman(q, s, note):
    r = run("taelman", q, note, s=s)
    checks = r.details["checks"]
    assert checks["S_polynomial"] and checks["precision_reached"]
    if s == 1:
        assert checks["S_identity"]
    if s > 1 and (s - 1) % (q - 1) == 0:
        assert checks["S_zero"] and checks["B_polynomial"]
    assert r.status == "pass"


# 5 -------------------------------------------------------------------------
@pytest.mark.criterion(5, "determinant lemma in a solvable family")
def test_c05_determinant_lemma(note):
    r = run("det_lemma", 3, note, D=4, s=[1, 2], n=[1, 2])
    assert {row["s"] for row in _rows(r)} == {1, 2}
    assert r.status == "pass"


# 6 -------------------------------------------------------------------------
@pytest.mark.criterion(6, "representations of GL_2(A) are homomorphisms")
@pytest.mark.parametrize("q", [2, 3])
def test_c06_homomorphism(q, note):
    r = run("homomorphism", q, note, pairs=50)
    kinds = {row["rep"].split(":")[0] for row in _rows(r)}
    assert {"rho_sigma", "sym", "star", "digits", "rho_II", "twist"} <= kinds
    assert all(row["pairs"] >= 50 and row["failures"] == 0 and row["identity"] for row in _rows(r))
    assert r.status == "pass"


# 7 -------------------------------------------------------------------------
@pytest.mark.criterion(7, "Brauer-Nesbitt boundary l < q'")
def test_c07_brauer_nesbitt_boundary(note):
    r = run("brauer_nesbitt", 3, note)
    mism = [(row["q'"], row["l"], row["verdict"]) for row in r.details["mismatches"]]
    note(f"mismatches (q', l, verdict) = {mism}")
    assert r.status == "pass", f"verdict differs from (l < q') at {mism}"


@pytest.mark.criterion(7, "Brauer-Nesbitt boundary l < q'")
@pytest.mark.parametrize("qq", [2, 3, 4, 5])
def test_c07_reducible_verdicts_carry_verified_certificates(qq):
    F = get_field(qq)
    from carlitzrep.gamma_reps import rho_bar_generators

    for l in range(qq + 3):
        v = rho_bar_irreducible(qq, l)
        assert v.status in ("irreducible", "reducible")
        if v.status == "reducible":
            W = v.certificate["subspace"]
            assert v.certificate["verified"] and 0 < len(W) < len(rho_bar_generators(F, l)[0])
            assert is_invariant_columns(F, W, rho_bar_generators(F, l))


# 8 -------------------------------------------------------------------------
@pytest.mark.criterion(8, "rho^star isomorphic to rho^I")
def test_c08_star_iso(note):
    r = run("star_iso", 3, note, primes=[2, 3, 5])
    assert {(row["p"], row["l"]) for row in _rows(r)} == {(p, l) for p in (2, 3, 5) for l in range(2 * p + 2)}
    assert all(row["verified_fresh"] > 0 for row in _rows(r))
    assert r.status == "pass"


# 9 -------------------------------------------------------------------------
@pytest.mark.criterion(9, "generic irreducibility by specialization")
def test_c09_generic_irreducibility(note):
    r = run("generic_irr", 3, note)
    cases = {(row["q"], row["rep"]): row for row in _rows(r)}
    for l in (1, 2, 3):
        assert cases[(2, f"digits_t:{l}")]["verdict"] == "irreducible"
    assert cases[(2, "rho_II:1,1")]["verdict"] == "irreducible"
    assert cases[(3, "rho_II:1,2")]["verdict"] == "irreducible"
    reducible = [row for row in _rows(r) if row["expected"] == "reducible"]
    assert reducible and all(row["verdict"] == "reducible" for row in reducible)
    assert r.status == "pass"


# 10 ------------------------------------------------------------------------
@pytest.mark.criterion(10, "carry-free evaluation of rho^II onto rho^I")
@pytest.mark.parametrize("q,l_lists", [(2, [[1, 1], [1, 2]]), (3, [[1, 2], [2, 2]])])
def test_c10_carry_free(q, l_lists, note):
    r = run("carry_free", q, note, l_lists=l_lists, count=20)
    assert all(row["samples"] == 20 and row["failures"] == 0 for row in _rows(r))
    assert r.status == "pass"


# 11 ------------------------------------------------------------------------
@pytest.mark.criterion(11, "digit combinatorics phi_p")
def test_c11_digits(note):
    r = run("digits", 3, note, primes=[2, 3, 5], depth=5)
    assert all(row["terms"] == row["p"] ** 5 and row["agree"] and row["phi(1+p)"] == 4 for row in _rows(r))
    assert r.status == "pass"


# 12 ------------------------------------------------------------------------
@pytest.mark.criterion(12, "Eisenstein factorization G = L E")
def test_c12_eisenstein_factorization(note):
    r = run("eisenstein_G", 3, note, point=1, cases=[(1, "chi", 2), (3, "x^2-t", 2)])
    assert all(row["residual_valuation"] >= row["bound"] for row in _rows(r))
    assert r.status == "pass"


# 13 ------------------------------------------------------------------------
@pytest.mark.criterion(13, "exact vanishing off the congruence class")
@pytest.mark.parametrize("q", [3, 5])
def test_c13_exact_vanishing(q, note):
    r = run("vanishing", q, note, cutoffs=[0, 1, 2, 3])
    assert _rows(r) and all(row["exact_zero"] for row in _rows(r))
    assert r.status == "pass"


# 14 ------------------------------------------------------------------------
@pytest.mark.criterion(14, "certified rank and row independence")
def test_c14_rank(note):
    r = run("rank", 3, note, w=1, m=0, sigma="companion:x^2-t")
    assert r.residual == 2 and r.details["rank_certificate"] is not None
    assert r.details["independence"]["independent"]
    assert r.status == "pass"


# 15 ------------------------------------------------------------------------
@pytest.mark.criterion(15, "limit at the cusp")
def test_c15_ulimit_literal_q2(note):
    r = run("ulimit", 2, note, point=5)
    assert r.residual > 0 and r.details["literal_residual_valuation"] > 0
    assert r.status == "pass"


@pytest.mark.criterion(15, "limit at the cusp")
def test_c15_ulimit_q3_with_orbit_constant(note):
    # all q - 1 cosets with bottom row (0, mu) survive: the limit is (q - 1) (0 | I_L) = -(0 | I_L)
    r = run("ulimit", 3, note, point=5)
    assert r.details["kappa"] == get_field(3).neg(1)
    assert r.residual > 0
    assert r.details["literal_residual_valuation"] <= 0
    assert r.status == "pass"


# 16 ------------------------------------------------------------------------
@pytest.mark.criterion(16, "functional equation diagnostic")
def test_c16_functional_equation(note):
    r = run("functional_eq", 2, note, cutoffs=[2, 4, 6])
    assert r.status == "diagnostic"
    note("residuals per element: " + ", ".join(str([str(x) for x in row["residuals"]]) for row in _rows(r)))
    assert sum(row["strictly_improving"] for row in _rows(r)) >= 3


# 17 ------------------------------------------------------------------------
@pytest.mark.criterion(17, "amalgam normal form, Phi^infinity, essential dimension")
def test_c17_nagao(note):
    r = run("nagao", 3, note, fields=[2, 3, 5], count=200, pairs=50)
    for row in _rows(r):
        assert row["round_trip"] == row["unique"] == 200 and row["phi_hom"] == 50
    assert r.details["essdim"] == [[1, 1], [1, 1], [2, 2], [3, 3]]
    assert r.status == "pass"


# 18 ------------------------------------------------------------------------
@pytest.mark.criterion(18, "byte-reproducible reports")
def test_c18_reproducible(note):
    cfg = RunConfig(seed=7)
    a = dumps(report_document(cfg, verify_all(cfg)))
    b = dumps(report_document(cfg, verify_all(cfg)))
    note(f"{len(a)} bytes, identical={a == b}")
    assert a == b
