"""Irreducibility of matrix groups over finite fields (Norton's criterion).

Matrices are code matrices over a ``GF``; the group (or algebra) acts on
column vectors.  A 'reducible' verdict always carries an explicit basis of a
proper invariant subspace, re-verified before it is returned; an
'irreducible' verdict carries the algebra element and factor used by Norton's
criterion.
"""

from __future__ import annotations

import random

from . import fields as ff
from .algrep import Verdict
from .errors import RandomnessExhausted
from .fields import GF
from .linalg import (fm_add, fm_charpoly, fm_identity, fm_in_span, fm_mul, fm_nullspace, fm_poly_eval,
                     fm_row_basis, fm_scale, fm_spin, fm_transpose, fm_vecmat)


def spin_columns(F: GF, seeds, gens):
    """Smallest subspace containing the column vectors ``seeds`` stable under v -> g v."""
    return fm_spin(F, seeds, [fm_transpose(g) for g in gens])


def is_invariant_columns(F: GF, basis, gens):
    """Whether span(basis) (column vectors) is stable under every generator."""
    if not basis:
        return True
    for g in gens:
        gt = fm_transpose(g)
        for v in basis:
            if not fm_in_span(F, basis, fm_vecmat(F, v, gt)):
                return False
    return True


def _right_kernel(F: GF, rows, n):
    """Vectors x with rows . x = 0."""
    return fm_nullspace(F, rows, n) if rows else fm_identity(n)


def _random_algebra_element(F: GF, gens, rng):
    n = len(gens[0])
    words = []
    for _ in range(3):
        w = gens[rng.randrange(len(gens))]
        for _ in range(rng.randrange(3)):
            w = fm_mul(F, w, gens[rng.randrange(len(gens))])
        words.append(w)
    acc = [[0] * n for _ in range(n)]
    for w in words:
        acc = fm_add(F, acc, fm_scale(F, w, F.random(rng, nonzero=True)))
    if rng.random() < 0.5:
        acc = fm_add(F, acc, fm_scale(F, fm_identity(n), F.random(rng)))
    return acc


def meataxe_irreducible(F: GF, gens, seed=0, budget=64) -> Verdict:
    """Norton's irreducibility test for the algebra generated by ``gens``.

    Raises RandomnessExhausted when no usable algebra element is found within
    ``budget`` draws.
    """
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    if n <= 1:
        return Verdict("irreducible", {"reason": "dimension <= 1"})
    rng = random.Random(seed)
    gT = [fm_transpose(g) for g in gens]
    for attempt in range(budget):
        X = _random_algebra_element(F, gens, rng)
        cp = fm_charpoly(F, X)
        for g, _ in sorted(ff.up_factor(F, cp), key=lambda fk: len(fk[0])):
            deg = len(g) - 1
            N = fm_poly_eval(F, g, X)
            ker = _right_kernel(F, N, n)  # column vectors with N x = 0
            if not ker:
                continue
            W = spin_columns(F, [ker[0]], gens)
            if len(W) < n:
                return _reducible(F, gens, W, {"attempt": attempt, "factor": g, "via": "kernel"})
            if len(ker) != deg:
                continue
            # Norton: also spin a kernel vector of N^T under the transposed action
            kerT = _right_kernel(F, fm_transpose(N), n)
            WT = spin_columns(F, [kerT[0]], gT)
            if len(WT) < n:
                # an invariant subspace of the dual: its annihilator is invariant here
                ann = _right_kernel(F, WT, n)
                return _reducible(F, gens, fm_row_basis(F, ann), {"attempt": attempt, "factor": g, "via": "dual"})
            return Verdict("irreducible", {"attempt": attempt, "factor": g, "kernel_dim": deg,
                                           "algebra_element": X})
    raise RandomnessExhausted(f"no Norton witness found in {budget} draws")


def _reducible(F, gens, W, cert):
    n = len(gens[0])
    if not (0 < len(W) < n) or not is_invariant_columns(F, W, gens):  # pragma: no cover - internal
        raise AssertionError("invariant subspace certificate failed verification")
    cert = dict(cert, subspace=W, dimension=len(W), verified=True)
    return Verdict("reducible", cert)


def meataxe_verdict(F: GF, gens, seed=0, budget=64) -> Verdict:
    """As meataxe_irreducible, but reports 'unknown' instead of raising."""
    try:
        return meataxe_irreducible(F, gens, seed, budget)
    except RandomnessExhausted as exc:
        return Verdict("unknown", {"reason": str(exc)})
