"""Representations of Gamma = GL_2(A) and their irreducibility.

Group elements are 2 x 2 lists of ``APoly``.  A ``GammaRep`` maps them to
square matrices whose entries are ``APoly`` (coefficients in A) or ``MPoly``
(coefficients in F_q[t_1..t_s]).  Tensor products use the Kronecker
convention with the left factor slowest (digit-major: digit 0 outermost).
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass

from . import fields as ff
from .algrep import AlgebraRep, Verdict, _x_poly_roots_s1, sigma_eval
from .fields import FqElem, GF
from .linalg import (block, fm_nullspace, fm_rank, kron, mat_eq, mat_identity, mat_mul, nullspace, rank,
                     submatrix)
from .meataxe import meataxe_verdict
from .poly import APoly, MPoly, RatFunc, chi_t, digits_base_p, from_digits, lucas_row, phi_p

# ---------------------------------------------------------------------------
# group elements


def gl2(F: GF, a, b, c, d):
    return [[_ap(F, a), _ap(F, b)], [_ap(F, c), _ap(F, d)]]


def _ap(F, x):
    if isinstance(x, APoly):
        return x
    return APoly.const(F, x)


def identity2(F: GF):
    return gl2(F, 1, 0, 0, 1)


def elem12(F: GF, a: APoly):
    return gl2(F, 1, a, 0, 1)


def elem21(F: GF, a: APoly):
    return gl2(F, 1, 0, a, 1)


def gamma_det(g) -> int:
    """det(g) as a code of F_q^x (raises if g is not in GL_2(A))."""
    d = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    if d.deg() != 0:
        raise ValueError("matrix is not in GL_2(A)")
    return d.c[0]


def random_apoly(F: GF, rng: random.Random, deg: int) -> APoly:
    return APoly(F, [F.random(rng) for _ in range(deg + 1)])


def random_gl2_fq(F: GF, rng: random.Random):
    while True:
        m = [[F.random(rng) for _ in range(2)] for _ in range(2)]
        if F.sub(F.mul(m[0][0], m[1][1]), F.mul(m[0][1], m[1][0])):
            return gl2(F, *(APoly.const(F, x) for x in (m[0][0], m[0][1], m[1][0], m[1][1])))


def random_gamma(F: GF, rng: random.Random, maxdeg: int = 3):
    """g0 * E12(a) * E21(b) with deg a + deg b <= maxdeg; every entry has degree <= maxdeg."""
    da = rng.randint(0, maxdeg)
    db = rng.randint(0, maxdeg - da)
    g = mat_mul(elem12(F, random_apoly(F, rng, da)), elem21(F, random_apoly(F, rng, db)))
    return mat_mul(random_gl2_fq(F, rng), g)


def sample_family(F: GF, K: int = 4):
    """GL_2(F_q) generators and E12(c theta^k), E21(c theta^k) for k <= K, c in F_q^x."""
    gen = F.generator()
    out = [gl2(F, gen, 0, 0, 1), gl2(F, 0, 1, 1, 0), gl2(F, 1, 1, 0, 1)]
    for k in range(K + 1):
        for c in F.nonzero():
            a = APoly(F, [0] * k + [c])
            out.append(elem12(F, a))
            out.append(elem21(F, a))
    return out


# ---------------------------------------------------------------------------
# generic ring helpers


def frob(x, k: int, p: int):
    """x^(p^k) for APoly, MPoly, FqElem or any ring element."""
    if k == 0:
        return x
    if isinstance(x, MPoly):
        F = x.F
        out = {}
        for mono, c in x.terms.items():
            v = c
            for _ in range(k):
                v = F.frob_t[v]
            out[tuple(e * p ** k for e in mono)] = v
        return MPoly(F, x.n, out)
    if isinstance(x, APoly):
        F = x.F
        c = [0] * ((len(x.c) - 1) * p ** k + 1) if x.c else []
        for i, v in enumerate(x.c):
            for _ in range(k):
                v = F.frob_t[v]
            c[i * p ** k] = v
        return APoly(F, c)
    return x ** (p ** k)


def _one_like(x):
    return x * 0 + 1 if not isinstance(x, (APoly, MPoly)) else x.one()


def _zero_like(x):
    return x * 0 if not isinstance(x, (APoly, MPoly)) else x.zero()


def _const_like(x, code: int):
    if isinstance(x, APoly):
        return APoly.const(x.F, code)
    if isinstance(x, MPoly):
        return MPoly.const(x.F, x.n, code)
    if isinstance(x, FqElem):
        return FqElem(x.F, code)
    raise TypeError(f"no constants for {type(x).__name__}")


# ---------------------------------------------------------------------------
# symmetric powers, Lucas extraction and digit tensor products


def _form_mul(f, g, zero):
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def sym_power(g, r: int):
    """Action on X^(r-i) Y^i (i = 0..r): column i holds (aX+cY)^(r-i) (bX+dY)^i."""
    if r < 0:
        raise ValueError("r must be >= 0")
    a, b = g[0]
    c, d = g[1]
    zero, one = _zero_like(a), _one_like(a)
    u, v = [a, c], [b, d]
    upow = [[one]]
    vpow = [[one]]
    for _ in range(r):
        upow.append(_form_mul(upow[-1], u, zero))
        vpow.append(_form_mul(vpow[-1], v, zero))
    cols = [_form_mul(upow[r - i], vpow[i], zero) for i in range(r + 1)]
    return [[cols[i][j] for i in range(r + 1)] for j in range(r + 1)]


def star_positions(l: int, p: int):
    """Indices r with binom(l, r) nonzero mod p."""
    return [r for r, v in enumerate(lucas_row(l, p)) if v]


def rho_star(g, l: int, p: int):
    """Rows and columns of sym_power(g, l) at the Lucas positions (dimension phi_p(l))."""
    pos = star_positions(l, p)
    return submatrix(sym_power(g, l), pos, pos)


def twist(g, k: int, p: int):
    return [[frob(x, k, p) for x in r] for r in g]


def rho_digits(g, l: int, p: int):
    """Kronecker product over base-p digits l_i of sym_power(g^(p^i), l_i), digit 0 outermost."""
    out = None
    for i, li in enumerate(digits_base_p(l, p)):
        m = sym_power(twist(g, i, p), li)
        out = m if out is None else kron(out, m)
    if out is None:
        return [[_one_like(g[0][0])]]
    return out


def phi(l: int, p: int) -> int:
    return phi_p(l, p)


def digit_sequence(p: int, n: int):
    """a_1 = (1, ..., p), a_n = [a_(n-1), 2 a_(n-1), ..., p a_(n-1)]; length p^n."""
    a = list(range(1, p + 1))
    for _ in range(n - 1):
        a = [k * x for k in range(1, p + 1) for x in a]
    return a


def sp_action(nu, l: int, p: int) -> int:
    """Move the base-p digit at position i to position nu(i) (nu: dict, finite support)."""
    ds = digits_base_p(l, p)
    perm = dict(nu)
    if sorted(perm) != sorted(perm.values()):
        raise ValueError("nu must be a permutation of finitely many positions")
    top = max([len(ds)] + [k + 1 for k in perm] + [v + 1 for v in perm.values()])
    out = [0] * top
    for i, dgt in enumerate(ds):
        out[perm.get(i, i)] = dgt
    return from_digits(out, p)


def carry_free_exponents(l_list, q: int, p: int = None):
    """Minimal 0 <= k_1 <= ... <= k_s with pairwise disjoint base-p digit supports of l_i q^(k_i)."""
    if p is None:
        p = min(d for d in range(2, q + 1) if q % d == 0)
    if any(l < 1 for l in l_list):
        raise ValueError("all l_i must be >= 1")
    used = set()
    ks = []
    k = 0
    for l in l_list:
        while True:
            supp = {i for i, d in enumerate(digits_base_p(l * q ** k, p)) if d}
            if not supp & used:
                break
            k += 1
        used |= supp
        ks.append(k)
    total = sum(l * q ** k for l, k in zip(l_list, ks))
    return ks, total


# ---------------------------------------------------------------------------
# representations


@dataclass
class GammaRep:
    """gamma -> apply(gamma); ``coeff`` is 'A' (APoly entries) or 'K' (MPoly in ``nvars`` variables)."""

    F: GF
    dim: int
    apply: callable
    recipe: dict
    coeff: str = "A"
    nvars: int = 0

    def __call__(self, g):
        return self.apply(g)

    def one_entry(self):
        return APoly.const(self.F, 1) if self.coeff == "A" else MPoly.const(self.F, self.nvars, 1)

    def check_homomorphism(self, seed=0, pairs=50, maxdeg=3):
        """Exact identity and multiplicativity checks on random pairs."""
        rng = random.Random(seed)
        I = identity2(self.F)
        ident = mat_eq(self(I), mat_identity(self.dim, self.one_entry()))
        failures = 0
        for _ in range(pairs):
            g1, g2 = random_gamma(self.F, rng, maxdeg), random_gamma(self.F, rng, maxdeg)
            if not mat_eq(self(mat_mul(g1, g2)), mat_mul(self(g1), self(g2))):
                failures += 1
        return {"identity": ident, "pairs": pairs, "failures": failures, "ok": ident and failures == 0}


def tautological(F: GF) -> GammaRep:
    return GammaRep(F, 2, lambda g: [list(r) for r in g], {"kind": "tautological"})


def _map_t(F, nvars, var):
    return lambda g: [[chi_t(x, nvars, var) for x in r] for r in g]


def rho_sigma(rep: AlgebraRep) -> GammaRep:
    """(a b; c d) -> (sigma(a) sigma(b); sigma(c) sigma(d))."""

    def apply(g):
        return block([[sigma_eval(rep, g[0][0]), sigma_eval(rep, g[0][1])],
                      [sigma_eval(rep, g[1][0]), sigma_eval(rep, g[1][1])]])

    return GammaRep(rep.F, 2 * rep.d, apply, {"kind": "rho_sigma", "sigma": rep.to_json()}, "K", rep.nvars)


def sym_rep(F: GF, r: int, var=None, nvars=1) -> GammaRep:
    pre = _map_t(F, nvars, var) if var is not None else (lambda g: g)
    return GammaRep(F, r + 1, lambda g: sym_power(pre(g), r), {"kind": "sym", "r": r, "var": var},
                    "A" if var is None else "K", 0 if var is None else nvars)


def star_rep(F: GF, l: int, var=None, nvars=1) -> GammaRep:
    pre = _map_t(F, nvars, var) if var is not None else (lambda g: g)
    return GammaRep(F, phi_p(l, F.p), lambda g: rho_star(pre(g), l, F.p), {"kind": "star", "l": l, "var": var},
                    "A" if var is None else "K", 0 if var is None else nvars)


def digits_rep(F: GF, l: int, var=None, nvars=1) -> GammaRep:
    """rho^I_l (var None, coefficients in A) or rho^I_(t_var, l) (coefficients in F_q[t])."""
    pre = _map_t(F, nvars, var) if var is not None else (lambda g: g)
    return GammaRep(F, phi_p(l, F.p), lambda g: rho_digits(pre(g), l, F.p), {"kind": "digits", "l": l, "var": var},
                    "A" if var is None else "K", 0 if var is None else nvars)


def rho_tensor_II(F: GF, l_list) -> GammaRep:
    """Kronecker product over i of rho^I_(t_i, l_i), variables t_1..t_s."""
    s = len(l_list)
    if s < 1 or any(l < 1 for l in l_list):
        raise ValueError("need s >= 1 and all l_i >= 1")
    factors = [digits_rep(F, l, var=i, nvars=s) for i, l in enumerate(l_list)]

    def apply(g):
        out = None
        for f in factors:
            m = f(g)
            out = m if out is None else kron(out, m)
        return out

    dim = 1
    for f in factors:
        dim *= f.dim
    return GammaRep(F, dim, apply, {"kind": "tensor_II", "l": list(l_list)}, "K", s)


def det_twist(rep: GammaRep, m: int) -> GammaRep:
    """gamma -> det(gamma)^(-m) rep(gamma); only m mod (q - 1) matters."""
    F = rep.F
    m = m % (F.q - 1)

    def apply(g):
        M = rep(g)
        if m == 0:
            return M
        c = F.pow_int(F.inv(gamma_det(g)), m)
        return [[x * _const_like(x, c) for x in r] for r in M]

    return GammaRep(F, rep.dim, apply, {"kind": "det_twist", "m": m, "base": rep.recipe}, rep.coeff, rep.nvars)


# ---------------------------------------------------------------------------
# evaluation at finite-field points


def eval_entry(x, Fb: GF, emb, point):
    """Evaluate an APoly (at point[0]) or MPoly (at point) with coefficients embedded by ``emb``."""
    if isinstance(x, APoly):
        acc = 0
        for c in reversed(x.c):
            acc = Fb.add(Fb.mul(acc, point[0]), emb[c])
        return acc
    if isinstance(x, MPoly):
        acc = 0
        for mono, c in x.terms.items():
            term = emb[c]
            for i, e in enumerate(mono):
                if e:
                    term = Fb.mul(term, Fb.pow_int(point[i], e))
            acc = Fb.add(acc, term)
        return acc
    if isinstance(x, FqElem):
        return emb[x.v]
    raise TypeError(f"cannot evaluate {type(x).__name__}")


def eval_matrix(M, Fb, emb, point):
    return [[eval_entry(x, Fb, emb, point) for x in r] for r in M]


def ev_zeta(g, Fb: GF, zeta: int, F: GF = None):
    """Entrywise evaluation theta -> zeta of a matrix over A."""
    F = F or g[0][0].F
    return eval_matrix(g, Fb, ff.embed_field(F, Fb), [zeta])


def group_closure_order(Fb: GF, gens, limit=100000):
    """Order of the group generated by code matrices (breadth-first closure)."""
    def mul(A, B):
        n = len(A)
        return tuple(tuple(_dot(Fb, A[i], [B[k][j] for k in range(n)]) for j in range(n)) for i in range(n))

    gens = [tuple(tuple(r) for r in g) for g in gens]
    n = len(gens[0])
    I = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    seen = {I}
    queue = deque([I])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise ValueError("group closure exceeded the limit")
                queue.append(y)
    return len(seen)


def _dot(F, u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def sl2_order(qq: int) -> int:
    return qq * (qq * qq - 1)


def ev_zeta_image_order(F: GF, f: int):
    """Order of the group generated by ev_zeta(E12(theta^k)), ev_zeta(E21(theta^k)), k < f,
    where zeta generates F_(q^f)."""
    Fb = ff.extension_field(F.p, F.e * f)
    zeta = _field_generator_over(F, Fb)
    gens = []
    for k in range(max(1, f)):
        a = APoly.theta(F, k)
        gens.append(ev_zeta(elem12(F, a), Fb, zeta, F))
        gens.append(ev_zeta(elem21(F, a), Fb, zeta, F))
    return {"field": Fb.q, "zeta": zeta, "order": group_closure_order(Fb, gens), "sl2_order": sl2_order(Fb.q)}


def _field_generator_over(F: GF, Fb: GF):
    """An element generating Fb over the image of F (a primitive element works)."""
    return Fb.generator()


def sl2_generators(Fb: GF):
    """E12(b), E21(b) for b running over an F_p-basis of Fb."""
    gens = []
    basis = [Fb.from_coords([1 if i == j else 0 for i in range(Fb.e)]) for j in range(Fb.e)]
    for b in basis:
        gens.append([[1, b], [0, 1]])
        gens.append([[1, 0], [b, 1]])
    return gens


def rho_bar_generators(Fb: GF, l: int):
    """Images of the SL_2(Fb) generators under rho^I_l (Frobenius twists inside Fb)."""
    out = []
    for g in sl2_generators(Fb):
        ge = [[FqElem(Fb, x) for x in r] for r in g]
        out.append([[x.v for x in r] for r in rho_digits(ge, l, Fb.p)])
    return out


def rho_bar_irreducible(qq: int, l: int, seed=0) -> Verdict:
    """Meataxe verdict for rho^I_l over F_(q') restricted to SL_2(F_(q'))."""
    p = min(d for d in range(2, qq + 1) if qq % d == 0)
    e = 0
    while p ** e < qq:
        e += 1
    Fb = ff.get_field(qq) if qq <= 256 else ff.extension_field(p, e)
    return meataxe_verdict(Fb, rho_bar_generators(Fb, l), seed)


# ---------------------------------------------------------------------------
# generic irreducibility by specialization


MAX_FIELD = 256


def _specializations(F: GF, nvars: int, rng, per_field=3, min_size=1):
    f = 1
    while F.q ** f <= MAX_FIELD:
        if F.q ** f >= min_size:
            Fb = ff.extension_field(F.p, F.e * f) if f > 1 else F
            emb = ff.embed_field(F, Fb)
            for _ in range(per_field):
                yield Fb, emb, [Fb.random(rng, nonzero=True) for _ in range(max(1, nvars))]
        f += 1


def generic_irreducible(rep: GammaRep, seed=0, K=4, min_field=None) -> Verdict:
    """Irreducibility over the coefficient field via specialization (sound one-sided test).

    An invariant subspace over the coefficient field is invariant under the
    sample family, and its saturated integral lattice specializes to an
    invariant subspace of the same dimension at every point, so an irreducible
    specialization certifies irreducibility.  'reducible' is returned only with
    a symbolic invariant subspace for the sample family, verified exactly.
    """
    F = rep.F
    rng = random.Random(seed)
    sample = sample_family(F, K)
    mats = [rep(g) for g in sample]
    if rep.dim <= 1:
        return Verdict("irreducible", {"reason": "dimension <= 1"})
    min_size = min_field or (max(2, rep.dim) if rep.recipe.get("kind") != "rho_sigma" else 1)
    tried = []
    for Fb, emb, point in _specializations(F, rep.nvars if rep.coeff == "K" else 1, rng, min_size=min_size):
        gens = [eval_matrix(M, Fb, emb, point) for M in mats]
        v = meataxe_verdict(Fb, gens, seed)
        tried.append({"field": Fb.q, "point": point, "verdict": v.status})
        if v.status == "irreducible":
            return Verdict("irreducible", {"field": Fb.q, "point": point, "sample_size": len(sample), "K": K,
                                           "norton": {k: val for k, val in v.certificate.items()
                                                      if k != "algebra_element"}})
    cert = symbolic_invariant_subspace(rep, mats)
    if cert is not None:
        return Verdict("reducible", dict(cert, sample_size=len(sample), K=K))
    return Verdict("unknown", {"specializations": tried})


def _to_rat(x, nvars):
    if isinstance(x, APoly):
        x = chi_t(x, max(1, nvars), 0)
    return RatFunc(x)


def spin_symbolic(vectors, mats):
    """Span of ``vectors`` (RatFunc column vectors) closed under M v for the given RatFunc matrices."""
    basis = []
    queue = []

    def add(v):
        nonlocal basis
        cand = basis + [v]
        if rank(cand) > len(basis):
            basis = cand
            queue.append(v)
            return True
        return False

    for v in vectors:
        add(v)
    n = len(vectors[0]) if vectors else 0
    while queue and len(basis) < n:
        v = queue.pop()
        for M in mats:
            w = [_dot_generic(r, v) for r in M]
            if any(not x.is_zero() for x in w):
                add(w)
            if len(basis) == n:
                break
    return basis


def _dot_generic(r, v):
    acc = None
    for a, b in zip(r, v):
        t = a * b
        acc = t if acc is None else acc + t
    return acc


def symbolic_invariant_subspace(rep: GammaRep, mats):
    """Look for a proper invariant subspace from eigenvectors of sigma(theta) (rho_sigma recipes)."""
    if rep.recipe.get("kind") != "rho_sigma":
        return None
    F = rep.F
    nv = max(1, rep.nvars)
    d = rep.dim // 2
    # theta image: upper-right block of rho_sigma(E12(theta))
    M = rep(elem12(F, APoly.theta(F)))
    theta_img = [[M[i][d + j] for j in range(d)] for i in range(d)]
    arep = AlgebraRep(F, rep.nvars, theta_img)
    cp = arep.charpoly()
    used = {v for c in cp for v in c.variables()}
    if len(used) > 1:
        return None
    roots = _x_poly_roots_s1(F, cp, rep.nvars)
    one = RatFunc(MPoly.const(F, nv, 1))
    rmats = [[[_to_rat(x, nv) for x in r] for r in Mx] for Mx in mats]
    for root in roots:
        A = [[RatFunc(theta_img[i][j]) - (RatFunc(root) if i == j else one * 0) for j in range(d)] for i in range(d)]
        for v in nullspace(A, one * 0, one):
            vec = list(v) + [one * 0] * d
            W = spin_symbolic([vec], rmats)
            if 0 < len(W) < rep.dim and _is_invariant_symbolic(W, rmats):
                return {"eigenvalue": root.to_json(), "subspace": [[x.to_json() for x in w] for w in W],
                        "dimension": len(W), "verified": True,
                        "note": "invariant under the sample family; for rho_sigma it contains E12/E21(c theta^k)"
                                " for k < d, which together with GL_2(F_q) generate Gamma"}
    return None


def _is_invariant_symbolic(W, mats):
    r = len(W)
    for M in mats:
        for v in W:
            w = [_dot_generic(row, v) for row in M]
            if rank(W + [w]) > r:
                return False
    return True


# ---------------------------------------------------------------------------
# intertwiners


def _coeff_dict(x):
    if isinstance(x, APoly):
        return {(i,): v for i, v in enumerate(x.c) if v}
    if isinstance(x, MPoly):
        return dict(x.terms)
    raise TypeError(type(x).__name__)


def intertwiner(repA: GammaRep, repB: GammaRep, seed=0, nsamples=8, nfresh=20, maxdeg=3):
    """Find an invertible constant M with repA(g) M = M repB(g); verify on fresh samples.

    If none exists, try to certify non-isomorphism (one coefficient variable):
    a primitive polynomial intertwiner cannot vanish under specialization, so
    a zero specialized Hom space rules out any intertwiner over the field.
    """
    F = repA.F
    n = repA.dim
    if repB.dim != n:
        return {"status": "not isomorphic", "reason": "dimensions differ"}
    rng = random.Random(seed)
    sample = sample_family(F, 2) + [random_gamma(F, rng, maxdeg) for _ in range(nsamples)]
    rows = []
    for g in sample:
        A, B = repA(g), repB(g)
        for i in range(n):
            for j in range(n):
                eq = {}
                for m in range(n):
                    for key, v in _coeff_dict(A[i][m]).items():
                        row = eq.setdefault(key, [0] * (n * n))
                        row[m * n + j] = F.add(row[m * n + j], v)
                    for key, v in _coeff_dict(B[m][j]).items():
                        row = eq.setdefault(key, [0] * (n * n))
                        row[i * n + m] = F.sub(row[i * n + m], v)
                rows.extend(r for r in eq.values() if any(r))
    sols = fm_nullspace(F, rows, n * n) if rows else [[1 if i == j else 0 for i in range(n * n)] for j in range(n * n)]
    M = None
    cands = list(sols)
    for _ in range(30):
        if not sols:
            break
        cands.append(_combo(F, sols, rng))
    for c in cands:
        mat = [c[i * n:(i + 1) * n] for i in range(n)]
        if fm_rank(F, mat) == n:
            M = mat
            break
    if M is not None:
        one = repA.one_entry()
        Mc = [[_const_like(one, x) for x in r] for r in M]
        ok = all(mat_eq(mat_mul(repA(g), Mc), mat_mul(Mc, repB(g)))
                 for g in (random_gamma(F, rng, maxdeg) for _ in range(nfresh)))
        return {"status": "isomorphic" if ok else "unknown", "M": M, "verified_fresh": nfresh if ok else 0,
                "solution_space_dim": len(sols)}
    cert = _non_iso_certificate(repA, repB, sample, seed)
    if cert is not None:
        return {"status": "not isomorphic", "certificate": cert, "solution_space_dim": len(sols)}
    return {"status": "unknown", "solution_space_dim": len(sols)}


def _combo(F, vecs, rng):
    out = [0] * len(vecs[0])
    for v in vecs:
        c = F.random(rng)
        if c:
            out = [F.add(a, F.mul(c, b)) for a, b in zip(out, v)]
    return out


def _non_iso_certificate(repA, repB, sample, seed):
    F = repA.F
    nv = repA.nvars if repA.coeff == "K" else 1
    if nv != 1 or (repB.coeff == "K" and repB.nvars != 1):
        return None
    n = repA.dim
    mA = [repA(g) for g in sample]
    mB = [repB(g) for g in sample]
    rng = random.Random(seed)
    for Fb, emb, point in _specializations(F, 1, rng, per_field=2):
        rows = []
        for A, B in zip(mA, mB):
            a = eval_matrix(A, Fb, emb, point)
            b = eval_matrix(B, Fb, emb, point)
            for i in range(n):
                for j in range(n):
                    row = [0] * (n * n)
                    for m in range(n):
                        row[m * n + j] = Fb.add(row[m * n + j], a[i][m])
                        row[i * n + m] = Fb.sub(row[i * n + m], b[m][j])
                    rows.append(row)
        if not fm_nullspace(Fb, rows, n * n):
            return {"field": Fb.q, "point": point, "hom_dim": 0}
    return None


# ---------------------------------------------------------------------------
# carry-free specialization


def carry_free_permutation(l_list, ks, q: int, p: int):
    """Basis permutation P with P . subst(rho_II) = rho^I_(l_total) . P, as an index map.

    Returns ``perm`` with perm[index in rho_II basis] = index in rho^I basis.
    """
    f = 0
    while p ** f < q:
        f += 1
    total = sum(l * q ** k for l, k in zip(l_list, ks))
    tdig = list(digits_base_p(total, p))
    # rho_II factors: for each i, its digits j at absolute position j + f k_i
    fac_pos, fac_dim = [], []
    for l, k in zip(l_list, ks):
        for j, dj in enumerate(digits_base_p(l, p)):
            if dj == 0:  # one-dimensional tensor factor: contributes no index
                continue
            fac_pos.append(j + f * k)
            fac_dim.append(dj + 1)
    tdim = [d + 1 for d in tdig]
    perm = []
    for multi in itertools.product(*[range(d) for d in fac_dim]):
        target = [0] * len(tdig)
        for pos, r in zip(fac_pos, multi):
            if pos < len(target):
                target[pos] = r
            elif r:
                raise ValueError("digit outside the total expansion")
        idx = 0
        for r, d in zip(target, tdim):
            idx = idx * d + r
        perm.append(idx)
    return perm


def carry_free_check(F: GF, l_list, seed=0, count=20, maxdeg=3):
    """Substitute t_i -> t^(q^(k_i)) in rho_II and compare with rho^I_(t, l_total) after permutation."""
    q, p = F.q, F.p
    ks, total = carry_free_exponents(l_list, q, p)
    rII = rho_tensor_II(F, l_list)
    rI = digits_rep(F, total, var=0, nvars=1)
    perm = carry_free_permutation(l_list, ks, q, p)
    one1 = MPoly.const(F, 1, 1)
    values = [MPoly.var(F, 1, 0, q ** k) for k in ks]
    rng = random.Random(seed)
    failures = 0
    n = rII.dim
    for _ in range(count):
        g = random_gamma(F, rng, maxdeg)
        A = [[x.substitute(values, one1) for x in r] for r in rII(g)]
        B = rI(g)
        if any(not (A[i][j] == B[perm[i]][perm[j]]) for i in range(n) for j in range(n)):
            failures += 1
    return {"k": ks, "l_total": total, "permutation": perm, "samples": count, "failures": failures,
            "ok": failures == 0 and rI.dim == n}
