"""Vectorial Poincare and Eisenstein series at explicit points of the Drinfeld
upper half-plane, and their numerical certification.

Points live in the ramified slice F_q((theta^(-1/2))): a series z with ram = 2
and a nonzero odd-exponent part lies off K_infinity, and |z|_Im is the norm of
that odd part.  Sums over H \\ Gamma run over coprime bottom rows (c, d) of
bounded degree, grouped into complete F_q^x-orbits: the orbit of (c, d)
contributes J^(-w) u^m C rho(delta) for one exact constant matrix C, so
vanishing classes give exactly zero at every cutoff.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algrep import sigma_eval
from .carlitz import imaginary_distance_valuation, u_eval
from .errors import InsufficientPrecision
from .fields import GF
from .gamma_reps import (GammaRep, gamma_det, gl2, group_closure_order, rho_sigma, rho_tensor_II, sample_family)
from .linalg import det as generic_det
from .linalg import kron, mat_mul
from .poly import APoly, MPoly, digits_base_p
from .series import INF, TruncSeries

# ---------------------------------------------------------------------------
# points


@dataclass
class OmegaPoint:
    """A point of the ramified slice of the Drinfeld upper half-plane."""

    z: TruncSeries

    def __post_init__(self):
        if self.z.ram != 2:
            self.z = self.z.with_ram(2)
        self.imaginary_valuation = imaginary_distance_valuation(self.z)

    @classmethod
    def from_terms(cls, F: GF, terms):
        """terms: {exponent k (theta^k, k in (1/2)Z): code}."""
        return cls(TruncSeries.from_terms(F, {int(-2 * Fraction(k)): c for k, c in terms.items()}, ram=2))

    @classmethod
    def theta_half(cls, F: GF, k: int):
        """theta^(k/2) for odd k."""
        return cls(TruncSeries.theta_pow(F, Fraction(k, 2), ram=2))

    def valuation(self):
        return self.z.valuation()

    def imaginary_norm_log(self):
        """log_q |z|_Im."""
        return -self.imaginary_valuation


def mobius_and_factor(g, pt: OmegaPoint, prec_index: int = 200):
    """(g(z), J_g(z)) with J_g(z) = cz + d."""
    z = pt.z
    a, b = (TruncSeries.from_apoly(x, ram=2) for x in g[0])
    c, d = (TruncSeries.from_apoly(x, ram=2) for x in g[1])
    J = c * z + d
    if J.is_zero():
        raise InsufficientPrecision("J vanishes to precision")
    num = a * z + b
    gz = num * J.inv(prec=prec_index - num.v if J.is_exact() else None)
    gz = gz.truncate(prec_index) if gz.prec == INF else gz
    return OmegaPoint(gz), J


def gamma_inverse(g):
    F = g[0][0].F
    dt = gamma_det(g)
    inv = APoly.const(F, F.inv(dt))
    return [[g[1][1] * inv, -g[0][1] * inv], [-g[1][0] * inv, g[0][0] * inv]]


# ---------------------------------------------------------------------------
# cosets


def all_polys(F: GF, D: int):
    """Every polynomial of degree <= D (including 0), constant term fastest."""
    for cs in itertools.product(range(F.q), repeat=D + 1):
        yield APoly(F, list(cs))


@dataclass(frozen=True)
class CosetRep:
    a: APoly
    b: APoly
    c: APoly
    d: APoly

    def matrix(self):
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def degree(self):
        return max(self.c.deg(), self.d.deg(), 0)


def complete(c: APoly, d: APoly) -> CosetRep:
    """(a, b) with ad - bc = 1, normalized by deg a < deg c (c != 0), (d^-1, 0) when c = 0."""
    F = c.F
    if c.is_zero():
        if d.deg() != 0:
            raise ValueError("bottom row is not coprime")
        return CosetRep(APoly.const(F, F.inv(d.c[0])), APoly(F), c, d)
    g, s, t = d.xgcd(c)  # s d + t c = 1
    if g.deg() != 0:
        raise ValueError("bottom row is not coprime")
    a, b = s, -t
    k = a // c
    a, b = a - k * c, b - k * d
    return CosetRep(a, b, c, d)


def coset_enum(F: GF, D: int):
    """All coprime (c, d) with max degree <= D, each exactly once (deterministic order)."""
    for c in all_polys(F, D):
        for d in all_polys(F, D):
            if c.is_zero() and d.is_zero():
                continue
            if c.gcd(d).deg() == 0:
                yield complete(c, d)


def orbit_reps(F: GF, D: int):
    """One coprime pair per F_q^x-orbit: c monic, or c = 0 and d = 1."""
    yield complete(APoly(F), APoly.const(F, 1))
    for c in all_polys(F, D):
        if c.is_zero() or c.lc() != 1:
            continue
        for d in all_polys(F, D):
            if c.gcd(d).deg() == 0:
                yield complete(c, d)


# ---------------------------------------------------------------------------
# normal depth


def h_sample(F: GF, K: int = 4):
    out = []
    for u in F.nonzero():
        for k in range(-1, K + 1):
            b = APoly(F) if k < 0 else APoly.theta(F, k)
            out.append(gl2(F, APoly.const(F, u), b, 0, 1))
    return out


def normal_depth(rep: GammaRep, L: int, K: int = 4) -> bool:
    N = rep.dim
    if not 1 <= L <= N:
        return False
    one = rep.one_entry()
    for h in h_sample(rep.F, K):
        M = rep(h)
        for i in range(N - L, N):
            for j in range(N):
                want = one if (j >= N - L and j - (N - L) == i - (N - L)) else one * 0
                if not M[i][j] == want:
                    return False
    return True


def infer_depth(rep: GammaRep, K: int = 4):
    best = None
    for L in range(1, rep.dim + 1):
        if normal_depth(rep, L, K):
            best = L
    return best


def finite_image_order(rep: GammaRep, K: int = 2):
    """Order of the group generated by the images of the sample family, when they are constant matrices."""
    mats = [rep(g) for g in sample_family(rep.F, K)]
    F = rep.F
    codes = []
    for M in mats:
        row = []
        for r in M:
            out = []
            for x in r:
                if isinstance(x, MPoly) and x.is_constant():
                    out.append(x.constant_term())
                elif isinstance(x, APoly) and x.deg() <= 0:
                    out.append(x.c[0] if x.c else 0)
                else:
                    return None
            row.append(out)
        codes.append(row)
    return group_closure_order(F, codes)


# ---------------------------------------------------------------------------
# series of matrices


def _entry_series(x, ram=2):
    if isinstance(x, APoly):
        return TruncSeries.from_apoly(x, ram=ram)
    if isinstance(x, MPoly):
        return TruncSeries.const(x.F, x, x.n, ram)
    if isinstance(x, TruncSeries):
        return x.with_ram(ram)
    raise TypeError(type(x).__name__)


def _rep_growth(rep: GammaRep):
    """Bound e with deg_theta(entries of rep(delta)) <= e * max(deg c, deg d, deg a, deg b)."""
    r = rep.recipe
    kind = r.get("kind")
    if rep.coeff == "K":
        return 0
    if kind == "tautological":
        return 1
    if kind in ("sym", "star", "digits"):
        return r.get("l", r.get("r"))
    if kind == "det_twist":
        return _rep_growth(GammaRep(rep.F, rep.dim, None, r["base"], rep.coeff, rep.nvars))
    return None


def tail_constant(pt: OmegaPoint):
    """c0 with v(cz + d) <= -(max(deg c, deg d) - c0) for every nonzero (c, d)."""
    vi = pt.imaginary_valuation
    vz = pt.valuation()
    return max(Fraction(0), vi, vi - vz)


@dataclass
class SeriesEvalReport:
    value: list
    cutoff: int
    guaranteed_valuation: Fraction
    deltas: list = field(default_factory=list)
    status: str = "ok"
    terms: int = 0
    notes: dict = field(default_factory=dict)

    def to_json(self):
        return {"cutoff": self.cutoff, "guaranteed_valuation": str(self.guaranteed_valuation),
                "deltas": [str(x) for x in self.deltas], "status": self.status, "terms": self.terms,
                "value": [[x.to_json() for x in r] for r in self.value], "notes": self.notes}


def orbit_factor(rep: GammaRep, L: int, w: int, m: int):
    """C = sum_lambda lambda^(2m - w) * (last L rows of rep(diag(1, lambda)))."""
    F = rep.F
    N = rep.dim
    acc = None
    for lam in F.nonzero():
        M = rep(gl2(F, 1, 0, 0, APoly.const(F, lam)))
        k = (2 * m - w) % (F.q - 1)
        s = F.pow_int(lam, k)
        rows = [[x * _const(x, s) for x in M[i]] for i in range(N - L, N)]
        acc = rows if acc is None else [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(acc, rows)]
    return acc


def _const(x, code):
    if isinstance(x, APoly):
        return APoly.const(x.F, code)
    return MPoly.const(x.F, x.n, code)


def _is_zero_matrix(M):
    return all(x.is_zero() for r in M for x in r)


def eisenstein_E(w: int, m: int, rep: GammaRep, pt: OmegaPoint, D: int, L: int = None,
                 max_valuation=None, deltas=False) -> SeriesEvalReport:
    """Truncated E_(w,m,rho)(z) = sum over cosets of det(delta)^m J^(-w) u(delta z)^m rho(delta)_L."""
    if w <= 0 or m < 0:
        raise ValueError("need w > 0 and m >= 0")
    F = rep.F
    L = L or infer_depth(rep)
    if L is None:
        raise ValueError("representation is not normal to any depth on the H-sample")
    N = rep.dim
    C = orbit_factor(rep, L, w, m)
    c0 = tail_constant(pt)
    growth = _rep_growth(rep)
    if growth is None or w <= growth:
        raise ValueError("no tail bound for this representation and weight")
    bound = (w - growth) * (D + 1) - w * c0
    if max_valuation is not None:
        bound = min(bound, Fraction(max_valuation))
    idx = math.ceil(bound * 2)
    notes = {"tail_constant": str(c0), "orbit_factor_zero": _is_zero_matrix(C)}
    if m > 0:
        notes["tail_bound"] = "heuristic for m > 0 (|u| not bounded)"
    zero = TruncSeries.zero(F, rep.nvars if rep.coeff == "K" else 0, 2, idx)
    if _is_zero_matrix(C):
        value = [[zero for _ in range(N)] for _ in range(L)]
        return SeriesEvalReport(value, D, bound, [], "exact zero (orbit cancellation)", 0, notes)
    acc = [[zero for _ in range(N)] for _ in range(L)]
    count = 0
    for cr in orbit_reps(F, D):
        Jw = (_entry_series(cr.c) * pt.z + _entry_series(cr.d)) ** w
        vJ = Jw.valuation()
        if vJ != INF and -vJ >= Fraction(idx, 2):  # term vanishes below the bound
            continue
        coef = Jw.inv(prec=idx) if Jw.is_exact() else Jw.inv().truncate(idx)
        if m > 0:
            J = _entry_series(cr.c) * pt.z + _entry_series(cr.d)
            num = _entry_series(cr.a) * pt.z + _entry_series(cr.b)
            gz = (num * J.inv(prec=idx + 40 - num.v)).truncate(idx + 40)
            coef = coef * (u_eval(gz, Fraction(idx, 2) + 2) ** m)
        block_ = mat_mul(C, rep(cr.matrix()))
        for i in range(L):
            for j in range(N):
                x = block_[i][j]
                if not x.is_zero():
                    acc[i][j] = acc[i][j] + coef * _entry_series(x)
        count += 1
    value = [[x.truncate(idx) for x in r] for r in acc]
    return SeriesEvalReport(value, D, bound, [], "ok", count, notes)


def eisenstein_E_naive(w: int, m: int, rep: GammaRep, pt: OmegaPoint, D: int, L: int, max_valuation):
    """Direct sum over every coset (no orbit grouping), m = 0 only; for cross-checks."""
    if m != 0:
        raise ValueError("naive sum implemented for m = 0")
    F = rep.F
    N = rep.dim
    idx = math.ceil(Fraction(max_valuation) * 2)
    zero = TruncSeries.zero(F, rep.nvars if rep.coeff == "K" else 0, 2, idx)
    acc = [[zero for _ in range(N)] for _ in range(L)]
    for cr in coset_enum(F, D):
        Jw = (_entry_series(cr.c) * pt.z + _entry_series(cr.d)) ** w
        coef = Jw.inv(prec=idx)
        M = rep(cr.matrix())
        for i in range(L):
            for j in range(N):
                x = M[N - L + i][j]
                if not x.is_zero():
                    acc[i][j] = acc[i][j] + coef * _entry_series(x)
    return [[x.truncate(idx) for x in r] for r in acc]


def matrix_valuation(M):
    best = INF
    for r in M:
        for x in r:
            v = x.valuation()
            if best == INF or (v != INF and v < best):
                best = v
    return best


def matrix_residual(A, B):
    return matrix_valuation([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(A, B)])


# ---------------------------------------------------------------------------
# Eisenstein series G and the factorization G = L E


def tensor_rho_sigma(reps) -> tuple:
    """rho = rho_sigma_1 (x) ... (x) rho_sigma_s, basis reordered so the all-bottom indices come last.

    Returns (GammaRep, permutation) where permutation lists Kronecker indices in the new order.
    """
    F = reps[0].F
    d = reps[0].d
    s = len(reps)
    nv = max(r.nvars for r in reps)
    reps = [r.with_nvars(nv) for r in reps]
    rs = [rho_sigma(r) for r in reps]
    multi = list(itertools.product(range(2 * d), repeat=s))
    bottom = [k for k, mi in enumerate(multi) if all(i >= d for i in mi)]
    rest = [k for k, mi in enumerate(multi) if not all(i >= d for i in mi)]
    perm = rest + bottom

    def apply(g):
        M = None
        for r in rs:
            x = r(g)
            M = x if M is None else kron(M, x)
        return [[M[i][j] for j in perm] for i in perm]

    rep = GammaRep(F, (2 * d) ** s, apply, {"kind": "tensor_rho_sigma", "s": s, "d": d}, "K", nv)
    return rep, perm


def L_tensor(reps, w: int, D: int):
    """sum over monic g of degree <= D of g^-w sigma_1(g) (x) ... (x) sigma_s(g)."""
    from .lfunc import _inv_pow
    from .poly import monic_upto

    nv = max(r.nvars for r in reps)
    reps = [r.with_nvars(nv) for r in reps]
    P = w * (D + 1)
    acc = None
    for g in monic_upto(reps[0].F, D):
        M = None
        for r in reps:
            x = sigma_eval(r, g)
            M = x if M is None else kron(M, x)
        gi = _inv_pow(g, w, P, nv)
        term = [[gi * TruncSeries.const(x.F, x, nv) for x in row] for row in M]
        acc = term if acc is None else [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(acc, term)]
    return [[x.truncate(P) for x in r] for r in acc]


def eisenstein_G(w: int, reps, pt: OmegaPoint, D: int, max_valuation=None):
    """Truncated G_(w,sigma)(z) over nonzero (a, b) with max degree <= D (columns in the reordered basis)."""
    F = reps[0].F
    d = reps[0].d
    s = len(reps)
    nv = max(r.nvars for r in reps)
    reps = [r.with_nvars(nv) for r in reps]
    _, perm = tensor_rho_sigma(reps)
    c0 = tail_constant(pt)
    bound = w * (D + 1 - c0)
    if max_valuation is not None:
        bound = min(bound, Fraction(max_valuation))
    idx = math.ceil(bound * 2)
    # orbit factor: lambda^(-w) * lambda^s
    lam_sum = 0
    for lam in F.nonzero():
        lam_sum = F.add(lam_sum, F.pow_int(lam, (s - w) % (F.q - 1)))
    rows, cols = d ** s, (2 * d) ** s
    zero = TruncSeries.zero(F, nv, 2, idx)
    acc = [[zero for _ in range(cols)] for _ in range(rows)]
    count = 0
    if lam_sum:
        lam_c = MPoly.const(F, nv, lam_sum)
        for a in all_polys(F, D):
            for b in all_polys(F, D):
                if a.is_zero() and b.is_zero():
                    continue
                lead = a.lc() if not a.is_zero() else b.lc()
                if lead != 1:
                    continue
                Jw = (_entry_series(a) * pt.z + _entry_series(b)) ** w
                if -Jw.valuation() >= Fraction(idx, 2):
                    continue
                coef = Jw.inv(prec=idx)
                M = None
                for r in reps:
                    x = [sa + sb for sa, sb in zip(sigma_eval(r, a), sigma_eval(r, b))]
                    M = x if M is None else kron(M, x)
                for i in range(rows):
                    for jj, j in enumerate(perm):
                        x = M[i][j]
                        if not x.is_zero():
                            acc[i][jj] = acc[i][jj] + coef * _entry_series(x * lam_c)
                count += 1
    value = [[x.truncate(idx) for x in r] for r in acc]
    return SeriesEvalReport(value, D, bound, [], "ok" if lam_sum else "exact zero (orbit cancellation)", count,
                            {"tail_constant": str(c0)})


def G_equals_LE(w: int, reps, pt: OmegaPoint, D: int, max_valuation=None):
    """Residual valuation of G_(w,sigma) - L_sigma(w) E_(w,0,rho) against the common guaranteed bound."""
    rep, _ = tensor_rho_sigma(reps)
    d = reps[0].d
    s = len(reps)
    G = eisenstein_G(w, reps, pt, D, max_valuation)
    E = eisenstein_E(w, 0, rep, pt, D, L=d ** s, max_valuation=max_valuation)
    Lw = [[x.with_ram(2) for x in r] for r in L_tensor(reps, w, D)]
    LE = mat_mul(Lw, E.value)
    common = min(G.guaranteed_valuation, E.guaranteed_valuation)
    res = matrix_residual(G.value, LE)
    return {"residual_valuation": res, "bound": common, "ok": res >= common, "G_terms": G.terms,
            "E_terms": E.terms, "G_zero": G.status.startswith("exact"), "E_zero": E.status.startswith("exact")}


# ---------------------------------------------------------------------------
# checks


def vanishing_check(w: int, m: int, rep: GammaRep, pt: OmegaPoint, cutoffs, L=None):
    """For w - 1 != 2m mod (q - 1): E is exactly zero at every cutoff."""
    out = []
    for D in cutoffs:
        r = eisenstein_E(w, m, rep, pt, D, L=L, max_valuation=12)
        out.append({"D": D, "exact_zero": r.status.startswith("exact")
                    or all(x.is_zero() and x.prec >= math.ceil(r.guaranteed_valuation * 2) for row in r.value
                           for x in row)})
    return out


def ulimit_check(w: int, rep: GammaRep, pt: OmegaPoint, D: int, L=None):
    """E_(w,0,rho) - kappa (0, ..., 0, I_L) has positive valuation at points with large |z|_Im.

    The q - 1 cosets with bottom row (0, mu), mu in F_q^x, all survive the limit,
    so kappa = q - 1 = -1 in F_q (kappa = 1 only in characteristic 2).  Both the
    kappa-normalized and the literal (kappa = 1) residuals are reported.
    """
    L = L or infer_depth(rep)
    r = eisenstein_E(w, 0, rep, pt, D, L=L)
    N = rep.dim
    F = rep.F
    nv = rep.nvars if rep.coeff == "K" else 0
    kappa = F.neg(1)

    def target(c):
        return [[TruncSeries.const(F, c if j == N - L + i else 0, nv, 2) for j in range(N)] for i in range(L)]

    v = matrix_residual(r.value, target(kappa))
    v_literal = matrix_residual(r.value, target(1))
    return {"residual_valuation": v, "literal_residual_valuation": v_literal, "kappa": kappa,
            "guaranteed": r.guaranteed_valuation, "ok": v > 0}


def functional_eq_check(w: int, m: int, rep: GammaRep, pt: OmegaPoint, g, cutoffs, L=None):
    """Diagnostic: E(g z) vs det(g)^(-m) J_g(z)^w E(z) rho(g)^-1 at increasing cutoffs.

    ``g`` is one group element or a list of them; E(z) is computed once per cutoff.
    Returns one result dict (or a list of them, matching ``g``).
    """
    single = not (isinstance(g, list) and g and isinstance(g[0][0], list))
    elements = [g] if single else g
    L = L or infer_depth(rep)
    F = rep.F
    prepared = []
    for h in elements:
        gz, J = mobius_and_factor(h, pt)
        rinv = [[_entry_series(x) for x in r] for r in rep(gamma_inverse(h))]
        dt = F.pow_int(F.inv(gamma_det(h)), m % (F.q - 1))
        prepared.append((gz, J ** w, rinv, dt))
    rows = [[] for _ in elements]
    for D in cutoffs:
        right = eisenstein_E(w, m, rep, pt, D, L=L)
        for k, (gz, Jw, rinv, dt) in enumerate(prepared):
            left = eisenstein_E(w, m, rep, gz, D, L=L)
            R = [[(x * Jw).scale_code(dt) for x in r] for r in right.value]
            R = mat_mul(R, rinv)
            res = matrix_residual(left.value, R)
            rows[k].append({"D": D, "residual_valuation": res,
                            "bounds": [left.guaranteed_valuation, right.guaranteed_valuation]})
    out = []
    for rs in rows:
        vals = [r["residual_valuation"] for r in rs]
        improving = all(b > a for a, b in zip(vals, vals[1:]))
        out.append({"rows": rs, "strictly_improving": improving, "status": "diagnostic"})
    return out[0] if single else out


def minor_certificate(M, rows, cols):
    """Valuation and precision of det(M[rows, cols])."""
    sub = [[M[i][j] for j in cols] for i in rows]
    one = sub[0][0] * 0 + 1
    dt = generic_det(sub, one)
    return dt.valuation(), dt.precision()


def rank_and_independence(w: int, m: int, rep: GammaRep, points, D: int, L=None, row=0):
    """Certified rank lower bound (nonzero L x L minor at some point) and independence of one row's entries."""
    L = L or infer_depth(rep)
    N = rep.dim
    evals = [eisenstein_E(w, m, rep, pt, D, L=L).value for pt in points]
    rank_cert = None
    for k, Ev in enumerate(evals):
        for cols in itertools.combinations(range(N), L):
            v, p = minor_certificate(Ev, list(range(L)), cols)
            if v < p:
                rank_cert = {"point": k, "columns": list(cols), "minor_valuation": v, "precision": p}
                break
        if rank_cert:
            break
    indep = None
    if len(points) >= N:
        Mx = [[evals[k][row][j] for j in range(N)] for k in range(N)]
        v, p = minor_certificate(Mx, list(range(N)), list(range(N)))
        indep = {"row": row, "det_valuation": v, "precision": p, "independent": v < p}
    return {"rank_lower_bound": L if rank_cert else 0, "rank_certificate": rank_cert,
            "independence": indep, "status": "certified" if rank_cert else "inconclusive"}


def F_l_column(pt: OmegaPoint, l_list, p: int):
    """Kronecker product over i and digits j of (z^(p^j (r - k)))_(k = 0..r), r = digit."""
    col = None
    for l in l_list:
        for j, r in enumerate(digits_base_p(l, p)):
            zj = pt.z ** (p ** j)
            part = [[zj ** (r - k)] for k in range(r + 1)]
            col = part if col is None else kron(col, part)
    return col


def poincare_E(w: int, m: int, F: GF, pt: OmegaPoint, D: int, max_valuation):
    """Scalar Poincare series P_(w,m)(z) = sum over cosets of det^m J^-w u^m (orbit-summed, m = 0 exact)."""
    from .gamma_reps import GammaRep as _GR

    triv = _GR(F, 1, lambda g: [[MPoly.const(F, 0, 1)]], {"kind": "trivial"}, "K", 0)
    return eisenstein_E(w, m, triv, pt, D, L=1, max_valuation=max_valuation)


def poincare_specialize_check(w: int, m: int, F: GF, l_list, pt: OmegaPoint, D: int, max_valuation=20):
    """(E_(w,m,rho_II) . F_l)_(t_i = theta) vs P_(w', m) with w' = w - sum l_i, evaluated termwise."""
    p = F.p
    rep = rho_tensor_II(F, l_list)
    N = rep.dim
    wp = w - sum(l_list)
    idx = math.ceil(Fraction(max_valuation) * 2)
    col = F_l_column(pt, l_list, p)
    theta = APoly.theta(F)
    left = TruncSeries.zero(F, 0, 2, idx)
    right = TruncSeries.zero(F, 0, 2, idx)
    if m > 0:
        raise ValueError("specialization check implemented for m = 0")
    if wp <= 0:
        raise ValueError("need w > l_1 + ... + l_s")
    # diag(1, lambda) scales the last row of rho_II by lambda^(sum l): both sides share the orbit factor
    lam_sum = 0
    for lam in F.nonzero():
        lam_sum = F.add(lam_sum, F.pow_int(lam, (2 * m - wp) % (F.q - 1)))
    if lam_sum:
        for cr in orbit_reps(F, D):
            J = _entry_series(cr.c) * pt.z + _entry_series(cr.d)
            row = rep(cr.matrix())[N - 1]
            spec = [x.substitute([theta] * rep.nvars, APoly.const(F, 1)) for x in row]
            val = None
            for x, cz in zip(spec, col):
                t = _entry_series(x) * cz[0]
                val = t if val is None else val + t
            Jinv = (J ** w).inv(prec=idx - val.v)
            left = left + (Jinv * val).scale_code(lam_sum).truncate(idx)
            right = right + (J ** wp).inv(prec=idx).scale_code(lam_sum)
    res = (left - right).valuation()
    return {"w_prime": wp, "residual_valuation": res, "precision": Fraction(idx, 2),
            "status": "diagnostic", "left_zero": left.is_zero()}


def conjecture_explore(w: int, reps, points, D: int):
    """Exploration only: G_(1,sigma) and E_(1,0,rho) at sample points and their proportionality residual."""
    out = []
    for pt in points:
        r = G_equals_LE(w, reps, pt, D)
        out.append({"residual_valuation": str(r["residual_valuation"]), "bound": str(r["bound"])})
    return {"status": "exploration", "points": out}
