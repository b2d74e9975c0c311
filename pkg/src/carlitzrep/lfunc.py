"""Semi-characters, L-values, omega-values and the identities relating them.

Every check returns a residual *valuation*: the guaranteed lower bound on the
valuation of the difference of the two sides (coefficients beyond the known
precision count as unknown, never as zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algrep import AlgebraRep, CompanionSpec, commute_all, companion_sigma, minimal_polynomial, sigma_eval
from .carlitz import carlitz_action, exp_C
from .fields import GF
from .linalg import mat_identity, mat_mul, mat_sub
from .poly import APoly, MPoly, irreducible_enum, monic_upto
from .series import INF, LambdaElem, Precision, TruncSeries, pitilde

# ---------------------------------------------------------------------------
# semi-characters


class SemiCharacter:
    """sigma(a) = sigma_1(a) ... sigma_s(a) for pairwise commuting algebra representations."""

    def __init__(self, F: GF, factors, d=None, nvars=None):
        self.F = F
        self.factors = list(factors)
        if self.factors:
            d0 = self.factors[0].d
            if any(f.d != d0 for f in self.factors):
                raise ValueError("all factors must have the same dimension")
            d = d0
            nv = max(f.nvars for f in self.factors)
            self.factors = [f.with_nvars(nv) for f in self.factors]
            nvars = nv
        self.d = 1 if d is None else d
        self.nvars = 0 if nvars is None else nvars
        if not commute_all(self.factors):
            raise ValueError("the theta-images must commute pairwise")

    @property
    def s(self):
        return len(self.factors)

    @property
    def one(self):
        return MPoly.const(self.F, self.nvars, 1)

    def __call__(self, a: APoly):
        out = mat_identity(self.d, self.one)
        for f in self.factors:
            out = mat_mul(out, sigma_eval(f, a))
        return out

    def theta_images(self):
        return [f.theta_image for f in self.factors]

    def __repr__(self):
        return f"SemiCharacter(s={self.s}, d={self.d})"


def chi_semicharacter(F: GF, s: int) -> SemiCharacter:
    """sigma(a) = a(t_1) ... a(t_s) (scalar, d = 1)."""
    from .algrep import chi_t

    return SemiCharacter(F, [chi_t(F, s, i) for i in range(s)], d=1, nvars=s)


def conductor(sc: SemiCharacter):
    """Product of the pairwise distinct minimal polynomials (RatFunc coefficients, low -> high)."""
    distinct = []
    for f in sc.factors:
        mp = minimal_polynomial(f)
        if not any(len(m) == len(mp) and all(a == b for a, b in zip(m, mp)) for m in distinct):
            distinct.append(mp)
    from .poly import RatFunc

    out = [RatFunc(MPoly.const(sc.F, sc.nvars, 1))]
    for m in distinct:
        prod = [out[0] * 0 for _ in range(len(out) + len(m) - 1)]
        for i, a in enumerate(out):
            for j, b in enumerate(m):
                prod[i + j] = prod[i + j] + a * b
        out = prod
    return out


# ---------------------------------------------------------------------------
# matrix-of-series helpers


def series_identity(F, d, nvars=0, ram=1):
    one = TruncSeries.const(F, 1, nvars, ram)
    zero = TruncSeries.zero(F, nvars, ram)
    return [[one if i == j else zero for j in range(d)] for i in range(d)]


def mpoly_matrix_to_series(M, nvars, ram=1):
    return [[TruncSeries.const(x.F, x, nvars, ram) for x in r] for r in M]


def matrix_valuation(M):
    best = INF
    for r in M:
        for x in r:
            v = x.valuation()
            if v != INF and (best == INF or v < best):
                best = v
    return best


def matrix_residual(A, B):
    return matrix_valuation(mat_sub(A, B))


def matrix_tau(M, k=1, cap=None):
    return [[x.tau(k, cap) for x in r] for r in M]


def _inv_pow(a: APoly, n: int, prec: int, nvars: int) -> TruncSeries:
    """a^-n to absolute index prec."""
    return (TruncSeries.from_apoly(a, nvars) ** n).inv(prec=prec)


def _scalar_times_mpoly_matrix(s: TruncSeries, M):
    return [[s * x for x in r] for r in M]


# ---------------------------------------------------------------------------
# L-values


def L_value(sc: SemiCharacter, n: int, D: int):
    """sum over monic a of degree <= D of sigma(a) a^-n, exact modulo valuation n(D+1)."""
    if n < 1 or D < 0:
        raise ValueError("need n >= 1 and D >= 0")
    F = sc.F
    P = n * (D + 1)
    acc = None
    for a in monic_upto(F, D):
        term = _scalar_times_mpoly_matrix(_inv_pow(a, n, P, sc.nvars), sc(a))
        acc = term if acc is None else [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, term)]
    return [[x.truncate(P) for x in r] for r in acc]


def _geometric_matrix(X, P, one_matrix):
    """(I - X)^-1 = sum X^k to absolute index P, for v(X) > 0."""
    out = one_matrix
    power = one_matrix
    while True:
        power = [[x.truncate(P) for x in r] for r in mat_mul(power, X)]
        v = matrix_valuation(power)
        if v == INF or v >= P:
            break
        out = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(out, power)]
    return [[x.truncate(P) for x in r] for r in out]


def euler_product(sc: SemiCharacter, n: int, D: int):
    """prod over monic irreducible P of degree <= D of (I - sigma(P) P^-n)^-1, mod valuation n(D+1)."""
    F = sc.F
    Pidx = n * (D + 1)
    I = series_identity(F, sc.d, sc.nvars)
    out = I
    if D < 1:
        return [[x.truncate(Pidx) for x in r] for r in out]
    for p in irreducible_enum(F, D):
        X = _scalar_times_mpoly_matrix(_inv_pow(p, n, Pidx, sc.nvars), sc(p))
        out = mat_mul(out, _geometric_matrix(X, Pidx, I))
        out = [[x.truncate(Pidx) for x in r] for r in out]
    return out


def pellarin_L(F: GF, s: int, n: int, D: int) -> TruncSeries:
    """sum over monic a of degree <= D of a(x_1)...a(x_s) a^-n, variables x_i stored as t_i."""
    return L_value(chi_semicharacter(F, s), n, D)[0][0]


def substitute_series_coeffs(x: TruncSeries, values, nvars_out):
    """Apply t_i -> values[i] (MPoly in nvars_out variables) to every coefficient."""
    F = x.F
    terms = {}
    one = MPoly.const(F, nvars_out, 1)
    for n, c in x.terms():
        terms[n] = c.substitute(values, one)
    return TruncSeries.from_terms(F, terms, nvars=nvars_out, ram=x.ram, prec=x.prec)


# ---------------------------------------------------------------------------
# determinant lemma in a solvable family


def solvable_family(F: GF, s: int) -> SemiCharacter:
    """d = 2: sigma_1(theta) = J = ((0, 1), (u^2, 0)) and sigma_j(theta) = t_j J (j >= 2).

    Variables: t_1 = u, t_2, ..., t_s.  The images commute and have the common
    eigenvalue tuples (u, t_2 u, ..., t_s u) and (-u, -t_2 u, ..., -t_s u)
    (a double eigenvalue in characteristic 2, where the images are still
    simultaneously triangularizable, which is all the determinant identity uses).
    """
    u = MPoly.var(F, s, 0)
    zero, one = MPoly(F, s), MPoly.const(F, s, 1)
    J = [[zero, one], [u * u, zero]]
    reps = [AlgebraRep(F, s, J, {"kind": "companion", "P": "x^2-u^2"})]
    for j in range(1, s):
        tj = MPoly.var(F, s, j)
        reps.append(AlgebraRep(F, s, [[x * tj for x in r] for r in J], {"kind": "scaled", "var": j}))
    return SemiCharacter(F, reps)


def det_L_check(F: GF, s: int, n: int, D: int):
    """Residual valuation of det L_sigma(n) - prod_i Lcal_s(n)|_(x_j = lambda_(i,j)) in the solvable family."""
    sc = solvable_family(F, s)
    L = L_value(sc, n, D)
    det = L[0][0] * L[1][1] - L[0][1] * L[1][0]
    Ls = pellarin_L(F, s, n, D)
    u = MPoly.var(F, s, 0)
    tuples = []
    for sign in (1, -1):
        vals = [u * sign] + [MPoly.var(F, s, j) * u * sign for j in range(1, s)]
        tuples.append(vals)
    rhs = None
    for vals in tuples:
        spec = substitute_series_coeffs(Ls, vals, s)
        rhs = spec if rhs is None else rhs * spec
    return {"residual_valuation": (det - rhs).valuation(), "bound": Fraction(n * (D + 1)),
            "det": det, "rhs": rhs}


# ---------------------------------------------------------------------------
# omega values


def _theta_series_matrix(rep: AlgebraRep, k: int, P: int, step: int):
    """sum_{j : j*step < P} theta_image^j theta^(-j*step), entrywise series to index P."""
    F, d, nv = rep.F, rep.d, rep.nvars
    terms = [[{} for _ in range(d)] for _ in range(d)]
    power = mat_identity(d, rep.one)
    j = 0
    while j * step < P:
        for a in range(d):
            for b in range(d):
                if not power[a][b].is_zero():
                    terms[a][b][j * step] = power[a][b]
        power = mat_mul(power, rep.theta_image)
        j += 1
    return [[TruncSeries.from_terms(F, terms[a][b], nvars=nv, prec=P) for b in range(d)] for a in range(d)]


def pi_matrix(rep: AlgebraRep, P: int):
    """Pi_sigma = prod_{i>=0} (I - theta_image theta^(-q^i))^-1 to index P."""
    q = rep.F.q
    out = None
    i = 0
    while q ** i < P:
        fac = _theta_series_matrix(rep, 0, P, q ** i)
        out = fac if out is None else [[x.truncate(P) for x in r] for r in mat_mul(out, fac)]
        i += 1
    if out is None:
        out = series_identity(rep.F, rep.d, rep.nvars)
    return out


def pi_matrix_inverse(rep: AlgebraRep, P: int):
    """Pi_sigma^-1 = prod_{i>=0} (I - theta_image theta^(-q^i)) to index P."""
    F, d, nv = rep.F, rep.d, rep.nvars
    q = F.q
    I = series_identity(F, d, nv)
    out = I
    i = 0
    while q ** i < P:
        shift = TruncSeries.theta_pow(F, -(q ** i), nv)
        fac = [[I[a][b] - shift * rep.theta_image[a][b] for b in range(d)] for a in range(d)]
        out = mat_mul(out, fac)
        i += 1
    return [[x.truncate(P) for x in r] for r in out]


@dataclass
class OmegaValue:
    matrix: list  # d x d LambdaElem
    rep: AlgebraRep
    prec: int


def omega_value(rep: AlgebraRep, prec: Precision | int = None) -> OmegaValue:
    """omega_sigma = lambda_theta * Pi_sigma, known to valuation >= prec."""
    if prec is None:
        prec = Precision()
    T = prec.working if isinstance(prec, Precision) else int(prec)
    P = T + 2
    Pi = pi_matrix(rep, P)
    lam = LambdaElem.lam(rep.F, rep.nvars)
    return OmegaValue([[lam * x for x in r] for r in Pi], rep, T)


def omega_inverse(rep: AlgebraRep, prec: int):
    """omega_sigma^-1 = lambda^-1 Pi_sigma^-1."""
    Pinv = pi_matrix_inverse(rep, prec + 2)
    return [[LambdaElem.lam_pow(rep.F, -1, x) for x in r] for r in Pinv]


def theta_minus(rep: AlgebraRep):
    """theta_image - theta I as an exact series matrix."""
    F, d, nv = rep.F, rep.d, rep.nvars
    th = TruncSeries.theta_pow(F, 1, nv)
    return [[TruncSeries.const(F, rep.theta_image[a][b], nv) - (th if a == b else 0) for b in range(d)]
            for a in range(d)]


def resolvent(rep: AlgebraRep, P: int):
    """(theta I - theta_image)^-1 = theta^-1 sum_k (theta_image theta^-1)^k to index P."""
    if P <= 1:
        return [[TruncSeries.zero(rep.F, rep.nvars, prec=P) for _ in range(rep.d)] for _ in range(rep.d)]
    M = _theta_series_matrix(rep, 0, P - 1, 1)
    return [[x.shift(-1) for x in r] for r in M]


def check_tau_equation(om: OmegaValue, right_factor=None):
    """Residual valuation of tau(X) - (theta_image - theta I) X for X = omega (times an optional K_s matrix)."""
    X = om.matrix
    if right_factor is not None:
        X = mat_mul(X, mpoly_matrix_to_series(right_factor, om.rep.nvars))
    lhs = matrix_tau(X)
    rhs = mat_mul(theta_minus(om.rep), X)
    return matrix_residual(lhs, rhs)


def exp_formula_rhs(rep: AlgebraRep, T: int):
    P = T + 4
    pi = pitilde(rep.F, P, rep.nvars)
    R = resolvent(rep, P)
    f = [[pi * x for x in r] for r in R]
    return exp_C(f, T)


def check_exp_formula(rep: AlgebraRep, prec: Precision | int = None):
    """Residual valuation of omega_sigma - exp_C(pi (theta I - theta_image)^-1)."""
    if prec is None:
        prec = Precision()
    T = prec.working if isinstance(prec, Precision) else int(prec)
    om = omega_value(rep, T)
    return matrix_residual(om.matrix, exp_formula_rhs(rep, T))


def exp_of_pitilde(F: GF, prec: Precision | int = None):
    if prec is None:
        prec = Precision()
    T = prec.working if isinstance(prec, Precision) else int(prec)
    return exp_C(pitilde(F, T + 4), T).valuation()


# ---------------------------------------------------------------------------
# series identity, Taelman matrix and the s = 1 formula


def omega_product(sc: SemiCharacter, T: int):
    out = None
    for f in sc.factors:
        om = omega_value(f, T).matrix
        out = om if out is None else mat_mul(out, om)
    return out


def series_identity_s(sc: SemiCharacter, D: int, prec: Precision | int = None):
    """Compare sum_{deg a <= D} a^-1 C_a(omega_1)...C_a(omega_s) with L_sigma(1) omega_1...omega_s.

    Both sides are truncated at the same cutoff, so they agree termwise to the
    working precision.  Also reports the valuation of det(L omega...) (invertibility).
    """
    if sc.s < 1:
        raise ValueError("needs s >= 1")
    if prec is None:
        prec = Precision(target=20, guard=4)
    T = prec.working if isinstance(prec, Precision) else int(prec)
    F = sc.F
    oms = [omega_value(f, T + D + 2).matrix for f in sc.factors]
    lhs = None
    for a in monic_upto(F, D):
        prod = None
        for om in oms:
            ca = carlitz_action(a, om)
            prod = ca if prod is None else mat_mul(prod, ca)
        ainv = _inv_pow(a, 1, T + D + 4, sc.nvars)
        term = [[x * ainv for x in r] for r in prod]
        lhs = term if lhs is None else [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(lhs, term)]
    # right side: sum_{deg a <= D} sigma(a) a^-1 to the same precision, times the omega product
    Lfull = None
    for a in monic_upto(F, D):
        term = _scalar_times_mpoly_matrix(_inv_pow(a, 1, T + D + 4, sc.nvars), sc(a))
        Lfull = term if Lfull is None else [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(Lfull, term)]
    W = None
    for om in oms:
        W = om if W is None else mat_mul(W, om)
    rhs = mat_mul(Lfull, W)
    res = matrix_residual(lhs, rhs)
    det_val = _det_valuation(rhs)
    return {"residual_valuation": res, "target": T, "det_valuation": det_val}


def _det_valuation(M):
    d = len(M)
    if d == 1:
        return M[0][0].valuation()
    if d == 2:
        return (M[0][0] * M[1][1] - M[0][1] * M[1][0]).valuation()
    from .linalg import det

    one = M[0][0] * 0 + 1
    return det(M, one).valuation()


def _pi_product(sc: SemiCharacter, P: int):
    out = None
    for f in sc.factors:
        Pi = pi_matrix(f, P)
        out = Pi if out is None else [[x.truncate(P) for x in r] for r in mat_mul(out, Pi)]
    return out


def _pi_inverse_product(sc: SemiCharacter, P: int):
    out = None
    for f in sc.factors:
        Pi = pi_matrix_inverse(f, P)
        out = Pi if out is None else [[x.truncate(P) for x in r] for r in mat_mul(out, Pi)]
    return out


def polynomial_status(x):
    """Classify a LambdaElem or TruncSeries: (no lambda components, negative tail zero, zero)."""
    comps = x.comps if isinstance(x, LambdaElem) else [x]
    lam_zero = all(c is None or c.is_zero() for c in comps[1:])
    c0 = comps[0] if comps[0] is not None else None
    if c0 is None or c0.is_zero():
        return lam_zero, True, lam_zero
    tail_zero = not any(n > 0 for n, _ in c0.terms())
    return lam_zero, tail_zero, False


def taelman_S(sc: SemiCharacter, D: int, prec: Precision | int = None):
    """S_sigma = (omega_1...omega_s)^-1 exp_C(omega_1...omega_s L_sigma(1)), and B_sigma.

    Everything is known modulo valuation about D + 1 (the L-value cutoff).
    """
    if sc.s < 1:
        raise ValueError("needs s >= 1")
    F = sc.F
    q = F.q
    s = sc.s
    P = D + 1
    T = P + 2
    L = L_value(sc, 1, D)
    Pi = _pi_product(sc, T + s + 2)
    M = [[x.truncate(T + s + 2) for x in r] for r in mat_mul(Pi, L)]
    X = [[LambdaElem.lam_pow(F, s, x) for x in r] for r in M]
    E = exp_C(X, T)
    Pinv = _pi_inverse_product(sc, T + s + 4)
    Winv = [[LambdaElem.lam_pow(F, -s, x) for x in r] for r in Pinv]
    S = mat_mul(Winv, E)
    # B = pi^-1 omega_1...omega_s L = (theta U)^-1 lambda^(s-1) Pi L
    U = pitilde(F, T + s + 4, sc.nvars)
    Uinv = U.inv()
    B = [[Uinv * LambdaElem.lam_pow(F, s, x) for x in r] for r in M]
    S_class = [[polynomial_status(x) for x in r] for r in S]
    B_class = [[polynomial_status(x) for x in r] for r in B]
    polynomial = all(a and b for r in S_class for a, b, _ in r)
    zero = all(z for r in S_class for _, _, z in r)
    B_poly = all(a and b for r in B_class for a, b, _ in r)
    expect_zero = s > 1 and (s - 1) % (q - 1) == 0
    I = series_identity(F, sc.d, sc.nvars)
    identity_residual = matrix_residual(S, [[LambdaElem.from_series(x) for x in r] for r in I]) if s == 1 else None
    return {
        "S": S,
        "B": B,
        "S_polynomial": polynomial,
        "S_zero": zero,
        "S_valuation_bound": min(_lam_prec(x) for r in S for x in r),
        "B_polynomial": B_poly,
        "B_defined": expect_zero,
        "expect_zero": expect_zero,
        "identity_residual": identity_residual,
    }


def _lam_prec(x):
    comps = x.comps if isinstance(x, LambdaElem) else [x]
    n = x.F.q - 1
    best = INF
    for j, c in enumerate(comps):
        if c is None or c.prec == INF:
            continue
        p = Fraction(int(c.prec), c.ram) - (Fraction(j, n) if x.F.q > 2 else 0)
        best = p if best == INF else min(best, p)
    return best


def L1_explicit_check(rep: AlgebraRep, D: int, prec: Precision | int = None):
    """Residual valuation of L_sigma(1) - omega^-1 (theta I - theta_image)^-1 pi (s = 1)."""
    if prec is None:
        prec = Precision()
    T = prec.working if isinstance(prec, Precision) else int(prec)
    sc = SemiCharacter(rep.F, [rep])
    L = L_value(sc, 1, D)
    P = T + 4
    Oinv = omega_inverse(rep, P)
    R = resolvent(rep, P)
    pi = pitilde(rep.F, P, rep.nvars)
    rhs = [[x * pi for x in r] for r in mat_mul(Oinv, R)]
    Lm = [[LambdaElem.from_series(x) for x in r] for r in L]
    res = matrix_residual(Lm, rhs)
    return {"residual_valuation": res, "bound": min(T, D + 1)}


# ---------------------------------------------------------------------------
# convenient families


def family(F: GF, name: str) -> AlgebraRep:
    """Named test families: 'chi', 'x^2-t', 'x^2-t*x-1', or any companion polynomial string."""
    from .algrep import chi_t
    from .parse import parse_x_poly

    if name in ("chi", "chi_t"):
        return chi_t(F, 1)
    spec = name.split(":", 1)[1] if name.startswith("companion:") else name
    return companion_sigma(CompanionSpec(F, parse_x_poly(spec, F, 1), 1))
