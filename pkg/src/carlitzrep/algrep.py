"""Algebra representations sigma: A -> Mat_d(K_s) fixed by theta_image = sigma(theta),
companion representations, and faithfulness / irreducibility predicates."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import fields as ff
from .errors import NotMonic, Unsupported
from .fields import FqElem, GF
from .linalg import charpoly_berkowitz, mat_eq, mat_identity, mat_mul, rref
from .poly import APoly, MPoly, RatFunc, chi_t_eval


@dataclass
class Verdict:
    """Outcome of a decision procedure: 'irreducible', 'reducible' or 'unknown'
    (or 'faithful' / 'not faithful'), with a JSON-friendly certificate."""

    status: str
    certificate: dict = field(default_factory=dict)

    def __bool__(self):
        return self.status in ("irreducible", "faithful")


class AlgebraRep:
    """sigma(a) = a(theta_image) for a d x d matrix over F_q[t_1..t_s]."""

    def __init__(self, F: GF, nvars: int, theta_image, provenance=None):
        self.F = F
        self.nvars = nvars
        self.theta_image = [[_as_mpoly(F, nvars, x) for x in row] for row in theta_image]
        self.d = len(self.theta_image)
        if any(len(r) != self.d for r in self.theta_image):
            raise ValueError("theta_image must be square")
        self.provenance = provenance or {"kind": "matrix"}

    @property
    def one(self):
        return MPoly.const(self.F, self.nvars, 1)

    @property
    def zero(self):
        return MPoly(self.F, self.nvars)

    def __call__(self, a: APoly):
        return sigma_eval(self, a)

    def charpoly(self):
        """det(xI - theta_image), coefficients (MPoly) low -> high."""
        return charpoly_berkowitz(self.theta_image, self.one)

    def commutes_with(self, other: "AlgebraRep"):
        return mat_eq(mat_mul(self.theta_image, other.theta_image), mat_mul(other.theta_image, self.theta_image))

    def with_nvars(self, nvars):
        return AlgebraRep(self.F, nvars, [[x.extend(nvars) for x in r] for r in self.theta_image], self.provenance)

    def __repr__(self):
        return f"AlgebraRep(d={self.d}, theta->{self.theta_image})"

    def to_json(self):
        return {"d": self.d, "nvars": self.nvars, "provenance": self.provenance,
                "theta_image": [[x.to_json() for x in r] for r in self.theta_image]}


def _as_mpoly(F, nvars, x):
    if isinstance(x, MPoly):
        return x.extend(nvars)
    if isinstance(x, RatFunc):
        return x.as_poly().extend(nvars)
    if isinstance(x, FqElem):
        return MPoly.const(F, nvars, x.v)
    if isinstance(x, int):
        return MPoly.const(F, nvars, x % F.p)
    raise TypeError(f"cannot use {x!r} as a matrix entry")


@dataclass
class CompanionSpec:
    """P = x^d + P_(d-1) x^(d-1) + ... + P_0 with coefficients in F_q[t_1..t_s]."""

    F: GF
    coeffs: list  # MPoly, low -> high, including the leading 1
    nvars: int = 1

    @property
    def d(self):
        return len(self.coeffs) - 1


def chi_t(F: GF, nvars=1, var=0) -> AlgebraRep:
    """The scalar representation theta -> t_var."""
    return AlgebraRep(F, nvars, [[MPoly.var(F, nvars, var)]], {"kind": "chi", "var": var})


def companion_sigma(spec: CompanionSpec) -> AlgebraRep:
    F, nv = spec.F, spec.nvars
    cs = [_as_mpoly(F, nv, c) for c in spec.coeffs]
    d = len(cs) - 1
    if d < 1:
        raise NotMonic("companion polynomial must have degree >= 1")
    lead = cs[-1]
    if not (lead.is_constant() and lead.constant_term() == 1):
        raise NotMonic("companion polynomial must be monic in x")
    one, zero = MPoly.const(F, nv, 1), MPoly(F, nv)
    M = [[zero for _ in range(d)] for _ in range(d)]
    for i in range(d - 1):
        M[i][i + 1] = one
    for j in range(d):
        M[d - 1][j] = -cs[j]
    return AlgebraRep(F, nv, M, {"kind": "companion", "P": [c.to_json() for c in cs]})


def sigma_eval(rep: AlgebraRep, a: APoly):
    """sigma(a) = a(theta_image) by Horner's rule."""
    if a.is_zero():
        return [[rep.zero for _ in range(rep.d)] for _ in range(rep.d)]
    return chi_t_eval(a, rep.theta_image)


def reduce_mod_monic(F, num, P):
    """Remainder of a polynomial in x (MPoly coefficients) by a monic P."""
    num = list(num)
    d = len(P) - 1
    while len(num) - 1 >= d:
        c = num.pop()
        k = len(num) - d
        for j in range(d):
            num[k + j] = num[k + j] - c * P[j]
    while len(num) < d:
        num.append(MPoly(F, P[0].n))
    return num


def companion_reduction_check(spec: CompanionSpec, a: APoly) -> bool:
    """sigma_P(a) w == a w (mod P) where w = (1, x, ..., x^(d-1))^T."""
    rep = companion_sigma(spec)
    S = sigma_eval(rep, a)
    F, nv = spec.F, spec.nvars
    P = [_as_mpoly(F, nv, c) for c in spec.coeffs]
    for i in range(rep.d):
        # a(x) * x^i as a polynomial in x with constant coefficients
        poly = [MPoly(F, nv)] * i + [MPoly.const(F, nv, c) for c in a.c]
        rem = reduce_mod_monic(F, poly, P) if poly else [MPoly(F, nv)] * rep.d
        if any(not (S[i][j] - rem[j]).is_zero() for j in range(rep.d)):
            return False
    return True


# ---------------------------------------------------------------------------
# predicates


def is_faithful(rep: AlgebraRep) -> Verdict:
    """Faithful iff the characteristic polynomial has a coefficient outside F_q.

    All eigenvalues lie in the algebraic closure of F_q exactly when every
    coefficient of the characteristic polynomial is algebraic over F_q, and F_q
    is algebraically closed in K_s, so the test is exact for every s.
    """
    cp = rep.charpoly()
    for k, c in enumerate(cp):
        if not c.is_constant():
            return Verdict("faithful", {"charpoly": [x.to_json() for x in cp], "nonconstant_coefficient": k})
    return Verdict("not faithful", {"charpoly": [x.to_json() for x in cp]})


def _x_poly_roots_s1(F, cp, nvars):
    """Roots in F_q[t] (hence in F_q(t)) of a monic x-polynomial with coefficients in F_q[t], one variable."""
    c0 = cp[0]
    if c0.is_zero():
        return [MPoly(F, nvars)]
    var = (c0.variables() or [0])[0]
    up, _ = c0.to_upoly()
    # every root divides the constant term: candidates are unit multiples of divisor products
    facs = ff.up_factor(F, up)
    divisors = [[1]]
    for g, k in facs:
        new = []
        for dv in divisors:
            cur = dv
            for _ in range(k + 1):
                new.append(cur)
                cur = ff.up_mul(F, cur, g)
        divisors = new
    roots = []
    for dv in divisors:
        for u in F.nonzero():
            r = MPoly.from_upoly(F, nvars, ff.up_scale(F, dv, u), var)
            acc = MPoly(F, nvars)
            for c in reversed(cp):
                acc = acc * r + c
            if acc.is_zero():
                roots.append(r)
    return roots


MAX_SPECIALIZATION_FIELD = 256


def _eisenstein_prime(F, cp):
    """An irreducible pi in F_q[t] with pi | c_i (i < d) and pi^2 not dividing c_0, if any (one variable)."""
    c0 = cp[0]
    if c0.is_zero() or c0.is_constant():
        return None
    up0, var = c0.to_upoly()
    for pi, k in ff.up_factor(F, up0):
        if k != 1:
            continue
        ok = True
        for c in cp[1:-1]:
            if c.is_zero():
                continue
            if set(c.variables()) - {var}:
                return None
            uc, _ = c.to_upoly()
            if ff.up_mod(F, uc, pi):
                ok = False
                break
        if ok:
            return pi
    return None


def _specialize_irreducible(F: GF, cp, nvars, rng, tries=12):
    """Try to certify irreducibility by specializing t -> zeta in extension fields."""
    d = len(cp) - 1
    for k in range(1, tries + 1):
        f = max(1, (k + 1) // 2)
        if F.q ** f > MAX_SPECIALIZATION_FIELD:
            break
        Fb = ff.extension_field(F.p, F.e * f)
        emb = ff.embed_field(F, Fb)
        zeta = [Fb.random(rng) for _ in range(nvars)]
        coeffs = []
        for c in cp:
            acc = 0
            for mono, v in c.terms.items():
                term = emb[v]
                for i, e in enumerate(mono):
                    if e:
                        term = Fb.mul(term, Fb.pow_int(zeta[i], e))
                acc = Fb.add(acc, term)
            coeffs.append(acc)
        spec = ff.up_trim(coeffs)
        # a factorization over K_s would survive specialization into F_q(zeta)
        if len(spec) - 1 == d and ff.up_is_irreducible(Fb, spec):
            return {"field": Fb.q, "point": zeta, "specialized": spec}
    return None


def is_irreducible_poly(F: GF, cp, nvars, seed=0) -> Verdict:
    """Irreducibility over K_s of a monic polynomial in x with F_q[t] coefficients.

    Exact for s <= 1 and degree <= 3 (reducible iff it has a root, which then
    lies in F_q[t] and divides the constant term).  Otherwise a specialization
    that stays irreducible certifies irreducibility (a factorization over K_s
    would specialize); failing that the answer is 'unknown'.
    """
    d = len(cp) - 1
    if d <= 0:
        return Verdict("reducible", {"reason": "constant"})
    if d == 1:
        return Verdict("irreducible", {"reason": "degree one"})
    used = sorted({v for c in cp for v in c.variables()})
    if not used:
        up = [c.constant_term() for c in cp]
        facs = ff.up_factor(F, up)
        ok = len(facs) == 1 and facs[0][1] == 1
        return Verdict("irreducible" if ok else "reducible", {"factors": [[f, k] for f, k in facs]})
    if len(used) == 1 and d <= 3:
        roots = _x_poly_roots_s1(F, cp, nvars)
        if roots:
            return Verdict("reducible", {"root": roots[0].to_json()})
        return Verdict("irreducible", {"reason": "no root in F_q(t) and degree <= 3"})
    if len(used) == 1:
        roots = _x_poly_roots_s1(F, cp, nvars)
        if roots:
            return Verdict("reducible", {"root": roots[0].to_json()})
        pi = _eisenstein_prime(F, cp)
        if pi is not None:
            return Verdict("irreducible", {"eisenstein_prime": pi})
    cert = _specialize_irreducible(F, cp, nvars, random.Random(seed))
    if cert is not None:
        return Verdict("irreducible", {"specialization": cert})
    return Verdict("unknown", {"reason": "no irreducible specialization found"})


def is_irreducible_sigma(rep: AlgebraRep, seed=0) -> Verdict:
    return is_irreducible_poly(rep.F, rep.charpoly(), rep.nvars, seed)


def minimal_polynomial(rep: AlgebraRep):
    """Minimal polynomial of theta_image over K_s (RatFunc coefficients, monic, low -> high)."""
    d = rep.d
    one = RatFunc(rep.one)
    M = [[RatFunc(x) for x in r] for r in rep.theta_image]
    powers = [mat_identity(d, one)]
    for k in range(1, d + 1):
        powers.append(mat_mul(powers[-1], M))
        # columns: vectorized powers 0..k; find a relation
        cols = [[x for r in P for x in r] for P in powers]
        A = [[cols[j][i] for j in range(k + 1)] for i in range(d * d)]
        R, piv = rref(A)
        if len(piv) <= k:
            # the last column is a combination of earlier ones
            rel = [one * 0 for _ in range(k + 1)]
            rel[k] = one
            for i, c in enumerate(piv):
                rel[c] = -R[i][k]
            return rel
    raise Unsupported("no minimal polynomial found")  # pragma: no cover - Cayley-Hamilton


def commute_all(reps):
    return all(a.commutes_with(b) for i, a in enumerate(reps) for b in reps[i + 1:])
