"""The Carlitz module: factorials D_i, the exponential exp_C, the twisted
polynomials C_a and the uniformizer u(z) = 1/e_A(z)."""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import InsufficientPrecision, PointOnBoundary
from .fields import GF
from .poly import APoly, monic_enum
from .series import INF, Precision, TruncSeries, pitilde_unit


# ---------------------------------------------------------------------------
# factorials


@functools.lru_cache(maxsize=None)
def carlitz_factorial(F: GF, i: int) -> APoly:
    """D_i = prod_{0<=j<i} (theta^(q^i) - theta^(q^j)); D_0 = 1."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    q = F.q
    out = APoly(F, [1])
    for j in range(i):
        out = out * (APoly.theta(F, q ** i) - APoly.theta(F, q ** j))
    return out


def carlitz_factorial_recursive(F: GF, i: int) -> APoly:
    """Same value via D_i = (theta^(q^i) - theta) * D_(i-1)^q."""
    D = APoly(F, [1])
    for k in range(1, i + 1):
        D = (APoly.theta(F, F.q ** k) - APoly.theta(F, 1)) * D ** F.q
    return D


def carlitz_factorial_brute(F: GF, i: int) -> APoly:
    """Product of all monic polynomials of degree i (exhaustive)."""
    out = APoly(F, [1])
    for a in monic_enum(F, i):
        out = out * a
    return out


def _dinv(F: GF, i: int, nvars: int, ram: int, prec_index: int) -> TruncSeries:
    D = TruncSeries.from_apoly(carlitz_factorial(F, i), nvars, ram)
    return D.inv(prec=max(prec_index, D.v * -1 + 1))


# ---------------------------------------------------------------------------
# twisted polynomials


class TwistedPoly:
    """sum_i c_i tau^i with coefficients in A (as needed for C_a)."""

    def __init__(self, F: GF, coeffs):
        self.F = F
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @classmethod
    def c_theta(cls, F):
        return cls(F, [APoly.theta(F), APoly(F, [1])])

    def __add__(self, o):
        n = max(len(self.coeffs), len(o.coeffs))
        z = APoly(self.F)
        return TwistedPoly(self.F, [(self.coeffs[i] if i < len(self.coeffs) else z)
                                    + (o.coeffs[i] if i < len(o.coeffs) else z) for i in range(n)])

    def __mul__(self, o):
        """Composition: (c tau^i)(c' tau^j) = c tau^i(c') tau^(i+j)."""
        if isinstance(o, APoly):
            o = TwistedPoly(self.F, [o])
        F = self.F
        out = [APoly(F)] * (len(self.coeffs) + len(o.coeffs))
        for i, c in enumerate(self.coeffs):
            for j, c2 in enumerate(o.coeffs):
                out[i + j] = out[i + j] + c * tau_apoly(c2, i)
        return TwistedPoly(F, out)

    def apply(self, m, cap=None):
        """sum_i c_i tau^i(m) for a series, lambda element or matrix of them."""
        if isinstance(m, list):
            return [[self.apply(x, cap) for x in row] for row in m]
        acc = None
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            term = m.tau(i, cap) * c
            acc = term if acc is None else acc + term
        return acc if acc is not None else m * 0

    def __eq__(self, o):
        return isinstance(o, TwistedPoly) and self.coeffs == o.coeffs

    def __repr__(self):
        return " + ".join(f"({c!r})τ^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()) or "0"


def tau_apoly(a: APoly, k: int) -> APoly:
    """tau^k on A: theta -> theta^(q^k), coefficients fixed."""
    Q = a.F.q ** k
    c = [0] * ((len(a.c) - 1) * Q + 1) if a.c else []
    for i, v in enumerate(a.c):
        c[i * Q] = v
    return APoly(a.F, c)


def carlitz_poly(a: APoly) -> TwistedPoly:
    """C_a, by Horner's rule in C_theta."""
    F = a.F
    Ct = TwistedPoly.c_theta(F)
    out = TwistedPoly(F, [])
    for c in reversed(a.c):
        out = Ct * out + TwistedPoly(F, [APoly(F, [c])])
    return out


def carlitz_action(a: APoly, m):
    """C_a(m) by Horner: r <- theta*r + tau(r) + a_k m."""
    if isinstance(m, list):
        return [[carlitz_action(a, x) for x in row] for row in m]
    if a.is_zero():
        return m * 0
    theta = APoly.theta(a.F)
    r = None
    for c in reversed(a.c):
        cm = m * APoly(a.F, [c]) if c else None
        if r is None:
            r = cm
            continue
        r = r * theta + r.tau()
        if cm is not None:
            r = r + cm
    return r


# ---------------------------------------------------------------------------
# exponential


def _val(x):
    v = x.valuation()
    return v


def _ram(x):
    if isinstance(x, TruncSeries):
        return x.ram
    ref = x._ref()
    return ref.ram if ref is not None else 1


def _nvars(x):
    return x.nvars


def _cap_for(x, target, shift):
    """Absolute index cap for tau-images so that the final term is known to ``target``."""
    r = _ram(x)
    q = x.F.q
    extra = 0 if isinstance(x, TruncSeries) or q == 2 else Fraction(q - 2, q - 1)
    return math.ceil((Fraction(target) - shift + extra) * r) + 1


def exp_C(f, prec: Precision | int = None):
    """exp_C(f) = sum_i D_i^-1 tau^i(f), known to valuation ``prec`` (target + guard).

    Terms are summed until the term valuation bound i q^i + q^i v(f) has passed
    the target and the bound is increasing (i + v(f) > -q/(q-1)), after which
    every later term is smaller still.  Matrices are handled entrywise.
    """
    if prec is None:
        prec = Precision()
    T = prec.working if isinstance(prec, Precision) else int(prec)
    if isinstance(f, list):
        return [[exp_C(x, T) for x in row] for row in f]
    F = f.F
    q = F.q
    vf = _val(f)
    if vf == INF:
        return f
    r = _ram(f)
    acc = None
    i = 0
    while True:
        vi = i * q ** i + q ** i * vf
        if vi >= T and (i + vf) * (q - 1) + q > 0:
            break
        if vi < T:
            dinv_val = i * q ** i
            cap = _cap_for(f, T, dinv_val)
            ti = f.tau(i, cap)
            # D_i^-1 needs relative precision T - v_i
            d_prec = math.ceil((Fraction(T) - q ** i * vf) * r) + 2
            term = ti * _dinv(F, i, _nvars(f), r, d_prec)
            acc = term if acc is None else acc + term
        i += 1
        if i > 64:
            raise InsufficientPrecision("exp_C did not reach the target precision")
    if acc is None:
        return f * 0
    return _truncate(acc, T)


def _truncate(x, T):
    if isinstance(x, TruncSeries):
        return x.truncate(math.ceil(Fraction(T) * x.ram))
    return x.truncate_val(T)


# ---------------------------------------------------------------------------
# A-lattice exponential and the uniformizer


def e_A(z: TruncSeries, prec: int) -> TruncSeries:
    """e_A(z) = pi^-1 exp_C(pi z) = sum_i (pi^(q-1))^((q^i-1)/(q-1)) D_i^-1 z^(q^i).

    Coefficients of z must lie in F_q (so that z^(q^i) = tau^i(z)).  Known to
    valuation ``prec``.
    """
    F = z.F
    q = F.q
    r = z.ram
    vz = z.valuation()
    if vz == INF:
        return z
    acc = None
    i = 0
    Tidx = math.ceil(Fraction(prec) * r)
    while True:
        e = (q ** i - 1) // (q - 1)
        vi = -q * e + i * q ** i + q ** i * vz
        if vi >= prec and i + vz > 0:
            break
        if vi < prec:
            # P = pi^(q-1) = -theta^q U^(q-1), valuation -q
            rel = math.ceil((Fraction(prec) - vi) * r) + 2
            U = pitilde_unit(F, math.ceil(rel / r) + 2, z.nvars)
            P = (U ** (q - 1)).shift(q).with_ram(r)
            if F.p != 2:
                P = -P
            P = P.truncate(-q * r + rel)
            coef = (P ** e) if e else TruncSeries.const(F, 1, z.nvars, r)
            dinv = _dinv(F, i, z.nvars, r, i * q ** i * r + rel)
            zt = z.tau(i, Tidx - (coef.v + dinv.v) + 1)
            term = coef * dinv * zt
            acc = term if acc is None else acc + term
        i += 1
        if i > 64:
            raise InsufficientPrecision("e_A did not reach the target precision")
    return acc.truncate(Tidx)


def imaginary_distance_valuation(z: TruncSeries):
    """-log_q |z|_Im: the valuation of the odd-exponent part of z (ram 2)."""
    odd = z.odd_part()
    if odd.is_zero():
        raise PointOnBoundary("point lies in K_infinity (no odd theta^(1/2)-exponents)")
    return odd.valuation()


def u_eval(z: TruncSeries, prec: Precision | int = None) -> TruncSeries:
    """u(z) = 1/e_A(z) for z in F_q((theta^(-1/2))) outside K_infinity.

    Known to valuation ``prec`` when e_A(z) has no cancellation in its leading
    term; the returned precision is always honest.
    """
    if prec is None:
        prec = Precision()
    T = prec.working if isinstance(prec, Precision) else int(prec)
    if z.ram != 2:
        z = z.with_ram(2)
    imaginary_distance_valuation(z)
    q = z.F.q
    vz = z.valuation()
    # smallest term valuation of the e_A series bounds v(e_A(z)) from below
    vmin = min(-q * ((q ** i - 1) // (q - 1)) + i * q ** i + q ** i * vz
               for i in range(0, max(2, math.ceil(-vz) + 2)))
    e = e_A(z, max(T + 2 * vmin, vmin + 1))
    if e.is_zero():
        raise InsufficientPrecision("e_A(z) vanishes to the working precision")
    return e.inv()
