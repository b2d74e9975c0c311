"""Truncated Laurent series in theta^(-1/r) over F_q[t_1..t_s], the
lambda_theta extension, the twist tau and the Carlitz period.

A ``TruncSeries`` stores the coefficients of theta^(-n/r) for
``v <= n < v + len`` in a dense integer array of shape
``(len, deg_t1 + 1, ..., deg_ts + 1, e)``: the last axis holds the F_p
coordinates of the F_q coefficient of each monomial t^k.  Coefficients at
indices ``n < prec`` are guaranteed; ``prec = inf`` marks an exact value.
The valuation is normalised by v(theta) = -1, so theta^(-n/r) has valuation n/r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import signal

from .errors import InsufficientPrecision, NotUnit
from .fields import FqElem, GF
from .poly import APoly, MPoly

INF = math.inf


@dataclass(frozen=True)
class Precision:
    """Working precision: results are wanted to valuation ``target``; ``guard``
    extra units absorb losses in intermediate steps."""

    target: int = 60
    guard: int = 8

    def __post_init__(self):
        if self.guard < 0 or self.target < 0:
            raise ValueError("precision target and guard must be nonnegative")

    @property
    def working(self) -> int:
        return self.target + self.guard


# ---------------------------------------------------------------------------
# array helpers


def _empty(F: GF, nvars: int):
    return np.zeros((0,) + (1,) * nvars + (F.e,), dtype=np.int64)


def _reduce_coords(F: GF, arr):
    """Reduce a coordinate axis of length <= 2e-1 modulo the field modulus and p."""
    e, p = F.e, F.p
    L = arr.shape[-1]
    if L > e:
        arr = arr.copy()
        m = F.modulus
        for k in range(L - 1, e - 1, -1):
            c = arr[..., k]
            if not c.any():
                continue
            for i in range(e):
                if m[i]:
                    arr[..., k - e + i] -= c * m[i]
        arr = arr[..., :e]
    return np.mod(arr, p)


def _trim_t(arr):
    """Drop trailing all-zero slabs along the t-axes (axes 1..-2)."""
    for ax in range(1, arr.ndim - 1):
        n = arr.shape[ax]
        if n <= 1:
            continue
        other = tuple(i for i in range(arr.ndim) if i != ax)
        nz = np.flatnonzero(arr.any(axis=other))
        keep = int(nz[-1]) + 1 if nz.size else 1
        if keep < n:
            arr = np.take(arr, range(keep), axis=ax)
    return arr


def _conv(F: GF, A, B, rows=None):
    """Product of two coefficient arrays (convolution on every axis)."""
    if rows is not None:
        A = A[:rows]
        B = B[:rows]
    if A.shape[0] == 0 or B.shape[0] == 0:
        return _empty(F, A.ndim - 2)
    # small products: skip scipy's method selection (exact integer arithmetic either way)
    method = "direct" if A.size * B.size <= 1 << 14 else "auto"
    out = signal.convolve(A, B, mode="full", method=method)
    if rows is not None:
        out = out[:rows]
    return _trim_t(_reduce_coords(F, out))


def _pad_to(arr, shape):
    """Zero-pad every axis of arr up to shape (only the t-axes and rows)."""
    pads = [(0, s - a) for a, s in zip(arr.shape, shape)]
    if any(p[1] for p in pads):
        return np.pad(arr, pads)
    return arr


def _code_array(F: GF, code: int, nvars: int):
    a = np.zeros((1,) + (1,) * nvars + (F.e,), dtype=np.int64)
    a[(0,) * (nvars + 1)] = F.coords(code)
    return a


def _mpoly_array(m: MPoly, nvars: int):
    F = m.F
    m = m.extend(nvars)
    shape = [1] + [max((k[i] for k in m.terms), default=0) + 1 for i in range(nvars)] + [F.e]
    a = np.zeros(shape, dtype=np.int64)
    for k, v in m.terms.items():
        a[(0,) + tuple(k)] = F.coords(v)
    return a


def _array_mpoly(F: GF, nvars: int, slab) -> MPoly:
    terms = {}
    if nvars == 0:
        return MPoly(F, 0, {(): F.from_coords(slab.tolist())})
    for idx in zip(*np.nonzero(slab.any(axis=-1))):
        terms[tuple(int(i) for i in idx)] = F.from_coords(slab[idx].tolist())
    return MPoly(F, nvars, terms)


# ---------------------------------------------------------------------------


class TruncSeries:
    """Truncated Laurent series in theta^(-1/ram) with F_q[t_1..t_s] coefficients."""

    __slots__ = ("F", "nvars", "ram", "v", "arr", "prec")

    def __init__(self, F: GF, nvars: int, ram: int, v, arr, prec=INF, _normalized=False):
        if ram not in (1, 2):
            raise ValueError("ramification index must be 1 or 2")
        self.F = F
        self.nvars = nvars
        self.ram = ram
        if _normalized:
            self.v, self.arr, self.prec = v, arr, prec
            return
        if prec != INF:
            keep = max(0, int(prec - v)) if v != INF else 0
            arr = arr[:keep]
        if arr.shape[0]:
            rows = np.flatnonzero(arr.reshape(arr.shape[0], -1).any(axis=1))
            if rows.size:
                lo, hi = int(rows[0]), int(rows[-1]) + 1
                arr = _trim_t(arr[lo:hi])
                v = v + lo
            else:
                arr = _empty(F, nvars)
        if arr.shape[0] == 0:
            arr = _empty(F, nvars)
            v = prec
        self.v, self.arr, self.prec = v, arr, prec

    # -- constructors
    @classmethod
    def zero(cls, F, nvars=0, ram=1, prec=INF):
        return cls(F, nvars, ram, prec, _empty(F, nvars), prec, _normalized=True)

    @classmethod
    def const(cls, F, c, nvars=0, ram=1):
        """Constant series from a code, FqElem, int or MPoly."""
        if isinstance(c, MPoly):
            nvars = max(nvars, c.n)
            return cls(F, nvars, ram, 0, _mpoly_array(c, nvars))
        if isinstance(c, FqElem):
            c = c.v
        elif isinstance(c, int):
            c = c % F.p
        return cls(F, nvars, ram, 0, _code_array(F, c, nvars))

    @classmethod
    def theta_pow(cls, F, k, nvars=0, ram=1):
        """theta^k for k in (1/ram) Z."""
        n = -Fraction(k) * ram
        if n.denominator != 1:
            raise ValueError(f"theta^{k} needs ramification beyond {ram}")
        return cls(F, nvars, ram, int(n), _code_array(F, 1, nvars))

    @classmethod
    def from_apoly(cls, a: APoly, nvars=0, ram=1):
        F = a.F
        if a.is_zero():
            return cls.zero(F, nvars, ram)
        d = a.deg()
        arr = np.zeros((d * ram + 1,) + (1,) * nvars + (F.e,), dtype=np.int64)
        for i, c in enumerate(a.c):
            if c:
                arr[((d - i) * ram,) + (0,) * nvars] = F.coords(c)
        return cls(F, nvars, ram, -d * ram, arr)

    @classmethod
    def from_terms(cls, F, terms: dict, nvars=0, ram=1, prec=INF):
        """Series from {index n: coefficient} where theta^(-n/ram) carries the coefficient."""
        terms = {n: c for n, c in terms.items()}
        if not terms:
            return cls.zero(F, nvars, ram, prec)
        parts = {}
        for n, c in terms.items():
            if isinstance(c, MPoly):
                nvars = max(nvars, c.n)
        for n, c in terms.items():
            if isinstance(c, MPoly):
                parts[n] = _mpoly_array(c, nvars)[0]
            else:
                code = c.v if isinstance(c, FqElem) else c  # integer codes in range(q)
                parts[n] = _code_array(F, code, nvars)[0]
        lo, hi = min(parts), max(parts) + 1
        tshape = [max(p.shape[i] for p in parts.values()) for i in range(nvars)]
        arr = np.zeros((hi - lo,) + tuple(tshape) + (F.e,), dtype=np.int64)
        for n, p in parts.items():
            arr[(n - lo,) + tuple(slice(0, s) for s in p.shape[:-1])] = p
        return cls(F, nvars, ram, lo, arr, prec)

    # -- basic queries
    @property
    def q(self):
        return self.F.q

    def is_exact(self):
        return self.prec == INF

    def is_zero(self):
        """Zero as far as known (exact zero or zero-to-precision)."""
        return self.arr.shape[0] == 0

    def valuation(self):
        """Fraction lower bound on the valuation (exact when the series is nonzero)."""
        if self.v == INF:
            return INF
        return Fraction(int(self.v), self.ram)

    def precision(self):
        return INF if self.prec == INF else Fraction(int(self.prec), self.ram)

    def coeff(self, n: int) -> MPoly:
        """Coefficient of theta^(-n/ram) as a polynomial in t."""
        if n >= self.prec:
            raise InsufficientPrecision(f"coefficient {n} beyond precision {self.prec}")
        if self.is_zero() or n < self.v or n >= self.v + self.arr.shape[0]:
            return MPoly(self.F, self.nvars)
        return _array_mpoly(self.F, self.nvars, self.arr[n - self.v])

    def lead_coeff(self) -> MPoly:
        if self.is_zero():
            raise InsufficientPrecision("leading coefficient not determined")
        return self.coeff(int(self.v))

    def terms(self):
        """Known nonzero coefficients as (n, MPoly) pairs."""
        out = []
        for i in range(self.arr.shape[0]):
            if self.arr[i].any():
                out.append((int(self.v) + i, _array_mpoly(self.F, self.nvars, self.arr[i])))
        return out

    def t_degree(self):
        return tuple(s - 1 for s in self.arr.shape[1:-1])

    def __repr__(self):
        parts = []
        for n, c in self.terms()[:6]:
            parts.append(f"({c!r})θ^{Fraction(-n, self.ram)}")
        tail = "" if self.prec == INF else f" + O(θ^{Fraction(-int(self.prec), self.ram)})"
        more = " + ..." if len(self.terms()) > 6 else ""
        return (" + ".join(parts) or "0") + more + tail

    # -- alignment
    def with_ram(self, ram):
        if ram == self.ram:
            return self
        if ram != 2 or self.ram != 1:
            raise ValueError("can only pass from ramification 1 to 2")
        n = self.arr.shape[0]
        arr = np.zeros((max(0, 2 * n - 1),) + self.arr.shape[1:], dtype=np.int64)
        arr[::2] = self.arr
        return TruncSeries(self.F, self.nvars, 2, self.v * 2, arr, self.prec * 2, _normalized=True)

    def with_nvars(self, nvars):
        if nvars == self.nvars:
            return self
        if nvars < self.nvars:
            raise ValueError("cannot drop variables")
        arr = self.arr.reshape(self.arr.shape[:-1] + (1,) * (nvars - self.nvars) + (self.F.e,))
        return TruncSeries(self.F, nvars, self.ram, self.v, arr, self.prec, _normalized=True)

    def _coerce(self, o):
        if isinstance(o, TruncSeries):
            return o
        if isinstance(o, (int, FqElem, MPoly)):
            return TruncSeries.const(self.F, o, self.nvars, self.ram)
        if isinstance(o, APoly):
            return TruncSeries.from_apoly(o, self.nvars, self.ram)
        return None

    @staticmethod
    def _align(x, y):
        ram = max(x.ram, y.ram)
        nv = max(x.nvars, y.nvars)
        return x.with_ram(ram).with_nvars(nv), y.with_ram(ram).with_nvars(nv)

    # -- arithmetic
    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        x, y = self._align(self, o)
        prec = min(x.prec, y.prec)
        if x.is_zero() and x.prec >= prec:
            return y.truncate(prec)
        if y.is_zero() and y.prec >= prec:
            return x.truncate(prec)
        if x.is_zero() or y.is_zero():
            return (y if x.is_zero() else x).truncate(prec)
        lo = min(x.v, y.v)
        hi = max(x.v + x.arr.shape[0], y.v + y.arr.shape[0])
        if prec != INF:
            hi = min(hi, int(prec))
        if hi <= lo:
            return TruncSeries.zero(x.F, x.nvars, x.ram, prec)
        tshape = tuple(max(a, b) for a, b in zip(x.arr.shape[1:-1], y.arr.shape[1:-1]))
        out = np.zeros((int(hi - lo),) + tshape + (x.F.e,), dtype=np.int64)
        for s in (x, y):
            a0 = int(s.v - lo)
            rows = min(s.arr.shape[0], out.shape[0] - a0)
            if rows > 0:
                sl = (slice(a0, a0 + rows),) + tuple(slice(0, d) for d in s.arr.shape[1:-1])
                out[sl] += s.arr[:rows]
        return TruncSeries(x.F, x.nvars, x.ram, lo, np.mod(out, x.F.p), prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.F, self.nvars, self.ram, self.v, np.mod(-self.arr, self.F.p), self.prec,
                           _normalized=True)

    def __sub__(self, o):
        o = self._coerce(o)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, o):
        o = self._coerce(o)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        x, y = self._align(self, o)
        if (x.is_zero() and x.is_exact()) or (y.is_zero() and y.is_exact()):
            return TruncSeries.zero(x.F, x.nvars, x.ram)
        prec = min(x.prec + y.v, y.prec + x.v)
        if x.is_zero() or y.is_zero():
            return TruncSeries.zero(x.F, x.nvars, x.ram, prec)
        v = x.v + y.v
        rows = None if prec == INF else max(0, int(prec - v))
        arr = _conv(x.F, x.arr, y.arr, rows)
        return TruncSeries(x.F, x.nvars, x.ram, v, arr, prec)

    __rmul__ = __mul__

    def scale_code(self, c: int):
        return self * TruncSeries.const(self.F, c, self.nvars, self.ram)

    def shift(self, k):
        """Multiply by theta^k (k in (1/ram) Z)."""
        n = Fraction(k) * self.ram
        if n.denominator != 1:
            raise ValueError("shift needs matching ramification")
        n = int(n)
        return TruncSeries(self.F, self.nvars, self.ram, self.v - n, self.arr, self.prec - n, _normalized=True)

    def truncate(self, prec):
        if prec >= self.prec:
            return self
        return TruncSeries(self.F, self.nvars, self.ram, self.v, self.arr, prec)

    def inv(self, prec=None):
        """Multiplicative inverse.

        The leading coefficient must be a nonzero constant of F_q.  For an
        exact input ``prec`` (absolute index bound) is required; for an
        inexact one the result carries the same relative precision.
        """
        if self.is_zero():
            if self.is_exact():
                raise ZeroDivisionError("inverse of exact zero")
            raise InsufficientPrecision("leading term of the operand is not determined")
        lead = self.arr[0]
        if lead.reshape(-1, self.F.e)[1:].any():
            raise NotUnit("leading coefficient is not a constant of F_q")
        v = self.v
        rel = self.prec - v
        if prec is not None:
            rel = min(rel, prec + v)
        if rel == INF:
            raise ValueError("inverse of an exact series needs an explicit precision")
        rel = int(rel)
        out_prec = -v + rel if self.prec != INF or prec is None else prec
        if rel <= 0:
            return TruncSeries.zero(self.F, self.nvars, self.ram, -v + rel)
        F = self.F
        c = F.from_coords(lead.reshape(-1, F.e)[0].tolist())
        cinv = _code_array(F, F.inv(c), self.nvars)
        u = _conv(F, self.arr[:rel], cinv)  # unit with constant term 1
        g = _code_array(F, 1, self.nvars)
        k = 1
        while k < rel:
            k = min(2 * k, rel)
            ug = _conv(F, u, g, k)
            # 2 - u*g
            corr = np.mod(-ug, F.p)
            corr = _pad_to(corr, (max(corr.shape[0], 1),) + corr.shape[1:])
            c0 = corr[(0,) * (corr.ndim - 1)]
            c0[0] = (c0[0] + 2) % F.p
            g = _conv(F, g, corr, k)
        g = _conv(F, g, cinv, rel)
        return TruncSeries(F, self.nvars, self.ram, -v, g, out_prec)

    def __truediv__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        if o.is_exact() and self.is_exact():
            raise ValueError("division of exact series needs a precision; use inv(prec)")
        if o.is_exact():
            # enough relative precision to match self
            need = self.prec - self.v + 1
            return self * o.inv(prec=int(-o.v + need))
        return self * o.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r = TruncSeries.const(self.F, 1, self.nvars, self.ram)
        a = self
        while n:
            if n & 1:
                r = r * a
            n >>= 1
            if n:
                a = a * a
        return r

    def tau(self, k=1, cap=None):
        """The twist tau^k: theta^(-n/r) -> theta^(-n q^k / r), coefficients fixed."""
        if k == 0:
            return self if cap is None else self.truncate(min(self.prec, cap))
        Q = self.F.q ** k
        prec = self.prec * Q if self.prec != INF else INF
        if cap is not None:
            prec = min(prec, cap)
        if self.is_zero():
            return TruncSeries.zero(self.F, self.nvars, self.ram, prec if not self.is_exact() else
                                    (INF if cap is None else INF))
        v = self.v * Q
        n_rows = self.arr.shape[0]
        if prec != INF:
            n_rows = min(n_rows, max(0, -(-(int(prec) - v) // Q)))
        if n_rows == 0:
            return TruncSeries.zero(self.F, self.nvars, self.ram, prec)
        arr = np.zeros(((n_rows - 1) * Q + 1,) + self.arr.shape[1:], dtype=np.int64)
        arr[::Q] = self.arr[:n_rows]
        return TruncSeries(self.F, self.nvars, self.ram, v, arr, prec)

    def frob_coeffs(self):
        """Raise every F_q coefficient to the p-th power (t and theta fixed)."""
        F = self.F
        out = self.arr.copy()
        flat = out.reshape(-1, F.e)
        codes = [F.from_coords(r.tolist()) for r in flat]
        for i, c in enumerate(codes):
            flat[i] = F.coords(F.frob_t[c])
        return TruncSeries(F, self.nvars, self.ram, self.v, out, self.prec, _normalized=True)

    def residual(self, o):
        """Valuation lower bound of self - o."""
        return (self - o).valuation()

    def agrees(self, o, target):
        return self.residual(o) >= target

    def is_tau_fixed(self):
        return tau_fixed_check(self)

    def substitute_t(self, values_codes):
        """Specialize t_i -> values (codes in F_q); result has no t-variables."""
        F = self.F
        out = np.zeros((self.arr.shape[0], F.e), dtype=np.int64)
        if self.arr.shape[0] == 0:
            return TruncSeries.zero(F, 0, self.ram, self.prec)
        codes = np.apply_along_axis(lambda r: F.from_coords(r.tolist()), -1, self.arr)
        res = []
        for row in codes:
            acc = 0
            for idx in zip(*np.nonzero(row)):
                term = int(row[idx])
                for i, e in enumerate(idx):
                    term = F.mul(term, F.pow_int(values_codes[i], int(e)))
                acc = F.add(acc, term)
            res.append(acc)
        for i, c in enumerate(res):
            out[i] = F.coords(c)
        return TruncSeries(F, 0, self.ram, self.v, out.reshape((-1, F.e)), self.prec)

    def odd_part(self):
        """Terms with odd index (only meaningful for ram = 2)."""
        if self.ram != 2 or self.is_zero():
            return TruncSeries.zero(self.F, self.nvars, self.ram, self.prec)
        arr = self.arr.copy()
        start = int(self.v) % 2
        arr[start::2] = 0  # positions whose index v+i is even
        return TruncSeries(self.F, self.nvars, self.ram, self.v, arr, self.prec)

    def even_part(self):
        return self - self.odd_part()

    def to_json(self):
        return {
            "ram": self.ram,
            "start": None if self.v == INF else int(self.v),
            "prec": None if self.prec == INF else int(self.prec),
            "coeffs": [[n, c.to_json()] for n, c in self.terms()],
        }


def tau_fixed_check(x: TruncSeries) -> bool:
    """True iff tau(x) = x on the common precision window."""
    return (x.tau() - x).is_zero()


def solve_tau_fixed(F: GF, N: int, nvars=0):
    """Dimension of {x = sum_{0<=n<N} c_n theta^-n : tau(x) = x mod theta^-N} over F_q.

    The truncated equation is linear over F_q in the coefficients; the
    returned basis shows that only the constant coefficient is free.
    """
    # tau(x) has coefficient c_(m/q) at m when q | m and 0 otherwise, so the
    # truncated equation forces c_n = c_(n/q) for q | n and c_n = 0 otherwise;
    # following n -> n/q ends at a forced zero unless n = 0.
    basis = []
    free = [0]
    for n in free:
        basis.append(TruncSeries.from_terms(F, {n: 1}, nvars=nvars, prec=N))
    return basis


# ---------------------------------------------------------------------------


class LambdaElem:
    """Element of K_{s,inf}(lambda_theta): sum_j lambda^j * comps[j], 0 <= j < q-1,
    with lambda^(q-1) = -theta.  For q = 2 lambda = -theta = theta and there is a
    single component."""

    __slots__ = ("F", "comps")

    def __init__(self, F: GF, comps):
        self.F = F
        n = F.q - 1
        if isinstance(comps, dict):
            c = [None] * n
            for j, s in comps.items():
                c[j] = s
            comps = c
        if len(comps) != n:
            raise ValueError(f"need {n} components")
        self.comps = list(comps)

    # -- constructors
    @classmethod
    def lam(cls, F: GF, nvars=0, ram=1):
        if F.q == 2:
            return cls(F, [TruncSeries.theta_pow(F, 1, nvars, ram)])
        return cls(F, {1: TruncSeries.const(F, 1, nvars, ram)})

    @classmethod
    def lam_pow(cls, F: GF, j: int, series: TruncSeries):
        """lambda^j * series for any integer j (uses lambda^(q-1) = -theta)."""
        n = F.q - 1
        if F.q == 2:
            return cls(F, [series.shift(j)])
        k, r = divmod(j, n)
        s = series.shift(k)
        if k % 2 and F.p != 2:
            s = -s
        return cls(F, {r: s})

    @classmethod
    def from_series(cls, s: TruncSeries):
        return cls(s.F, {0: s})

    def _ref(self):
        for c in self.comps:
            if c is not None:
                return c
        return None

    @property
    def nvars(self):
        r = self._ref()
        return r.nvars if r is not None else 0

    def comp(self, j):
        c = self.comps[j]
        if c is None:
            r = self._ref()
            return TruncSeries.zero(self.F, r.nvars if r else 0, r.ram if r else 1)
        return c

    def support(self):
        return [j for j, c in enumerate(self.comps) if c is not None and not (c.is_zero() and c.is_exact())]

    # -- arithmetic
    def _coerce(self, o):
        if isinstance(o, LambdaElem):
            return o
        if isinstance(o, TruncSeries):
            return LambdaElem.from_series(o)
        if isinstance(o, (int, FqElem, MPoly, APoly)):
            r = self._ref()
            return LambdaElem.from_series(
                TruncSeries.const(self.F, 0, r.nvars if r else 0)._coerce(o) if not isinstance(o, APoly)
                else TruncSeries.from_apoly(o, r.nvars if r else 0))
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        out = []
        for a, b in zip(self.comps, o.comps):
            out.append(b if a is None else a if b is None else a + b)
        return LambdaElem(self.F, out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaElem(self.F, [None if c is None else -c for c in self.comps])

    def __sub__(self, o):
        o = self._coerce(o)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        n = self.F.q - 1
        out = [None] * n
        for i, a in enumerate(self.comps):
            if a is None:
                continue
            for j, b in enumerate(o.comps):
                if b is None:
                    continue
                prod = a * b
                k = i + j
                if k >= n:
                    k -= n
                    prod = prod.shift(1) * (-1)
                out[k] = prod if out[k] is None else out[k] + prod
        return LambdaElem(self.F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        r = None
        a = self
        while e:
            if e & 1:
                r = a if r is None else r * a
            e >>= 1
            if e:
                a = a * a
        if r is None:
            ref = self._ref()
            return LambdaElem.from_series(TruncSeries.const(self.F, 1, ref.nvars, ref.ram))
        return r

    def inv(self, prec=None):
        sup = self.support()
        if len(sup) != 1:
            raise NotUnit("inversion implemented for single-component lambda elements")
        j = sup[0]
        a = self.comps[j]
        ai = a.inv(prec)
        if j == 0:
            return LambdaElem.from_series(ai)
        # (lambda^j a)^-1 = lambda^(q-1-j) * (-theta)^-1 * a^-1
        s = ai.shift(-1) * (-1)
        return LambdaElem(self.F, {self.F.q - 1 - j: s})

    def tau(self, k=1, cap=None):
        q = self.F.q
        Q = q ** k
        out = []
        for j, c in enumerate(self.comps):
            if c is None:
                out.append(None)
                continue
            if q == 2 or j == 0:
                out.append(c.tau(k, cap))
                continue
            e = j * (Q - 1) // (q - 1)
            # lambda^j -> lambda^j (-theta)^e
            t = c.tau(k, None if cap is None else cap + e * c.ram).shift(e)
            if e % 2 and self.F.p != 2:
                t = -t
            out.append(t)
        return LambdaElem(self.F, out)

    def valuation(self):
        """Lower bound: min_j v(comp_j) - j/(q-1)."""
        n = self.F.q - 1
        best = INF
        for j, c in enumerate(self.comps):
            if c is None:
                continue
            v = c.valuation()
            if v == INF:
                continue
            val = v - (Fraction(j, n) if self.F.q > 2 else 0)
            best = val if best == INF else min(best, val)
        return best

    def truncate_val(self, target):
        """Drop information beyond valuation ``target``."""
        n = self.F.q - 1
        out = []
        for j, c in enumerate(self.comps):
            if c is None:
                out.append(None)
                continue
            lim = (Fraction(target) + (Fraction(j, n) if self.F.q > 2 else 0)) * c.ram
            out.append(c.truncate(math.ceil(lim)))
        return LambdaElem(self.F, out)

    def is_zero(self):
        return all(c is None or c.is_zero() for c in self.comps)

    def residual(self, o):
        return (self - o).valuation()

    def __repr__(self):
        parts = []
        for j, c in enumerate(self.comps):
            if c is not None and not c.is_zero():
                parts.append(f"λ^{j}·[{c!r}]" if j else f"[{c!r}]")
        return " + ".join(parts) or "0"

    def to_json(self):
        return {"lambda_components": [None if c is None else c.to_json() for c in self.comps]}


# ---------------------------------------------------------------------------


def pitilde_unit(F: GF, prec: int, nvars=0) -> TruncSeries:
    """U = prod_{i>0} (1 - theta^(1-q^i))^(-1) modulo theta^(-prec)."""
    q = F.q
    U = TruncSeries.const(F, 1, nvars)
    i = 1
    while q ** i - 1 < prec:
        step = q ** i - 1
        geo = TruncSeries.from_terms(F, {k * step: 1 for k in range(0, prec // step + 1)}, nvars=nvars,
                                     prec=prec)
        U = U * geo
        i += 1
    return U.truncate(prec)


def pitilde(F: GF, prec: Precision | int = None, nvars=0) -> LambdaElem:
    """The Carlitz period theta*lambda*U, known to valuation >= prec (target+guard)."""
    if prec is None:
        prec = Precision()
    P = prec.working if isinstance(prec, Precision) else int(prec)
    # lambda-component: theta*U has valuation -1; we need it to index P + 2
    U = pitilde_unit(F, P + 3, nvars)
    return LambdaElem.lam(F, nvars) * U.shift(1)
