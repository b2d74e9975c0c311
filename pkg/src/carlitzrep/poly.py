"""A = F_q[theta], sparse polynomials in t_1..t_s and K_s = F_q(t_1, ..., t_s).

Also the small combinatorial helpers used throughout: monic and irreducible
enumeration, base-p digits and Lucas rows of binomial coefficients.
"""

from __future__ import annotations

import itertools
from math import comb

from . import fields as ff
from .fields import FqElem, GF


class APoly:
    """Element of A = F_q[theta]; ``coeffs[i]`` is the code of the theta^i coefficient."""

    __slots__ = ("F", "c")

    def __init__(self, F: GF, coeffs=()):
        self.F = F
        self.c = tuple(ff.up_trim(coeffs))

    # -- constructors
    @classmethod
    def theta(cls, F, k=1):
        return cls(F, [0] * k + [1])

    @classmethod
    def const(cls, F, v: int):
        return cls(F, [v])

    def zero(self):
        return APoly(self.F)

    def one(self):
        return APoly(self.F, [1])

    # -- queries
    def deg(self) -> int:
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def lc(self):
        return self.c[-1] if self.c else 0

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __iter__(self):
        return iter(self.c)

    def __len__(self):
        return len(self.c)

    # -- arithmetic
    def _coerce(self, o):
        if isinstance(o, APoly):
            return o.c
        if isinstance(o, FqElem):
            return (o.v,)
        if isinstance(o, int):
            return (o % self.F.p,)
        return None

    def __add__(self, o):
        c = self._coerce(o)
        return NotImplemented if c is None else APoly(self.F, ff.up_add(self.F, self.c, c))

    __radd__ = __add__

    def __neg__(self):
        return APoly(self.F, ff.up_neg(self.F, self.c))

    def __sub__(self, o):
        c = self._coerce(o)
        return NotImplemented if c is None else APoly(self.F, ff.up_sub(self.F, self.c, c))

    def __rsub__(self, o):
        c = self._coerce(o)
        return NotImplemented if c is None else APoly(self.F, ff.up_sub(self.F, c, self.c))

    def __mul__(self, o):
        c = self._coerce(o)
        return NotImplemented if c is None else APoly(self.F, ff.up_mul(self.F, self.c, c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r, a = self.one(), self
        while n:
            if n & 1:
                r = r * a
            a = a * a
            n >>= 1
        return r

    def __divmod__(self, o):
        qt, r = ff.up_divmod(self.F, self.c, o.c)
        return APoly(self.F, qt), APoly(self.F, r)

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def gcd(self, o):
        return APoly(self.F, ff.up_gcd(self.F, self.c, o.c))

    def xgcd(self, o):
        g, s, t = ff.up_xgcd(self.F, self.c, o.c)
        return APoly(self.F, g), APoly(self.F, s), APoly(self.F, t)

    def monic(self):
        return APoly(self.F, ff.up_monic(self.F, self.c))

    def frobenius(self, k=1):
        """Raise to the power p^k (entrywise Frobenius twist M -> M^(k))."""
        return self ** (self.F.p ** k)

    def __eq__(self, o):
        c = self._coerce(o)
        return c is not None and tuple(ff.up_trim(c)) == self.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, v in enumerate(self.c):
            if v:
                mono = "" if i == 0 else ("θ" if i == 1 else f"θ^{i}")
                coef = str(v)
                terms.append(coef if not mono else (mono if v == 1 else f"{coef}*{mono}"))
        return " + ".join(reversed(terms))

    def __call__(self, x):
        return chi_t_eval(self, x)

    def is_irreducible(self):
        return ff.up_is_irreducible(self.F, self.c)

    def factor(self):
        return [(APoly(self.F, g), k) for g, k in ff.up_factor(self.F, self.c)]

    def to_json(self):
        return [[i, self.F.coords(v)] for i, v in enumerate(self.c) if v]


class MPoly:
    """Sparse polynomial over F_q in ``nvars`` variables t_1..t_nvars.

    Terms map exponent tuples to nonzero field codes.
    """

    __slots__ = ("F", "n", "terms")

    def __init__(self, F: GF, nvars: int, terms=None):
        self.F = F
        self.n = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def var(cls, F, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls(F, nvars, {tuple(e): 1})

    @classmethod
    def const(cls, F, nvars, v: int):
        return cls(F, nvars, {(0,) * nvars: v})

    def zero(self):
        return MPoly(self.F, self.n)

    def one(self):
        return MPoly.const(self.F, self.n, 1)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(k) for k in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.n, 0)

    def degree(self, i=None) -> int:
        if not self.terms:
            return -1
        if i is None:
            return max(sum(k) for k in self.terms)
        return max(k[i] for k in self.terms)

    def variables(self):
        return sorted({i for k in self.terms for i, e in enumerate(k) if e})

    def lead(self):
        """Lexicographically largest exponent and its coefficient."""
        k = max(self.terms)
        return k, self.terms[k]

    def extend(self, nvars):
        if nvars == self.n:
            return self
        if nvars < self.n:
            raise ValueError("cannot shrink variable count")
        pad = (0,) * (nvars - self.n)
        return MPoly(self.F, nvars, {k + pad: v for k, v in self.terms.items()})

    def _coerce(self, o):
        if isinstance(o, MPoly):
            if o.n != self.n:
                n = max(o.n, self.n)
                return o.extend(n), n
            return o, self.n
        if isinstance(o, FqElem):
            return MPoly.const(self.F, self.n, o.v), self.n
        if isinstance(o, int):
            return MPoly.const(self.F, self.n, o % self.F.p), self.n
        if isinstance(o, APoly) and o.deg() <= 0:
            return MPoly.const(self.F, self.n, o[0]), self.n
        return None, None

    def __add__(self, o):
        o, n = self._coerce(o)
        if o is None:
            return NotImplemented
        s = self.extend(n)
        add = self.F.add_t
        t = dict(s.terms)
        for k, v in o.terms.items():
            t[k] = add[t.get(k, 0)][v]
        return MPoly(self.F, n, t)

    __radd__ = __add__

    def __neg__(self):
        neg = self.F.neg_t
        return MPoly(self.F, self.n, {k: neg[v] for k, v in self.terms.items()})

    def __sub__(self, o):
        o2, n = self._coerce(o)
        if o2 is None:
            return NotImplemented
        return self + (-o2)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o, n = self._coerce(o)
        if o is None:
            return NotImplemented
        s = self.extend(n)
        add, mul = self.F.add_t, self.F.mul_t
        t = {}
        for k1, v1 in s.terms.items():
            m1 = mul[v1]
            for k2, v2 in o.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = add[t.get(k, 0)][m1[v2]]
        return MPoly(self.F, n, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r, a = self.one(), self
        while n:
            if n & 1:
                r = r * a
            a = a * a
            n >>= 1
        return r

    def scale(self, c: int):
        mul = self.F.mul_t[c]
        return MPoly(self.F, self.n, {k: mul[v] for k, v in self.terms.items()})

    def __eq__(self, o):
        o2, _ = self._coerce(o) if not isinstance(o, RatFunc) else (None, None)
        if o2 is None:
            return NotImplemented if not isinstance(o, RatFunc) else o == self
        return (self - o2).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            mono = "*".join(f"t{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(k) if e)
            parts.append(mono if (mono and v == 1) else (f"{v}*{mono}" if mono else str(v)))
        return " + ".join(parts)

    def substitute(self, values, one=None):
        """Evaluate with t_i -> values[i] (any ring elements supporting + and *)."""
        if one is None:
            one = values[0].one() if values and hasattr(values[0], "one") else 1
        F = self.F
        acc = None
        cache = {}
        for k, v in self.terms.items():
            term = None
            for i, e in enumerate(k):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = _power(values[i], e)
                    term = cache[key] if term is None else term * cache[key]
            c = FqElem(F, v)
            term = (one * c) if term is None else term * c
            acc = term if acc is None else acc + term
        if acc is None:
            return one * 0
        return acc

    def derivative(self, i):
        F = self.F
        t = {}
        for k, v in self.terms.items():
            if k[i] % F.p:
                k2 = list(k)
                k2[i] -= 1
                t[tuple(k2)] = F.mul_t[v][k[i] % F.p]
        return MPoly(F, self.n, t)

    # -- univariate view (nvars <= 1)
    def to_upoly(self):
        if self.n > 1 and len(self.variables()) > 1:
            raise ValueError("not univariate")
        idx = (self.variables() or [0])[0]
        d = max((k[idx] for k in self.terms), default=-1)
        c = [0] * (d + 1)
        for k, v in self.terms.items():
            c[k[idx] if self.n else 0] = v
        return ff.up_trim(c), idx

    @classmethod
    def from_upoly(cls, F, nvars, c, idx=0):
        t = {}
        for i, v in enumerate(c):
            if v:
                e = [0] * nvars
                if nvars:
                    e[idx] = i
                elif i:
                    raise ValueError("non-constant polynomial with zero variables")
                t[tuple(e)] = v
        return cls(F, nvars, t)

    def to_json(self):
        return [[list(k), self.F.coords(v)] for k, v in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, F, nvars, data):
        return cls(F, nvars, {tuple(k): F.from_coords(v) for k, v in data})


def _power(x, e):
    r = None
    a = x
    while e:
        if e & 1:
            r = a if r is None else r * a
        e >>= 1
        if e:
            a = a * a
    return r


class RatFunc:
    """Element of K_s = F_q(t_1..t_s) as num/den.

    With at most one variable in play the fraction is gcd-reduced with monic
    denominator; otherwise it is kept lazily reduced and compared by
    cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly = None, reduce=True):
        if den is None:
            den = num.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        n = max(num.n, den.n)
        num, den = num.extend(n), den.extend(n)
        if reduce:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @property
    def F(self):
        return self.num.F

    @property
    def nvars(self):
        return self.num.n

    def zero(self):
        return RatFunc(self.num.zero())

    def one(self):
        return RatFunc(self.num.one())

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, o):
        if isinstance(o, RatFunc):
            return o
        if isinstance(o, MPoly):
            return RatFunc(o)
        if isinstance(o, (FqElem, int)):
            return RatFunc(self.num.zero() + o)
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        if _same(self.den, o.den):
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, o):
        o = self._coerce(o)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in K_s")
        return RatFunc(self.den, self.num)

    def __truediv__(self, o):
        o = self._coerce(o)
        return NotImplemented if o is None else self * o.inv()

    def __rtruediv__(self, o):
        o = self._coerce(o)
        return NotImplemented if o is None else o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        r, a = self.one(), self
        while n:
            if n & 1:
                r = r * a
            a = a * a
            n >>= 1
        return r

    def __eq__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RatFunc is unhashable (lazy reduction)")

    def __repr__(self):
        if self.den.is_constant() and self.den.constant_term() == 1:
            return f"({self.num!r})"
        return f"({self.num!r})/({self.den!r})"

    def is_polynomial(self):
        return self.den.is_constant() or _exact_quotient(self.num, self.den) is not None

    def as_poly(self) -> MPoly:
        if self.den.is_constant():
            return self.num.scale(self.F.inv(self.den.constant_term()))
        qt = _exact_quotient(self.num, self.den)
        if qt is None:
            raise ValueError("not a polynomial")
        return qt

    def constant_value(self):
        """The F_q code if this is a constant, else None."""
        if self.num.is_zero():
            return 0
        _, ln = self.num.lead()
        _, ld = self.den.lead()
        c = self.F.div(ln, ld)
        return c if (self.num - self.den.scale(c)).is_zero() else None

    def substitute(self, values, one):
        n = self.num.substitute(values, one)
        d = self.den.substitute(values, one)
        return n * d.inv() if hasattr(d, "inv") else n / d

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _exact_quotient(num: MPoly, den: MPoly):
    """num / den if den divides num in F_q[t_1..t_s], else None (division by one polynomial)."""
    F = num.F
    lm_d, lc_d = den.lead()
    inv = F.inv(lc_d)
    rem, quo = num, MPoly(F, num.n)
    while not rem.is_zero():
        lm_r, lc_r = rem.lead()
        e = tuple(a - b for a, b in zip(lm_r, lm_d))
        if any(x < 0 for x in e):
            return None
        term = MPoly(F, num.n, {e: F.mul(lc_r, inv)})
        quo = quo + term
        rem = rem - term * den
    return quo


def _same(a: MPoly, b: MPoly):
    return a.terms == b.terms


def _reduce(num: MPoly, den: MPoly):
    F = num.F
    if num.is_zero():
        return num, den.one()
    vs = sorted(set(num.variables()) | set(den.variables()))
    if len(vs) <= 1:
        idx = vs[0] if vs else 0
        n_c, _ = _to_up(num, idx)
        d_c, _ = _to_up(den, idx)
        g = ff.up_gcd(F, n_c, d_c)
        if len(g) > 1:
            n_c = ff.up_divmod(F, n_c, g)[0]
            d_c = ff.up_divmod(F, d_c, g)[0]
        c = F.inv(d_c[-1])
        n_c, d_c = ff.up_scale(F, n_c, c), ff.up_scale(F, d_c, c)
        return MPoly.from_upoly(F, num.n, n_c, idx), MPoly.from_upoly(F, num.n, d_c, idx)
    _, ld = den.lead()
    c = F.inv(ld)
    return num.scale(c), den.scale(c)


def _to_up(m: MPoly, idx):
    d = max((k[idx] for k in m.terms), default=-1) if m.n else (0 if m.terms else -1)
    c = [0] * (d + 1)
    for k, v in m.terms.items():
        c[k[idx] if m.n else 0] = v
    return ff.up_trim(c), idx


# ---------------------------------------------------------------------------
# evaluation and enumeration


def chi_t_eval(a: APoly, target):
    """a(target) = a_0 + a_1*target + ... in the target's ring.

    ``target`` may be a ring element (MPoly, RatFunc, FqElem, series) or a
    square matrix given as a list of rows; matrices use Horner's rule with
    matrix products.
    """
    F = a.F
    if isinstance(target, list):
        from .linalg import mat_identity, mat_mul, mat_add, mat_scale

        n = len(target)
        if n == 1:
            return [[chi_t_eval(a, target[0][0])]]
        one = target[0][0].one()
        acc = [[target[0][0].zero() for _ in range(n)] for _ in range(n)]
        ident = mat_identity(n, one)
        for c in reversed(a.c):
            acc = mat_add(mat_mul(acc, target), mat_scale(ident, FqElem(F, c)))
        return acc
    if isinstance(target, FqElem):
        return FqElem(target.F, ff.up_eval(target.F, a.c, target.v))
    if isinstance(target, MPoly) and len(target.terms) == 1:
        (mono, c), = target.terms.items()
        if c == 1 and sum(mono) == 1:  # a single variable: substitute directly
            return chi_t(a, target.n, mono.index(1))
    acc = target.zero()
    for c in reversed(a.c):
        acc = acc * target + FqElem(F, c)
    return acc


def chi_t(a: APoly, nvars=1, var=0) -> MPoly:
    """The algebra map theta -> t_var, landing in F_q[t_1..t_nvars]."""
    t = {}
    for i, v in enumerate(a.c):
        if v:
            e = [0] * nvars
            e[var] = i
            t[tuple(e)] = v
    return MPoly(a.F, nvars, t)


def monic_enum(F: GF, d: int):
    """Monic polynomials of degree d, lexicographic on (a_0, ..., a_{d-1})."""
    for tail in itertools.product(range(F.q), repeat=d):
        yield APoly(F, _lex(tail) + (1,))


def _lex(tail):
    # itertools.product varies the last position fastest; we want a_0 fastest
    return tuple(reversed(tail))


def monic_upto(F: GF, D: int):
    for d in range(D + 1):
        yield from monic_enum(F, d)


def necklace_count(q: int, d: int) -> int:
    """Number of monic irreducibles of degree d over F_q."""
    total = 0
    for k in range(1, d + 1):
        if d % k == 0:
            total += _mobius(k) * q ** (d // k)
    return total // d


def _mobius(n):
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def irreducible_enum(F: GF, d_max: int):
    """Monic irreducibles of degree 1..d_max, by degree then lexicographically."""
    for d in range(1, d_max + 1):
        for a in monic_enum(F, d):
            if ff.up_is_irreducible(F, a.c):
                yield a


def digits_base_p(l: int, p: int):
    out = []
    while l:
        out.append(l % p)
        l //= p
    return tuple(out)


def from_digits(ds, p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(ds))


def lucas_row(l: int, p: int):
    """binom(l, r) mod p for r = 0..l, via Lucas' theorem on base-p digits."""
    ld = digits_base_p(l, p)
    row = []
    for r in range(l + 1):
        rd = digits_base_p(r, p)
        v = 1
        for i, li in enumerate(ld):
            ri = rd[i] if i < len(rd) else 0
            v = v * comb(li, ri) % p
            if not v:
                break
        row.append(v)
    return row


def phi_p(l: int, p: int) -> int:
    out = 1
    for d in digits_base_p(l, p):
        out *= d + 1
    return out
