"""Finite fields F_q = F_p[x]/(modulus) and dense univariate polynomials over them.

Field elements are encoded as integers in ``range(q)``: the base-p digits of
the integer are the coordinates of the element on the power basis
1, x, ..., x^(e-1).  The prime subfield F_p is therefore ``range(p)`` and
integer scalars act through reduction mod p.

Univariate polynomials over a field are plain lists of encoded coefficients,
lowest degree first, without trailing zeros (``[]`` is the zero polynomial).
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .errors import ConfigError

# Conway polynomials, coefficients low -> high.
BUILTIN_MODULI = {
    2: (2, 1, (0, 1)),
    3: (3, 1, (0, 1)),
    4: (2, 2, (1, 1, 1)),
    5: (5, 1, (0, 1)),
    7: (7, 1, (0, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (2, 2, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
    25: (5, 2, (2, 4, 1)),
    27: (3, 3, (1, 2, 0, 1)),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _fp_polymod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] % p
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]]


def _fp_is_irreducible(m, p) -> bool:
    """Irreducibility over F_p by exhaustive divisor search (tiny degrees only)."""
    d = len(m) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for code in range(p ** k):
            div = [(code // p ** i) % p for i in range(k)] + [1]
            r = _fp_polymod(m, div, p)
            if not any(r):
                return False
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Parameters of F_q: prime p, degree e and a monic modulus over F_p."""

    p: int
    e: int = 1
    modulus: tuple = (0, 1)

    @property
    def q(self) -> int:
        return self.p ** self.e

    def validate(self) -> None:
        if not is_prime(self.p):
            raise ConfigError(f"p={self.p} is not prime")
        if self.e < 1:
            raise ConfigError("e must be positive")
        if self.e == 1:
            return
        m = tuple(self.modulus)
        if len(m) != self.e + 1 or m[-1] != 1 or any(not 0 <= c < self.p for c in m):
            raise ConfigError(f"modulus {m} is not a monic degree-{self.e} polynomial over F_{self.p}")
        if not _fp_is_irreducible(m, self.p):
            raise ConfigError(f"modulus {m} is reducible over F_{self.p}")

    @classmethod
    def from_q(cls, q: int, modulus=None) -> "FieldConfig":
        if modulus is not None:
            p = _prime_of(q)
            e = _exponent(q, p)
            cfg = cls(p, e, tuple(modulus))
        elif q in BUILTIN_MODULI:
            p, e, m = BUILTIN_MODULI[q]
            cfg = cls(p, e, m)
        else:
            p = _prime_of(q)
            if p == q:
                cfg = cls(p, 1, (0, 1))
            else:
                raise ConfigError(f"no built-in modulus for q={q}; pass one explicitly")
        cfg.validate()
        return cfg


def _prime_of(q):
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                break
            r = q
            while r % p == 0:
                r //= p
            if r != 1:
                break
            return p
    raise ConfigError(f"q={q} is not a prime power")


def _exponent(q, p):
    e = 0
    while q > 1:
        q //= p
        e += 1
    return e


def find_irreducible_fp(p: int, f: int):
    """Lexicographically first monic irreducible of degree f over F_p."""
    if f == 1:
        return (0, 1)
    for code in range(p ** f):
        m = tuple((code // p ** i) % p for i in range(f)) + (1,)
        if m[0] and _fp_is_irreducible(m, p):
            return m
    raise AssertionError("unreachable")


class GF:
    """The finite field F_q with table-driven arithmetic on integer codes."""

    def __init__(self, config: FieldConfig):
        config.validate()
        self.config = config
        self.p = config.p
        self.e = config.e
        self.q = config.q
        self.modulus = tuple(config.modulus)
        self._build_tables()

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.config == self.config

    def __hash__(self):
        return hash(self.config)

    def __reduce__(self):
        return (GF, (self.config,))

    # -- codes <-> coordinates
    def coords(self, v: int):
        p = self.p
        return [(v // p ** i) % p for i in range(self.e)]

    def from_coords(self, cs) -> int:
        p = self.p
        return sum((c % p) * p ** i for i, c in enumerate(cs))

    def _build_tables(self):
        q, p, e = self.q, self.p, self.e
        co = [self.coords(v) for v in range(q)]
        self.add_t = [[self.from_coords([a + b for a, b in zip(co[x], co[y])]) for y in range(q)] for x in range(q)]
        self.neg_t = [self.from_coords([-a for a in co[x]]) for x in range(q)]
        self.sub_t = [[self.add_t[x][self.neg_t[y]] for y in range(q)] for x in range(q)]
        mul = [[0] * q for _ in range(q)]
        for x in range(q):
            for y in range(x, q):
                prod = [0] * (2 * e - 1)
                for i, a in enumerate(co[x]):
                    if a:
                        for j, b in enumerate(co[y]):
                            prod[i + j] += a * b
                r = self.from_coords(_fp_polymod(prod, self.modulus, p) if e > 1 else prod)
                mul[x][y] = mul[y][x] = r
        self.mul_t = mul
        self.inv_t = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul[x][y] == 1:
                    self.inv_t[x] = y
                    break
        self.frob_t = [self.pow_int(x, p) for x in range(q)]

    # -- scalar ops on codes
    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.sub_t[a][b]

    def neg(self, a):
        return self.neg_t[a]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + repr(self))
        return self.inv_t[a]

    def div(self, a, b):
        return self.mul_t[a][self.inv(b)]

    def pow_int(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self.mul_t[r][a]
            a = self.mul_t[a][a]
            n >>= 1
        return r

    def from_int(self, n: int) -> int:
        return n % self.p

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def generator(self) -> int:
        """The class of x (a field generator over F_p); 1 when e = 1 is replaced by a primitive root."""
        if self.e > 1:
            return self.p
        for g in range(1, self.q):
            if self.multiplicative_order(g) == self.q - 1:
                return g
        return 1

    def multiplicative_order(self, a):
        k, x = 1, a
        while x != 1:
            x = self.mul_t[x][a]
            k += 1
        return k

    def __call__(self, v) -> "FqElem":
        if isinstance(v, FqElem):
            return v
        if not 0 <= v < self.q:
            raise ValueError(f"code {v} out of range for {self!r}")
        return FqElem(self, v)

    def elem(self, code: int) -> "FqElem":
        return FqElem(self, code)

    def random(self, rng: random.Random, nonzero=False) -> int:
        return rng.randrange(1 if nonzero else 0, self.q)


@functools.lru_cache(maxsize=None)
def get_field(q: int, modulus=None) -> GF:
    return GF(FieldConfig.from_q(q, modulus))


@functools.lru_cache(maxsize=None)
def extension_field(p: int, f: int) -> GF:
    """F_{p^f}; built-in modulus when tabulated, else the lexicographically first irreducible."""
    q = p ** f
    if q in BUILTIN_MODULI:
        return get_field(q)
    return GF(FieldConfig(p, f, find_irreducible_fp(p, f)))


class FqElem:
    """An element of F_q with operator overloading (wraps an integer code)."""

    __slots__ = ("F", "v")

    def __init__(self, F: GF, v: int):
        self.F = F
        self.v = v

    def _c(self, o):
        if isinstance(o, FqElem):
            return o.v
        if isinstance(o, int):
            return o % self.F.p
        return None

    def __add__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else FqElem(self.F, self.F.add_t[self.v][c])

    __radd__ = __add__

    def __sub__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else FqElem(self.F, self.F.sub_t[self.v][c])

    def __rsub__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else FqElem(self.F, self.F.sub_t[c][self.v])

    def __neg__(self):
        return FqElem(self.F, self.F.neg_t[self.v])

    def __mul__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else FqElem(self.F, self.F.mul_t[self.v][c])

    __rmul__ = __mul__

    def __truediv__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else FqElem(self.F, self.F.div(self.v, c))

    def __rtruediv__(self, o):
        c = self._c(o)
        return NotImplemented if c is None else FqElem(self.F, self.F.div(c, self.v))

    def __pow__(self, n: int):
        return FqElem(self.F, self.F.pow_int(self.v, n))

    def inv(self):
        return FqElem(self.F, self.F.inv(self.v))

    def __eq__(self, o):
        c = self._c(o)
        return c is not None and c == self.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return f"{self.F!r}({self.v})"

    def is_zero(self):
        return self.v == 0

    def zero(self):
        return FqElem(self.F, 0)

    def one(self):
        return FqElem(self.F, 1)

    def frobenius(self, k=1):
        v = self.v
        for _ in range(k):
            v = self.F.frob_t[v]
        return FqElem(self.F, v)


# ---------------------------------------------------------------------------
# dense univariate polynomials over GF (lists of codes, low -> high)


def up_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def up_add(F, a, b):
    n = max(len(a), len(b))
    add = F.add_t
    r = [add[a[i] if i < len(a) else 0][b[i] if i < len(b) else 0] for i in range(n)]
    return up_trim(r)


def up_neg(F, a):
    return [F.neg_t[c] for c in a]


def up_sub(F, a, b):
    return up_add(F, a, up_neg(F, b))


def up_scale(F, a, c):
    if c == 0:
        return []
    m = F.mul_t[c]
    return [m[x] for x in a]


def up_mul(F, a, b):
    if not a or not b:
        return []
    add, mul = F.add_t, F.mul_t
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            mx = mul[x]
            for j, y in enumerate(b):
                if y:
                    r[i + j] = add[r[i + j]][mx[y]]
    return up_trim(r)


def up_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    if len(a) - 1 < db:
        return [], up_trim(a)
    quo = [0] * (len(a) - db)
    sub, mul = F.sub_t, F.mul_t
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            c = mul[c][inv_lc]
            quo[k - db] = c
            mc = mul[c]
            for j in range(db + 1):
                a[k - db + j] = sub[a[k - db + j]][mc[b[j]]]
    return up_trim(quo), up_trim(a[:db])


def up_mod(F, a, b):
    return up_divmod(F, a, b)[1]


def up_monic(F, a):
    if not a:
        return []
    return up_scale(F, a, F.inv(a[-1]))


def up_gcd(F, a, b):
    a, b = up_trim(a), up_trim(b)
    while b:
        a, b = b, up_mod(F, a, b)
    return up_monic(F, a)


def up_xgcd(F, a, b):
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = up_trim(a), up_trim(b)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        qt, r = up_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, up_sub(F, s0, up_mul(F, qt, s1))
        t0, t1 = t1, up_sub(F, t0, up_mul(F, qt, t1))
    if not r0:
        return [], [], []
    c = F.inv(r0[-1])
    return up_scale(F, r0, c), up_scale(F, s0, c), up_scale(F, t0, c)


def up_powmod(F, a, n, m):
    r = [1]
    a = up_mod(F, a, m)
    while n:
        if n & 1:
            r = up_mod(F, up_mul(F, r, a), m)
        a = up_mod(F, up_mul(F, a, a), m)
        n >>= 1
    return r


def up_deriv(F, a):
    return up_trim([F.mul_t[a[i]][i % F.p] for i in range(1, len(a))])


def up_eval(F, a, x):
    r = 0
    for c in reversed(a):
        r = F.add_t[F.mul_t[r][x]][c]
    return r


def _up_pth_root(F, a):
    p = F.p
    # coefficient-wise inverse Frobenius: c^(q/p)
    inv_frob = [F.pow_int(c, F.q // p) for c in range(F.q)]
    return up_trim([inv_frob[a[i]] for i in range(0, len(a), p)])


def up_squarefree(F, f):
    """Squarefree decomposition: list of (g, k) with f = lc * prod g^k."""
    f = up_monic(F, f)
    out = []
    if len(f) <= 1:
        return out

    def rec(f, mult):
        d = up_deriv(F, f)
        if not d:
            for g, k in up_squarefree(F, _up_pth_root(F, f)):
                out.append((g, k * F.p * mult))
            return
        c = up_gcd(F, f, d)
        w = up_divmod(F, f, c)[0]
        i = 1
        while len(w) > 1:
            y = up_gcd(F, w, c)
            z = up_divmod(F, w, y)[0]
            if len(z) > 1:
                out.append((z, i * mult))
            i += 1
            w, c = y, up_divmod(F, c, y)[0]
        if len(c) > 1:
            for g, k in up_squarefree(F, _up_pth_root(F, c)):
                out.append((g, k * F.p * mult))

    rec(f, 1)
    return out


def _ddf(F, f):
    """Distinct-degree factorization of a monic squarefree f."""
    res = []
    x = [0, 1]
    h = x
    i = 0
    f = list(f)
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = up_powmod(F, h, F.q, f)
        g = up_gcd(F, f, up_sub(F, h, x))
        if len(g) > 1:
            res.append((g, i))
            f = up_divmod(F, f, g)[0]
            h = up_mod(F, h, f)
    if len(f) > 1:
        res.append((f, len(f) - 1))
    return res


def _edf(F, f, d, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = up_trim([rng.randrange(F.q) for _ in range(n)])
        if len(a) <= 1:
            continue
        if F.p == 2:
            # trace map x -> x + x^2 + ... + x^(2^(e d - 1))
            t, s = a, a
            for _ in range(F.e * d - 1):
                t = up_powmod(F, t, 2, f)
                s = up_add(F, s, t)
            g = up_gcd(F, f, s)
        else:
            b = up_powmod(F, a, (F.q ** d - 1) // 2, f)
            g = up_gcd(F, f, up_sub(F, b, [1]))
        if 1 < len(g) < len(f):
            h = up_divmod(F, f, g)[0]
            return _edf(F, g, d, rng) + _edf(F, h, d, rng)


def up_factor(F, f, seed=0):
    """Monic irreducible factorization over F_q: sorted list of (factor, multiplicity)."""
    rng = random.Random(seed)
    out = []
    for g, k in up_squarefree(F, f):
        for h, d in _ddf(F, g):
            for irr in _edf(F, h, d, rng):
                out.append((irr, k))
    out.sort(key=lambda fk: (len(fk[0]), fk[0][::-1], fk[1]))
    return out


def up_is_irreducible(F, f) -> bool:
    f = up_trim(f)
    if len(f) <= 1:
        return False
    fs = up_factor(F, f)
    return len(fs) == 1 and fs[0][1] == 1


def up_roots(F, f):
    """Roots in F_q of a nonzero polynomial (brute force, q is small)."""
    return [x for x in range(F.q) if up_eval(F, f, x) == 0]


def embed_field(F: GF, Fbig: GF):
    """Image of the generator x of F in Fbig (an F_p-embedding F -> Fbig), as a lookup table."""
    if F.p != Fbig.p or Fbig.e % F.e:
        raise ConfigError(f"{F!r} does not embed in {Fbig!r}")
    if F.e == 1:
        return list(range(F.q))
    m = [Fbig.from_int(c) for c in F.modulus]
    root = next(r for r in range(Fbig.q) if up_eval(Fbig, m, r) == 0)
    table = []
    for v in range(F.q):
        table.append(up_eval(Fbig, [Fbig.from_int(c) for c in F.coords(v)], root))
    return table
