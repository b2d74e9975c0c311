"""Nagao's amalgam GL_2(k[t]) = GL_2(k) *_{B(k)} B(k[t]), the embedding Phi^infinity and
essential-dimension bounds.

Matrices over k[t] are 2 x 2 lists of ``APoly`` (the variable is displayed as
theta).  Normal form: gamma = h r_1 ... r_n with h in B(k) (omitted when
trivial) and r_i alternating between the transversals

* GL_2(k): r_e = (0 1; 1 e), e in k   (right cosets B(k) g, g not in B(k))
* B(k[t]): (1 b; 0 1) with b(0) = 0, b != 0.

B(k)-content is moved leftwards while folding from the right, so the residue
ends up in the single leading factor h.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import NotInvertible
from .fields import GF
from .gamma_reps import gl2, random_apoly
from .linalg import mat_eq, mat_mul, rank
from .poly import APoly, MPoly, RatFunc

GLK, BKT = "GL2(k)", "B(k[t])"


def _det(g):
    return g[0][0] * g[1][1] - g[0][1] * g[1][0]


def _is_const(x: APoly):
    return x.deg() <= 0


def _const(x: APoly) -> int:
    return x.c[0] if x.c else 0


def piece(g):
    """Which amalgamated factor contains g: 'GL2(k)', 'B(k[t])', 'B(k)' (both) or None."""
    const = all(_is_const(x) for r in g for x in r)
    upper = g[1][0].is_zero()
    if const and upper:
        return "B(k)"
    if const:
        return GLK
    if upper and _is_const(g[0][0]) and _is_const(g[1][1]):
        return BKT
    return None


def _inv(g):
    F = g[0][0].F
    d = _det(g)
    if d.deg() != 0:
        raise NotInvertible("determinant is not a nonzero constant")
    di = APoly.const(F, F.inv(d.c[0]))
    return [[g[1][1] * di, -g[0][1] * di], [-g[1][0] * di, g[0][0] * di]]


def _swap(F):
    return gl2(F, 0, 1, 1, 0)


def raw_word(g):
    """Continued-fraction reduction: g = g_0 w beta_1 w beta_2 ... (unnormalized)."""
    F = g[0][0].F
    if _det(g).deg() != 0:
        raise NotInvertible("determinant is not a nonzero constant")
    cur = [list(r) for r in g]
    right = []
    w = _swap(F)
    while not cur[1][0].is_zero():
        x = cur[1][1] // cur[1][0]
        if not x.is_zero():
            beta = gl2(F, 1, x, 0, 1)
            cur = mat_mul(cur, gl2(F, 1, -x, 0, 1))
            right.insert(0, beta)
        cur = mat_mul(cur, w)
        right.insert(0, w)
    return [cur] + right


def _decompose_factor(g):
    """g = h r with h in B(k) and r a transversal element (None when g is in B(k))."""
    F = g[0][0].F
    p = piece(g)
    if p == "B(k)":
        return g, None
    if p == GLK:
        c, d = _const(g[1][0]), _const(g[1][1])
        e = F.div(d, c)
        r = gl2(F, 0, 1, 1, e)
        rinv = gl2(F, APoly.const(F, F.neg(e)), 1, 1, 0)
        return mat_mul(g, rinv), r
    if p == BKT:
        lam, mu, b = _const(g[0][0]), _const(g[1][1]), g[0][1]
        b0 = _const(APoly(F, b.c[:1]))
        rest = b - APoly.const(F, b0)
        bp = rest * APoly.const(F, F.inv(lam))
        h = gl2(F, lam, b0, 0, mu)
        return h, gl2(F, 1, bp, 0, 1)
    raise ValueError("factor is not in either amalgamated piece")


@dataclass
class AmalgamWord:
    factors: list  # 2 x 2 APoly matrices
    pieces: list

    def product(self):
        F = self.factors[0][0][0].F if self.factors else None
        out = gl2(F, 1, 0, 0, 1)
        for f in self.factors:
            out = mat_mul(out, f)
        return out

    def to_json(self):
        return [{"piece": p, "matrix": [[list(x.c) for x in r] for r in f]} for f, p in zip(self.factors, self.pieces)]


def normalize(word, F: GF = None) -> AmalgamWord:
    """Normal form of a product of elements of the two pieces."""
    if not word:
        raise ValueError("empty word")
    F = F or word[0][0][0].F
    out = []
    h = gl2(F, 1, 0, 0, 1)
    for g in reversed(word):
        cur = mat_mul(g, h)
        while True:
            p = piece(cur)
            if p is None:
                raise ValueError("factor is not in either amalgamated piece")
            if out and p != "B(k)" and piece(out[0]) == p:
                cur = mat_mul(cur, out.pop(0))
                continue
            break
        h, r = _decompose_factor(cur)
        if r is not None:
            out.insert(0, r)
    if not mat_eq(h, gl2(F, 1, 0, 0, 1)) or not out:
        out.insert(0, h)
    return AmalgamWord(out, [piece(f) if piece(f) != "B(k)" else "B(k)" for f in out])


def nagao_decompose(g) -> AmalgamWord:
    """Normal form of g in GL_2(k[t]); the product of the factors equals g exactly."""
    return normalize(raw_word(g), g[0][0].F)


def random_glkt(F: GF, rng: random.Random, maxdeg: int = 5):
    """A random element of GL_2(k[t]) with entry degree <= maxdeg (product of elementary factors)."""
    while True:
        g = gl2(F, F.random(rng, nonzero=True), 0, 0, F.random(rng, nonzero=True))
        for _ in range(rng.randint(1, 3)):
            a = random_apoly(F, rng, rng.randint(0, 2))
            g = mat_mul(g, gl2(F, 1, a, 0, 1) if rng.random() < 0.5 else gl2(F, 1, 0, a, 1))
        if max(x.deg() for r in g for x in r) <= maxdeg:
            return g


def scramble(word, rng: random.Random):
    """Another word with the same product: insert B(k) elements and their inverses between factors."""
    F = word[0][0][0].F
    out = [list(map(list, word[0]))]
    for g in word[1:]:
        b = gl2(F, F.random(rng, nonzero=True), F.random(rng), 0, F.random(rng, nonzero=True))
        out[-1] = mat_mul(out[-1], b)
        out.append(mat_mul(_inv(b), g))
    return out


# ---------------------------------------------------------------------------
# Phi^infinity


def phi_factor(g, nvars: int):
    """(lam, sum b_i t^i; 0, mu) -> (lam, b_0 + sum_(i>=1) b_i x_i; 0, mu); GL_2(k) unchanged."""
    F = g[0][0].F
    p = piece(g)
    if p in (GLK, "B(k)"):
        return [[MPoly.const(F, nvars, _const(x)) for x in r] for r in g]
    if p == BKT:
        b = g[0][1]
        terms = {}
        for i, v in enumerate(b.c):
            if v:
                mono = tuple(1 if (i >= 1 and j == i - 1) else 0 for j in range(nvars))
                terms[mono] = v
        return [[MPoly.const(F, nvars, _const(g[0][0])), MPoly(F, nvars, terms)],
                [MPoly(F, nvars), MPoly.const(F, nvars, _const(g[1][1]))]]
    raise ValueError("factor is not in either amalgamated piece")


def phi_infty(g, nvars: int = None):
    """Image of g in GL_2(k[x_1, ..., x_n]) (variables x_i stored as t_i)."""
    word = nagao_decompose(g)
    if nvars is None:
        nvars = max([1] + [f[0][1].deg() for f in word.factors])
    F = g[0][0].F
    out = [[MPoly.const(F, nvars, 1), MPoly(F, nvars)], [MPoly(F, nvars), MPoly.const(F, nvars, 1)]]
    for f in word.factors:
        out = mat_mul(out, phi_factor(f, nvars))
    return out


# ---------------------------------------------------------------------------
# essential dimension


def essential_dimension_diag(entries, nvars: int):
    """(lower, upper) bounds for the transcendence degree of k(entries).

    upper = number of variables occurring; lower = rank of the Jacobian over
    the function field (a nonzero r x r minor proves r entries algebraically
    independent in any characteristic; the converse can fail in characteristic p).
    """
    polys = []
    for e in entries:
        if isinstance(e, RatFunc):
            polys.append(e)
        elif isinstance(e, MPoly):
            polys.append(RatFunc(e.extend(nvars)))
        elif isinstance(e, APoly):
            from .poly import chi_t

            polys.append(RatFunc(chi_t(e, max(1, nvars), 0)))
        else:
            raise TypeError(type(e).__name__)
    used = set()
    for f in polys:
        used |= set(f.num.variables()) | set(f.den.variables())
    upper = len(used)
    if not polys or not used:
        return (0, upper)
    jac = [[_partial(f, i) for i in sorted(used)] for f in polys]
    lower = rank(jac)
    return (lower, upper)


def _partial(f: RatFunc, i: int) -> RatFunc:
    n, d = f.num, f.den
    return RatFunc(n.derivative(i) * d - n * d.derivative(i), d * d)


def sample_entries(rep, K: int = 2, seed: int = 0):
    """Matrix entries of rep on the sample family (for essential-dimension bounds)."""
    from .gamma_reps import sample_family

    out = []
    for g in sample_family(rep.F, K):
        for r in rep(g):
            out.extend(r)
    return out
