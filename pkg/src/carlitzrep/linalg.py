"""Dense matrices as lists of rows.

Two families of helpers live here:

* generic ring matrices whose entries support ``+``, ``-``, ``*`` (and, for
  elimination, ``inv()`` / ``is_zero()``) -- used for matrices over A, K_s
  and truncated series;
* matrices of field *codes* over a ``GF`` -- the fast path used by the
  Meataxe and by exact linear solves over finite fields.
"""

from __future__ import annotations

from . import fields as ff
from .errors import SingularMatrix

# ---------------------------------------------------------------------------
# generic ring matrices


def mat_zero(n, m, zero):
    return [[zero for _ in range(m)] for _ in range(n)]


def mat_identity(n, one):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_neg(A):
    return [[-a for a in r] for r in A]


def mat_scale(A, c):
    return [[a * c for a in r] for r in A]


def mat_map(A, f):
    return [[f(a) for a in r] for r in A]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            acc = None
            for l in range(k):
                term = Ai[l] * B[l][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def mat_pow(A, e: int, one):
    R = mat_identity(len(A), one)
    while e:
        if e & 1:
            R = mat_mul(R, A)
        e >>= 1
        if e:
            A = mat_mul(A, A)
    return R


def transpose(A):
    return [list(r) for r in zip(*A)]


def kron(A, B):
    """Kronecker product; the left factor indexes the slow (outer) block."""
    out = []
    for ra in A:
        for rb in B:
            out.append([a * b for a in ra for b in rb])
    return out


def block(rows_of_blocks):
    out = []
    for brow in rows_of_blocks:
        for i in range(len(brow[0])):
            row = []
            for blk in brow:
                row.extend(blk[i])
            out.append(row)
    return out


def submatrix(A, rows, cols):
    return [[A[i][j] for j in cols] for i in rows]


def mat_eq(A, B):
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def charpoly_berkowitz(A, one):
    """Characteristic polynomial det(xI - A), coefficients low to high.

    Division-free (Berkowitz), so it works over any commutative ring.
    """
    n = len(A)
    zero = one - one
    if n == 0:
        return [one]
    # vector holds coefficients high to low of the running charpoly
    vect = [one, -A[0][0]]
    for r in range(1, n):
        # Toeplitz column for the leading (r+1)x(r+1) block
        R = [A[r][j] for j in range(r)]  # row r, cols < r
        C = [A[i][r] for i in range(r)]  # col r, rows < r
        Ar = [row[:r] for row in A[:r]]
        col = [one, -A[r][r]]
        v = C
        for _ in range(r):
            s = zero
            for a, b in zip(R, v):
                s = s + a * b
            col.append(-s)
            v = [sum_(Ar[i][j] * v[j] for j in range(r)) for i in range(r)] if r else []
        # multiply lower-triangular Toeplitz(col) by vect
        new = []
        for i in range(r + 2):
            s = zero
            for j in range(min(i, len(vect) - 1) + 1):
                s = s + col[i - j] * vect[j]
            new.append(s)
        vect = new
    return list(reversed(vect))


def sum_(it):
    acc = None
    for x in it:
        acc = x if acc is None else acc + x
    return acc


def det(A, one):
    n = len(A)
    cp = charpoly_berkowitz(A, one)
    return cp[0] if n % 2 == 0 else -cp[0]


# ---------------------------------------------------------------------------
# generic field elimination (entries with inv() and is_zero())


def rref(A):
    """Reduced row echelon form; returns (R, pivots). Entries must be field elements."""
    M = [list(r) for r in A]
    n = len(M)
    m = len(M[0]) if n else 0
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if not M[i][c].is_zero()), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inv()
        M[r] = [x * inv for x in M[r]]
        for i in range(n):
            if i != r and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return M, pivots


def rank(A):
    return len(rref(A)[1]) if A else 0


def nullspace(A, zero, one):
    """Basis of {x : A x = 0} as a list of column vectors (lists)."""
    m = len(A[0]) if A else 0
    if not A:
        return [[one if i == j else zero for i in range(m)] for j in range(m)]
    R, piv = rref(A)
    free = [c for c in range(m) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * m
        v[f] = one
        for i, c in enumerate(piv):
            v[c] = -R[i][f]
        basis.append(v)
    return basis


def inverse(A, one):
    n = len(A)
    zero = one - one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(A)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [r[n:] for r in R]


# ---------------------------------------------------------------------------
# matrices of codes over a finite field GF


def fm_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def fm_mul(F, A, B):
    add, mul = F.add_t, F.mul_t
    Bt = list(zip(*B))
    out = []
    for ra in A:
        row = []
        for cb in Bt:
            acc = 0
            for a, b in zip(ra, cb):
                if a and b:
                    acc = add[acc][mul[a][b]]
            row.append(acc)
        out.append(row)
    return out


def fm_vecmat(F, v, B):
    """Row vector times matrix."""
    add, mul = F.add_t, F.mul_t
    m = len(B[0]) if B else 0
    out = [0] * m
    for a, rb in zip(v, B):
        if a:
            ma = mul[a]
            for j, b in enumerate(rb):
                if b:
                    out[j] = add[out[j]][ma[b]]
    return out


def fm_add(F, A, B):
    add = F.add_t
    return [[add[a][b] for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def fm_scale(F, A, c):
    mul = F.mul_t[c]
    return [[mul[a] for a in r] for r in A]


def fm_sub(F, A, B):
    sub = F.sub_t
    return [[sub[a][b] for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def fm_transpose(A):
    return [list(r) for r in zip(*A)]


def fm_rref(F, A):
    M = [list(r) for r in A]
    n = len(M)
    m = len(M[0]) if n else 0
    add, mul, neg, inv = F.add_t, F.mul_t, F.neg_t, F.inv_t
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        iv = mul[inv[M[r][c]]]
        M[r] = [iv[x] for x in M[r]]
        pr = M[r]
        for i in range(n):
            if i != r and M[i][c]:
                f = mul[neg[M[i][c]]]
                M[i] = [add[a][f[b]] for a, b in zip(M[i], pr)]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return M, pivots


def fm_rank(F, A):
    return len(fm_rref(F, A)[1]) if A else 0


def fm_nullspace(F, A, m=None):
    """Right kernel {x : A x = 0}, basis as lists."""
    if m is None:
        m = len(A[0]) if A else 0
    if not A:
        return [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    R, piv = fm_rref(F, A)
    neg = F.neg_t
    free = [c for c in range(m) if c not in piv]
    basis = []
    for f in free:
        v = [0] * m
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = neg[R[i][f]]
        basis.append(v)
    return basis


def fm_inverse(F, A):
    n = len(A)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(A)]
    R, piv = fm_rref(F, aug)
    if piv[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [r[n:] for r in R]


def fm_row_basis(F, vecs):
    """Echelonized basis of the row span."""
    if not vecs:
        return []
    R, piv = fm_rref(F, vecs)
    return R[: len(piv)]


def fm_in_span(F, basis_rref, v):
    """Whether v lies in the span of an rref basis (rows with leading ones)."""
    return fm_rank(F, basis_rref + [v]) == len(basis_rref)


def fm_spin(F, seeds, gens, limit=None):
    """Smallest subspace containing ``seeds`` (row vectors) stable under v -> v*g.

    Returns an echelon basis.
    """
    basis = fm_row_basis(F, [list(s) for s in seeds if any(s)])
    queue = list(basis)
    n = len(seeds[0]) if seeds else 0
    while queue:
        v = queue.pop()
        for g in gens:
            w = fm_vecmat(F, v, g)
            if any(w) and not fm_in_span(F, basis, w):
                basis = fm_row_basis(F, basis + [w])
                queue.append(w)
                if limit is not None and len(basis) >= limit:
                    return basis
        if len(basis) == n:
            break
    return basis


def fm_charpoly(F, A):
    """det(xI - A) as a code list, low to high (Berkowitz over codes)."""
    one = ff.FqElem(F, 1)
    M = [[ff.FqElem(F, a) for a in r] for r in A]
    cp = charpoly_berkowitz(M, one)
    return ff.up_trim([c.v for c in cp])


def fm_poly_eval(F, coeffs, A):
    """coeffs(A) for a code list (low to high) and a square code matrix."""
    n = len(A)
    acc = [[0] * n for _ in range(n)]
    I = fm_identity(n)
    for c in reversed(coeffs):
        acc = fm_add(F, fm_mul(F, acc, A), fm_scale(F, I, c))
    return acc


def fm_is_invariant(F, basis, gens):
    return all(fm_in_span(F, basis, fm_vecmat(F, v, g)) for g in gens for v in basis)
