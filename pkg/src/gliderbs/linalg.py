"""Small dense exact linear algebra over any FieldElem field.

Matrices are lists of lists (rows) of FieldElem.  Everything is Gaussian
elimination with exact field arithmetic; sizes here are tiny (d <= 9 plus
stacked condition systems), so no fraction-free tricks are needed.
"""

from __future__ import annotations

from .errors import RankError

__all__ = ["mat_mul", "mat_vec", "vec_mat", "mat_inv", "det",
           "rref", "right_nullspace", "left_nullspace"]


def mat_mul(A, B):
    n, m, k = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(k):
            s = None
            for t in range(m):
                term = Ai[t] * B[t][j]
                s = term if s is None else s + term
            row.append(s)
        out.append(row)
    return out


def vec_mat(v, A):
    m, k = len(A), len(A[0])
    out = []
    for j in range(k):
        s = None
        for t in range(m):
            term = v[t] * A[t][j]
            s = term if s is None else s + term
        out.append(s)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        s = None
        for t, x in enumerate(v):
            term = row[t] * x
            s = term if s is None else s + term
        out.append(s)
    return out


def mat_inv(A, field):
    n = len(A)
    M = [list(row) + [field.one() if i == j else field.zero()
                      for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            raise RankError("matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        inv = field.one() / M[c][c]
        M[c] = [e * inv for e in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                q = M[r][c]
                M[r] = [a - q * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


def det(A, field):
    n = len(A)
    M = [list(row) for row in A]
    out = field.one()
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return field.zero()
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            out = -out
        out = out * M[c][c]
        inv = field.one() / M[c][c]
        for r in range(c + 1, n):
            if M[r][c]:
                q = M[r][c] * inv
                M[r] = [a - q * b for a, b in zip(M[r], M[c])]
    return out


def rref(A, field):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    M = [list(row) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.one() / M[r][c]
        M[r] = [e * inv for e in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                q = M[i][c]
                M[i] = [a - q * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M[:r], pivots


def right_nullspace(A, field):
    """Basis (list of column vectors as lists) of {v : A v = 0}."""
    rows, pivots = rref(A, field)
    cols = len(A[0]) if A else 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero()] * cols
        v[f] = field.one()
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def left_nullspace(A, field):
    """Basis of row vectors u with u A = 0."""
    t = [[A[r][c] for r in range(len(A))] for c in range(len(A[0]))]
    return right_nullspace(t, field)
