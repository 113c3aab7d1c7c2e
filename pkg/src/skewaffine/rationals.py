"""Dense exact linear algebra over the rationals.

Plain list-of-lists matrices with Rat entries. This is the workhorse
behind restriction-of-scalars computations and doubles as the classical
Gaussian-elimination oracle in commutative mode.
"""

from __future__ import annotations

from ._ratio import Rat, rat

_ZERO = rat(0)
_ONE = rat(1)


def zeros(nrows: int, ncols: int):
    return [[_ZERO] * ncols for _ in range(nrows)]


def identity(n: int):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = _ONE
    return m


def copy_matrix(m):
    return [list(row) for row in m]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for p in range(k):
            c = ai[p]
            if not c:
                continue
            bp = b[p]
            for j in range(m):
                if bp[j]:
                    oi[j] += c * bp[j]
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = _ZERO
        for c, x in zip(row, v):
            if c and x:
                s += c * x
        out.append(s)
    return out


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows if any(r)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][col]
        if pv != 1:
            inv = 1 / pv
            work[r] = [e * inv for e in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                c = work[i][col]
                work[i] = [e - c * p for e, p in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows, ncols=None) -> int:
    return len(rref(rows, ncols)[1])


def reduce_against(v, rows, pivots):
    """Reduce v against rref rows; result is zero iff v is in the span."""
    v = list(v)
    for row, col in zip(rows, pivots):
        c = v[col]
        if c:
            v = [e - c * p for e, p in zip(v, row)]
    return v


def in_span(v, rows, pivots) -> bool:
    return not any(reduce_against(v, rows, pivots))


def nullspace(rows, ncols: int):
    """Basis of {x : rows @ x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * ncols
        vec[free] = _ONE
        for row, col in zip(red, pivots):
            vec[col] = -row[free]
        basis.append(vec)
    return basis


def solve(a, b):
    """One solution x of a @ x = b, or None when inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [_ZERO] * ncols
    for row, col in zip(red, pivots):
        x[col] = row[ncols]
    return x


def invert(m):
    """Inverse of a square matrix, or None if singular."""
    n = len(m)
    aug = [list(row) + list(ident_row)
           for row, ident_row in zip(m, identity(n))]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def block_diagonal(block, copies: int):
    """copies x copies block-diagonal matrix with the given square block."""
    b = len(block)
    n = b * copies
    out = zeros(n, n)
    for c in range(copies):
        for i in range(b):
            for j in range(b):
                out[c * b + i][c * b + j] = block[i][j]
    return out
