"""Dense exact linear algebra on lists of lists.

Entries may be Fractions or Cyclotomic numbers (anything supporting field
operations and ``== 0``).  Matrices act on column vectors; ``M[i][j]`` is
row i, column j.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows: int, cols: int, zero=ZERO):
    return [[zero] * cols for _ in range(rows)]


def eye(n: int, zero=ZERO, one=ONE):
    m = zeros(n, n, zero)
    for i in range(n):
        m[i][i] = one
    return m


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def _conj(x):
    c = getattr(x, "conjugate", None)
    return c() if c is not None else x


def conj_transpose(a):
    return [[_conj(x) for x in col] for col in zip(*a)] if a else []


def matmul(a, b):
    if not a or not b:
        return [[] for _ in a]
    cols = len(b[0])
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x != 0]
        new = []
        for j in range(cols):
            col = bt[j]
            s = ZERO
            for k, x in nz:
                y = col[k]
                if y != 0:
                    s = s + x * y
            new.append(s)
        out.append(new)
    return out


def matvec(a, v):
    out = []
    nz = [(k, x) for k, x in enumerate(v) if x != 0]
    for row in a:
        s = ZERO
        for k, x in nz:
            y = row[k]
            if y != 0:
                s = s + y * x
        out.append(s)
    return out


def add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a, c):
    return [[x * c for x in row] for row in a]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def equal(a, b) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def row_reduce(a):
    """Reduced row echelon form and pivot columns (a copy is modified)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c] if not hasattr(m[r][c], "inverse") else m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        nzc = [(j, x) for j, x in enumerate(pivot_row) if x != 0]
        for i in range(rows):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    for j, x in nzc:
                        row[j] = row[j] - f * x
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    if not a or not a[0]:
        return 0
    return len(row_reduce(a)[1])


def nullspace(a, ncols: int | None = None):
    """A basis of {v : a v = 0} as a list of column vectors."""
    cols = len(a[0]) if a else (ncols or 0)
    if not a:
        return [[ONE if i == j else ZERO for i in range(cols)] for j in range(cols)]
    rref, pivots = row_reduce(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -rref[i][f]
        basis.append(v)
    return basis


def inverse(a):
    n = len(a)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    rref, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rref]


def block_diag(blocks: Sequence):
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out
