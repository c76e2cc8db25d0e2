"""Exact integer and rational matrix kernel.

Matrices are plain lists of lists; integer matrices hold Python ints
(arbitrary precision), rational matrices hold fractions.Fraction.  No
floating point appears anywhere in this module.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPositiveDefinite, SingularMatrix


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def copy_matrix(a):
    return [list(row) for row in a]


def dims(a):
    return len(a), len(a[0]) if a else 0


def is_square(a):
    return len(a) > 0 and all(len(row) == len(a) for row in a)


def is_symmetric(a):
    n = len(a)
    return is_square(a) and all(a[i][j] == a[j][i] for i in range(n) for j in range(n))


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def scale(a, c):
    return [[c * x for x in row] for row in a]


def det(a):
    """Exact determinant of a square integer matrix (Bareiss fraction-free)."""
    if not is_square(a):
        raise ValueError("determinant requires a square matrix")
    n = len(a)
    m = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a):
    """Exact inverse as a Fraction matrix; raises SingularMatrix if det = 0."""
    if not is_square(a):
        raise ValueError("inverse requires a square matrix")
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix("matrix is singular")
        m[col], m[pivot_row] = m[pivot_row], m[col]
        inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def hnf(a):
    """Row Hermite normal form.

    Returns (H, T) with H = T·A, T unimodular, pivots positive, and entries
    above each pivot reduced into [0, pivot).  Zero rows sink to the bottom.
    Pivot selection takes the smallest nonzero entry to limit coefficient
    growth (adequate at desk scale).
    """
    rows, cols = dims(a)
    h = copy_matrix(a)
    t = identity(rows)
    r = 0
    for c in range(cols):
        while True:
            live = [(abs(h[i][c]), i) for i in range(r, rows) if h[i][c] != 0]
            if not live:
                break
            _, p = min(live)
            h[r], h[p] = h[p], h[r]
            t[r], t[p] = t[p], t[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[r])]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r < rows and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                t[r] = [-x for x in t[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[r])]
            r += 1
            if r == rows:
                break
    return h, t


@dataclass(frozen=True)
class SmithDecomposition:
    """U·A·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_k."""

    d: tuple
    u: tuple
    v: tuple

    @property
    def divisors(self):
        k = min(len(self.d), len(self.d[0]) if self.d else 0)
        return tuple(self.d[i][i] for i in range(k))


def snf(a):
    """Smith normal form by elementary row/column operations.

    Chooses the smallest nonzero pivot at each step; the divisibility chain
    is enforced by re-reducing whenever a remaining entry is not divisible
    by the current pivot.
    """
    rows, cols = dims(a)
    d = copy_matrix(a)
    u = identity(rows)
    v = identity(cols)

    def row_op(i, j, q):  # row i -= q * row j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for row in d:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(rows, cols):
        live = [(abs(d[i][j]), i, j) for i in range(t, rows)
                for j in range(t, cols) if d[i][j] != 0]
        if not live:
            break
        _, pi, pj = min(live)
        swap_rows(t, pi)
        swap_cols(t, pj)
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    row_op(i, t, d[i][t] // d[t][t])
                    if d[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    col_op(j, t, d[t][j] // d[t][t])
                    if d[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # divisibility fix-up: fold any non-divisible entry into the pivot
        fixed = False
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    row_op(t, i, -1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return SmithDecomposition(
        d=tuple(tuple(row) for row in d),
        u=tuple(tuple(row) for row in u),
        v=tuple(tuple(row) for row in v),
    )


def rational_cholesky(g):
    """Square-root-free LDLᵀ factorization of a symmetric rational matrix.

    Returns (L, D) with L unit lower triangular (Fractions), D a list of
    positive Fractions, and L·diag(D)·Lᵀ = G.  Raises NotPositiveDefinite
    when G is indefinite or semidefinite.
    """
    if not is_symmetric(g):
        raise ValueError("LDL^T requires a symmetric matrix")
    n = len(g)
    lo = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    dd = [Fraction(0)] * n
    for j in range(n):
        dd[j] = Fraction(g[j][j]) - sum(dd[k] * lo[j][k] ** 2 for k in range(j))
        if dd[j] <= 0:
            raise NotPositiveDefinite("matrix is not positive definite")
        for i in range(j + 1, n):
            s = Fraction(g[i][j]) - sum(dd[k] * lo[i][k] * lo[j][k] for k in range(j))
            lo[i][j] = s / dd[j]
    return lo, dd


def is_positive_definite(g):
    try:
        rational_cholesky(g)
        return True
    except NotPositiveDefinite:
        return False


def solve_mod2(a, b):
    """Solve A·x = b over F₂.

    Returns (particular, kernel_basis) as 0/1 lists, or None when the
    system has no solution.
    """
    rows, cols = dims(a)
    m = [[a[i][j] & 1 for j in range(cols)] + [b[i] & 1] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(rows):
            if i != r and m[i][c]:
                m[i] = [x ^ y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols]:
            return None
    x = [0] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    free = [c for c in range(cols) if c not in pivots]
    kernel = []
    for f in free:
        k = [0] * cols
        k[f] = 1
        for i, c in enumerate(pivots):
            k[c] = m[i][f]
        kernel.append(k)
    return x, kernel
