import random
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest

from latcorr import exactmat
from latcorr.errors import NotPositiveDefinite, SingularMatrix

from conftest import a8_gram


def cofactor_det(a):
    """Independent determinant oracle: Laplace expansion with memoization
    on column subsets."""
    n = len(a)
    memo = {}

    def rec(row, cols):
        if row == n:
            return 1
        key = cols
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for idx, c in enumerate(cols):
            if a[row][c]:
                total += sign * a[row][c] * rec(row + 1, cols[:idx] + cols[idx + 1:])
            sign = -sign
        memo[key] = total
        return total

    return rec(0, tuple(range(n)))


def minor_gcds(a):
    """d_k = gcd of all k×k minors; elementary divisors are d_k/d_{k-1}."""
    n = len(a)
    out = []
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                sub = [[a[i][j] for j in cols] for i in rows]
                g = gcd(g, abs(exactmat.det(sub)))
        out.append(g)
    return out


def is_row_hnf(h):
    rows = len(h)
    cols = len(h[0])
    last_pivot = -1
    seen_zero_row = False
    for i in range(rows):
        nz = [j for j in range(cols) if h[i][j] != 0]
        if not nz:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        p = nz[0]
        if p <= last_pivot or h[i][p] <= 0:
            return False
        if any(not 0 <= h[k][p] < h[i][p] for k in range(i)):
            return False
        last_pivot = p
    return True


def test_hnf_identity_fixed_point():
    h, t = exactmat.hnf(exactmat.identity(3))
    assert h == exactmat.identity(3)
    assert t == exactmat.identity(3)


def test_hnf_positive_diagonal_fixed_point():
    a = [[2, 0], [0, 2]]
    h, t = exactmat.hnf(a)
    assert h == a
    assert t == exactmat.identity(2)


def test_hnf_general_2x2():
    a = [[1, 2], [3, 4]]
    h, t = exactmat.hnf(a)
    assert is_row_hnf(h)
    assert exactmat.matmul(t, a) == h
    assert abs(exactmat.det(t)) == 1
    assert (h[0][0], h[1][1]) == (1, 2)


def test_hnf_random_property():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        h, t = exactmat.hnf(a)
        assert is_row_hnf(h)
        assert exactmat.matmul(t, a) == h
        assert abs(exactmat.det(t)) == 1


def test_snf_single_entry():
    assert exactmat.snf([[9]]).divisors == (9,)


def test_snf_diagonal():
    assert exactmat.snf([[2, 0], [0, 2]]).divisors == (2, 2)


def test_snf_a8_divisors_against_minor_gcd_oracle():
    a8 = a8_gram()
    dec = exactmat.snf(a8)
    assert dec.divisors == (1, 1, 1, 1, 1, 1, 1, 9)
    assert abs(exactmat.det(a8)) == 9
    gcds = minor_gcds(a8)
    expected = []
    prev = 1
    for g in gcds:
        expected.append(g // prev)
        prev = g
    assert list(dec.divisors) == expected


def test_snf_random_property():
    rng = random.Random(11)
    for _ in range(50):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = [[rng.randint(-8, 8) for _ in range(cols)] for _ in range(rows)]
        dec = exactmat.snf(a)
        u = [list(r) for r in dec.u]
        v = [list(r) for r in dec.v]
        assert exactmat.matmul(exactmat.matmul(u, a), v) == [list(r) for r in dec.d]
        assert abs(exactmat.det(u)) == 1
        assert abs(exactmat.det(v)) == 1
        divs = [d for d in dec.divisors if d != 0]
        assert all(d > 0 for d in divs)
        assert all(b % a_ == 0 for a_, b in zip(divs, divs[1:]))
        # zeros only after the nonzero chain
        tail = list(dec.divisors[len(divs):])
        assert all(d == 0 for d in tail)


def test_det_examples():
    assert exactmat.det([[9]]) == 9
    assert exactmat.det(exactmat.identity(5)) == 1
    assert exactmat.det(a8_gram()) == 9
    assert exactmat.det(a8_gram()) == cofactor_det(a8_gram())


def test_det_matches_cofactor_oracle_random():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert exactmat.det(a) == cofactor_det(a)


def test_inverse_examples():
    assert exactmat.inverse([[9]]) == [[Fraction(1, 9)]]
    inv = exactmat.inverse(a8_gram())
    prod = exactmat.matmul(a8_gram(), inv)
    assert prod == exactmat.identity(8)


def test_inverse_singular():
    with pytest.raises(SingularMatrix):
        exactmat.inverse([[1, 1], [1, 1]])


def test_inverse_random_exact():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 5)
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        if exactmat.det(a) == 0:
            continue
        assert exactmat.matmul(a, exactmat.inverse(a)) == exactmat.identity(n)


def test_cholesky_identity():
    lo, dd = exactmat.rational_cholesky(exactmat.identity(2))
    assert dd == [1, 1]


def test_cholesky_2x2_pivots():
    lo, dd = exactmat.rational_cholesky([[2, 1], [1, 2]])
    assert dd == [Fraction(2), Fraction(3, 2)]
    # reconstruct L·D·Lᵀ
    n = 2
    recon = [[sum(lo[i][k] * dd[k] * lo[j][k] for k in range(n))
              for j in range(n)] for i in range(n)]
    assert recon == [[2, 1], [1, 2]]


def test_cholesky_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        exactmat.rational_cholesky([[1, 2], [2, 1]])


def test_cholesky_iff_leading_minors_positive():
    rng = random.Random(13)
    for _ in range(80):
        n = rng.randint(1, 4)
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = rng.randint(-3, 3)
        minors_positive = all(
            exactmat.det([row[: k + 1] for row in a[: k + 1]]) > 0
            for k in range(n))
        assert exactmat.is_positive_definite(a) == minors_positive


def test_solve_mod2_roundtrip():
    rng = random.Random(17)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        x_true = [rng.randint(0, 1) for _ in range(cols)]
        b = [sum(a[i][j] * x_true[j] for j in range(cols)) % 2
             for i in range(rows)]
        sol = exactmat.solve_mod2(a, b)
        assert sol is not None
        x, kernel = sol
        assert [sum(a[i][j] * x[j] for j in range(cols)) % 2
                for i in range(rows)] == b
        for k in kernel:
            assert all(sum(a[i][j] * k[j] for j in range(cols)) % 2 == 0
                       for i in range(rows))
