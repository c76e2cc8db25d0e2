import random
from pathlib import Path

import pytest

from latcorr import exactmat

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def a8_gram():
    """Tridiagonal 2/-1 Gram of the A8 root lattice (determinant 9)."""
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for i in range(7):
        g[i][i + 1] = g[i + 1][i] = -1
    return g


def e8_gram():
    """Gram of the E8 root lattice: a 7-chain with the last node attached
    to the fifth (determinant 1, even)."""
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for i in range(6):
        g[i][i + 1] = g[i + 1][i] = -1
    g[7][4] = g[4][7] = -1
    return g


def one_plus_a8_gram():
    a8 = a8_gram()
    return [[1] + [0] * 8] + [[0] + row for row in a8]


def z_plus_e8_gram():
    e8 = e8_gram()
    return [[1] + [0] * 8] + [[0] + row for row in e8]


def neg_one_a8_gram():
    """The 9x9 negative definite form ⟨-1⟩ ⊕ (-A8)."""
    return [[-x for x in row] for row in one_plus_a8_gram()]


def d4_gram():
    return [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]


def random_unimodular(rng, n, ops=6):
    """A random unimodular matrix built from elementary row operations."""
    t = exactmat.identity(n)
    for _ in range(ops):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n == 1:
            break
        kind = rng.randrange(3)
        if kind == 0:
            sign = rng.choice((-1, 1))
            t[i] = [x + sign * y for x, y in zip(t[i], t[j])]
        elif kind == 1:
            t[i], t[j] = t[j], t[i]
        else:
            t[i] = [-x for x in t[i]]
    return t


def basis_change(gram, t):
    return exactmat.matmul(exactmat.matmul(t, gram), exactmat.transpose(t))


def random_posdef_gram(rng, max_rank=4, max_disc=36):
    """A random positive definite integral Gram with bounded discriminant.

    Mixes B·Bᵀ forms (square discriminant, always embeddable) with
    unimodular conjugates of small diagonal forms.
    """
    while True:
        n = rng.randint(1, max_rank)
        if rng.random() < 0.5:
            b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
            d = exactmat.det(b)
            if d == 0 or d * d > max_disc:
                continue
            return exactmat.matmul(b, exactmat.transpose(b))
        diag = []
        disc = 1
        for _ in range(n):
            d = rng.randint(1, 6)
            if disc * d > max_disc:
                d = 1
            diag.append(d)
            disc *= d
        g = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return basis_change(g, random_unimodular(rng, n, ops=4))


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def data_dir():
    return DATA_DIR
