import itertools
import random
from fractions import Fraction

import pytest

from symlat.group import make_group

# (orders, u) pairs used across the suite
GROUPS = [
    ((2,), (1,)),
    ((4,), (2,)),
    ((6,), (3,)),
    ((8,), (4,)),
    ((10,), (5,)),
    ((12,), (6,)),
    ((2, 2), (1, 0)),
    ((2, 4), (0, 2)),
    ((2, 4), (1, 0)),
]
SMALL_GROUPS = [g for g in GROUPS if len(list(itertools.product(*(range(d) for d in g[0])))) <= 8]


def group_id(g):
    return "x".join(map(str, g[0])) + "_u" + "".join(map(str, g[1]))


@pytest.fixture(params=GROUPS, ids=[group_id(g) for g in GROUPS])
def ctx(request):
    return make_group(*request.param)


@pytest.fixture(params=SMALL_GROUPS, ids=[group_id(g) for g in SMALL_GROUPS])
def small_ctx(request):
    return make_group(*request.param)


@pytest.fixture
def rng():
    return random.Random(20261019)


def naive_group_algebra_mul(ctx, a, b):
    """Multiply in Z[G] over all 2n elements, then fold u onto -1."""
    full_a = {s: x for s, x in zip(ctx.S, a)}
    full_b = {s: x for s, x in zip(ctx.S, b)}
    prod = {}
    for s, x in full_a.items():
        for t, y in full_b.items():
            r = ctx.mul(s, t)
            prod[r] = prod.get(r, 0) + x * y
    out = [0] * ctx.n
    for i, s in enumerate(ctx.S):
        out[i] = prod.get(s, 0) - prod.get(ctx.mul(ctx.u, s), 0)
    return out


def gso(gram):
    """Independent Gram-Schmidt from a Gram matrix (Cholesky-style, exact)."""
    n = len(gram)
    r = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = Fraction(gram[i][j]) - sum(r[i][l] * r[j][l] * B[l] for l in range(j))
            if i == j:
                B[i] = s
            else:
                r[i][j] = s / B[j]
    return B, r
