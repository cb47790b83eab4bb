"""Integral lattices given only by their Gram matrix.

Everything is exact: Gram-Schmidt data are ``Fraction``s and reduction uses
the Lovasz condition in the form ``|b_i*|^2 <= 2 |b_{i+1}*|^2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ModulusTooSmall, NotPositiveDefinite

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ReductionResult:
    gram_reduced: list
    transform: list  # rows express the new basis in the old one
    gso_norms: list
    mu: list
    swaps: int = 0


def gram_schmidt(gram):
    """Exact GSO data ``(B, mu)`` from a Gram matrix.

    Raises NotPositiveDefinite if some ``B_i <= 0``.
    """
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(gram[i][j])
            for l in range(j):
                s -= mu[j][l] * mu[i][l] * B[l]
            mu[i][j] = s / B[j]
        s = Fraction(gram[i][i])
        for l in range(i):
            s -= mu[i][l] * mu[i][l] * B[l]
        if s <= 0:
            raise NotPositiveDefinite(f"Gram matrix is not positive definite (B_{i} = {s})")
        B[i] = s
        mu[i][i] = Fraction(1)
    return B, mu


def is_lll_reduced(gram) -> bool:
    B, mu = gram_schmidt(gram)
    n = len(gram)
    if any(abs(mu[i][j]) > HALF for i in range(n) for j in range(i)):
        return False
    return all(B[i] <= 2 * B[i + 1] for i in range(n - 1))


def lll_reduce(gram) -> ReductionResult:
    """LLL-reduce the lattice with Gram matrix ``gram``.

    Returns the reduced Gram ``U gram U^T`` together with ``U``.
    """
    n = len(gram)
    G = [[int(x) for x in row] for row in gram]
    if any(G[i][j] != G[j][i] for i in range(n) for j in range(i)):
        raise NotPositiveDefinite("Gram matrix is not symmetric")
    H = linalg.identity(n)
    if n == 0:
        return ReductionResult([], [], [], [])
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    if G[0][0] <= 0:
        raise NotPositiveDefinite("Gram matrix is not positive definite")
    B[0] = Fraction(G[0][0])
    k, kmax, swaps = 1, 0, 0

    def red(k, l):
        q = mu[k][l]
        if abs(q) <= HALF:
            return
        q = math.floor(q + HALF)
        H[k] = [x - q * y for x, y in zip(H[k], H[l])]
        rowl = G[l]
        G[k] = [x - q * y for x, y in zip(G[k], rowl)]
        for i in range(n):
            G[i][k] -= q * G[i][l]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k):
        H[k], H[k - 1] = H[k - 1], H[k]
        G[k], G[k - 1] = G[k - 1], G[k]
        for row in G:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        b = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / b
        B[k] = B[k - 1] * B[k] / b
        B[k - 1] = b
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                s = Fraction(G[k][j])
                for i in range(j):
                    s -= mu[j][i] * mu[k][i] * B[i]
                mu[k][j] = s / B[j]
            s = Fraction(G[k][k])
            for j in range(k):
                s -= mu[k][j] * mu[k][j] * B[j]
            if s <= 0:
                raise NotPositiveDefinite("Gram matrix is not positive definite")
            B[k] = s
        red(k, k - 1)
        if B[k - 1] > 2 * B[k]:
            swap(k)
            swaps += 1
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    Bf, muf = gram_schmidt(G)
    return ReductionResult(G, H, Bf, muf, swaps)


def determinant(gram) -> int:
    return linalg.det(gram)


def is_unimodular(gram) -> bool:
    return determinant(gram) == 1


def coset_threshold_ok(n: int, m: int) -> bool:
    """Whether ``m >= 2^(n/2) + 1``, decided in integers."""
    return m >= 1 and (m - 1) ** 2 >= 2 ** n


def _round_down_ties(x: Fraction) -> int:
    return math.ceil(x - HALF)


def coset_short_vector(gram, m: int, c):
    """Unique norm-1 vector in the coset ``c + mL``, or None.

    ``c`` holds coordinates modulo ``m`` in the basis of ``gram``.  A nearest
    plane search in an LLL-reduced basis of ``mL`` returns a coset member
    within a factor ``2^n`` of the shortest; for ``m >= 2^(n/2)+1`` a norm-1
    member, if any, is that vector.
    """
    n = len(gram)
    if not coset_threshold_ok(n, m):
        raise ModulusTooSmall(f"modulus {m} < 2^({n}/2)+1")
    t = [int(x) % m for x in c]
    red = lll_reduce([[m * m * x for x in row] for row in gram])
    basis = [[m * x for x in row] for row in red.transform]  # L-coordinates
    tg = linalg.vecmat(t, gram)
    r = [linalg.dot(b, tg) for b in basis]
    B, mu = red.gso_norms, red.mu
    mt = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(r[j])
        for i in range(j):
            s -= mu[j][i] * mt[i] * B[i]
        mt[j] = s / B[j]
    y = list(t)
    for j in range(n - 1, -1, -1):
        q = _round_down_ties(mt[j])
        if q:
            y = [a - q * b for a, b in zip(y, basis[j])]
            for i in range(j):
                mt[i] -= q * mu[j][i]
    if linalg.quad(y, gram) == 1:
        return y
    return None


def enumerate_short(gram, bound: int) -> list:
    """All nonzero integer vectors ``v`` with ``v gram v^T <= bound``."""
    n = len(gram)
    if n == 0:
        return []
    red = lll_reduce(gram)
    B, mu = red.gso_norms, red.mu
    U = red.transform
    found = []
    x = [0] * n
    bound = Fraction(bound)

    def search(i, remaining):
        # center of coordinate i given x[i+1:]
        c = -sum((mu[j][i] * x[j] for j in range(i + 1, n)), Fraction(0))
        r = math.isqrt(int(remaining / B[i]) + 1) + 1
        lo, hi = math.floor(c) - r, math.ceil(c) + r
        for v in range(lo, hi + 1):
            d = v - c
            cost = B[i] * d * d
            if cost <= remaining:
                x[i] = v
                if i == 0:
                    if any(x):
                        found.append(list(x))
                else:
                    search(i - 1, remaining - cost)
        x[i] = 0

    search(n - 1, bound)
    out = [linalg.vecmat(v, U) for v in found]
    return sorted(out)


def enumerate_norm_one(gram) -> list:
    return [v for v in enumerate_short(gram, 1) if linalg.quad(v, gram) == 1]
