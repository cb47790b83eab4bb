"""Graded quotient orders ``A = (sum_i L^i) / (nu - 1)`` and their roots of unity.

Degree ``i`` is realized as ``L_(I^i, w^i)``.  Multiplication adds degrees
modulo k and divides by ``nu`` whenever the degree wraps.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NuNotShort
from .ideals import IdealRealization, gram_of, ideal_mul
from .lattice import enumerate_norm_one
from .modring import conj_vec, inverse_vec, mul_vec, pow_vec


@dataclass(eq=False)
class GradedOrder:
    ctx: object
    base: IdealRealization  # degree one
    k: int
    nu: list  # element of I^k inside Q<G>
    _pieces: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._pieces.setdefault(0, IdealRealization.unit(self.ctx))
        self._pieces.setdefault(1, self.base)
        self._nu_inv = inverse_vec(self.ctx, self.nu)

    def piece(self, i: int) -> IdealRealization:
        if i not in self._pieces:
            self._pieces[i] = ideal_mul(self.piece(i - 1), self.base)
        return self._pieces[i]

    def mul(self, x, y):
        """Product of homogeneous elements given as ``(degree, element of Q<G>)``."""
        (i, a), (j, b) = x, y
        prod = mul_vec(self.ctx, a, b)
        d = i + j
        if d >= self.k:
            prod = mul_vec(self.ctx, prod, self._nu_inv)
            d -= self.k
        return d, prod

    def roots_in_degree(self, i: int) -> list:
        P = self.piece(i)
        return [(i, P.element(c)) for c in enumerate_norm_one(gram_of(P))]


def mu_of_order(A: GradedOrder) -> list:
    """All roots of unity of A as ``(degree, coordinates in that piece)``."""
    out = []
    for i in range(A.k):
        P = A.piece(i)
        out.extend((i, c) for c in enumerate_norm_one(gram_of(P)))
    return out


@dataclass(frozen=True)
class RootResult:
    alpha: list | None  # coordinates in the degree-one basis
    reason: str | None = None


def extract_root(I: IdealRealization, nu, k: int | None = None) -> RootResult:
    """Find a degree-one root of unity ``alpha`` with ``alpha^k = nu``.

    ``nu`` is an element of ``I^k`` (coefficients on S) that must satisfy
    ``nu conj(nu) = w^k``.
    """
    ctx = I.ctx
    k = k or ctx.k
    wk = pow_vec(ctx, I.w, k)
    if mul_vec(ctx, nu, conj_vec(ctx, nu)) != list(wk):
        raise NuNotShort("nu is not a short vector of L_(I^k, w^k)")
    A = GradedOrder(ctx, I, k, list(nu))
    cands = enumerate_norm_one(gram_of(I))
    if not cands:
        return RootResult(None, "no-degree-one-unit")
    one = [1] + [0] * (ctx.n - 1)
    for c in cands:
        x = (1, I.element(c))
        acc = x
        for _ in range(k - 1):
            acc = A.mul(acc, x)
        if acc == (0, one):
            return RootResult(c)
    return RootResult(None, "power-mismatch")
