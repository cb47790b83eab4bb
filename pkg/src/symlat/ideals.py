"""Fractional ideals of Z<G> carrying the form ``t(x conj(y) / w)``.

An ``IdealRealization`` stores an ordered Z-basis of ``I`` inside ``Q<G>``
(rows of rationals on the S-basis) together with ``w``.  The basis order is
meaningful: when an ideal realizes a G-lattice, row ``i`` corresponds to
lattice basis vector ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import InternalCheckFailed, NotAUnit, NotInvertible, NotIntegral, NotPositive, NotPositiveDefinite
from .glattice import GLattice, lifted_inner
from .lattice import gram_schmidt, lll_reduce
from .modring import conj_vec, inverse_vec, mul_vec, pow_vec


def trace_product(ctx, a, b):
    """``t(a b)`` without forming the full product."""
    s = 0
    for i, x in enumerate(a):
        if x:
            k, sign = ctx.sinv[i]
            y = b[k]
            if y:
                s += x * y if sign > 0 else -x * y
    return s


@dataclass(frozen=True, eq=False)
class IdealRealization:
    ctx: object
    basis: tuple  # rows of Fractions on the S-basis
    w: tuple

    @classmethod
    def make(cls, ctx, basis, w):
        basis = tuple(tuple(Fraction(x) for x in row) for row in basis)
        return cls(ctx, basis, tuple(Fraction(x) for x in w))

    @classmethod
    def unit(cls, ctx):
        return cls.make(ctx, linalg.identity(ctx.n), [1] + [0] * (ctx.n - 1))

    @cached_property
    def denominator(self) -> int:
        return linalg.common_denominator(self.basis)

    @cached_property
    def hnf(self):
        """Canonical ``(numerator HNF, denominator)`` of the Z-span."""
        d = self.denominator
        rows = [[(x * d).numerator for x in row] for row in self.basis]
        return tuple(map(tuple, linalg.hnf(rows, self.ctx.n))), d

    @cached_property
    def basis_inverse(self):
        return linalg.inverse(self.basis)

    @cached_property
    def w_inverse(self):
        return inverse_vec(self.ctx, self.w)

    def same_span(self, other) -> bool:
        (h1, d1), (h2, d2) = self.hnf, other.hnf
        if d1 == d2:
            return h1 == h2
        return linalg.hnf([[x * d2 for x in r] for r in h1]) == linalg.hnf([[x * d1 for x in r] for r in h2])

    def element(self, coords):
        """The element ``sum c_i x_i`` of Q<G>."""
        out = [Fraction(0)] * self.ctx.n
        for c, row in zip(coords, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] += c * x
        return out

    def coords(self, elem, integral=True):
        """Coordinates of ``elem`` in this basis (integral unless told otherwise)."""
        c = linalg.vecmat(elem, self.basis_inverse)
        return linalg.as_int_vector(c) if integral else c

    def contains(self, elem) -> bool:
        c = linalg.vecmat(elem, self.basis_inverse)
        return all(Fraction(x).denominator == 1 for x in c)

    def with_basis(self, U):
        """Same ideal on the basis whose rows are ``U`` in current coordinates."""
        return IdealRealization.make(self.ctx, linalg.matmul(U, self.basis), self.w)


def realize(L: GLattice, e2):
    """Realize an invertible G-lattice as ``L_(I, w)`` via ``I = {x : x e2 in L}``.

    Returns ``(A, E)`` where row ``i`` of ``A.basis`` maps to lattice basis
    vector ``i`` under ``x -> x e2`` and ``E`` is the orbit matrix of ``e2``.
    """
    ctx = L.ctx
    E = L.orbit_matrix(e2)
    try:
        X = linalg.inverse(E)
        w = inverse_vec(ctx, lifted_inner(L, e2, e2))
    except (ZeroDivisionError, NotAUnit):
        raise NotInvertible("e2 does not generate L over Q<G>") from None
    A = IdealRealization.make(ctx, X, w)
    return A, E


def ideal_mul(A: IdealRealization, B: IdealRealization) -> IdealRealization:
    ctx = A.ctx
    prods = [mul_vec(ctx, x, y) for x in A.basis for y in B.basis]
    d = linalg.common_denominator(prods)
    rows = [[(x * d).numerator for x in p] for p in prods]
    H = linalg.hnf(rows, ctx.n)
    if len(H) != ctx.n:
        raise NotInvertible("ideal product is not of full rank")
    basis = [[Fraction(x, d) for x in row] for row in H]
    return IdealRealization.make(ctx, basis, mul_vec(ctx, A.w, B.w))


def ideal_pow(A: IdealRealization, i: int) -> IdealRealization:
    if i < 1:
        raise ValueError("exponent must be positive")
    out = A
    for _ in range(i - 1):
        out = ideal_mul(out, A)
    return out


def ideal_powers(A: IdealRealization, k: int) -> list:
    """``[I^0, I^1, ..., I^k]`` with ``I^0 = Z<G>`` and ``w^0 = 1``."""
    out = [IdealRealization.unit(A.ctx), A]
    for _ in range(2, k + 1):
        out.append(ideal_mul(out[-1], A))
    return out


def two_generator_power(ctx, beta, i: int, w_power) -> IdealRealization:
    """``Z<G> + Z<G> beta^i`` as an ideal realization (cross-check oracle)."""
    b = pow_vec(ctx, beta, i)
    rows = linalg.identity(ctx.n) + [mul_vec(ctx, basis_row, b) for basis_row in linalg.identity(ctx.n)]
    d = linalg.common_denominator(rows)
    H = linalg.hnf([[(Fraction(x) * d).numerator for x in r] for r in rows], ctx.n)
    return IdealRealization.make(ctx, [[Fraction(x, d) for x in r] for r in H], w_power)


def gram_of(A: IdealRealization) -> list:
    """Exact Gram matrix of ``L_(I, w)`` on the stored basis."""
    ctx = A.ctx
    n = ctx.n
    if conj_vec(ctx, A.w) != list(A.w):
        raise NotPositive("w is not self-conjugate")
    winv = A.w_inverse
    cols = [mul_vec(ctx, conj_vec(ctx, y), winv) for y in A.basis]
    gram = [[None] * n for _ in range(n)]
    for i, x in enumerate(A.basis):
        for j in range(i, n):
            v = Fraction(trace_product(ctx, x, cols[j]))
            if v.denominator != 1:
                raise NotIntegral(f"form value {v} is not an integer")
            gram[i][j] = gram[j][i] = v.numerator
    try:
        gram_schmidt(gram)
    except NotPositiveDefinite:
        raise NotPositive("form is not positive definite") from None
    return gram


def action_of(A: IdealRealization) -> list:
    """Generator matrices for multiplication by the cyclic generators of G."""
    ctx = A.ctx
    mats = []
    for g in ctx.generators:
        i, s = ctx.locate(g)
        gv = [0] * ctx.n
        gv[i] = s
        rows = []
        for x in A.basis:
            try:
                rows.append(A.coords(mul_vec(ctx, x, gv)))
            except ValueError:
                raise NotIntegral("basis does not span a Z<G>-module") from None
        mats.append(rows)
    return mats


def as_glattice(A: IdealRealization) -> GLattice:
    return GLattice(A.ctx, gram_of(A), action_of(A))


def lll_ideal(A: IdealRealization):
    """Return ``(A', gram', U)`` with ``A'`` on an LLL-reduced basis of ``L_(I,w)``."""
    red = lll_reduce(gram_of(A))
    return A.with_basis(red.transform), red.gram_reduced, red.transform


def conj_ideal(A: IdealRealization) -> IdealRealization:
    """Realization of the conjugate lattice: ``L_(conj I, w)`` on the conjugated basis."""
    ctx = A.ctx
    return IdealRealization.make(ctx, [conj_vec(ctx, x) for x in A.basis], A.w)


def check_realization(L: GLattice, A: IdealRealization):
    if [list(r) for r in L.gram] != gram_of(A):
        raise InternalCheckFailed("realized ideal lattice has a different Gram matrix")
