"""Arithmetic in the modified group ring A<G> = A[G]/(u+1).

Elements are coefficient vectors on the transversal ``S``; a term at ``u*s``
is folded onto ``s`` with a sign flip.  Coefficients are Python ints,
``Fraction``s, or residues carrying their modulus.
"""
from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import KindMismatch, NotAUnit
from .group import GroupContext

INT = "int"
RAT = "rat"


# --- plain-vector kernels (used directly by the lattice-heavy modules) -------

def mul_vec(ctx: GroupContext, a, b) -> list:
    n = ctx.n
    out = [0] * n
    smul = ctx.smul
    for i, x in enumerate(a):
        if not x:
            continue
        row = smul[i]
        for j, y in enumerate(b):
            if y:
                k, s = row[j]
                if s > 0:
                    out[k] += x * y
                else:
                    out[k] -= x * y
    return out


def conj_vec(ctx: GroupContext, a) -> list:
    out = [0] * ctx.n
    for i, x in enumerate(a):
        if x:
            k, s = ctx.sinv[i]
            out[k] += x if s > 0 else -x
    return out


def basis_vec(ctx: GroupContext, sigma) -> list:
    i, s = ctx.locate(sigma)
    v = [0] * ctx.n
    v[i] = s
    return v


def mult_matrix(ctx: GroupContext, a) -> list:
    """Matrix of ``x -> x*a`` acting on row coefficient vectors."""
    rows = []
    for i in range(ctx.n):
        row = [0] * ctx.n
        for j, y in enumerate(a):
            if y:
                k, s = ctx.smul[i][j]
                row[k] += y if s > 0 else -y
        rows.append(row)
    return rows


def inverse_vec(ctx: GroupContext, a) -> list:
    """Inverse in Q<G>; raises NotAUnit for zero divisors."""
    try:
        return linalg.solve_left(mult_matrix(ctx, a), [1] + [0] * (ctx.n - 1))
    except ZeroDivisionError:
        raise NotAUnit("element is a zero divisor in Q<G>") from None


def pow_vec(ctx: GroupContext, a, e: int, modulus: int | None = None) -> list:
    result = [1] + [0] * (ctx.n - 1)
    base = list(a)
    while e:
        if e & 1:
            result = mul_vec(ctx, result, base)
            if modulus:
                result = [x % modulus for x in result]
        e >>= 1
        if e:
            base = mul_vec(ctx, base, base)
            if modulus:
                base = [x % modulus for x in base]
    return result


# --- element wrapper ---------------------------------------------------------

@dataclass(frozen=True)
class RingElement:
    ctx: GroupContext
    coeffs: tuple
    kind: object = INT  # INT, RAT, or an int modulus

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.n:
            raise ValueError(f"expected {self.ctx.n} coefficients, got {len(self.coeffs)}")

    @classmethod
    def make(cls, ctx, coeffs, kind=INT):
        if kind == RAT:
            coeffs = tuple(Fraction(x) for x in coeffs)
        elif kind == INT:
            coeffs = tuple(int(x) for x in coeffs)
        else:
            coeffs = tuple(int(x) % kind for x in coeffs)
        return cls(ctx, coeffs, kind)

    @classmethod
    def one(cls, ctx, kind=INT):
        return cls.make(ctx, [1] + [0] * (ctx.n - 1), kind)

    @classmethod
    def group_element(cls, ctx, sigma, kind=INT):
        return cls.make(ctx, basis_vec(ctx, ctx.normalize(sigma)), kind)

    @property
    def modulus(self):
        return self.kind if isinstance(self.kind, int) and not isinstance(self.kind, bool) else None

    def _check(self, other):
        if not isinstance(other, RingElement):
            raise KindMismatch(f"cannot combine RingElement with {type(other).__name__}")
        if self.kind != other.kind or self.ctx != other.ctx:
            raise KindMismatch(f"kinds {self.kind!r} and {other.kind!r} differ")

    def _wrap(self, coeffs):
        return RingElement.make(self.ctx, coeffs, self.kind)

    def __add__(self, other):
        self._check(other)
        return self._wrap([x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return self._wrap([x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._wrap([-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._wrap([x * other for x in self.coeffs])
        return ring_mul(self.ctx, self, other)

    __rmul__ = __mul__

    def conj(self):
        return conj(self.ctx, self)

    def trace(self):
        return trace(self.ctx, self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_kind(self, kind):
        return RingElement.make(self.ctx, self.coeffs, kind)


def ring_mul(ctx, a: RingElement, b: RingElement) -> RingElement:
    a._check(b)
    return a._wrap(mul_vec(ctx, a.coeffs, b.coeffs))


def conj(ctx, a: RingElement) -> RingElement:
    return a._wrap(conj_vec(ctx, a.coeffs))


def trace(ctx, a: RingElement):
    return a.coeffs[0]


def ring_inverse(ctx, a: RingElement) -> RingElement:
    """Multiplicative inverse over Q or Z/m; raises NotAUnit otherwise."""
    if a.kind == RAT:
        return a._wrap(inverse_vec(ctx, a.coeffs))
    m = a.modulus
    if m is None:
        raise KindMismatch("ring_inverse needs rational or modular coefficients")
    x = linalg.solve_mod(mult_matrix(ctx, a.coeffs), [1] + [0] * (ctx.n - 1), m)
    return a._wrap(x)


def pow_mod(ctx, a: RingElement, e: int) -> RingElement:
    if a.modulus is None:
        raise KindMismatch("pow_mod needs a modular element")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return a._wrap(pow_vec(ctx, a.coeffs, e, a.modulus))


# --- complex characters (diagnostics only) -----------------------------------

@dataclass(frozen=True)
class CharacterTable:
    exponents: tuple  # one tuple (a_1..a_t) per character
    values: np.ndarray  # characters x S


def characters(ctx: GroupContext) -> CharacterTable:
    """The n homomorphisms G -> C* sending u to -1, evaluated on S."""
    rows, labels = [], []
    for a in itertools.product(*(range(d) for d in ctx.orders)):
        def chi(sigma):
            return cmath.exp(2j * cmath.pi * sum(x * y / d for x, y, d in zip(a, sigma, ctx.orders)))
        if abs(chi(ctx.u) + 1) < 1e-9:
            labels.append(a)
            rows.append([chi(s) for s in ctx.S])
    assert len(rows) == ctx.n
    return CharacterTable(tuple(labels), np.array(rows, dtype=complex))


def char_eval(tab: CharacterTable, a) -> np.ndarray:
    coeffs = a.coeffs if isinstance(a, RingElement) else a
    return tab.values @ np.array([float(x) for x in coeffs], dtype=complex)
