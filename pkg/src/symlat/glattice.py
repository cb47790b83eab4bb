"""G-lattices: an integral lattice with a G-action in which u acts as -1.

Coordinates are row vectors on the lattice basis.  Row ``i`` of an action
matrix holds the coordinates of ``sigma * b_i``, so ``sigma`` acts on a
coordinate vector ``x`` as ``x M_sigma`` and the action preserves the form
when ``M gram M^T = gram``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import linalg
from .errors import FactorTooLarge, InvalidGLattice, NotPositiveDefinite
from .group import GroupContext
from .lattice import gram_schmidt, is_unimodular
from .modring import basis_vec, mul_vec

DEFAULT_FACTOR_BOUND = 10 ** 6


def _freeze(m):
    return tuple(tuple(int(x) for x in row) for row in m)


@dataclass(frozen=True, eq=False)
class GLattice:
    ctx: GroupContext
    gram: tuple
    action: tuple  # one matrix per cyclic generator of G
    elem_mats: dict = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "gram", _freeze(self.gram))
        object.__setattr__(self, "action", tuple(_freeze(m) for m in self.action))
        if len(self.action) != len(self.ctx.orders):
            raise InvalidGLattice(
                f"expected {len(self.ctx.orders)} generator matrices, got {len(self.action)}")
        r = len(self.gram)
        for m in self.action:
            if len(m) != r or any(len(row) != r for row in m):
                raise InvalidGLattice("action matrix has the wrong shape")
        if self.elem_mats is None:
            object.__setattr__(self, "elem_mats", self._all_matrices())

    def _all_matrices(self):
        ctx = self.ctx
        mats = {ctx.identity: _freeze(linalg.identity(self.rank))}
        frontier = [ctx.identity]
        while frontier:
            nxt = []
            for s in frontier:
                for g, mg in zip(ctx.generators, self.action):
                    t = ctx.mul(s, g)
                    if t not in mats:
                        mats[t] = _freeze(linalg.matmul(mats[s], mg))
                        nxt.append(t)
            frontier = nxt
        return mats

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def n(self) -> int:
        return self.ctx.n

    def matrix(self, sigma):
        return self.elem_mats[self.ctx.normalize(sigma)]

    @property
    def s_matrices(self):
        return [self.elem_mats[s] for s in self.ctx.S]

    def act(self, sigma, x):
        return linalg.vecmat(x, self.matrix(sigma))

    def inner(self, x, y):
        return linalg.dot(linalg.vecmat(x, self.gram), y)

    def ring_action(self, a, modulus=None):
        """Matrix of the ring element ``a`` (coefficients on S) acting on coordinates."""
        r = self.rank
        out = [[0] * r for _ in range(r)]
        for c, m in zip(a, self.s_matrices):
            if c:
                for i in range(r):
                    oi, mi = out[i], m[i]
                    for j in range(r):
                        if mi[j]:
                            oi[j] += c * mi[j]
        if modulus:
            out = [[x % modulus for x in row] for row in out]
        return out

    def orbit_matrix(self, e):
        """Rows: coordinates of ``s e`` for ``s`` in S."""
        return [linalg.vecmat(e, m) for m in self.s_matrices]

    def validate(self):
        ctx = self.ctx
        g = self.gram
        r = self.rank
        if any(g[i][j] != g[j][i] for i in range(r) for j in range(i)):
            raise InvalidGLattice("Gram matrix is not symmetric")
        try:
            gram_schmidt(g)
        except NotPositiveDefinite as exc:
            raise InvalidGLattice(str(exc)) from None
        ident = _freeze(linalg.identity(r))
        for i, (d, m) in enumerate(zip(ctx.orders, self.action)):
            if _freeze(linalg.matmul(linalg.matmul(m, g), linalg.transpose(m))) != g:
                raise InvalidGLattice(f"generator g{i} does not preserve the inner product")
            p = ident
            for _ in range(d):
                p = linalg.matmul(p, m)
            if _freeze(p) != ident:
                raise InvalidGLattice(f"generator g{i} does not satisfy g^{d} = 1")
        for i, a in enumerate(self.action):
            for b in self.action[i + 1:]:
                if linalg.matmul(a, b) != linalg.matmul(b, a):
                    raise InvalidGLattice("generator matrices do not commute")
        mu = self.matrix(ctx.u)
        if mu != _freeze([[-x for x in row] for row in ident]):
            raise InvalidGLattice("u does not act as -1")
        return self

    def transport(self, U):
        """The same G-lattice on the new basis whose rows are ``U`` (old coordinates)."""
        Ui = [linalg.as_int_vector(row) for row in linalg.inverse(U)]
        gram = linalg.matmul(linalg.matmul(U, self.gram), linalg.transpose(U))
        action = [linalg.matmul(linalg.matmul(U, m), Ui) for m in self.action]
        return GLattice(self.ctx, gram, action)


def make_glattice(ctx, gram, action, validate=True) -> GLattice:
    L = GLattice(ctx, gram, action)
    return L.validate() if validate else L


def standard_lattice(ctx: GroupContext) -> GLattice:
    n = ctx.n
    action = []
    for g in ctx.generators:
        action.append([basis_vec(ctx, ctx.mul(g, s)) for s in ctx.S])
    return GLattice(ctx, linalg.identity(n), action)


def conj_lattice(L: GLattice) -> GLattice:
    ctx = L.ctx
    action = [L.matrix(ctx.inv(g)) for g in ctx.generators]
    return GLattice(ctx, L.gram, action)


def lifted_inner(L: GLattice, x, y) -> list:
    """``x . conj(y) = sum_{s in S} <x, s y> s`` as a coefficient vector."""
    xg = linalg.vecmat(x, L.gram)
    return [linalg.dot(xg, linalg.vecmat(y, m)) for m in L.s_matrices]


# --- module generators -------------------------------------------------------

def factorize(m: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict:
    """Prime factorisation by trial division; FactorTooLarge past ``bound``."""
    if m < 1:
        raise ValueError("can only factor positive integers")
    out = {}
    d = 2
    while d * d <= m:
        if d > bound:
            raise FactorTooLarge(f"cofactor {m} has no prime factor <= {bound}")
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _frobenius_matrix(ctx, p):
    return [basis_vec(ctx, ctx.power(s, p)) for s in ctx.S]


def _split_idempotents(ctx, B, p):
    """Primitive idempotents of the split semisimple algebra spanned by ``B``."""
    n = ctx.n
    one = [1] + [0] * (n - 1)
    idems = [one]
    for b in B:
        refined = []
        for eps in idems:
            be = [x % p for x in mul_vec(ctx, b, eps)]
            parts = []
            for c in range(p):
                d = [(x - c * y) % p for x, y in zip(be, eps)]
                # eps * (1 - d^(p-1)) projects onto the components where b = c
                dp = _pow_mod_vec(ctx, d, p - 1, p)
                part = [(x - y) % p for x, y in zip(eps, mul_vec(ctx, eps, dp))]
                part = [x % p for x in part]
                if any(part):
                    parts.append(part)
            refined.extend(parts)
        idems = refined
        if len(idems) == len(B):
            break
    return idems


def _pow_mod_vec(ctx, a, e, p):
    result = [1] + [0] * (ctx.n - 1)
    base = [x % p for x in a]
    while e:
        if e & 1:
            result = [x % p for x in mul_vec(ctx, result, base)]
        e >>= 1
        if e:
            base = [x % p for x in mul_vec(ctx, base, base)]
    return result


def _generator_by_decomposition(L: GLattice, p: int):
    ctx = L.ctx
    n = ctx.n
    F = _frobenius_matrix(ctx, p)
    j = 1
    while p ** j < n:
        j += 1
    Fj = F
    for _ in range(j - 1):
        Fj = [[x % p for x in row] for row in linalg.matmul(Fj, F)]
    nil = linalg.kernel_mod(Fj, p)
    # x^p = x: the Frobenius-fixed subalgebra, one dimension per local factor
    fixed = linalg.kernel_mod([[(F[i][c] - (i == c)) % p for c in range(n)] for i in range(n)], p)
    idems = _split_idempotents(ctx, fixed, p)
    semisimple, _ = linalg.rref_mod(Fj, p)
    y = [0] * n
    for eps in idems:
        eps = _lift_idempotent(ctx, eps, p)
        A = L.ring_action(eps, p)
        V = linalg.span_mod(A, p)
        W_rows = []
        for v in nil:
            W_rows.extend(L.ring_action([x % p for x in mul_vec(ctx, eps, v)], p))
        W, wp = linalg.rref_mod(W_rows, p) if W_rows else ([], [])
        f = linalg.rank_mod([mul_vec(ctx, eps, t) for t in semisimple], p)
        if len(V) - len(W) != f:
            return None
        pick = next((row for row in A if not linalg.in_span_mod(W, wp, row, p)), None)
        if pick is None:
            return None
        y = [(a + b) % p for a, b in zip(y, pick)]
    return y


def _lift_idempotent(ctx, e, p, modulus=None):
    """Newton-style lift ``e -> 3e^2 - 2e^3``; fixes exact idempotents."""
    modulus = modulus or p
    while True:
        e2 = [x % modulus for x in mul_vec(ctx, e, e)]
        if e2 == [x % modulus for x in e]:
            return e
        e3 = mul_vec(ctx, e2, e)
        e = [(3 * a - 2 * b) % modulus for a, b in zip(e2, e3)]


def _generator_by_moment_curve(L: GLattice, p: int):
    n = L.rank
    for c in range(n * (n - 1) + 1):
        y = [pow(c, i, p) for i in range(n)]
        if linalg.rank_mod(L.orbit_matrix(y), p) == n:
            return y
    return None


def generator_mod_p(L: GLattice, p: int):
    """A vector whose G-orbit spans L/pL, or None."""
    n = L.rank
    if n != L.n:
        return None
    if p > n * (n - 1):
        y = _generator_by_moment_curve(L, p)
    else:
        y = _generator_by_decomposition(L, p)
    if y is None or linalg.rank_mod(L.orbit_matrix(y), p) != n:
        return None
    return y


def find_module_generator(L: GLattice, m: int, bound: int = DEFAULT_FACTOR_BOUND):
    """Coordinates of ``e`` with ``{sigma e + mL}`` generating L/mL, or None."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if L.rank != L.n:
        return None
    e, mod = [0] * L.rank, 1
    for p, k in sorted(factorize(m, bound).items()):
        y = generator_mod_p(L, p)
        if y is None:
            return None
        q = p ** k
        # CRT: e = old mod `mod`, e = y mod q
        t = pow(mod, -1, q)
        e = [a + mod * (((b - a) * t) % q) for a, b in zip(e, y)]
        mod *= q
    e = [x % m for x in e]
    if math.gcd(linalg.det(L.orbit_matrix(e)), m) != 1:
        return None
    return e


@dataclass(frozen=True)
class Invertibility:
    invertible: bool
    failed_step: str | None = None
    e2: list | None = None
    q: int | None = None
    e_q: list | None = None

    def __bool__(self):
        return self.invertible


def orbit_index(L: GLattice, e) -> int:
    """``(L : Z<G> e)``; zero when the orbit does not have full rank."""
    return abs(linalg.det(L.orbit_matrix(e)))


def is_invertible(L: GLattice, bound: int = DEFAULT_FACTOR_BOUND) -> Invertibility:
    if L.rank != L.n:
        return Invertibility(False, "rank")
    if not is_unimodular(L.gram):
        return Invertibility(False, "unimodular")
    e2 = find_module_generator(L, 2, bound)
    if e2 is None:
        return Invertibility(False, "e2")
    q = orbit_index(L, e2)
    if q == 1:
        return Invertibility(True, None, e2, 1, list(e2))
    e_q = find_module_generator(L, q, bound)
    if e_q is None:
        return Invertibility(False, "e_q", e2, q)
    return Invertibility(True, None, e2, q, e_q)


def is_short(L: GLattice, e) -> bool:
    return lifted_inner(L, e, e) == [1] + [0] * (L.n - 1)
