"""Tensor products and powers of invertible G-lattices.

Every product is computed on ideal realizations and immediately LLL-reduced,
so stored Gram matrices never grow with the exponent.  Coset data ``d + mL``
is carried along by multiplying lifted representatives.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .errors import NotInvertible
from .glattice import DEFAULT_FACTOR_BOUND, GLattice, conj_lattice, find_module_generator, lifted_inner, standard_lattice
from .ideals import IdealRealization, action_of, ideal_mul, lll_ideal, realize
from .lattice import is_unimodular
from .modring import mul_vec


def realize_invertible(L: GLattice, bound: int = DEFAULT_FACTOR_BOUND) -> IdealRealization:
    """Ideal realization aligned with L's basis, using a mod-2 generator."""
    if L.rank != L.n or not is_unimodular(L.gram):
        raise NotInvertible("lattice is not unimodular of rank n")
    e2 = find_module_generator(L, 2, bound)
    if e2 is None:
        raise NotInvertible("L/2L is not free of rank one")
    return realize(L, e2)[0]


@dataclass(frozen=True, eq=False)
class Product:
    """``L (x) M`` on an LLL-reduced basis, with the bilinear map into it."""

    lattice: GLattice
    ideal: IdealRealization
    left: IdealRealization
    right: IdealRealization

    def mul(self, x, y):
        elem = mul_vec(self.lattice.ctx, self.left.element(x), self.right.element(y))
        return self.ideal.coords(elem)


def multiply_realized(A: IdealRealization, B: IdealRealization) -> Product:
    P, gram, _ = lll_ideal(ideal_mul(A, B))
    lat = GLattice(A.ctx, gram, action_of(P))
    return Product(lat, P, A, B)


def glattice_mul(L: GLattice, M: GLattice, bound: int = DEFAULT_FACTOR_BOUND) -> Product:
    A = realize_invertible(L, bound)
    B = A if M is L else realize_invertible(M, bound)
    return multiply_realized(A, B)


def coset_tensor(L: GLattice, L2: GLattice, m: int, d, d2, bound: int = DEFAULT_FACTOR_BOUND):
    """Product lattice and the coordinates of ``d (x) d2`` modulo ``m``."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    prod = glattice_mul(L, L2, bound)
    c = prod.mul([x % m for x in d], [x % m for x in d2])
    return prod, [x % m for x in c]


@dataclass
class PowerHandle:
    base_ideal: IdealRealization
    power_ideal: IdealRealization
    lattice: GLattice
    r: int
    modulus: int | None = None
    coset: list | None = None
    steps: int = 0
    max_gram_entry: list = field(default_factory=list)  # one entry per product
    max_action_entry: list = field(default_factory=list)

    @property
    def gram(self):
        return self.lattice.gram


def _record(h: PowerHandle, lat: GLattice):
    h.steps += 1
    h.max_gram_entry.append(max(abs(x) for row in lat.gram for x in row))
    h.max_action_entry.append(max(abs(x) for mat in lat.action for row in mat for x in row))


def power_with_coset(L: GLattice, m: int | None, d, r: int,
                     bound: int = DEFAULT_FACTOR_BOUND) -> PowerHandle:
    """``L^(x)r`` and ``d^(x)r mod m`` by left-to-right binary powering."""
    if r < 1:
        raise ValueError("exponent must be positive")
    base = realize_invertible(L, bound)
    coset = [x % m for x in d] if m else None
    h = PowerHandle(base, base, L, 1, m, coset)
    for bit in bin(r)[3:]:
        acc = h.power_ideal if h.steps == 0 else realize_invertible(h.lattice, bound)
        prod = multiply_realized(acc, acc)
        if m:
            h.coset = [x % m for x in prod.mul(h.coset, h.coset)]
        h.lattice, h.power_ideal, h.r = prod.lattice, prod.ideal, 2 * h.r
        _record(h, prod.lattice)
        if bit == "1":
            prod = multiply_realized(realize_invertible(h.lattice, bound), base)
            if m:
                h.coset = [x % m for x in prod.mul(h.coset, d)]
            h.lattice, h.power_ideal, h.r = prod.lattice, prod.ideal, h.r + 1
            _record(h, prod.lattice)
    return h


# --- direct construction (test oracle) ---------------------------------------

def _kernel_basis(rows, N):
    """Z-basis of ``{c : rows . c = 0}`` as a list of length-N vectors."""
    width = len(rows)
    aug = [[rows[j][i] for j in range(width)] + [int(i == t) for t in range(N)] for i in range(N)]
    H = linalg.hnf(aug, width + N)
    return [row[width:] for row in H if not any(row[:width])]


def direct_tensor(L: GLattice, M: GLattice):
    """``L (x)_Z<G> M`` as a quotient of ``L (x)_Z M``.

    Returns ``(lattice, K, pre)``: row ``a*n + b`` of ``K`` gives the quotient
    coordinates of ``b_a (x) b'_b`` and ``pre K = I``.  Only for small n.
    """
    ctx = L.ctx
    n = ctx.n
    if n > 4:
        raise ValueError("direct tensor construction is limited to n <= 4")
    N = n * n
    rels = []
    for g in ctx.generators:
        Ms, Ns = L.matrix(g), M.matrix(g)
        for a in range(n):
            for b in range(n):
                row = [0] * N
                for c in range(n):
                    row[c * n + b] += Ms[a][c]
                    row[a * n + c] -= Ns[b][c]
                rels.append(row)
    K = linalg.transpose(_kernel_basis(rels, N)) if rels else linalg.identity(N)
    if len(K[0]) != n:
        raise NotInvertible("tensor product does not have rank n")
    # preimages of the quotient basis
    aug = [list(K[i]) + [int(i == t) for t in range(N)] for i in range(N)]
    H = linalg.hnf(aug, n + N)
    if [row[:n] for row in H[:n]] != linalg.identity(n):
        raise NotInvertible("quotient map is not onto Z^n")
    pre = [row[n:] for row in H[:n]]

    def inner(i, j):
        a, b = divmod(i, n)
        c, d = divmod(j, n)
        x = lifted_inner(L, linalg.identity(n)[a], linalg.identity(n)[c])
        y = lifted_inner(M, linalg.identity(n)[b], linalg.identity(n)[d])
        return mul_vec(ctx, x, y)[0]

    T = [[inner(i, j) for j in range(N)] for i in range(N)]
    gram = linalg.matmul(linalg.matmul(pre, T), linalg.transpose(pre))
    action = []
    for g in ctx.generators:
        Mg = L.matrix(g)
        big = [[Mg[a][c] * int(b == d) for c in range(n) for d in range(n)] for a in range(n) for b in range(n)]
        action.append(linalg.matmul(linalg.matmul(pre, big), K))
    return GLattice(ctx, gram, action), K, pre


# --- Witt-Picard group operations ---------------------------------------------

def wpic_identity(ctx) -> GLattice:
    return standard_lattice(ctx)


def wpic_inverse(L: GLattice) -> GLattice:
    return conj_lattice(L)


def wpic_mul(L: GLattice, M: GLattice) -> GLattice:
    return glattice_mul(L, M).lattice


def wpic_pow(L: GLattice, r: int) -> GLattice:
    return power_with_coset(L, None, None, r).lattice


def wpic_equal(L: GLattice, M: GLattice) -> bool:
    from .engine import NoIso, iso_pair
    return not isinstance(iso_pair(L, M), NoIso)
