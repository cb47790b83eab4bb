"""Deciding G-isomorphism with the standard lattice, between two lattices, and
recovering a generator of a principal ideal from its relative norm."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import linalg
from .errors import (BadInput, InternalCheckFailed, NotAUnit, NotIntegral, NotInvertible,
                     NotPositive)
from .glattice import (DEFAULT_FACTOR_BOUND, GLattice, find_module_generator, is_invertible,
                       is_short, lifted_inner, standard_lattice)
from .group import make_group
from .ideals import (IdealRealization, action_of, conj_ideal, gram_of, ideal_mul, ideal_powers,
                     lll_ideal, realize)
from .lattice import coset_short_vector, enumerate_norm_one
from .modring import conj_vec, inverse_vec, mul_vec, pow_vec
from .numth import AuxPrimes, find_aux_primes
from .roots import extract_root
from .tensor import power_with_coset


@dataclass(frozen=True)
class IsoCertificate:
    short_vector: list
    map_matrix: list  # row i: coordinates of S[i] * e
    trace: object = field(default=None, compare=False, repr=False)


@dataclass
class EngineTrace:
    aux: AuxPrimes | None = None
    e2: list | None = None
    e_lm: list | None = None
    nu_m: list | None = None
    s_elem: list | None = None
    b: int | None = None
    nu: list | None = None
    alpha: list | None = None
    q: int | None = None
    power_steps: int | None = None
    timings: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NoIso:
    reason: str
    detail: str = ""
    trace: EngineTrace | None = None

    def __bool__(self):
        return False


def _one(n):
    return [1] + [0] * (n - 1)


def verify_certificate(L: GLattice, e) -> list:
    """Return the map matrix for ``x -> x e`` or raise InternalCheckFailed."""
    n = L.n
    if lifted_inner(L, e, e) != _one(n):
        raise InternalCheckFailed("e is not short")
    phi = L.orbit_matrix(e)
    if linalg.matmul(linalg.matmul(phi, L.gram), linalg.transpose(phi)) != linalg.identity(n):
        raise InternalCheckFailed("certificate does not pull the form back to the identity")
    std = standard_lattice(L.ctx)
    for ms, ml in zip(std.action, L.action):
        if linalg.matmul(ms, phi) != linalg.matmul(phi, ml):
            raise InternalCheckFailed("certificate does not commute with the action")
    return phi


def _solve_b(k, k_ell, k_m) -> int:
    """Positive b with ``b k_m = k (mod k_ell)``."""
    g, x, _ = linalg.xgcd(k_m, k_ell)
    if k % g:
        raise InternalCheckFailed("gcd(k(m), k(ell)) does not divide k")
    mod = k_ell // g
    b = (x * (k // g)) % mod
    return b or mod


def isomorphism_to_standard(L: GLattice, *, skip_invertibility_check: bool = False,
                            bound: int = DEFAULT_FACTOR_BOUND):
    """Certificate ``Z<G> -> L`` or ``NoIso`` naming the failing step."""
    ctx = L.ctx
    n = ctx.n
    tr = EngineTrace()
    clock = time.perf_counter

    def lap(name, t0):
        tr.timings[name] = clock() - t0

    t0 = clock()
    if skip_invertibility_check:
        if L.rank != n:
            return NoIso("not-invertible", "rank", tr)
        e2 = find_module_generator(L, 2, bound)
        if e2 is None:
            return NoIso("not-invertible", "e2", tr)
    else:
        inv = is_invertible(L, bound)
        if not inv:
            return NoIso("not-invertible", inv.failed_step, tr)
        e2, tr.q = inv.e2, inv.q
    tr.e2 = e2
    lap("invertibility", t0)

    try:
        return _run(L, e2, tr, bound, clock, lap, skip_invertibility_check)
    except (NotAUnit, NotInvertible, NotIntegral, NotPositive) as exc:
        if not skip_invertibility_check:
            raise InternalCheckFailed(f"unexpected failure on an invertible lattice: {exc}") from exc
        return NoIso("not-invertible", str(exc), tr)


def _run(L, e2, tr, bound, clock, lap, unchecked):
    ctx = L.ctx
    n, k = ctx.n, ctx.k
    t0 = clock()
    aux = tr.aux = find_aux_primes(n, k)
    ell, m = aux.ell, aux.m
    e_lm = find_module_generator(L, ell * m, bound)
    if e_lm is None:
        return NoIso("not-invertible", "e_lm", tr)
    tr.e_lm = e_lm
    lap("generators", t0)

    t0 = clock()
    h = power_with_coset(L, ell * m, e_lm, aux.k_m, bound)
    tr.power_steps = h.steps
    P = h.lattice
    nu_m = coset_short_vector(P.gram, m, [x % m for x in h.coset])
    lap("power", t0)
    if nu_m is None:
        return NoIso("no-nu_m", "", tr)
    tr.nu_m = nu_m

    t0 = clock()
    orbit = [[x % ell for x in row] for row in P.orbit_matrix(h.coset)]
    s = linalg.solve_mod(orbit, [x % ell for x in nu_m], ell)
    tr.s_elem = s
    b = tr.b = _solve_b(k, aux.k_ell, aux.k_m)

    I = realize(L, e2)[0]
    powers = ideal_powers(I, k)
    Ik = powers[k]
    beta = I.element(e_lm)
    target = mul_vec(ctx, pow_vec(ctx, s, b, ell), pow_vec(ctx, beta, k))
    c = [x % ell for x in Ik.coords(target)]
    nu = coset_short_vector(gram_of(Ik), ell, c)
    lap("nu", t0)
    if nu is None:
        return NoIso("no-nu", "", tr)
    tr.nu = nu

    t0 = clock()
    root = extract_root(I, Ik.element(nu), k)
    lap("root", t0)
    if root.alpha is None:
        return NoIso("no-root", root.reason, tr)
    tr.alpha = e = root.alpha
    try:
        phi = verify_certificate(L, e)
    except InternalCheckFailed as exc:
        if unchecked:
            return NoIso("final-check", str(exc), tr)
        raise
    return IsoCertificate(list(e), phi, tr)


# --- isomorphism between two lattices ------------------------------------------

@dataclass(frozen=True)
class PairIso:
    """Row j of ``map_matrix`` holds the L-coordinates of the image of M's b_j."""

    map_matrix: list
    product_certificate: IsoCertificate


def iso_pair(L: GLattice, M: GLattice, *, bound: int = DEFAULT_FACTOR_BOUND):
    ctx = L.ctx
    invs = []
    for name, X in (("L", L), ("M", M)):
        inv = is_invertible(X, bound)
        if not inv:
            raise NotInvertible(f"{name} is not invertible (step {inv.failed_step})")
        invs.append(inv)
    A = realize(L, invs[0].e2)[0]
    B = realize(M, invs[1].e2)[0]
    # L (x) conj(M) realized on I conj(J) with weight w_L w_M
    prod, gram, _ = lll_ideal(ideal_mul(A, conj_ideal(B)))
    P = GLattice(ctx, gram, action_of(prod))
    cert = isomorphism_to_standard(P, bound=bound)
    if isinstance(cert, NoIso):
        return cert
    eps = prod.element(cert.short_vector)
    winv = inverse_vec(ctx, B.w)
    F = [A.coords(mul_vec(ctx, mul_vec(ctx, eps, y), winv)) for y in B.basis]
    if linalg.matmul(linalg.matmul(F, L.gram), linalg.transpose(F)) != [list(r) for r in M.gram]:
        raise InternalCheckFailed("pair map is not an isometry")
    for ml, mm in zip(L.action, M.action):
        if linalg.matmul(mm, F) != linalg.matmul(F, ml):
            raise InternalCheckFailed("pair map is not G-equivariant")
    if abs(linalg.det(F)) != 1:
        raise InternalCheckFailed("pair map is not onto")
    return PairIso(F, cert)


# --- generator recovery ----------------------------------------------------------

def _poly_to_ring(a):
    return [x if i % 2 == 0 else -x for i, x in enumerate(a)]


_ring_to_poly = _poly_to_ring  # the sign map is an involution


def gs_recover(n: int, ideal_basis, relnorm, *, bound: int = DEFAULT_FACTOR_BOUND):
    """Generator ``v`` of I in Z[X]/(X^n - 1) with ``v(X) v(X^-1) = relnorm``, or None."""
    if n < 1 or n % 2 == 0:
        raise BadInput("n must be odd")
    if len(ideal_basis) != n or any(len(r) != n for r in ideal_basis) or len(relnorm) != n:
        raise BadInput("expected an n x n basis and n relnorm coefficients")
    ctx = make_group([2 * n], (n,))
    w = _poly_to_ring([int(x) for x in relnorm])
    if conj_vec(ctx, w) != w:
        raise BadInput("relnorm is not self-conjugate")
    A = IdealRealization.make(ctx, [_poly_to_ring([int(x) for x in r]) for r in ideal_basis], w)
    try:
        L = GLattice(ctx, gram_of(A), action_of(A))
    except (NotIntegral, NotPositive, NotAUnit, ZeroDivisionError) as exc:
        raise BadInput(f"ideal and relnorm do not define a lattice: {exc}") from None
    cert = isomorphism_to_standard(L, bound=bound)
    if isinstance(cert, NoIso):
        return None
    v = A.element(cert.short_vector)
    return _ring_to_poly(linalg.as_int_vector(v))


# --- exhaustive oracle --------------------------------------------------------------

def brute_force_short_vectors(L: GLattice) -> list:
    """Every e with ``e conj(e) = 1`` whose orbit is a basis of L."""
    out = []
    if L.rank != L.n:
        return out
    for v in enumerate_norm_one(L.gram):
        if is_short(L, v) and abs(linalg.det(L.orbit_matrix(v))) == 1:
            out.append(v)
    return out
