import pytest

from symlat.engine import brute_force_short_vectors
from symlat.errors import NuNotShort
from symlat.glattice import is_invertible
from symlat.group import make_group
from symlat.ideals import IdealRealization, realize
from symlat.instances import generate
from symlat.modring import conj_vec, mul_vec, pow_vec
from symlat.roots import GradedOrder, extract_root, mu_of_order


def one(ctx):
    return [1] + [0] * (ctx.n - 1)


def test_mu_standard(ctx):
    A = GradedOrder(ctx, IdealRealization.unit(ctx), ctx.k, one(ctx))
    mu = mu_of_order(A)
    assert len(mu) == 2 * ctx.n * ctx.k
    deg0 = sorted(c for d, c in mu if d == 0)
    signed_S = sorted([s * int(i == j) for j in range(ctx.n)] for i in range(ctx.n) for s in (1, -1))
    assert deg0 == signed_S


def test_degree_map_is_a_homomorphism():
    ctx = make_group([4], (2,))
    A = GradedOrder(ctx, IdealRealization.unit(ctx), ctx.k, one(ctx))
    roots = [(d, A.piece(d).element(c)) for d, c in mu_of_order(A)]
    as_set = {(d, tuple(x)) for d, x in roots}
    for x in roots:
        for y in roots:
            d, z = A.mul(x, y)
            assert d == (x[0] + y[0]) % ctx.k
            assert (d, tuple(z)) in as_set


def test_mu_of_principal_orders():
    for orders, u in [([6], (3,)), ([2, 4], (0, 2))]:
        ctx = make_group(orders, u)
        L = generate(ctx, "principal", 5).lattice
        inv = is_invertible(L)
        I, _ = realize(L, inv.e2)
        e = brute_force_short_vectors(L)[0]
        nu = pow_vec(ctx, I.element(e), ctx.k)
        A = GradedOrder(ctx, I, ctx.k, nu)
        size = len(mu_of_order(A))
        assert size % (2 * ctx.n) == 0 and (2 * ctx.n * ctx.k) % size == 0
        assert size == 2 * ctx.n * ctx.k


def test_extract_root_standard(ctx):
    res = extract_root(IdealRealization.unit(ctx), one(ctx))
    assert res.alpha is not None
    assert pow_vec(ctx, res.alpha, ctx.k) == one(ctx)
    # u * nu = -1 is not a k-th power of any degree-one root
    assert extract_root(IdealRealization.unit(ctx), [-1] + [0] * (ctx.n - 1)).reason == "power-mismatch"


def test_extract_root_principal():
    ctx = make_group([6], (3,))
    L = generate(ctx, "principal", 2).lattice
    inv = is_invertible(L)
    I, _ = realize(L, inv.e2)
    e = brute_force_short_vectors(L)[0]
    nu = pow_vec(ctx, I.element(e), ctx.k)
    res = extract_root(I, nu)
    alpha = I.element(res.alpha)
    assert pow_vec(ctx, alpha, ctx.k) == nu
    assert mul_vec(ctx, alpha, conj_vec(ctx, alpha)) == list(I.w)
    assert extract_root(I, [-x for x in nu]).reason == "power-mismatch"


def test_nu_not_short():
    ctx = make_group([6], (3,))
    with pytest.raises(NuNotShort):
        extract_root(IdealRealization.unit(ctx), [2, 0, 0])
