from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import GROUPS, naive_group_algebra_mul
from symlat.errors import KindMismatch, NotAUnit
from symlat.group import make_group
from symlat.modring import (RAT, RingElement, char_eval, characters, conj, conj_vec, mul_vec,
                            pow_mod, ring_inverse, ring_mul, trace)

Z4 = make_group([4], (2,))
Z6 = make_group([6], (3,))
Z2 = make_group([2], (1,))


def el(ctx, coeffs, kind="int"):
    return RingElement.make(ctx, coeffs, kind)


def test_mul_examples():
    a, b, c, d = 2, 3, 5, 7
    assert ring_mul(Z4, el(Z4, [a, b]), el(Z4, [c, d])).coeffs == (a * c - b * d, a * d + b * c)
    assert ring_mul(Z6, el(Z6, [1, 1, 0]), el(Z6, [1, 0, 1])).coeffs == (0, 1, 1)
    x = el(Z6, [3, -1, 4])
    assert (x * RingElement.one(Z6)).coeffs == x.coeffs


def test_conj_and_trace_examples():
    assert conj(Z4, el(Z4, [2, 3])).coeffs == (2, -3)
    assert conj(Z6, el(Z6, [0, 1, 0])).coeffs == (0, 0, -1)
    assert conj(Z6, RingElement.one(Z6)).coeffs == (1, 0, 0)
    assert trace(Z6, RingElement.one(Z6)) == 1
    assert trace(Z6, RingElement.group_element(Z6, (3,))) == -1
    assert trace(Z6, RingElement.group_element(Z6, (1,))) == 0


def test_inverse_examples():
    assert ring_inverse(Z4, el(Z4, [1, 0], RAT)).coeffs == (1, 0)
    assert ring_inverse(Z4, el(Z4, [1, 1], RAT)).coeffs == (Fraction(1, 2), Fraction(-1, 2))
    assert ring_inverse(Z2, el(Z2, [2], 5)).coeffs == (3,)
    with pytest.raises(NotAUnit):
        ring_inverse(Z4, el(Z4, [1, 1], 2))


def test_pow_mod_examples():
    a = el(Z6, [1, 2, 3], 11)
    assert pow_mod(Z6, a, 0).coeffs == (1, 0, 0)
    assert pow_mod(Z6, a, 1).coeffs == a.coeffs
    assert pow_mod(Z2, el(Z2, [3], 7), 5).coeffs == (5,)
    big = 2 ** 200 + 17
    assert pow_mod(Z6, a, big) == pow_mod(Z6, pow_mod(Z6, a, 2 ** 100), 2 ** 100) * pow_mod(Z6, a, 17)


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        el(Z6, [1, 0, 0], 5) + el(Z6, [1, 0, 0], 7)
    with pytest.raises(KindMismatch):
        ring_mul(Z6, el(Z6, [1, 0, 0]), el(Z6, [1, 0, 0], RAT))


def test_mul_matches_naive_exhaustive():
    for orders, u in GROUPS:
        ctx = make_group(orders, u)
        basis = [[int(i == j) for j in range(ctx.n)] for i in range(ctx.n)]
        for a in basis:
            for b in basis:
                assert mul_vec(ctx, a, b) == naive_group_algebra_mul(ctx, a, b)


coeffs = st.lists(st.integers(-5, 5), min_size=6, max_size=6)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GROUPS), coeffs, coeffs)
def test_ring_laws(g, xs, ys):
    ctx = make_group(*g)
    a, b = xs[:ctx.n] + [0] * (ctx.n - len(xs[:ctx.n])), ys[:ctx.n] + [0] * (ctx.n - len(ys[:ctx.n]))
    assert mul_vec(ctx, a, b) == naive_group_algebra_mul(ctx, a, b)
    assert conj_vec(ctx, conj_vec(ctx, a)) == a
    assert conj_vec(ctx, mul_vec(ctx, a, b)) == mul_vec(ctx, conj_vec(ctx, a), conj_vec(ctx, b))
    assert conj_vec(ctx, a)[0] == a[0]
    assert mul_vec(ctx, a, conj_vec(ctx, a))[0] == sum(x * x for x in a)
    # a = sum_s t(s^-1 a) s
    rebuilt = []
    for s in ctx.S:
        i, sign = ctx.locate(ctx.inv(s))
        sv = [0] * ctx.n
        sv[i] = sign
        rebuilt.append(mul_vec(ctx, sv, a)[0])
    assert rebuilt == a


def test_characters(rng):
    for orders, u in GROUPS:
        ctx = make_group(orders, u)
        tab = characters(ctx)
        assert tab.values.shape == (ctx.n, ctx.n)
        assert all(abs(v - 1) < 1e-12 for v in char_eval(tab, RingElement.one(ctx)))
        for _ in range(20):
            a = [rng.randint(-4, 4) for _ in range(ctx.n)]
            assert abs(char_eval(tab, a).sum() / ctx.n - a[0]) < 1e-9
    vals = characters(Z4).values[:, 1]
    assert sorted((round(v.imag), round(v.real)) for v in vals) == [(-1, 0), (1, 0)]
