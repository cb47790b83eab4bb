"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest -v tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""
import math
import random
import sys
import time
from fractions import Fraction

import pytest

from symlat import linalg
from symlat.engine import (IsoCertificate, NoIso, brute_force_short_vectors, gs_recover,
                           isomorphism_to_standard)
from symlat.glattice import is_invertible
from symlat.group import make_group
from symlat.ideals import IdealRealization, realize
from symlat.instances import SplitMix64, generate, random_unimodular, sign_character
from symlat.lattice import coset_short_vector, enumerate_norm_one, lll_reduce
from symlat.modring import inverse_vec, mul_vec, mult_matrix, pow_vec
from symlat.numth import find_aux_primes
from symlat.roots import GradedOrder, mu_of_order
from symlat.tensor import power_with_coset, wpic_equal, wpic_inverse, wpic_mul

ROUNDTRIP_GROUPS = [([2], (1,)), ([4], (2,)), ([6], (3,)), ([8], (4,)), ([10], (5,)), ([12], (6,)),
                    ([2, 2], (1, 0)), ([2, 4], (0, 2))]
SMALL_GROUPS = [g for g in ROUNDTRIP_GROUPS if math.prod(g[0]) <= 8] + [([2, 4], (1, 0))]


def _signed_monomials(ctx):
    n = ctx.n
    return [[sg * int(j == i) for j in range(n)] for i in range(n) for sg in (1, -1)]


def check_1(seeds=25):
    worst = 0.0
    for orders, u in ROUNDTRIP_GROUPS:
        ctx = make_group(orders, u)
        units = _signed_monomials(ctx)
        for seed in range(seeds):
            inst = generate(ctx, "principal", seed)
            t0 = time.perf_counter()
            cert = isomorphism_to_standard(inst.lattice)
            worst = max(worst, time.perf_counter() - t0)
            if not isinstance(cert, IsoCertificate):
                return False, f"{orders} seed {seed}: {cert}"
            x = linalg.vecmat(cert.short_vector, inst.meta["ideal_basis"])
            q = mul_vec(ctx, x, inverse_vec(ctx, inst.meta["hidden_v"]))
            if [Fraction(c) for c in q] not in [[Fraction(c) for c in m] for m in units]:
                return False, f"{orders} seed {seed}: e is not sigma * v"
    ok = worst < 60
    return ok, f"{len(ROUNDTRIP_GROUPS) * seeds} instances, slowest {worst:.2f}s"


def _poly_mul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[(i + j) % n] += x * y
    return out


def check_2(count=10):
    n = 7
    rng = SplitMix64(0x5EED)
    worst = 0.0
    done = 0
    while done < count:
        v = [rng.between(-1, 1) for _ in range(n)]
        basis = [_poly_mul([int(i == j) for j in range(n)], v, n) for i in range(n)]
        if not linalg.det(basis):
            continue
        rel = _poly_mul(v, [v[(-i) % n] for i in range(n)], n)
        U = random_unimodular(rng, n)
        t0 = time.perf_counter()
        got = gs_recover(n, linalg.matmul(U, basis), rel)
        worst = max(worst, time.perf_counter() - t0)
        shifts = [[s * v[(i - t) % n] for i in range(n)] for t in range(n) for s in (1, -1)]
        if got not in shifts:
            return False, f"v = {v}: got {got}"
        done += 1
    return worst < 120, f"{count} ternary generators, slowest {worst:.2f}s"


def check_3(count=100):
    rng = random.Random(3)
    groups = ROUNDTRIP_GROUPS + [([2, 4], (1, 0)), ([14], (7,)), ([16], (8,))]
    for trial in range(count):
        orders, u = groups[trial % len(groups)]
        ctx = make_group(orders, u)
        construction = "principal" if trial % 2 else "scrambled-standard"
        L = generate(ctx, construction, rng.randrange(2 ** 32)).lattice
        # extra scrambling so inputs are far from reduced
        L = L.transport(random_unimodular(SplitMix64(trial), ctx.n, rounds=6 * ctx.n))
        red = lll_reduce(L.gram)
        M = L.transport(red.transform)
        n, G = ctx.n, red.gram_reduced
        if any(G[i][i] > 2 ** (n - 1) for i in range(n)):
            return False, f"trial {trial}: norm bound"
        if any(abs(G[i][j]) > 2 ** (n - 1) for i in range(n) for j in range(n)):
            return False, f"trial {trial}: inner product bound"
        if any(abs(x) > 3 ** (n - 1) for m in M.action for row in m for x in row):
            return False, f"trial {trial}: action bound"
    return True, f"{count} Grams"


def check_4(count=500):
    rng = random.Random(4)
    cases = []
    for orders, u in SMALL_GROUPS:
        ctx = make_group(orders, u)
        for m in (3, 5, 7):
            if (m - 1) ** 2 >= 2 ** ctx.n:
                cases.append((ctx, m))
    lattices = {}
    for i in range(count):
        ctx, m = cases[i % len(cases)]
        key = (ctx.orders, ctx.u, i % 3)
        if key not in lattices:
            gram = generate(ctx, "principal", i).lattice.gram
            lattices[key] = (gram, enumerate_norm_one(gram))
        gram, norm_one = lattices[key]
        n = ctx.n
        if rng.random() < 0.5 and norm_one:
            c = [x % m for x in rng.choice(norm_one)]
        else:
            c = [rng.randrange(m) for _ in range(n)]
        hits = [v for v in norm_one if [x % m for x in v] == c]
        if len(hits) > 1:
            return False, f"case {i}: two norm-one vectors share a coset"
        got = coset_short_vector(gram, m, c)
        if got != (hits[0] if hits else None):
            return False, f"case {i}: got {got}, expected {hits}"
    return True, f"{count} cosets over {len(cases)} (group, m) pairs"


def check_5():
    detail = []
    for orders, u in ROUNDTRIP_GROUPS + [([2, 4], (1, 0))]:
        ctx = make_group(orders, u)
        n, k = ctx.n, ctx.k
        std = GradedOrder(ctx, IdealRealization.unit(ctx), k, [1] + [0] * (n - 1))
        mu = mu_of_order(std)
        if len(mu) != 2 * n * k:
            return False, f"{orders}: standard order has {len(mu)} roots"
        deg0 = sorted(tuple(c) for d, c in mu if d == 0)
        if deg0 != sorted(tuple(x) for x in _signed_monomials(ctx)):
            return False, f"{orders}: degree-0 slice is not +-S"
        for seed in range(2):
            L = generate(ctx, "principal", seed).lattice
            inv = is_invertible(L)
            I = realize(L, inv.e2)[0]
            cert = isomorphism_to_standard(L)
            nu = pow_vec(ctx, I.element(cert.short_vector), k)
            size = len(mu_of_order(GradedOrder(ctx, I, k, nu)))
            if size % (2 * n) or (2 * n * k) % size:
                return False, f"{orders} seed {seed}: |mu| = {size}"
        detail.append(str(2 * n * k))
    return True, "sizes " + ",".join(detail)


def _unit_mod(ctx, x, ell):
    return math.gcd(linalg.det(mult_matrix(ctx, x)), ell) == 1


def check_6():
    a = find_aux_primes(1, 2)
    if (a.ell, a.m, a.k_ell, a.k_m) != (3, 5, 2, 4):
        return False, f"n=1,k=2 gave {a}"
    a = find_aux_primes(3, 6)
    if (a.ell, a.m, a.k_ell, a.k_m) != (7, 13, 6, 12):
        return False, f"n=3,k=6 gave {a}"
    for k in range(2, 41, 2):
        for n in range(1, 25):
            a = find_aux_primes(n, k)
            if math.gcd(a.k_ell, a.k_m) != k:
                return False, f"gcd invariant fails at n={n}, k={k}"
            if (a.ell - 1) ** 2 < 2 ** n or (a.m - 1) ** 2 < 2 ** n:
                return False, f"size invariant fails at n={n}, k={k}"
    rng = random.Random(6)
    sampled = 0
    for orders, u in ROUNDTRIP_GROUPS + [([2, 4], (1, 0)), ([14], (7,)), ([2, 2, 2], (1, 0, 0))]:
        ctx = make_group(orders, u)
        a = find_aux_primes(ctx.n, ctx.k)
        for ell, kk in ((a.ell, a.k_ell), (a.m, a.k_m)):
            if ell > 1000:
                continue
            for _ in range(5):
                x = [rng.randrange(ell) for _ in range(ctx.n)]
                if not _unit_mod(ctx, x, ell):
                    continue
                if pow_vec(ctx, x, kk, ell) != [1] + [0] * (ctx.n - 1):
                    return False, f"{orders}: x^k({ell}) != 1"
                sampled += 1
    return True, f"exact pairs match, k <= 40 invariants hold, {sampled} sampled units"


def check_7(count=20):
    for i in range(count):
        orders, u = ROUNDTRIP_GROUPS[i % len(ROUNDTRIP_GROUPS)]
        L = generate(make_group(orders, u), "principal", 100 + i).lattice
        if isinstance(isomorphism_to_standard(wpic_mul(L, wpic_inverse(L))), NoIso):
            return False, f"instance {i}: L (x) L^-1 is not standard"
    ctx = make_group([2, 4], (0, 2))
    L, M, N = (generate(ctx, "principal", s).lattice for s in (1, 2, 3))
    if not wpic_equal(wpic_mul(L, M), wpic_mul(M, L)):
        return False, "not commutative"
    if not wpic_equal(wpic_mul(wpic_mul(L, M), N), wpic_mul(L, wpic_mul(M, N))):
        return False, "not associative"
    return True, f"{count} inverses, commutativity, associativity"


def check_8(seeds=3):
    total = 0
    for orders, u in SMALL_GROUPS:
        ctx = make_group(orders, u)
        constructions = ["principal", "scrambled-standard", "non-unimodular"]
        if sign_character(ctx) is not None:
            constructions.append("trivial-action")
        for construction in constructions:
            for seed in range(seeds):
                L = generate(ctx, construction, seed).lattice
                found = brute_force_short_vectors(L)
                res = isomorphism_to_standard(L)
                total += 1
                if bool(found) == isinstance(res, NoIso):
                    return False, f"{orders} {construction} {seed}: engine and oracle disagree"
                if found and len(found) != 2 * ctx.n:
                    return False, f"{orders} {construction} {seed}: {len(found)} short vectors"
    return True, f"{total} lattices"


def check_9():
    ctx = make_group([12], (6,))
    n = ctx.n
    L = generate(ctx, "principal", 9).lattice
    r = random.Random(9).getrandbits(256) | (1 << 255) | 1
    t0 = time.perf_counter()
    h = power_with_coset(L, 13, [1] + [0] * (n - 1), r)
    secs = time.perf_counter() - t0
    bits = r.bit_length()
    if h.steps > 2 * bits:
        return False, f"{h.steps} steps for {bits} bits"
    if max(h.max_gram_entry) > 2 ** (n - 1):
        return False, f"gram entry {max(h.max_gram_entry)}"
    if max(h.max_action_entry) > 3 ** (n - 1):
        return False, f"action entry {max(h.max_action_entry)}"
    return True, (f"{h.steps} steps for {bits} bits, max gram {max(h.max_gram_entry)}, "
                  f"max action {max(h.max_action_entry)}, {secs:.1f}s")


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9]


def _line(i, ok, detail):
    return f"AC{i} {'PASS' if ok else 'FAIL'} {detail}"


@pytest.mark.slow
@pytest.mark.parametrize("i", range(1, 10))
def test_acceptance(i, capsys):
    ok, detail = CHECKS[i - 1]()
    with capsys.disabled():
        print("\n" + _line(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i, check in enumerate(CHECKS, 1):
        ok, detail = check()
        failed += not ok
        print(_line(i, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
