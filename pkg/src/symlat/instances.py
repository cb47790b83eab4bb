"""Seeded instance generation and the JSON instance format.

The generator is SplitMix64 so that instances can be reproduced in any
language: ``state += 0x9E3779B97F4A7C15`` then the usual xor-shift-multiply
finalizer.  ``below(b)`` draws ``next() % b``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from . import linalg
from .errors import BadInput, DegenerateV, NotAUnit
from .glattice import GLattice, make_glattice, standard_lattice
from .group import GroupContext, make_group
from .modring import conj_vec, inverse_vec, mul_vec

MASK = (1 << 64) - 1
CONSTRUCTIONS = ("principal", "scrambled-standard", "non-unimodular", "trivial-action")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, b: int) -> int:
        return self.next() % b

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def random_unimodular(rng: SplitMix64, n: int, rounds: int | None = None) -> list:
    """Signed permutation times ``rounds`` elementary row operations."""
    U = linalg.identity(n)
    if n == 1:
        return [[-1]] if rng.below(2) else U
    for _ in range(rounds if rounds is not None else 3 * n):
        i, j = rng.below(n), rng.below(n - 1)
        j += j >= i
        c = rng.between(-2, 2)
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return [U[p] if rng.below(2) else [-x for x in U[p]] for p in perm]


def sign_character(ctx: GroupContext):
    """Signs on the cyclic generators of a character G -> {+1,-1} with u -> -1, or None."""
    for eps in itertools.product((1, -1), repeat=len(ctx.orders)):
        if any(e == -1 and d % 2 for e, d in zip(eps, ctx.orders)):
            continue
        val = 1
        for e, x in zip(eps, ctx.u):
            val *= e ** x
        if val == -1:
            return list(eps)
    return None


@dataclass(frozen=True)
class Instance:
    lattice: GLattice
    meta: dict

    @property
    def ctx(self):
        return self.lattice.ctx


def _orbit_rows(ctx, v):
    return [mul_vec(ctx, [int(i == j) for j in range(ctx.n)], v) for i in range(ctx.n)]


def _random_unit(ctx, rng):
    for _ in range(1000):
        v = [rng.between(-2, 2) for _ in range(ctx.n)]
        if not any(v):
            continue
        try:
            inverse_vec(ctx, v)
        except NotAUnit:
            continue
        return v
    raise DegenerateV("no unit found after 1000 draws")


def generate(ctx: GroupContext, construction: str, seed: int) -> Instance:
    if construction not in CONSTRUCTIONS:
        raise BadInput(f"unknown construction {construction!r}")
    rng = SplitMix64(seed)
    n = ctx.n
    std = standard_lattice(ctx)
    meta = {"seed": seed, "construction": construction}
    if construction == "trivial-action":
        eps = sign_character(ctx)
        if eps is None:
            raise BadInput("group has no sign character sending u to -1")
        ident = linalg.identity(n)
        action = [[[e * x for x in row] for row in ident] for e in eps]
        L = GLattice(ctx, ident, action)
        U = random_unimodular(rng, n)
        return Instance(make_glattice(ctx, *_transport(L, U)), meta)
    if construction == "principal":
        v = _random_unit(ctx, rng)
    else:
        v = [1] + [0] * (n - 1)
    U = random_unimodular(rng, n)
    # L_((v), v conj v) on the basis {s v} is the standard lattice
    gram, action = _transport(std, U)
    if construction == "non-unimodular":
        gram = [[2 * x for x in row] for row in gram]
    meta["hidden_v"] = v
    meta["ideal_basis"] = linalg.matmul(U, _orbit_rows(ctx, v))
    meta["relnorm"] = mul_vec(ctx, v, conj_vec(ctx, v))
    return Instance(make_glattice(ctx, gram, action), meta)


def _transport(L: GLattice, U):
    Ui = [linalg.as_int_vector(r) for r in linalg.inverse(U)]
    gram = linalg.matmul(linalg.matmul(U, L.gram), linalg.transpose(U))
    action = [linalg.matmul(linalg.matmul(U, m), Ui) for m in L.action]
    return gram, action


# --- JSON -------------------------------------------------------------------------

def _strs(m):
    return [[str(x) for x in row] for row in m]


def _ints(m, what):
    try:
        return [[int(x) for x in row] for row in m]
    except (TypeError, ValueError):
        raise BadInput(f"{what} must be a matrix of integers") from None


def to_json(inst: Instance) -> dict:
    L = inst.lattice
    meta = dict(inst.meta)
    for key in ("hidden_v", "relnorm"):
        if key in meta:
            meta[key] = [str(x) for x in meta[key]]
    if "ideal_basis" in meta:
        meta["ideal_basis"] = _strs(meta["ideal_basis"])
    return {
        "group": {"orders": list(L.ctx.orders), "u": list(L.ctx.u)},
        "lattice": {
            "gram": _strs(L.gram),
            "action": {f"g{i}": [list(map(int, r)) for r in m] for i, m in enumerate(L.action)},
        },
        "meta": meta,
    }


def group_from_json(doc) -> GroupContext:
    try:
        g = doc["group"]
        return make_group([int(x) for x in g["orders"]], tuple(int(x) for x in g["u"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed group section: {exc}") from None


def from_json(doc, max_n: int | None = None) -> Instance:
    ctx = group_from_json(doc)
    if max_n is not None and ctx.n > max_n:
        raise BadInput(f"n = {ctx.n} exceeds the limit {max_n}")
    try:
        lat = doc["lattice"]
        gram = _ints(lat["gram"], "gram")
        action = [_ints(lat["action"][f"g{i}"], f"g{i}") for i in range(len(ctx.orders))]
    except (KeyError, TypeError) as exc:
        raise BadInput(f"malformed lattice section: missing {exc}") from None
    if set(lat["action"]) != {f"g{i}" for i in range(len(ctx.orders))}:
        raise BadInput("action keys must be g0..g(t-1)")
    meta = dict(doc.get("meta") or {})
    for key in ("hidden_v", "relnorm"):
        if key in meta:
            meta[key] = [int(x) for x in meta[key]]
    if "ideal_basis" in meta:
        meta["ideal_basis"] = _ints(meta["ideal_basis"], "ideal_basis")
    return Instance(make_glattice(ctx, gram, action), meta)


def load(path, max_n: int | None = None) -> Instance:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadInput(f"cannot read {path}: {exc}") from None
    return from_json(doc, max_n)


def dump(inst: Instance, path=None) -> str:
    text = json.dumps(to_json(inst), indent=1)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
