"""Finite abelian groups with a distinguished element of order 2.

A group is given by its cyclic decomposition ``Z/d1 x ... x Z/dt``; elements
are tuples of residues.  The coset transversal ``S`` of ``G/<u>`` fixes the
coordinate system used by every coefficient vector in the package.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import reduce

from .errors import BadU, OddOrder

Element = tuple


@dataclass(frozen=True, eq=False)
class GroupContext:
    orders: tuple
    u: Element
    n: int
    k: int
    S: tuple
    # element -> (position in S, sign); sign is -1 when element = u * S[pos]
    index: dict = field(repr=False)
    smul: tuple = field(repr=False)
    sinv: tuple = field(repr=False)

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def identity(self) -> Element:
        return tuple(0 for _ in self.orders)

    @property
    def generators(self) -> tuple:
        t = len(self.orders)
        return tuple(tuple(int(i == j) for j in range(t)) for i in range(t))

    def elements(self):
        return itertools.product(*(range(d) for d in self.orders))

    def mul(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def inv(self, a: Element) -> Element:
        return tuple((-x) % d for x, d in zip(a, self.orders))

    def power(self, a: Element, e: int) -> Element:
        return tuple((x * e) % d for x, d in zip(a, self.orders))

    def element_order(self, a: Element) -> int:
        return reduce(math.lcm, (d // math.gcd(x, d) for x, d in zip(a, self.orders)), 1)

    def normalize(self, a) -> Element:
        if len(a) != len(self.orders):
            raise ValueError(f"element {a!r} does not match orders {self.orders}")
        return tuple(int(x) % d for x, d in zip(a, self.orders))

    def locate(self, a: Element):
        """Return ``(i, sign)`` with ``a = sign * S[i]`` in the modified group ring."""
        return self.index[a]

    def __eq__(self, other):
        if not isinstance(other, GroupContext):
            return NotImplemented
        return self.orders == other.orders and self.u == other.u

    def __hash__(self):
        return hash((self.orders, self.u))


def make_group(orders, u) -> GroupContext:
    orders = tuple(int(d) for d in orders)
    if not orders or any(d < 1 for d in orders):
        raise ValueError(f"orders must be positive integers, got {orders}")
    size = math.prod(orders)
    if size % 2:
        raise OddOrder(f"group of order {size} has no element of order 2")
    if len(u) != len(orders):
        raise BadU(f"u={tuple(u)} does not match orders {orders}")
    u = tuple(int(x) % d for x, d in zip(u, orders))
    if all(x == 0 for x in u) or any((2 * x) % d for x, d in zip(u, orders)):
        raise BadU(f"u={u} does not have order exactly 2")

    def mul(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, orders))

    reps = set()
    for g in itertools.product(*(range(d) for d in orders)):
        reps.add(min(g, mul(u, g)))
    S = tuple(sorted(reps))
    assert S[0] == tuple(0 for _ in orders)
    index = {}
    for i, s in enumerate(S):
        index[s] = (i, 1)
        index[mul(u, s)] = (i, -1)
    smul = tuple(tuple(index[mul(a, b)] for b in S) for a in S)
    sinv = tuple(index[tuple((-x) % d for x, d in zip(a, orders))] for a in S)
    k = reduce(math.lcm, orders, 1)
    return GroupContext(orders, u, size // 2, k, S, index, smul, sinv)


def default_u(orders) -> Element:
    """Lexicographically smallest element of order 2."""
    for g in itertools.product(*(range(d) for d in orders)):
        if any(g) and not any((2 * x) % d for x, d in zip(g, orders)):
            return g
    raise OddOrder(f"group with orders {tuple(orders)} has no element of order 2")
