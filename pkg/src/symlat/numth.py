"""Auxiliary prime powers and unit-group exponents modulo prime powers."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisFailed

DEFAULT_PRIME_CEILING = 10 ** 8


@dataclass(frozen=True)
class AuxPrimes:
    p: int
    r: int
    q: int
    s: int
    ell: int
    m: int
    k_ell: int
    k_m: int


def is_prime(x: int, ceiling: int = DEFAULT_PRIME_CEILING) -> bool:
    """Deterministic trial division; refuses candidates above ``ceiling``."""
    if x > ceiling:
        raise HypothesisFailed(f"candidate {x} exceeds the trial-division ceiling {ceiling}")
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    for d in range(3, math.isqrt(x) + 1, 2):
        if x % d == 0:
            return False
    return True


def _threshold_power(p: int, n: int) -> int:
    """Smallest r >= 1 with p^r >= 2^(n/2) + 1."""
    r = 1
    while (p ** r - 1) ** 2 < 2 ** n:
        r += 1
    return r


def find_aux_primes(n: int, k: int, ceiling: int = DEFAULT_PRIME_CEILING) -> AuxPrimes:
    if k < 2 or k % 2:
        raise ValueError(f"k must be even and at least 2, got {k}")
    p = k + 1
    while not is_prime(p, ceiling):
        p += k
    r = _threshold_power(p, n)
    q = p + k
    while not (is_prime(q, ceiling) and math.gcd((p - 1) * p, q - 1) == k):
        q += k
    s = _threshold_power(q, n)
    k_ell = (p - 1) * p ** (r - 1)
    k_m = (q - 1) * q ** (s - 1)
    return AuxPrimes(p, r, q, s, p ** r, q ** s, k_ell, k_m)


def exponent_mod(k, p: int, j: int = 1) -> int:
    """Exponent of the unit group of Z<G>/(p^j) when ``p = 1 mod k``.

    ``k`` may be the group exponent or a group context carrying it.
    """
    k = getattr(k, "k", k)
    if (p - 1) % k:
        raise HypothesisFailed(f"{p} is not 1 modulo {k}")
    return (p - 1) * p ** (j - 1)
