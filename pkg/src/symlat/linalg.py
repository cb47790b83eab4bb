"""Exact matrix helpers over Z, Q and Z/m.

Vectors are lists (row vectors), matrices are lists of rows.  Nothing here
uses floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NotAUnit


def identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a) -> list:
    return [list(col) for col in zip(*a)]


def matmul(a, b) -> list:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v, a) -> list:
    """Row vector times matrix."""
    out = [0] * len(a[0])
    for c, row in zip(v, a):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return out


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def quad(v, gram):
    return dot(vecmat(v, gram), v)


def det(a) -> int:
    """Determinant of an integer matrix (Bareiss fraction-free elimination)."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a) -> list:
    """Inverse over Q; raises ZeroDivisionError when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        if p != 1:
            m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                rc = m[c]
                m[r] = [x - f * y for x, y in zip(m[r], rc)]
    return [row[n:] for row in m]


def solve_left(a, b) -> list:
    """Return the rational row vector x with ``x a = b`` (a square, nonsingular)."""
    return vecmat(b, inverse(a))


def as_int_vector(v) -> list:
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"non-integral entry {x}")
        out.append(x.numerator)
    return out


def common_denominator(rows) -> int:
    d = 1
    for row in rows:
        for x in row:
            q = Fraction(x).denominator
            d = d * q // gcd(d, q)
    return d


def solve_mod(a, b, m: int) -> list:
    """Solve ``x a = b (mod m)`` for square ``a`` with ``det a`` a unit mod m."""
    d = det(a)
    if gcd(d, m) != 1:
        raise NotAUnit(f"matrix is singular modulo {m}")
    x = solve_left(a, b)
    return [(f.numerator * pow(f.denominator, -1, m)) % m for f in x]


def xgcd(a: int, b: int):
    """Return ``(g, s, t)`` with ``g = s a + t b = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hnf(rows, ncols: int | None = None) -> list:
    """Row Hermite normal form of the integer row span.

    Output rows are upper triangular in echelon form with positive pivots and
    entries above each pivot reduced into ``[0, pivot)``.  Zero rows are dropped,
    so two matrices span the same lattice iff their HNFs are equal.
    """
    if ncols is None:
        ncols = len(rows[0])
    piv: dict = {}
    for v in rows:
        _hnf_insert(piv, list(v), ncols)
    return _hnf_finish(piv)


def _hnf_insert(piv, v, ncols):
    j = 0
    while j < ncols:
        if v[j] == 0:
            j += 1
            continue
        h = piv.get(j)
        if h is None:
            if v[j] < 0:
                v = [-x for x in v]
            piv[j] = v
            _hnf_reduce_col(piv, j)
            return
        g, s, t = xgcd(h[j], v[j])
        a, b = h[j] // g, v[j] // g
        new_h = [s * x + t * y for x, y in zip(h, v)]
        v = [a * y - b * x for x, y in zip(h, v)]
        piv[j] = new_h
        _hnf_reduce_col(piv, j)
        # keep the pending row small by reducing it against existing pivots
        for c in range(j + 1, ncols):
            p = piv.get(c)
            if p is not None and v[c]:
                q = v[c] // p[c]
                if q:
                    v = [x - q * y for x, y in zip(v, p)]
        j += 1


def _hnf_reduce_col(piv, j):
    p = piv[j]
    for c, row in piv.items():
        if c < j and row[j]:
            q = row[j] // p[j]
            if q:
                piv[c] = [x - q * y for x, y in zip(row, p)]
    # reduce the new pivot row against later pivots
    for c in sorted(piv):
        if c > j:
            r = piv[c]
            q = p[c] // r[c]
            if q:
                p = [x - q * y for x, y in zip(p, r)]
    piv[j] = p


def _hnf_finish(piv) -> list:
    cols = sorted(piv)
    for idx in range(len(cols) - 1, -1, -1):
        row = piv[cols[idx]]
        for j in cols[idx + 1:]:
            p = piv[j]
            q = row[j] // p[j]
            if q:
                row = [x - q * y for x, y in zip(row, p)]
        piv[cols[idx]] = row
    return [piv[c] for c in cols]


# --- linear algebra over the prime field F_p ---------------------------------

def rref_mod(rows, p: int):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    m = [[x % p for x in r] for r in rows]
    piv_cols = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], piv_cols


def rank_mod(rows, p: int) -> int:
    if not rows:
        return 0
    return len(rref_mod(rows, p)[0])


def kernel_mod(a, p: int) -> list:
    """Basis of ``{x : x a = 0}`` over F_p (left kernel)."""
    n = len(a)
    if n == 0:
        return []
    at = transpose(a)
    red, pcs = rref_mod(at, p)
    free = [c for c in range(n) if c not in pcs]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for row, pc in zip(red, pcs):
            x[pc] = (-row[f]) % p
        basis.append(x)
    return basis


def span_mod(rows, p: int) -> list:
    rows = [r for r in rows if any(x % p for x in r)]
    if not rows:
        return []
    return rref_mod(rows, p)[0]


def in_span_mod(basis_rref, pivots, v, p: int) -> bool:
    v = [x % p for x in v]
    for row, pc in zip(basis_rref, pivots):
        if v[pc]:
            f = v[pc]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return not any(v)
