"""Cyclic decomposition of a finite abelian group given by its multiplication table."""
from __future__ import annotations

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.domains import ZZ

from .errors import BadInput


def decompose_table(table, u: int):
    """Return ``(orders, u_coords)`` for the group on indices ``0..N-1``.

    The group is the free abelian group on the elements modulo the relations
    ``[a] + [b] = [ab]``; a Smith normal form of the relation matrix exposes
    the invariant factors and the column transform gives coordinates.
    """
    N = len(table)
    if N == 0 or any(len(row) != N for row in table):
        raise BadInput("table must be square and non-empty")
    if not 0 <= u < N:
        raise BadInput("u is not an element index")
    for a in range(N):
        for b in range(N):
            if table[a][b] != table[b][a] or not 0 <= table[a][b] < N:
                raise BadInput("table is not a commutative operation on 0..N-1")
    rels = []
    for a in range(N):
        for b in range(a, N):
            row = [0] * N
            row[a] += 1
            row[b] += 1
            row[table[a][b]] -= 1
            rels.append(row)
    D, _, T = smith_normal_decomp(Matrix(rels), domain=ZZ)
    diag = [abs(int(D[i, i])) for i in range(N)]
    if 0 in diag:
        raise BadInput("relations do not define a finite group")
    keep = [i for i, d in enumerate(diag) if d > 1]
    orders = [diag[i] for i in keep]
    total = 1
    for d in orders:
        total *= d
    if total != N:
        raise BadInput("table is not a group")
    coords = [int(T[u, i]) % diag[i] for i in keep]
    return orders, coords
