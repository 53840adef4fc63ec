"""Barycentric refinement, connection graphs, and the refinement operator
acting on f-vectors.

The refinement G_1 of a complex G is the order complex of its containment
poset: vertices are the simplices of G (indexed in canonical order), and the
simplices of G_1 are the chains.  f-vectors transform linearly under
refinement; the matrix of that map has entries built from Stirling numbers of
the second kind, which gives a cheap size prediction used as a memory guard.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .core import Complex, _sort_key
from .errors import ResourceLimitError

DEFAULT_CAP = 5_000_000


def cap_simplices(default: int = DEFAULT_CAP) -> int:
    """Refinement size cap; the SIMPLEXION_CAP env var overrides."""
    env = os.environ.get("SIMPLEXION_CAP")
    if env:
        return int(env)
    return default


def refinement_order(G: Complex) -> list:
    """The canonical vertex order of G_1: simplices by dimension, then lex."""
    return sorted(G.simplices, key=_sort_key)


@lru_cache(maxsize=32)
def stirling2_row(n: int) -> tuple:
    """Stirling numbers of the second kind S2(n, 0..n)."""
    row = [1] + [0] * n
    for m in range(1, n + 1):
        new = [0] * (n + 1)
        for k in range(1, m + 1):
            new[k] = k * row[k] + row[k - 1]
        row = new
    return tuple(row)


def stirling_matrix(r: int) -> list:
    """(r+1)x(r+1) integer matrix S with S[x][y] = S2(y, x) * x! in 1-based
    indices, so that f(G_1) = S f(G) for complexes of dimension <= r."""
    fact = [1] * (r + 2)
    for i in range(1, r + 2):
        fact[i] = fact[i - 1] * i
    S = [[0] * (r + 1) for _ in range(r + 1)]
    for y in range(1, r + 2):
        row = stirling2_row(y)
        for x in range(1, r + 2):
            S[x - 1][y - 1] = row[x] * fact[x] if x <= y else 0
    return S


def stirling_apply(S: list, f) -> tuple:
    """Exact product S f, with f zero-padded to the order of S."""
    r = len(S)
    fv = list(f) + [0] * (r - len(f))
    if len(fv) > r:
        raise ValueError("operator order smaller than f-vector length")
    out = [sum(S[i][j] * fv[j] for j in range(r)) for i in range(r)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def predicted_refinement_fvector(G: Complex) -> tuple:
    r = G.max_dim()
    if r < 0:
        return ()
    return stirling_apply(stirling_matrix(r), G.f_vector())


def barycentric(G: Complex, cap: int | None = None) -> Complex:
    """Barycentric refinement: the complex of chains of simplices of G.

    Vertex i of the result is simplex refinement_order(G)[i].  Refuses to
    build when the Stirling prediction exceeds the cap (resource guard).
    """
    if G.is_empty:
        return G
    limit = cap if cap is not None else cap_simplices()
    predicted = sum(predicted_refinement_fvector(G))
    if predicted > limit:
        raise ResourceLimitError(
            f"refinement would have {predicted} simplices (cap {limit})"
        )
    elems = refinement_order(G)
    n = len(elems)
    sets = [set(e) for e in elems]
    above = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if len(elems[j]) > len(elems[i]) and sets[i] < sets[j]:
                above[i].append(j)
    chains = []

    def extend(chain):
        chains.append(tuple(chain))
        for j in above[chain[-1]]:
            chain.append(j)
            extend(chain)
            chain.pop()

    for i in range(n):
        extend([i])
    return Complex(chains, _closed=True)


def order_complex(elements: list, less) -> Complex:
    """Order complex of an arbitrary finite poset.

    elements: list fixing the vertex indexing; less(a, b): strict order.
    Simplices of the result are the chains, as index tuples.
    """
    n = len(elements)
    above = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and less(elements[i], elements[j]):
                above[i].append(j)
    chains = []

    def extend(chain):
        chains.append(tuple(sorted(chain)))
        for j in above[chain[-1]]:
            chain.append(j)
            extend(chain)
            chain.pop()

    # every chain is counted once: grown upward from its unique minimum
    for i in range(n):
        extend([i])
    return Complex(chains, _closed=True)


def connection_graph(G: Complex, dual: bool = False) -> tuple:
    """Graph on the simplices of G: edges join intersecting pairs (or
    non-intersecting pairs when dual).  Returns (labels, edges) with labels
    the canonical simplex order and edges as sorted index pairs."""
    labels = refinement_order(G)
    n = len(labels)
    sets = [set(x) for x in labels]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            meets = bool(sets[i] & sets[j])
            if meets != dual:
                edges.append((i, j))
    return labels, edges


def euler_unique_vector(r: int) -> list:
    """The unique (up to scale) valuation fixed by refinement: the kernel of
    S^T - I normalized to first coordinate 1.  Must equal (1, -1, 1, ...),
    which is why the alternating parity sum is the only refinement-invariant
    valuation with X(point) = 1."""
    if r < 0:
        raise ValueError("r must be >= 0")
    S = stirling_matrix(r)
    m = r + 1
    # rows of (S^T - I) x = 0
    A = [[Fraction(S[j][i]) - (i == j) for j in range(m)] for i in range(m)]
    # solve with x_0 = 1 by rational elimination
    rhs = [-row[0] for row in A]
    cols = list(range(1, m))
    # gaussian elimination on A[:, 1:] x' = rhs
    M = [[A[i][j] for j in cols] + [rhs[i]] for i in range(m)]
    piv_rows = []
    rank = 0
    for c in range(len(cols)):
        piv = next((ri for ri in range(rank, m) if M[ri][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        f = M[rank][c]
        M[rank] = [v / f for v in M[rank]]
        for ri in range(m):
            if ri != rank and M[ri][c] != 0:
                g = M[ri][c]
                M[ri] = [a - g * b for a, b in zip(M[ri], M[rank])]
        piv_rows.append(c)
        rank += 1
    if rank != len(cols):
        raise ArithmeticError("eigenspace of refinement operator not 1-dimensional")
    x = [Fraction(1)] + [Fraction(0)] * (m - 1)
    for row_i, c in enumerate(piv_rows):
        x[cols[c]] = M[row_i][-1]
    return x
