"""Generators: named complexes, Whitney (clique) complexes of graphs,
Erdos-Renyi random complexes with their exact expectation polynomials, and
the Cartesian product of the strong ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import Complex, close, join, POINT
from .refinement import order_complex
from .rng import SplitMix64

# icosahedron graph: 12 vertices, 30 edges, every vertex degree 5
# (adjacency of the icosahedron's 1-skeleton; its clique complex is a 2-sphere)
ICOSAHEDRON_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 6), (1, 2), (1, 3), (1, 5), (1, 7),
    (2, 4), (2, 5), (2, 8), (3, 6), (3, 7), (3, 9), (4, 6), (4, 8), (4, 10),
    (5, 7), (5, 8), (5, 11), (6, 9), (6, 10), (7, 9), (7, 11), (8, 10),
    (8, 11), (9, 10), (9, 11), (10, 11),
]


def complete(n: int) -> Complex:
    """Closure of one (n-1)-simplex: the solid K_n."""
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return close([range(n)])


def path(n: int) -> Complex:
    """Path complex with n vertices and n-1 edges."""
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    sets = [(i,) for i in range(n)] + [(i, i + 1) for i in range(n - 1)]
    return close(sets)


def cycle(n: int) -> Complex:
    """Cycle complex C_n (1-dimensional).  A 1-sphere for n >= 4; C_3 is the
    hollow triangle, which is not the clique complex of its skeleton."""
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return close([(i, (i + 1) % n) for i in range(n)])


def two_point() -> Complex:
    """The 0-sphere: two isolated points."""
    return close([(0,), (1,)])


def cross_polytope(d: int) -> Complex:
    """Join of d+1 copies of the 0-sphere: the d-dimensional cross polytope
    boundary (octahedron for d=2), a d-sphere."""
    if d < 0:
        raise ValueError("cross_polytope(d) needs d >= 0")
    G = two_point()
    for _ in range(d):
        G = join(G, two_point())
    return G


def octahedron() -> Complex:
    return cross_polytope(2)


def icosahedron() -> Complex:
    return whitney(12, ICOSAHEDRON_EDGES)


def _check_graph(n: int, edges) -> list:
    out = []
    seen = set()
    for e in edges:
        a, b = int(e[0]), int(e[1])
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge {e} outside vertex range 0..{n - 1}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        out.append(key)
    return out


def whitney(n: int, edges) -> Complex:
    """Clique complex of a simple graph on vertices 0..n-1."""
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    adj = {v: set() for v in range(n)}
    for a, b in _check_graph(n, edges):
        adj[a].add(b)
        adj[b].add(a)
    return whitney_from_adjacency(adj)


def whitney_from_adjacency(adj: dict) -> Complex:
    """Clique complex from an adjacency map (Bron-Kerbosch with pivoting on
    maximal cliques, then closure)."""
    maximal = []

    def bk(clique, candidates, excluded):
        if not candidates and not excluded:
            maximal.append(tuple(sorted(clique)))
            return
        pivot = max(candidates | excluded, key=lambda v: len(adj[v] & candidates))
        for v in sorted(candidates - adj[pivot]):
            bk(clique | {v}, candidates & adj[v], excluded & adj[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    if adj:
        bk(set(), set(adj), set())
    return close(maximal) if maximal else Complex()


@dataclass(frozen=True)
class RandomModel:
    """Erdos-Renyi sampling parameters; identical (n, p, seed) always
    reproduce identical complexes on any platform."""

    n: int
    p: float
    seed: int

    def __post_init__(self):
        if not (0.0 <= self.p <= 1.0):
            raise ValueError("p must lie in [0, 1]")
        if self.n < 0:
            raise ValueError("n must be >= 0")


def erdos_renyi_edges(model: RandomModel, trial: int = 0) -> list:
    """Edge sample for substream `trial`: each of the C(n,2) edges (in
    lexicographic order) is kept when the next uniform draw is < p."""
    gen = SplitMix64.substream(model.seed, trial)
    edges = []
    for a in range(model.n):
        for b in range(a + 1, model.n):
            if gen.uniform() < model.p:
                edges.append((a, b))
    return edges


def erdos_renyi(model: RandomModel, trial: int = 0) -> Complex:
    """Whitney complex of a random graph (isolated vertices kept)."""
    return whitney(model.n, erdos_renyi_edges(model, trial))


# -- exact expectation polynomials ------------------------------------------


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return out


def _poly_scale(a, c):
    return [Fraction(c) * x for x in a]


def _binomial_pq(k: int, n: int):
    """p^k (1-p)^(n-k) as a coefficient list."""
    out = [Fraction(1)]
    for _ in range(k):
        out = _poly_mul(out, [Fraction(0), Fraction(1)])
    for _ in range(n - k):
        out = _poly_mul(out, [Fraction(1), Fraction(-1)])
    return out


def expected_dimension(n: int, _cache={0: [Fraction(-1)]}) -> list:
    """Coefficients (ascending, exact rationals) of the expected inductive
    dimension of the Whitney complex of an Erdos-Renyi graph on n vertices:
    d_{n+1} = 1 + sum_k C(n,k) p^k (1-p)^(n-k) d_k, with d_0 = -1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for m in range(1, n + 1):
        if m in _cache:
            continue
        acc = [Fraction(1)]
        for k in range(m):
            term = _poly_scale(
                _poly_mul(_binomial_pq(k, m - 1), _cache[k]), comb(m - 1, k)
            )
            acc = _poly_add(acc, term)
        while len(acc) > 1 and acc[-1] == 0:
            acc.pop()
        _cache[m] = acc
    return list(_cache[n])


def expected_euler(n: int) -> list:
    """Coefficients (ascending, exact integers) of the expected Euler
    characteristic on E(n, p): sum_k (-1)^(k+1) C(n,k) p^C(k,2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = [Fraction(0)] * (comb(n, 2) + 1) if n else [Fraction(0)]
    for k in range(1, n + 1):
        out[comb(k, 2)] += (-1) ** (k + 1) * comb(n, k)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def poly_eval(coeffs, p):
    acc = coeffs[-1] * 0 if coeffs else 0
    for c in reversed(coeffs):
        acc = acc * p + c
    return acc


# -- strong ring product ------------------------------------------------------


def product_cells(A: Complex, B: Complex) -> list:
    """Cells of the Cartesian product A x B: pairs (x, y) ordered
    componentwise by containment, graded by dim(x) + dim(y).  Not a
    simplicial complex; its order complex realizes (A x B)_1."""
    return [(x, y) for x in A for y in B]


def cell_leq(c1, c2) -> bool:
    return (set(c1[0]) <= set(c2[0])) and (set(c1[1]) <= set(c2[1]))


def _cell_less(c1, c2) -> bool:
    return c1 != c2 and cell_leq(c1, c2)


def ring_product_complex(A: Complex, B: Complex) -> Complex:
    """Order complex of the product poset: the Barycentric refinement of the
    product, a genuine simplicial complex.  Vertex i is product_cells(A,B)[i].
    """
    cells = product_cells(A, B)
    if not cells:
        return Complex()
    return order_complex(cells, _cell_less)


def unit_complex() -> Complex:
    """The one-point complex, the multiplicative unit of the strong ring."""
    return POINT
