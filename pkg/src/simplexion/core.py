"""Finite abstract simplicial complexes and their elementary invariants.

A simplex is a nonempty strictly-increasing tuple of non-negative integer
vertex ids; a complex is a finite set of simplices closed under taking
nonempty subsets.  All values are immutable and hashable, so they are safe to
share across threads and usable as cache keys.  The empty complex is a valid
value (the (-1)-sphere, the zero of the join monoid).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator

Simplex = tuple  # strictly increasing tuple of non-negative ints


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a simplex: sorted tuple of distinct vertex ids."""
    vs = tuple(sorted({int(v) for v in vertices}))
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    if vs[0] < 0:
        raise ValueError("vertex ids must be non-negative")
    return vs


def dim(x: Simplex) -> int:
    return len(x) - 1


def parity(x: Simplex) -> int:
    """(-1)^dim(x), the weight a simplex contributes to Euler sums."""
    return -1 if len(x) % 2 == 0 else 1


def _sort_key(x: Simplex):
    return (len(x), x)


class Complex:
    """An immutable downward-closed set of simplices.

    Use :func:`close` (or ``Complex.from_simplices`` with already closed
    data) to build one.  Iteration yields simplices in canonical order:
    by dimension, then lexicographically.
    """

    __slots__ = ("simplices", "_hash", "_sorted", "_fvector", "_vertices")

    def __init__(self, simplices: Iterable[Simplex] = (), *, _closed: bool = False):
        sset = frozenset(simplices)
        if not _closed:
            for x in sset:
                for k in range(1, len(x)):
                    for face in itertools.combinations(x, k):
                        if face not in sset:
                            raise ValueError(
                                f"not downward closed: {face} missing under {x}"
                            )
        self.simplices = sset
        self._hash = None
        self._sorted = None
        self._fvector = None
        self._vertices = None

    @classmethod
    def from_simplices(cls, simplices: Iterable[Simplex]) -> "Complex":
        return cls(simplices)

    # -- container protocol ------------------------------------------------

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        if self._sorted is None:
            self._sorted = sorted(self.simplices, key=_sort_key)
        return iter(self._sorted)

    def __contains__(self, x) -> bool:
        return x in self.simplices

    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.simplices)
        return self._hash

    def __repr__(self) -> str:
        f = self.f_vector()
        return f"Complex(f={f}, chi={self.euler_characteristic()})"

    # -- basic invariants --------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    def vertices(self) -> tuple:
        """All vertex ids, ascending."""
        if self._vertices is None:
            vs = set()
            for x in self.simplices:
                vs.update(x)
            self._vertices = tuple(sorted(vs))
        return self._vertices

    def max_dim(self) -> int:
        """Maximal dimension; -1 for the empty complex."""
        return max((len(x) for x in self.simplices), default=0) - 1

    def f_vector(self) -> tuple:
        """(v_0, ..., v_r): simplex counts per dimension; () when empty."""
        if self._fvector is None:
            counts = {}
            for x in self.simplices:
                counts[len(x) - 1] = counts.get(len(x) - 1, 0) + 1
            self._fvector = tuple(
                counts.get(k, 0) for k in range(self.max_dim() + 1)
            ) if counts else ()
        return self._fvector

    def euler_characteristic(self) -> int:
        """Alternating sum of simplex parities."""
        return sum(parity(x) for x in self.simplices)

    def facets(self) -> list:
        """Maximal simplices, canonical order."""
        out = []
        byvertex = {}
        for x in self.simplices:
            for v in x:
                byvertex.setdefault(v, []).append(x)
        for x in self:
            sx = set(x)
            if not any(
                len(y) > len(x) and sx.issubset(y) for y in byvertex.get(x[0], ())
            ):
                out.append(x)
        return sorted(out, key=_sort_key)

    def simplices_of_dim(self, k: int) -> list:
        return sorted((x for x in self.simplices if len(x) == k + 1), key=_sort_key)


EMPTY = Complex()
POINT = Complex((( 0,),), _closed=True)


def close(sets: Iterable[Iterable[int]]) -> Complex:
    """Downward closure of a family of vertex sets.  Idempotent."""
    closed = set()
    for s in sets:
        x = simplex(s)
        if x in closed:
            continue
        for k in range(1, len(x) + 1):
            closed.update(itertools.combinations(x, k))
    return Complex(closed, _closed=True)


def generating_function(G: Complex) -> list:
    """Coefficients [1, v_0, v_1, ...] of f_G(t) = 1 + sum v_k t^(k+1).

    f_G(0) - f_G(-1) = chi(G), and the join multiplies these polynomials.
    """
    return [1] + list(G.f_vector())


def eval_poly(coeffs, t):
    acc = 0
    for c in reversed(list(coeffs)):
        acc = acc * t + c
    return acc


# -- stars, links, spheres -------------------------------------------------


def star_up(G: Complex, x: Simplex) -> frozenset:
    """{y in G : x is a subset of y} - generally not a subcomplex."""
    if x not in G.simplices:
        raise KeyError(f"{x} not in complex")
    sx = set(x)
    return frozenset(y for y in G.simplices if sx.issubset(y))


def star_down(G: Complex, x: Simplex) -> Complex:
    """{y in G : y is a subset of x} - the closure of x, always a complex."""
    if x not in G.simplices:
        raise KeyError(f"{x} not in complex")
    return close([x])


def set_euler(simplices: Iterable[Simplex]) -> int:
    """Alternating parity sum of an arbitrary set of simplices (the Euler
    'characteristic' the star formulas use; the set need not be closed)."""
    return sum(parity(x) for x in simplices)


def up_star_weights(G: Complex) -> dict:
    """Map s -> sum of parity(z) over z in G containing s.

    Single pass over all (simplex, nonempty subset) incidences; backs the Wu
    characteristic and the Green star formula.
    """
    acc = {}
    for z in G.simplices:
        w = parity(z)
        for k in range(1, len(z) + 1):
            for s in itertools.combinations(z, k):
                acc[s] = acc.get(s, 0) + w
    return acc


def wu_characteristic(G: Complex, k: int = 2) -> int:
    """Sum of parity products over ordered k-tuples of simplices whose common
    intersection is nonempty; k=1 gives the Euler characteristic.

    Computed by inclusion-exclusion over the common face: with
    U(s) = sum of parity over supersets of s,
    omega_k = sum over s in G of parity(s) * U(s)^k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return G.euler_characteristic()
    U = up_star_weights(G)
    return sum(parity(s) * U[s] ** k for s in G.simplices)


def wu_characteristic_bruteforce(G: Complex, k: int = 2) -> int:
    """Direct ordered-tuple recursion with common-intersection pruning.

    Exponential; exists as the independent oracle for wu_characteristic.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    simps = list(G.simplices)

    def rec(common: frozenset, depth: int) -> int:
        if depth == 0:
            return 1
        total = 0
        for y in simps:
            inter = common & frozenset(y)
            if inter:
                total += parity(y) * rec(inter, depth - 1)
        return total

    return sum(parity(x) * rec(frozenset(x), k - 1) for x in simps)


def comparable_elements(G: Complex, x: Simplex) -> list:
    """Simplices y != x with y subset of x or x subset of y, canonical order."""
    if x not in G.simplices:
        raise KeyError(f"{x} not in complex")
    sx = set(x)
    out = [y for y in G.simplices
           if y != x and (sx.issubset(y) or sx.issuperset(y))]
    return sorted(out, key=_sort_key)


def unit_sphere(G: Complex, x: Simplex) -> Complex:
    """Unit sphere of x in the containment graph of G, as a complex.

    Vertices 0..m-1 index the comparable elements (see
    comparable_elements for the labels); simplices are the chains among
    them, i.e. the Whitney complex of the induced containment graph.
    """
    elems = comparable_elements(G, x)
    return _chain_complex_of(elems)


def _chain_complex_of(elems: list) -> Complex:
    """Order complex of a containment-ordered family (vertices = indices)."""
    n = len(elems)
    above = [[] for _ in range(n)]
    sets = [set(e) for e in elems]
    for i in range(n):
        for j in range(n):
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


def sphere_euler(G: Complex, x: Simplex) -> int:
    """chi of the unit sphere of x, without building the sphere.

    Splits S(x) as the join of the boundary sphere of x (closed form) and the
    up-star sphere (signed chain count over supersets), using
    1 - chi(A join B) = (1 - chi A)(1 - chi B).
    """
    if x not in G.simplices:
        raise KeyError(f"{x} not in complex")
    d = dim(x)
    chi_down = 1 + (-1) ** (d - 1) if d >= 1 else 0  # boundary of x
    ups = sorted((y for y in star_up(G, x) if y != x), key=_sort_key)
    # signed chain count: A(y) = 1 - sum A(z) over z strictly between x and y
    A = {}
    chi_up = 0
    sets = [set(y) for y in ups]
    for j, y in enumerate(ups):
        a = 1
        for i in range(j):
            if len(ups[i]) < len(y) and sets[i] < sets[j]:
                a -= A[ups[i]]
        A[y] = a
        chi_up += a
    return 1 - (1 - chi_down) * (1 - chi_up)


def link(G: Complex, x: Simplex) -> Complex:
    """Link of x: {y : y disjoint from x, y union x in G}.  Keeps the
    original vertex labels (unlike unit_sphere, which reindexes)."""
    if x not in G.simplices:
        raise KeyError(f"{x} not in complex")
    sx = set(x)
    out = []
    for z in star_up(G, x):
        rest = tuple(v for v in z if v not in sx)
        if rest:
            out.append(rest)
    return Complex(out, _closed=True)


def induced(G: Complex, W: Iterable[int]) -> Complex:
    """Induced subcomplex on a vertex subset: all simplices inside W."""
    sw = set(W)
    return Complex((x for x in G.simplices if sw.issuperset(x)), _closed=True)


def complex_union(A: Complex, B: Complex) -> Complex:
    return Complex(A.simplices | B.simplices, _closed=True)


def complex_intersection(A: Complex, B: Complex) -> Complex:
    return Complex(A.simplices & B.simplices, _closed=True)


# -- join and disjoint union ----------------------------------------------


def _relabel(G: Complex, offset: int) -> tuple:
    """Shift all vertex ids to offset..offset+m-1 densely; returns the new
    complex and the old->new vertex map."""
    vs = G.vertices()
    vmap = {v: offset + i for i, v in enumerate(vs)}
    relabeled = Complex(
        (tuple(vmap[v] for v in x) for x in G.simplices), _closed=True
    )
    return relabeled, vmap


def normalize_labels(G: Complex) -> Complex:
    """Relabel vertices densely to 0..m-1 preserving order."""
    return _relabel(G, 0)[0]


def join(G: Complex, H: Complex, return_maps: bool = False):
    """Join of two complexes: both, plus all unions of one simplex from each.

    H's vertices are relabeled above G's.  Written G + H or G âŠ• H in the
    literature (both glyphs denote this one operation); generating functions
    multiply, so 1 - chi(join) = (1-chi G)(1-chi H), and the join of spheres
    is a sphere.  The empty complex is the neutral element.
    """
    g2, gmap = _relabel(G, 0)
    h2, hmap = _relabel(H, len(G.vertices()))
    out = set(g2.simplices) | set(h2.simplices)
    for x in g2.simplices:
        for y in h2.simplices:
            out.add(x + y)  # disjoint and ordered by construction
    J = Complex(out, _closed=True)
    if return_maps:
        return J, gmap, hmap
    return J


def disjoint_union(G: Complex, H: Complex, return_maps: bool = False):
    """Disjoint union (the addition of the strong ring); relabels H above G."""
    g2, gmap = _relabel(G, 0)
    h2, hmap = _relabel(H, len(G.vertices()))
    U = Complex(g2.simplices | h2.simplices, _closed=True)
    if return_maps:
        return U, gmap, hmap
    return U


# -- graphs and dimension ---------------------------------------------------


def one_skeleton(G: Complex) -> dict:
    """Adjacency map of the 1-skeleton: vertex -> set of neighbors."""
    adj = {v: set() for v in G.vertices()}
    for x in G.simplices:
        if len(x) == 2:
            a, b = x
            adj[a].add(b)
            adj[b].add(a)
    return adj


def is_whitney(G: Complex) -> bool:
    """True when G is the clique complex of its own 1-skeleton."""
    if G.is_empty:
        return True
    adj = one_skeleton(G)
    # every clique must be a simplex; every simplex is a clique by closure.
    # check by growing: a set is a clique iff all its 2-subsets are edges.
    from .generators import whitney_from_adjacency  # local import, no cycle at module load

    return whitney_from_adjacency(adj) == G


def inductive_dimension(G: Complex) -> Fraction:
    """Recursive average dimension.

    For a Whitney complex, dim(G) = 1 + average over vertices of
    dim(sphere at the vertex), with dim(empty) = -1; a general complex is
    measured on its Barycentric refinement graph (same value by definition).
    """
    if G.is_empty:
        return Fraction(-1)
    if is_whitney(G):
        adj = one_skeleton(G)
        return graph_dimension(adj)
    from .refinement import barycentric

    return graph_dimension(one_skeleton(barycentric(G)))


def graph_dimension(adj: dict) -> Fraction:
    """Inductive dimension of a graph given by an adjacency map."""
    verts = sorted(adj)
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for v, nbrs in adj.items():
        m = 0
        for w in nbrs:
            m |= 1 << index[w]
        masks[index[v]] = m
    full = (1 << len(verts)) - 1
    return _mask_dimension(masks, full, {})


def _mask_dimension(masks, subset: int, memo: dict) -> Fraction:
    if subset == 0:
        return Fraction(-1)
    got = memo.get(subset)
    if got is not None:
        return got
    total = Fraction(0)
    count = 0
    s = subset
    while s:
        low = s & (-s)
        v = low.bit_length() - 1
        total += _mask_dimension(masks, masks[v] & subset, memo)
        count += 1
        s ^= low
    val = 1 + total / count
    memo[subset] = val
    return val
