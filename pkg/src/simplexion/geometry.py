"""Discrete Morse theory, curvature, valuations, level surfaces, and the
recursive homotopy hierarchy (contractible / d-graph / d-sphere / d-ball).

Vertex-based operations here take functions on the 0-simplices and use the
induced-subcomplex unit sphere; the classical theorems (Poincare-Hopf,
Gauss-Bonnet, Sard, Morse inequalities) hold when the complex is the clique
complex of its own 1-skeleton.  A general complex is handled by passing its
Barycentric refinement, whose vertices are the simplices of the original and
which is always a clique complex.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from math import comb

from .core import (
    Complex,
    close,
    induced,
    link,
    one_skeleton,
    unit_sphere,
)
from .errors import ResourceLimitError
from .refinement import refinement_order
from .rng import SplitMix64

_RECURSION_HEADROOM = 100_000


# -- vertex functions ---------------------------------------------------------


def is_locally_injective(G: Complex, f: dict) -> bool:
    """True when f separates the endpoints of every edge."""
    return all(f[x[0]] != f[x[1]] for x in G.simplices if len(x) == 2)


def require_locally_injective(G: Complex, f: dict):
    for x in G.simplices:
        if len(x) == 2 and f[x[0]] == f[x[1]]:
            raise ValueError(f"function not locally injective on edge {x}")


def random_injective_function(G: Complex, gen: SplitMix64) -> dict:
    """Uniform random linear order of the vertices, as a function."""
    verts = list(G.vertices())
    gen.shuffle(verts)
    return {v: i for i, v in enumerate(verts)}


def _lower_set(adj: dict, f: dict, v) -> frozenset:
    fv = f[v]
    return frozenset(w for w in adj[v] if f[w] < fv)


def ph_index(G: Complex, f: dict, v, adj: dict | None = None) -> int:
    """Poincare-Hopf index 1 - chi(S^-_f(v)), where S^- is the subcomplex
    induced on the neighbors below v.  Summed over all vertices this gives
    chi(G) on clique complexes."""
    if adj is None:
        require_locally_injective(G, f)
        adj = one_skeleton(G)
    if v not in adj:
        raise KeyError(f"vertex {v} not in complex")
    return 1 - induced(G, _lower_set(adj, f, v)).euler_characteristic()


def ph_index_sum(G: Complex, f: dict) -> int:
    require_locally_injective(G, f)
    adj = one_skeleton(G)
    memo = {}
    total = 0
    for v in adj:
        key = _lower_set(adj, f, v)
        if key not in memo:
            memo[key] = induced(G, key).euler_characteristic()
        total += 1 - memo[key]
    return total


def curvature_expectation(G: Complex, v, trials: int, seed: int) -> float:
    """Monte Carlo curvature: mean Poincare-Hopf index of v over uniform
    random orders of the vertices; converges to the Levitt curvature on
    clique complexes.  Trial k draws from substream k of the seed."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    adj = one_skeleton(G)
    if v not in adj:
        raise KeyError(f"vertex {v} not in complex")
    verts = sorted(adj)
    nbrs = sorted(adj[v])
    chi_memo = {}
    total = 0
    for trial in range(trials):
        gen = SplitMix64.substream(seed, trial)
        order = gen.shuffle(list(verts))
        pos = {w: i for i, w in enumerate(order)}
        low = frozenset(w for w in nbrs if pos[w] < pos[v])
        if low not in chi_memo:
            chi_memo[low] = induced(G, low).euler_characteristic()
        total += 1 - chi_memo[low]
    return total / trials


def levitt_curvature(G: Complex, v) -> Fraction:
    """Exact curvature 1 - v0(S)/2 + v1(S)/3 - ... of the link S of v.
    Summed over all vertices this is exactly chi(G), for every complex."""
    fv = link(G, (v,) if not isinstance(v, tuple) else v).f_vector()
    k = Fraction(1)
    for i, c in enumerate(fv):
        k += Fraction((-1) ** (i + 1) * c, i + 2)
    return k


def curvature_vector(G: Complex) -> dict:
    return {v: levitt_curvature(G, v) for v in G.vertices()}


# -- valuations ---------------------------------------------------------------


def valuation_eval(X, G: Complex):
    """X . f(G), zero-extended on either side."""
    fv = G.f_vector()
    return sum(Fraction(x) * c for x, c in zip(X, fv))


def valuation_check(X, A: Complex, B: Complex) -> bool:
    """The defining identity X(A i B) + X(A u B) = X(A) + X(B); exact."""
    inter = Complex(A.simplices & B.simplices, _closed=True)
    union = Complex(A.simplices | B.simplices, _closed=True)
    return (
        valuation_eval(X, inter) + valuation_eval(X, union)
        == valuation_eval(X, A) + valuation_eval(X, B)
    )


def dehn_sommerville_valuation(k: int, d: int) -> list:
    """The valuation vanishing on closed d-graphs: coefficient
    (-1)^(j+d) C(j+1, k+1) on v_j for k <= j <= d, with an extra -1 at v_k.
    (Example: k=0, d=2 gives (0, -2, 3), i.e. 3 v_2 = 2 v_1 on surfaces.)"""
    if not (0 <= k <= d):
        raise ValueError("need 0 <= k <= d")
    X = [0] * (d + 1)
    for j in range(k, d + 1):
        X[j] += (-1) ** (j + d) * comb(j + 1, k + 1)
    X[k] -= 1
    return X


def ds_curvature_check(G: Complex, d: int | None = None) -> bool:
    """For a d-graph, the localized Dehn-Sommerville curvature
    X_{k-1,d-1}(link(v)) vanishes at every vertex and every k."""
    if d is None:
        d = G.max_dim()
    if not is_d_graph(G, d):
        raise ValueError(f"not a {d}-graph")
    for v in G.vertices():
        fl = link(G, (v,)).f_vector()
        for k in range(1, d + 1):
            X = dehn_sommerville_valuation(k - 1, d - 1)
            if sum(x * c for x, c in zip(X, fl)) != 0:
                return False
    return True


# -- level surfaces -----------------------------------------------------------


def level_surface(G: Complex, f: dict, c: float) -> Complex:
    """The hypersurface {f = c}: the subcomplex of the Barycentric refinement
    induced on the simplices whose vertex values straddle c.  Vertex labels
    are indices into refinement_order(G).  For a d-graph and locally
    injective f this is a (d-1)-graph (discrete Sard)."""
    values = [f[v] for v in G.vertices()]
    if any(val == c for val in values):
        raise ValueError("level value c must avoid the range of f")
    elems = refinement_order(G)
    crossing = [
        i
        for i, x in enumerate(elems)
        if min(f[v] for v in x) < c < max(f[v] for v in x)
    ]
    members = [elems[i] for i in crossing]
    relabel = {i: j for j, i in enumerate(crossing)}
    # chains among crossing simplices = the induced subcomplex of G_1
    sets = [set(m) for m in members]
    above = [[] for _ in members]
    for a in range(len(members)):
        for b in range(len(members)):
            if len(members[b]) > len(members[a]) and sets[a] < sets[b]:
                above[a].append(b)
    chains = []

    def extend(chain):
        chains.append(tuple(crossing[i] for i in chain))
        for j in above[chain[-1]]:
            chain.append(j)
            extend(chain)
            chain.pop()

    for i in range(len(members)):
        extend([i])
    return Complex(chains, _closed=True)


# -- homotopy recursion -------------------------------------------------------


class GraphContext:
    """Memoized homotopy queries on induced subgraphs of one fixed graph.

    Subgraphs are identified by frozensets of vertices; all the recursive
    Evako-style definitions (contractible, d-sphere, d-ball, d-graph) share
    one memo table per ambient graph.
    """

    def __init__(self, adj: dict):
        self.adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._contract = {}
        self._sphere = {}
        self._ball = {}

    @classmethod
    def of_complex(cls, G: Complex) -> "GraphContext":
        return cls(one_skeleton(G))

    def full(self) -> frozenset:
        return frozenset(self.adj)

    def sphere_at(self, sub: frozenset, v) -> frozenset:
        return self.adj[v] & sub

    def contractible(self, sub: frozenset) -> bool:
        """There is a vertex whose sphere and whose removal are both
        contractible; single points are contractible, the empty graph is not."""
        if len(sub) == 1:
            return True
        if not sub:
            return False
        got = self._contract.get(sub)
        if got is not None:
            return got
        self._contract[sub] = False  # cycle guard; recursion only shrinks sub
        result = False
        for v in sorted(sub):
            if self.contractible(self.adj[v] & sub) and self.contractible(
                sub - {v}
            ):
                result = True
                break
        self._contract[sub] = result
        return result

    def removal_order(self, sub: frozenset) -> list | None:
        """A sequence of homotopy steps reducing sub to one vertex: each
        removed vertex has contractible sphere and contractible remainder.
        None when the search fails (then sub is not contractible)."""
        order = []
        current = sub
        while len(current) > 1:
            pick = None
            for v in sorted(current):
                if self.contractible(self.adj[v] & current) and self.contractible(
                    current - {v}
                ):
                    pick = v
                    break
            if pick is None:
                return None
            order.append(pick)
            current = current - {pick}
        if not current:
            return None
        order.append(next(iter(current)))
        return order

    def d_graph(self, sub: frozenset, d: int) -> bool:
        return all(self.d_sphere(self.adj[v] & sub, d - 1) for v in sub)

    def d_sphere(self, sub: frozenset, d: int) -> bool:
        """d-graph such that removing some vertex leaves a contractible
        graph; the empty graph is the (-1)-sphere."""
        if d < 0:
            return not sub
        if not sub:
            return False
        key = (sub, d)
        got = self._sphere.get(key)
        if got is None:
            got = self.d_graph(sub, d) and any(
                self.contractible(sub - {v}) for v in sorted(sub)
            )
            self._sphere[key] = got
        return got

    def d_ball(self, sub: frozenset, d: int) -> bool:
        """Contractible d-graph-with-boundary whose boundary vertices (those
        with ball spheres) form a (d-1)-sphere; a single vertex is the 0-ball.
        """
        if d < 0:
            return False
        if d == 0:
            return len(sub) == 1
        key = (sub, d)
        got = self._ball.get(key)
        if got is not None:
            return got
        self._ball[key] = False
        result = self._ball_raw(sub, d)
        self._ball[key] = result
        return result

    def _ball_raw(self, sub: frozenset, d: int) -> bool:
        if not sub:
            return False
        boundary = set()
        for v in sub:
            s = self.adj[v] & sub
            if self.d_sphere(s, d - 1):
                continue
            if self.d_ball(s, d - 1):
                boundary.add(v)
            else:
                return False
        return (
            bool(boundary)
            and self.contractible(sub)
            and self.d_sphere(frozenset(boundary), d - 1)
        )

    def boundary_vertices(self, sub: frozenset, d: int) -> frozenset | None:
        """Vertices with (d-1)-ball spheres, when sub is a d-graph with
        boundary; None when some sphere is neither ball nor sphere."""
        out = set()
        for v in sub:
            s = self.adj[v] & sub
            if self.d_sphere(s, d - 1):
                continue
            if self.d_ball(s, d - 1):
                out.add(v)
            else:
                return None
        return frozenset(out)


def _graph_context(G: Complex) -> GraphContext:
    ctx = _CTX_CACHE.get(G)
    if ctx is None:
        ctx = GraphContext.of_complex(G)
        if len(_CTX_CACHE) > 64:
            _CTX_CACHE.clear()
        _CTX_CACHE[G] = ctx
    return ctx


_CTX_CACHE: dict = {}


def _as_clique_complex(G: Complex) -> Complex:
    """G itself when it is the clique complex of its skeleton, else its
    Barycentric refinement (which always is)."""
    from .core import is_whitney
    from .refinement import barycentric

    return G if is_whitney(G) else barycentric(G)


def _guarded(fn, *args):
    limit = sys.getrecursionlimit()
    if limit < _RECURSION_HEADROOM:
        sys.setrecursionlimit(_RECURSION_HEADROOM)
    try:
        return fn(*args)
    except RecursionError as exc:
        raise ResourceLimitError("homotopy recursion exceeded depth") from exc
    finally:
        sys.setrecursionlimit(limit)


def is_contractible(G: Complex) -> bool:
    """Recursive contractibility (collapsibility in the unit-sphere sense).
    A False answer means no reduction sequence was found by the full
    recursive search; complexes homotopic to a point but not contractible
    (dunce-hat style) are reported False by design."""
    if G.is_empty:
        return False
    H = _as_clique_complex(G)
    ctx = _graph_context(H)
    return _guarded(ctx.contractible, ctx.full())


def is_d_graph(G: Complex, d: int) -> bool:
    """Every vertex sphere is a (d-1)-sphere (discrete d-manifold)."""
    H = _as_clique_complex(G)
    ctx = _graph_context(H)
    return _guarded(ctx.d_graph, ctx.full(), d)


def is_d_sphere(G: Complex, d: int) -> bool:
    if G.is_empty:
        return d == -1
    H = _as_clique_complex(G)
    ctx = _graph_context(H)
    return _guarded(ctx.d_sphere, ctx.full(), d)


def is_d_ball(G: Complex, d: int) -> bool:
    if G.is_empty:
        return False
    H = _as_clique_complex(G)
    ctx = _graph_context(H)
    return _guarded(ctx.d_ball, ctx.full(), d)


def boundary(G: Complex, d: int) -> Complex:
    """Boundary of a d-complex with boundary: the subcomplex generated by the
    simplices whose unit sphere (in the containment graph) is a (d-1)-ball.
    The boundary of a boundary is empty."""
    out = []
    for x in G.simplices:
        S = unit_sphere(G, x)
        if S.is_empty:
            continue
        ctx = GraphContext.of_complex(S)
        if _guarded(ctx.d_ball, ctx.full(), d - 1):
            out.append(x)
    return close(out) if out else Complex()


def is_d_complex_with_boundary(G: Complex, d: int) -> bool:
    """Every unit sphere is a (d-1)-sphere or a (d-1)-ball."""
    for x in G.simplices:
        S = unit_sphere(G, x)
        ctx = GraphContext.of_complex(S)
        full = ctx.full()
        if _guarded(ctx.d_sphere, full, d - 1):
            continue
        if _guarded(ctx.d_ball, full, d - 1):
            continue
        return False
    return True


# -- Morse theory -------------------------------------------------------------


def morse_analysis(G: Complex, f: dict) -> dict:
    """Classify every vertex of a clique complex under f.

    A vertex is regular when S^-_f is contractible and critical when S^- is a
    sphere (the empty sphere included); f is a Morse function when every
    vertex is one of the two.  The Morse index of a critical vertex is
    1 + dim(S^-).  Returns counts c_k, the index map, and the first failing
    vertex for non-Morse input."""
    require_locally_injective(G, f)
    adj = one_skeleton(G)
    ctx = _graph_context(G)
    indices = {}
    failing = None
    for v in sorted(adj):
        low = _lower_set(adj, f, v)
        if _guarded(ctx.contractible, low):
            continue
        sm = induced(G, low)
        dlow = sm.max_dim() if not sm.is_empty else -1
        if _guarded(ctx.d_sphere, low, dlow):
            indices[v] = 1 + dlow
        else:
            failing = v
            break
    is_morse = failing is None
    counts = ()
    if is_morse and indices:
        top = max(indices.values())
        counts = tuple(
            sum(1 for m in indices.values() if m == k) for k in range(top + 1)
        )
    elif is_morse:
        counts = ()
    return {
        "is_morse": is_morse,
        "failing_vertex": failing,
        "indices": indices,
        "counts": counts,
    }


def morse_inequalities_hold(counts, betti) -> bool:
    """Weak (b_k <= c_k) and strong alternating Morse inequalities."""
    top = max(len(counts), len(betti))
    c = list(counts) + [0] * (top - len(counts))
    b = list(betti) + [0] * (top - len(betti))
    if any(bk > ck for bk, ck in zip(b, c)):
        return False
    for p in range(top):
        partial = sum((-1) ** k * (c[k] - b[k]) for k in range(p + 1))
        if (-1) ** p * partial < 0:
            return False
    return sum((-1) ** k * (c[k] - b[k]) for k in range(top)) == 0


def critical_points(G: Complex, f: dict) -> list:
    """Vertices whose lower sphere is not contractible (includes minima)."""
    require_locally_injective(G, f)
    adj = one_skeleton(G)
    ctx = _graph_context(G)
    out = []
    for v in sorted(adj):
        low = _lower_set(adj, f, v)
        if not _guarded(ctx.contractible, low):
            out.append(v)
    return out


def reeb_sphere_check(G: Complex, d: int | None = None) -> dict:
    """Construct a function with exactly two critical points on a d-sphere.

    Strategy: pick a vertex x0 whose removal admits a full homotopy reduction;
    number the remaining vertices by the reverse removal order and put x0 on
    top.  Every intermediate vertex then has the contractible sphere it had
    when removed.  Returns the function and its critical points; 'success'
    False with reason 'budget' means the greedy searches failed, not that no
    such function exists."""
    if d is None:
        d = G.max_dim()
    H = _as_clique_complex(G)
    if not is_d_sphere(H, d):
        raise ValueError(f"not a {d}-sphere")
    ctx = _graph_context(H)
    full = ctx.full()
    for x0 in sorted(full):
        order = ctx.removal_order(full - {x0})
        if order is None:
            continue
        f = {}
        for rank, v in enumerate(reversed(order)):
            f[v] = rank
        f[x0] = len(order)
        crit = critical_points(H, f)
        if len(crit) == 2:
            return {"success": True, "function": f, "critical": crit}
    return {"success": False, "reason": "budget", "function": None}
