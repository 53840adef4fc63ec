"""The connection matrix L (L[x][y] = 1 iff x and y intersect) and the exact
integer theorems it carries: unimodularity, the integer Green inverse and its
energy/star formulas, eigenvalue sign counts, the hydrogen relation, trace
identities and the spectral symmetry of one-dimensional complexes.

Row and column order is always the canonical simplex order (dimension, then
lex), which makes every matrix here reproducible bit for bit and puts every
leading principal submatrix in bijection with a subcomplex; by unimodularity
all leading minors are +-1, so integer Gauss-Jordan needs no pivoting.
"""

from __future__ import annotations

import numpy as np

from .core import Complex, parity, set_euler, sphere_euler, star_up, up_star_weights
from .errors import InvariantViolation, ResourceLimitError
from .exact import (
    bareiss_det,
    berkowitz_charpoly,
    inertia_exact,
    integer_inverse,
)
from .refinement import refinement_order, stirling_apply, stirling_matrix

DEFAULT_EXACT_CAP = 3000


def _check_cap(G: Complex, cap: int):
    if len(G) > cap:
        raise ResourceLimitError(
            f"complex has {len(G)} simplices; exact dense cap is {cap}"
        )


def connection_matrix(G: Complex, dual: bool = False, cap: int = DEFAULT_EXACT_CAP) -> np.ndarray:
    """L(x,y) = 1 iff x and y intersect (0/1, symmetric, unit diagonal);
    the dual flag returns 1 - L."""
    _check_cap(G, cap)
    elems = refinement_order(G)
    verts = {v: i for i, v in enumerate(sorted(set(v for x in elems for v in x)))}
    B = np.zeros((len(elems), len(verts)), dtype=np.int64)
    for i, x in enumerate(elems):
        for v in x:
            B[i, verts[v]] = 1
    L = (B @ B.T > 0).astype(np.int64)
    if dual:
        return 1 - L
    return L


def dual_connection_matrix(G: Complex, cap: int = DEFAULT_EXACT_CAP) -> np.ndarray:
    return connection_matrix(G, dual=True, cap=cap)


def connection_det(G: Complex, cap: int = DEFAULT_EXACT_CAP) -> int:
    """det(L); +-1 for every simplicial complex (unimodularity)."""
    if G.is_empty:
        return 1
    return bareiss_det(connection_matrix(G, cap=cap))


def green_inverse(G: Complex, cap: int = DEFAULT_EXACT_CAP) -> np.ndarray:
    """The integer inverse g = L^-1 (exists and is integral by
    unimodularity); g(x,y) are the potential energy values."""
    L = connection_matrix(G, cap=cap)
    g = integer_inverse(L)
    if not np.array_equal(L @ g, np.eye(len(g), dtype=g.dtype)):
        raise InvariantViolation("L * g != I", witness={"n": len(g)})
    return g


def energy(G: Complex, green: np.ndarray | None = None) -> int:
    """Total potential energy sum_xy g(x,y); equals chi(G)."""
    if G.is_empty:
        return 0
    g = green_inverse(G) if green is None else green
    return int(g.sum())


def green_star(G: Complex, x, y, weights: dict | None = None) -> int:
    """parity(x) parity(y) chi(W+(x) n W+(y)), where W+ is the star and chi
    of a set of simplices is the plain parity sum.  Equals the Green inverse
    entry g(x,y)."""
    if x not in G.simplices or y not in G.simplices:
        raise KeyError("both simplices must lie in the complex")
    u = tuple(sorted(set(x) | set(y)))
    if weights is None:
        chi = set_euler(star_up(G, x) & star_up(G, y)) if u in G.simplices else 0
    else:
        chi = weights.get(u, 0)
    return parity(x) * parity(y) * chi


def green_star_matrix(G: Complex) -> np.ndarray:
    """All green_star values at once (one pass over the up-star weights)."""
    elems = refinement_order(G)
    U = up_star_weights(G)
    n = len(elems)
    M = np.zeros((n, n), dtype=np.int64)
    setsx = [set(x) for x in elems]
    for i in range(n):
        pi = parity(elems[i])
        for j in range(i, n):
            u = tuple(sorted(setsx[i] | setsx[j]))
            w = U.get(u)
            if w:
                val = pi * parity(elems[j]) * w
                M[i, j] = val
                M[j, i] = val
    return M


def wu_intersection_matrix(G: Complex) -> np.ndarray:
    """M(x,y) = parity(x) parity(y) chi(W-(x) n W-(y)); its total sum is the
    Wu characteristic (the down-star analogue of the Green star formula)."""
    elems = refinement_order(G)
    n = len(elems)
    M = np.zeros((n, n), dtype=np.int64)
    sets = [set(x) for x in elems]
    for i in range(n):
        for j in range(n):
            if sets[i] & sets[j]:
                # W-(x) n W-(y) = nonempty subsets of x n y, whose parity
                # sum is 1 whenever the common face is nonempty
                M[i, j] = parity(elems[i]) * parity(elems[j])
    return M


def inertia_of_connection(G: Complex, berkowitz_cap: int = 400) -> tuple:
    """(p, n, z) of L; p - n = chi(G) and z = 0 always."""
    L = connection_matrix(G)
    return inertia_exact(L, berkowitz_cap=berkowitz_cap)


def supertrace_powers(G: Complex, green: np.ndarray | None = None) -> dict:
    """str(L^k) for k = -1, 0, 1 where str(A) = sum parity(x) A(x,x);
    all three equal chi(G)."""
    elems = refinement_order(G)
    w = np.array([parity(x) for x in elems], dtype=np.int64)
    L = connection_matrix(G)
    g = green_inverse(G) if green is None else green
    return {
        "str_inverse": int((w * np.diag(g)).sum()),
        "str_identity": int(w.sum()),
        "str_connection": int((w * np.diag(L)).sum()),
    }


def dual_product_check(G: Complex, charpoly_cap: int = 300) -> dict:
    """det(-L Lbar) = 1 - chi(G) exactly, and the eigenvalue-1-heavy
    spectrum: -Lbar g = 1 - E g is a rank-one perturbation of the identity,
    so its characteristic polynomial is (x-1)^(n-1) (x-(1-chi)) exactly.
    (That spectrum belongs to -Lbar L^-1; -L Lbar itself only shares the
    determinant - K2 is a counterexample to the stronger reading.)  The
    char-poly comparison runs when n <= charpoly_cap; the determinant always.
    """
    if G.is_empty:
        return {"det": 1, "det_ok": True, "charpoly_ok": True}
    L = connection_matrix(G)
    n = len(L)
    chi = G.euler_characteristic()
    d = bareiss_det((-(L @ (1 - L))).astype(object))
    out = {"det": d, "det_ok": d == 1 - chi}
    if n <= charpoly_cap:
        g = green_inverse(G)
        cp = berkowitz_charpoly(-((1 - L) @ g))
        expected = _charpoly_one_heavy(n, 1 - chi)
        out["charpoly_ok"] = cp == expected
    else:
        out["charpoly_ok"] = None
    return out


def _charpoly_one_heavy(n: int, lam) -> list:
    """Coefficients of (x-1)^(n-1) (x-lam), descending."""
    coeffs = [1]
    for _ in range(n - 1):
        coeffs = [a - b for a, b in zip(coeffs + [0], [0] + coeffs)]
    # coeffs now (x-1)^(n-1) descending via pascal with signs
    out = [0] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] += c
        out[i + 1] -= c * lam
    return out


def signless_incidence(G: Complex) -> np.ndarray:
    """n x n matrix with d[x][y] = 1 when x is a codimension-1 face of y."""
    elems = refinement_order(G)
    index = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    d = np.zeros((n, n), dtype=np.int64)
    for y in elems:
        if len(y) == 1:
            continue
        j = index[y]
        for k in range(len(y)):
            face = y[:k] + y[k + 1:]
            d[index[face], j] = 1
    return d


def hydrogen_check(G: Complex) -> dict:
    """For one-dimensional complexes, L - L^-1 equals the signless Hodge
    operator H = (d + d^T)^2 entrywise."""
    if G.max_dim() != 1:
        raise ValueError("hydrogen relation needs a one-dimensional complex")
    L = connection_matrix(G)
    g = green_inverse(G)
    d = signless_incidence(G)
    D = d + d.T
    H = D @ D
    ok = np.array_equal(L - g, H)
    out = {"ok": bool(ok)}
    if not ok:
        diff = (L - g) - H
        i, j = np.argwhere(diff != 0)[0]
        out["witness"] = {"entry": (int(i), int(j)), "delta": int(diff[i, j])}
    return out


def trace_identity(G: Complex, green: np.ndarray | None = None) -> tuple:
    """Three independent computations of the same number:
    tr(L - L^-1); the sum of unit-sphere Euler characteristics; and
    f'(0) - f'(-1) for the generating function of the refinement (whose
    f-vector comes from the Stirling operator, not from refining)."""
    if G.is_empty:
        return (0, 0, 0)
    L = connection_matrix(G)
    g = green_inverse(G) if green is None else green
    a = int(np.trace(L) - np.trace(g))
    b = sum(sphere_euler(G, x) for x in G.simplices)
    f1 = stirling_apply(stirling_matrix(G.max_dim()), G.f_vector())
    # f(t) = 1 + sum v_k t^(k+1):  f'(0) = v_0,  f'(-1) = sum (k+1) v_k (-1)^k
    c = f1[0] - sum((k + 1) * v * (-1) ** k for k, v in enumerate(f1))
    return (a, b, c)


def spectral_symmetry_check(G: Complex) -> bool:
    """dim-1 complexes: L^2 and L^-2 are isospectral (exact characteristic
    polynomial equality), hence the connection zeta function is even."""
    if G.max_dim() != 1:
        raise ValueError("spectral symmetry needs a one-dimensional complex")
    L = connection_matrix(G).astype(object)
    g = green_inverse(G).astype(object)
    return berkowitz_charpoly(L @ L) == berkowitz_charpoly(g @ g)
