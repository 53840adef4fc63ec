"""Simplicial cohomology (exterior derivative, Dirac/Hodge operators, Betti
numbers), Lefschetz fixed points, Kuenneth for the strong ring, quadratic
(interaction) cohomology whose Euler characteristic is the Wu characteristic,
Alexander duality, and the Stokes pairing.

Orientations come from the global vertex order: each simplex is its sorted
vertex tuple, and all signs are parities of sorting permutations.  Exact
ranks (fraction-free elimination) drive every Betti number; floating point
appears only in the explicitly numeric checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Complex, close, parity
from .errors import InvariantViolation, ResourceLimitError
from .exact import rank_exact
from .generators import product_cells, ring_product_complex
from .refinement import refinement_order

DEFAULT_PAIR_CAP = 4500


# -- chain complex ------------------------------------------------------------


@dataclass
class ChainComplexData:
    """Signed incidence matrices d_k: Lambda^k -> Lambda^(k+1) (shape
    v_{k+1} x v_k) together with the simplex bases per degree."""

    bases: list  # bases[k] = list of k-simplices, canonical order
    d: list      # d[k] = np int64 array, shape (len(bases[k+1]), len(bases[k]))

    @property
    def dims(self) -> tuple:
        return tuple(len(b) for b in self.bases)


def exterior_derivative(G: Complex) -> ChainComplexData:
    """Build all d_k; verifies d_{k+1} d_k = 0 at construction."""
    r = G.max_dim()
    bases = [G.simplices_of_dim(k) for k in range(r + 1)]
    index = [{x: i for i, x in enumerate(b)} for b in bases]
    d = []
    for k in range(r):
        mat = np.zeros((len(bases[k + 1]), len(bases[k])), dtype=np.int64)
        for row, y in enumerate(bases[k + 1]):
            for pos in range(len(y)):
                face = y[:pos] + y[pos + 1:]
                mat[row, index[k][face]] = (-1) ** pos
        d.append(mat)
    for k in range(len(d) - 1):
        if (d[k + 1] @ d[k]).any():
            raise InvariantViolation("dd != 0", witness={"degree": k})
    return ChainComplexData(bases=bases, d=d)


def dirac(G: Complex, data: ChainComplexData | None = None) -> np.ndarray:
    """D = d + d^T as one n x n integer matrix in the canonical basis."""
    data = data or exterior_derivative(G)
    elems = refinement_order(G)
    index = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    D = np.zeros((n, n), dtype=np.int64)
    for k, mat in enumerate(data.d):
        for (row, col) in zip(*np.nonzero(mat)):
            i = index[data.bases[k + 1][row]]
            j = index[data.bases[k][col]]
            D[i, j] = mat[row, col]
            D[j, i] = mat[row, col]
    return D


def hodge(G: Complex, data: ChainComplexData | None = None) -> np.ndarray:
    D = dirac(G, data)
    return D @ D


def hodge_blocks(G: Complex, data: ChainComplexData | None = None) -> list:
    """H restricted to each degree: H_k = d_k^T d_k + d_{k-1} d_{k-1}^T."""
    data = data or exterior_derivative(G)
    blocks = []
    for k, base in enumerate(data.bases):
        n = len(base)
        H = np.zeros((n, n), dtype=np.int64)
        if k < len(data.d):
            H += data.d[k].T @ data.d[k]
        if k >= 1:
            H += data.d[k - 1] @ data.d[k - 1].T
        blocks.append(H)
    return blocks


# -- Betti numbers ------------------------------------------------------------


@dataclass
class CohomologyReport:
    betti: tuple
    poincare_poly: tuple  # coefficients b_0, b_1, ...
    euler_poly: tuple     # coefficients v_0, v_1, ...

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def betti(G: Complex, data: ChainComplexData | None = None) -> CohomologyReport:
    """b_k = v_k - rank(d_k) - rank(d_{k-1}) with exact integer ranks."""
    if G.is_empty:
        return CohomologyReport(betti=(), poincare_poly=(), euler_poly=())
    data = data or exterior_derivative(G)
    dims = data.dims
    ranks = [rank_exact(m) for m in data.d]
    out = []
    for k, v in enumerate(dims):
        b = v
        if k < len(ranks):
            b -= ranks[k]
        if k >= 1:
            b -= ranks[k - 1]
        out.append(b)
    return CohomologyReport(
        betti=tuple(out), poincare_poly=tuple(out), euler_poly=dims
    )


def betti_numeric(G: Complex, tol: float = 1e-8) -> tuple:
    """Kernel dimensions of the numeric Hodge blocks (eigenvalues below tol);
    the floating cross-check of the exact ranks."""
    out = []
    for H in hodge_blocks(G):
        if len(H) == 0:
            out.append(0)
            continue
        vals = np.linalg.eigvalsh(H.astype(float))
        out.append(int((vals < tol).sum()))
    return tuple(out)


def mckean_singer(G: Complex, ts=(0.1, 1.0, 10.0), kmax: int = 6) -> dict:
    """Supertraces of Hodge powers: str(H^k) = 0 exactly for 1 <= k <= kmax,
    and str(exp(-t H)) = chi(G) within 1e-8 on the t grid."""
    elems = refinement_order(G)
    w = np.array([parity(x) for x in elems], dtype=np.int64)
    H = hodge(G)
    chi = G.euler_characteristic()
    # int64 is safe while the power's entries stay below the row-sum bound
    bound = int(np.abs(H).sum(axis=1).max()) or 1
    if bound ** kmax >= (1 << 62):
        H = H.astype(object)
        w = w.astype(object)
    power = np.eye(len(elems), dtype=H.dtype)
    exact_ok = True
    for _ in range(kmax):
        power = power @ H
        if int((w * np.diag(power)).sum()) != 0:
            exact_ok = False
            break
    max_err = 0.0
    spectra = [np.linalg.eigvalsh(blk.astype(float)) for blk in hodge_blocks(G)]
    for t in ts:
        total = 0.0
        for k, vals in enumerate(spectra):
            if len(vals):
                total += (-1) ** k * np.exp(-t * vals).sum()
        max_err = max(max_err, abs(total - chi))
    return {"exact_zero_powers": exact_ok, "numeric_max_err": max_err, "chi": chi}


# -- Lefschetz ---------------------------------------------------------------


def simplex_image(x, perm: dict) -> tuple:
    return tuple(sorted(perm[v] for v in x))


def permutation_sign_on(x, perm: dict) -> int:
    """Parity of the reordering the vertex map induces on the simplex."""
    imgs = [perm[v] for v in x]
    sign = 1
    for i in range(len(imgs)):
        for j in range(i + 1, len(imgs)):
            if imgs[i] > imgs[j]:
                sign = -sign
    return sign


def is_automorphism(G: Complex, perm: dict) -> bool:
    verts = G.vertices()
    if sorted(perm) != list(verts) or sorted(perm.values()) != list(verts):
        return False
    return all(simplex_image(x, perm) in G.simplices for x in G.simplices)


def automorphisms(G: Complex, cap: int = 8) -> list:
    """All simplicial automorphisms, by brute force over vertex permutations
    (vertex count capped)."""
    verts = G.vertices()
    if len(verts) > cap:
        raise ResourceLimitError(f"automorphism search capped at {cap} vertices")
    out = []
    for img in itertools.permutations(verts):
        perm = dict(zip(verts, img))
        if is_automorphism(G, perm):
            out.append(perm)
    return out


def _kernel_basis(mat: list, ncols: int) -> list:
    """Basis of ker over Q as Fraction column vectors (list of lists)."""
    rows = [[Fraction(v) for v in row] for row in mat]
    nrows = len(rows)
    piv_of_col = {}
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        f = rows[rank][c]
        rows[rank] = [v / f for v in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][c] != 0:
                g = rows[r][c]
                rows[r] = [a - g * b for a, b in zip(rows[r], rows[rank])]
        piv_of_col[c] = rank
        rank += 1
    free = [c for c in range(ncols) if c not in piv_of_col]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for c, r in piv_of_col.items():
            vec[c] = -rows[r][fc]
        basis.append(vec)
    return basis


def _solve_exact(columns: list, target: list) -> list:
    """Solve sum_i a_i columns[i] = target over Q; raises if inconsistent."""
    ncols = len(columns)
    nrows = len(target)
    A = [[columns[c][r] for c in range(ncols)] + [target[r]] for r in range(nrows)]
    piv_cols = []
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        f = A[rank][c]
        A[rank] = [v / f for v in A[rank]]
        for r in range(nrows):
            if r != rank and A[r][c] != 0:
                g = A[r][c]
                A[r] = [x - g * y for x, y in zip(A[r], A[rank])]
        piv_cols.append(c)
        rank += 1
    for r in range(rank, nrows):
        if A[r][-1] != 0:
            raise ArithmeticError("inconsistent system")
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(piv_cols):
        sol[c] = A[r][-1]
    return sol


def _cohomology_bases(data: ChainComplexData, k: int) -> tuple:
    """(image basis of d_{k-1}, representative basis of H^k) as Fraction
    column vectors in Lambda^k."""
    nk = len(data.bases[k])
    if k < len(data.d):
        dk = data.d[k].tolist()
    else:
        dk = [[0] * nk]
    kernel = _kernel_basis(dk, nk)
    image = []
    if k >= 1:
        prev = data.d[k - 1]
        cols = [[Fraction(int(prev[r, c])) for r in range(prev.shape[0])]
                for c in range(prev.shape[1])]
        # independent columns via elimination
        image = _independent_columns(cols)
    reps = _complete_basis(image, kernel)
    return image, reps


def _independent_columns(cols: list) -> list:
    out = []
    rows = []
    for col in cols:
        cand = rows + [list(col)]
        if _row_rank(cand) > len(out):
            out.append(col)
            rows = [list(c) for c in out]
    return out


def _row_rank(rows: list) -> int:
    M = [[Fraction(v) for v in row] for row in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        f = M[rank][c]
        M[rank] = [v / f for v in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                g = M[r][c]
                M[r] = [a - g * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def _complete_basis(image: list, kernel: list) -> list:
    """Kernel vectors extending the image to a basis of the kernel: the
    chosen representatives of H^k."""
    reps = []
    base = [list(v) for v in image]
    current_rank = _row_rank(base)
    for vec in kernel:
        cand = base + [list(vec)]
        r = _row_rank(cand)
        if r > current_rank:
            reps.append(vec)
            base = cand
            current_rank = r
    return reps


def induced_cohomology_matrices(G: Complex, perm: dict,
                                data: ChainComplexData | None = None) -> list:
    """Matrix of the pullback on each H^k in the chosen representative
    bases, over exact rationals."""
    data = data or exterior_derivative(G)
    out = []
    for k, base in enumerate(data.bases):
        index = {x: i for i, x in enumerate(base)}
        image, reps = _cohomology_bases(data, k)
        if not reps:
            out.append([])
            continue
        cols = [list(c) for c in image] + [list(r) for r in reps]
        mat = []
        for rep in reps:
            pulled = [Fraction(0)] * len(base)
            for i, x in enumerate(base):
                if rep[i] == 0:
                    continue
                # pushforward of basis cochain: T# e_x = sign * e_{T(x)}
                img = simplex_image(x, perm)
                pulled[index[img]] += permutation_sign_on(x, perm) * rep[i]
            coeffs = _solve_exact(cols, pulled)
            mat.append(coeffs[len(image):])
        out.append([[mat[j][i] for j in range(len(reps))] for i in range(len(reps))])
    return out


def lefschetz(G: Complex, perm: dict) -> dict:
    """Cohomological Lefschetz number vs the fixed-point parity sum.

    The cohomological side is the alternating sum of traces of the induced
    maps on H^k; the combinatorial side sums parity(x) sign(T|x) over the
    set-fixed simplices.  The two agree for every simplicial automorphism."""
    if not is_automorphism(G, perm):
        raise ValueError("not a simplicial automorphism")
    mats = induced_cohomology_matrices(G, perm)
    coh = Fraction(0)
    for k, m in enumerate(mats):
        tr = sum(m[i][i] for i in range(len(m))) if m else Fraction(0)
        coh += (-1) ** k * tr
    fixed = 0
    for x in G.simplices:
        if simplex_image(x, perm) == x:
            fixed += parity(x) * permutation_sign_on(x, perm)
    if coh.denominator != 1:
        raise InvariantViolation("non-integer Lefschetz trace", witness=str(coh))
    return {"cohomological": int(coh), "fixed_point_sum": fixed}


# -- Kuenneth / strong ring ----------------------------------------------------


def _grade_sign_matrix(bases: list) -> np.ndarray:
    signs = []
    for k, b in enumerate(bases):
        signs.extend([(-1) ** k] * len(b))
    return np.diag(np.array(signs, dtype=np.int64))


def _stacked_d(data: ChainComplexData) -> np.ndarray:
    """The full derivative as one n x n matrix (blocks under the diagonal)."""
    n = sum(data.dims)
    offs = np.cumsum([0] + list(data.dims))
    d = np.zeros((n, n), dtype=np.int64)
    for k, mat in enumerate(data.d):
        d[offs[k + 1]:offs[k + 2], offs[k]:offs[k + 1]] = mat
    return d


def product_connection_matrix(A: Complex, B: Complex) -> np.ndarray:
    """Connection matrix of the product cells, built from the geometry:
    (x,y) and (x',y') intersect iff both coordinates intersect."""
    cells = product_cells(A, B)
    n = len(cells)
    out = np.zeros((n, n), dtype=np.int64)
    for i, (x, y) in enumerate(cells):
        sx, sy = set(x), set(y)
        for j, (u, v) in enumerate(cells):
            if sx & set(u) and sy & set(v):
                out[i, j] = 1
    return out


def kuenneth_check(A: Complex, B: Complex, tol: float = 1e-6,
                   cell_cap: int = 20000) -> dict:
    """The ring homomorphism and spectral statements for A x B:

    * Poincare polynomial of the product order complex = product of factor
      Poincare polynomials (exact Betti numbers).
    * Euler polynomial on cells is the product of factor Euler polynomials.
    * Connection matrix of the cells equals kron(L_A, L_B) exactly, so the
      connection spectra multiply.
    * Hodge operator of the product complex equals
      kron(H_A, I) + kron(I, H_B) exactly (graded tensor derivative), so the
      Hodge spectra add; the numeric spectra are compared as multisets.
    """
    from .connection import connection_matrix

    if len(A) * len(B) > cell_cap:
        raise ResourceLimitError("product cell count exceeds cap")
    pa = betti(A).poincare_poly
    pb = betti(B).poincare_poly
    prod = ring_product_complex(A, B)
    pprod = betti(prod).poincare_poly
    expect = _poly_mul_int(pa, pb)
    poincare_ok = _trim(pprod) == _trim(expect)

    ea = A.f_vector()
    eb = B.f_vector()
    cells = product_cells(A, B)
    cell_counts = {}
    for (x, y) in cells:
        k = len(x) + len(y) - 2
        cell_counts[k] = cell_counts.get(k, 0) + 1
    eprod = tuple(cell_counts.get(k, 0) for k in range(max(cell_counts) + 1)) if cells else ()
    euler_ok = _trim(eprod) == _trim(_poly_mul_int(ea, eb))

    La = connection_matrix(A)
    Lb = connection_matrix(B)
    Lprod = product_connection_matrix(A, B)
    # product_cells iterates x-major in canonical order, which is exactly
    # kron's row order
    kron_ok = np.array_equal(Lprod, np.kron(La, Lb))

    da = _stacked_d(exterior_derivative(A))
    db = _stacked_d(exterior_derivative(B))
    sa = _grade_sign_matrix(exterior_derivative(A).bases)
    na, nb = len(da), len(db)
    dprod = np.kron(da, np.eye(nb, dtype=np.int64)) + np.kron(sa, db)
    if (dprod @ dprod).any():
        raise InvariantViolation("product derivative does not square to zero")
    Dp = dprod + dprod.T
    Hp = Dp @ Dp
    Ha = dirac(A) @ dirac(A)
    Hb = dirac(B) @ dirac(B)
    hodge_kron_ok = np.array_equal(
        Hp,
        np.kron(Ha, np.eye(nb, dtype=np.int64))
        + np.kron(np.eye(na, dtype=np.int64), Hb),
    )

    va = np.linalg.eigvalsh(Ha.astype(float))
    vb = np.linalg.eigvalsh(Hb.astype(float))
    sums = np.sort((va[:, None] + vb[None, :]).ravel())
    vp = np.linalg.eigvalsh(Hp.astype(float))
    hodge_spec_err = float(np.abs(vp - sums).max())

    ca = np.linalg.eigvalsh(La.astype(float))
    cb = np.linalg.eigvalsh(Lb.astype(float))
    prods = np.sort((ca[:, None] * cb[None, :]).ravel())
    cp = np.sort(np.linalg.eigvalsh(np.kron(La, Lb).astype(float)))
    conn_spec_err = float(np.abs(cp - prods).max())

    return {
        "poincare_ok": poincare_ok,
        "euler_ok": euler_ok,
        "connection_kron_ok": bool(kron_ok),
        "hodge_kron_ok": bool(hodge_kron_ok),
        "hodge_spectrum_err": hodge_spec_err,
        "connection_spectrum_err": conn_spec_err,
        "ok": bool(
            poincare_ok
            and euler_ok
            and kron_ok
            and hodge_kron_ok
            and hodge_spec_err < tol
            and conn_spec_err < tol
        ),
    }


def _poly_mul_int(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _trim(t):
    t = list(t)
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


# -- interaction (quadratic) cohomology ----------------------------------------


def interaction_pairs(G: Complex) -> list:
    """Ordered intersecting pairs (x, y), graded by dim x + dim y; both
    (x, y) and (y, x) appear when x != y."""
    elems = refinement_order(G)
    sets = [set(x) for x in elems]
    pairs = []
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            if sets[i] & sets[j]:
                pairs.append((x, y))
    pairs.sort(key=lambda p: (len(p[0]) + len(p[1]), p))
    return pairs


def interaction_derivative(G: Complex, pair_cap: int = DEFAULT_PAIR_CAP) -> tuple:
    """(bases per degree, matrices d_p) of the pair derivative
    df(x,y) = f(dx, y) + (-1)^dim(x) f(x, dy), terms whose face no longer
    meets the partner dropped.  dd = 0 is verified."""
    pairs = interaction_pairs(G)
    if len(pairs) > pair_cap:
        raise ResourceLimitError(
            f"{len(pairs)} interacting pairs exceed cap {pair_cap}"
        )
    top = max((len(x) + len(y) - 2 for x, y in pairs), default=-1)
    bases = [[] for _ in range(top + 1)]
    for p in pairs:
        bases[len(p[0]) + len(p[1]) - 2].append(p)
    index = [{p: i for i, p in enumerate(b)} for b in bases]
    mats = []
    for k in range(top):
        mat = np.zeros((len(bases[k + 1]), len(bases[k])), dtype=np.int64)
        for row, (x, y) in enumerate(bases[k + 1]):
            sy = set(y)
            for pos in range(len(x)):
                face = x[:pos] + x[pos + 1:]
                if set(face) & sy:
                    mat[row, index[k][(face, y)]] += (-1) ** pos
            sgn = (-1) ** (len(x) - 1)
            sx = set(x)
            for pos in range(len(y)):
                face = y[:pos] + y[pos + 1:]
                if sx & set(face):
                    mat[row, index[k][(x, face)]] += sgn * (-1) ** pos
        mats.append(mat)
    for k in range(len(mats) - 1):
        if (mats[k + 1] @ mats[k]).any():
            raise InvariantViolation("interaction dd != 0", witness={"degree": k})
    return bases, mats


def interaction_cohomology(G: Complex, pair_cap: int = DEFAULT_PAIR_CAP) -> CohomologyReport:
    """Quadratic Betti numbers; their alternating sum is the Wu
    characteristic."""
    if G.is_empty:
        return CohomologyReport(betti=(), poincare_poly=(), euler_poly=())
    bases, mats = interaction_derivative(G, pair_cap=pair_cap)
    dims = tuple(len(b) for b in bases)
    ranks = [rank_exact(m) for m in mats]
    out = []
    for k, v in enumerate(dims):
        b = v
        if k < len(ranks):
            b -= ranks[k]
        if k >= 1:
            b -= ranks[k - 1]
        out.append(b)
    return CohomologyReport(betti=tuple(out), poincare_poly=tuple(out), euler_poly=dims)


def wu_gauss_bonnet(G: Complex) -> dict:
    """Per-vertex curvature K(v) = sum over x containing v, y meeting x of
    parity(x) parity(y) / |x|; sums exactly to the Wu characteristic."""
    from .core import up_star_weights

    U = up_star_weights(G)
    curv = {v: Fraction(0) for v in G.vertices()}
    for x in G.simplices:
        # signed count of the simplices meeting x, by inclusion-exclusion
        w = 0
        for k in range(1, len(x) + 1):
            for s in itertools.combinations(x, k):
                w += (-1) ** (k + 1) * U[s]
        share = Fraction(parity(x) * w, len(x))
        for v in x:
            curv[v] += share
    return curv


# -- Alexander duality ---------------------------------------------------------


def alexander_dual(G: Complex, vertices) -> Complex:
    """{x proper nonempty subset of V : complement of x not in G}."""
    V = tuple(sorted(set(vertices)))
    if not set(G.vertices()).issubset(V):
        raise ValueError("ground set must contain the complex's vertices")
    if len(V) > 16:
        raise ResourceLimitError("Alexander dual capped at 16 ground vertices")
    out = []
    for k in range(1, len(V)):
        for x in itertools.combinations(V, k):
            comp = tuple(v for v in V if v not in x)
            if comp not in G.simplices:
                out.append(x)
    return Complex(out, _closed=True)


def reduced_betti(G: Complex) -> dict:
    """Reduced Betti numbers as a map degree -> value, with the convention
    that the empty complex has one unit in degree -1."""
    if G.is_empty:
        return {-1: 1}
    rep = betti(G)
    out = {}
    for k, b in enumerate(rep.betti):
        v = b - 1 if k == 0 else b
        if v:
            out[k] = v
    return out


def alexander_duality_check(G: Complex, vertices) -> dict:
    """Reduced Betti duality b~_k(G*) = b~_(n-3-k)(G) across all degrees."""
    V = tuple(sorted(set(vertices)))
    n = len(V)
    dual = alexander_dual(G, V)
    bg = reduced_betti(G)
    bd = reduced_betti(dual)
    lo = -1
    hi = n
    ok = all(bd.get(k, 0) == bg.get(n - 3 - k, 0) for k in range(lo, hi))
    return {"ok": ok, "dual": dual, "reduced_G": bg, "reduced_dual": bd}


# -- Stokes --------------------------------------------------------------------


def stokes_pairing(G: Complex, k: int, form, chain) -> tuple:
    """(dF(A), F(dA)) for a k-form F and a (k+1)-chain A, in the oriented
    bases; the two integers agree (the derivative is the transpose of the
    boundary)."""
    data = exterior_derivative(G)
    if k < 0 or k >= len(data.bases) - 1:
        raise ValueError("no (k+1)-simplices for this k")
    dk = data.d[k]
    form = list(form)
    chain = list(chain)
    if len(form) != dk.shape[1] or len(chain) != dk.shape[0]:
        raise ValueError("coefficient vector lengths do not match the bases")
    dF = dk @ np.array(form, dtype=np.int64)
    lhs = int(dF @ np.array(chain, dtype=np.int64))
    dA = dk.T @ np.array(chain, dtype=np.int64)
    rhs = int(np.array(form, dtype=np.int64) @ dA)
    return lhs, rhs
