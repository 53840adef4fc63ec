"""Exact dense linear algebra over the integers and rationals.

Everything here certifies bit-exact results: fraction-free (Bareiss)
elimination for determinants and ranks, integer Gauss-Jordan for inverses of
matrices with unit leading minors, the Berkowitz division-free characteristic
polynomial, and eigenvalue sign counts.  numpy arrays are used as carriers
(int64 fast path with automatic promotion to Python big-int object arrays on
overflow risk); no floating point enters any code path in this module.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import InvariantViolation

INT64_GUARD = 1 << 30  # promote to objects before products can overflow


def as_int_matrix(rows) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a


def _promote(a: np.ndarray) -> np.ndarray:
    return a.astype(object)


def bareiss_det(M) -> int:
    """Exact determinant by fraction-free elimination with row pivoting."""
    A = np.array(M)
    n, m = A.shape
    if n != m:
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    if A.dtype != object:
        A = A.astype(np.int64)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k, k] == 0:
            pivots = np.nonzero(A[k + 1:, k])[0]
            if len(pivots) == 0:
                return 0
            r = k + 1 + pivots[0]
            A[[k, r]] = A[[r, k]]
            sign = -sign
        if A.dtype != object:
            top = max(int(np.abs(A[k:, k:]).max()), 1)
            if top >= INT64_GUARD:
                A = _promote(A)
        sub = A[k + 1:, k + 1:]
        A[k + 1:, k + 1:] = (
            sub * A[k, k] - np.outer(A[k + 1:, k], A[k, k + 1:])
        ) // prev
        prev = A[k, k]
    return sign * int(A[n - 1, n - 1])


def leading_minor_signs(M) -> list:
    """Signs of the leading principal minors Delta_1..Delta_n, computed from
    the Bareiss pivots.  Raises on a zero pivot (the minor-sign inertia rule
    then does not apply)."""
    A = np.array(M)
    n = A.shape[0]
    if A.dtype != object:
        A = A.astype(np.int64)
    prev = 1
    signs = []
    for k in range(n):
        piv = int(A[k, k])
        if piv == 0:
            raise ZeroDivisionError(f"zero leading principal minor at order {k + 1}")
        signs.append(1 if piv > 0 else -1)
        if k == n - 1:
            break
        if A.dtype != object:
            top = max(int(np.abs(A[k:, k:]).max()), 1)
            if top >= INT64_GUARD:
                A = _promote(A)
        sub = A[k + 1:, k + 1:]
        A[k + 1:, k + 1:] = (
            sub * piv - np.outer(A[k + 1:, k], A[k, k + 1:])
        ) // prev
        prev = piv
    return signs


def det_exact(M):
    """Exact determinant: Bareiss over the integers, rational elimination
    when any entry is a Fraction."""
    rows = [list(r) for r in (M.tolist() if isinstance(M, np.ndarray) else M)]
    if any(isinstance(v, Fraction) and v.denominator != 1 for r in rows for v in r):
        return _det_fraction(rows)
    return bareiss_det(np.array(rows, dtype=object))


def _det_fraction(rows) -> Fraction:
    A = [[Fraction(v) for v in row] for row in rows]
    n = len(A)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if A[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        inv = A[k][k]
        for r in range(k + 1, n):
            if A[r][k] != 0:
                f = A[r][k] / inv
                A[r] = [a - f * b for a, b in zip(A[r], A[k])]
    return det


def det_cofactor(M) -> int:
    """Naive cofactor-expansion determinant; the small-matrix oracle."""
    A = [list(map(int, row)) for row in M]
    n = len(A)

    def rec(rows, cols):
        if len(cols) == 1:
            return A[rows[0]][cols[0]]
        total = 0
        r = rows[0]
        rest = rows[1:]
        for i, c in enumerate(cols):
            if A[r][c] == 0:
                continue
            sub = cols[:i] + cols[i + 1:]
            total += (-1) ** i * A[r][c] * rec(rest, sub)
        return total

    if n == 0:
        return 1
    return rec(tuple(range(n)), tuple(range(n)))


def integer_inverse(M) -> np.ndarray:
    """Exact inverse of an integer matrix with all leading principal minors
    equal to +-1 (e.g. connection matrices in canonical order): plain integer
    Gauss-Jordan, every pivot is a unit.  Falls back to rational elimination
    (and verifies integrality of the result) when a non-unit pivot shows up.
    """
    L = np.array(M, dtype=np.int64)
    n = L.shape[0]
    A = np.concatenate([L, np.eye(n, dtype=np.int64)], axis=1)
    for k in range(n):
        p = int(A[k, k])
        if p not in (1, -1):
            return _integer_inverse_general(L)
        if p == -1:
            A[k] = -A[k]
        col = A[:, k].copy()
        col[k] = 0
        if A.dtype != object:
            top = max(int(np.abs(col).max()) * int(np.abs(A[k]).max()), 1)
            if top >= (1 << 61):
                A = _promote(A)
                col = A[:, k].copy()
                col[k] = 0
        A -= np.outer(col, A[k])
    return A[:, n:]


def _integer_inverse_general(L: np.ndarray) -> np.ndarray:
    inv = fraction_inverse(L.tolist())
    n = len(inv)
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            q = inv[i][j]
            if q.denominator != 1:
                raise InvariantViolation(
                    "inverse is not integral", witness={"entry": (i, j, str(q))}
                )
            out[i, j] = int(q)
    return out


def fraction_inverse(rows) -> list:
    """Rational Gauss-Jordan inverse with partial pivoting."""
    n = len(rows)
    A = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for k in range(n):
        piv = None
        for r in range(k, n):
            if A[r][k] != 0:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        A[k], A[piv] = A[piv], A[k]
        f = A[k][k]
        A[k] = [v / f for v in A[k]]
        for r in range(n):
            if r != k and A[r][k] != 0:
                f = A[r][k]
                A[r] = [a - f * b for a, b in zip(A[r], A[k])]
    return [row[n:] for row in A]


def rank_exact(M) -> int:
    """Rank over the rationals by fraction-free row echelon."""
    A = np.array(M)
    if A.size == 0:
        return 0
    if A.dtype != object:
        A = A.astype(np.int64)
    rows, cols = A.shape
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivots = np.nonzero(A[rank:, c])[0]
        if len(pivots) == 0:
            continue
        r = rank + pivots[0]
        if r != rank:
            A[[rank, r]] = A[[r, rank]]
        if A.dtype != object:
            top = max(int(np.abs(A[rank:, c:]).max()), 1)
            if top * top >= (1 << 62) // max(rows, 1):
                A = _promote(A)
        piv = A[rank, c]
        sub = A[rank + 1:, c + 1:]
        A[rank + 1:, c + 1:] = (
            sub * piv - np.outer(A[rank + 1:, c], A[rank, c + 1:])
        ) // prev
        A[rank + 1:, c] = 0
        prev = piv
        rank += 1
    return rank


def rank_fraction(rows) -> int:
    """Rational-elimination rank; independent oracle for rank_exact."""
    A = [[Fraction(v) for v in row] for row in rows]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
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
                A[r] = [a - g * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


# -- characteristic polynomial and inertia ----------------------------------


def berkowitz_charpoly(M) -> list:
    """Coefficients [1, c_1, ..., c_n] of det(x*I - M) in descending powers,
    computed division-free over exact integers (Berkowitz).
    """
    A = np.array(M, dtype=object)
    n = A.shape[0]
    if n == 0:
        return [1]
    if A.shape[0] != A.shape[1]:
        raise ValueError("characteristic polynomial needs a square matrix")
    # vector of char poly coefficients of the r x r leading block
    v = np.array([1, -A[0, 0]], dtype=object)
    for r in range(1, n):
        Ar = A[:r, :r]
        R = A[r, :r]
        S = A[:r, r]
        # column of the (r+2) x (r+1) Toeplitz factor
        q = [1, -A[r, r]]
        s = S
        for _ in range(r):
            q.append(-(R @ s))
            s = Ar @ s
        # truncated convolution: v_new = T q v with T the lower-banded Toeplitz
        new = np.zeros(r + 2, dtype=object)
        for i, qi in enumerate(q):
            if qi == 0 or i >= r + 2:
                continue
            end = min(i + len(v), r + 2)
            new[i:end] += qi * v[: end - i]
        v = new
    return [int(c) for c in v]


def charpoly_oracle(M) -> list:
    """Characteristic polynomial by cofactor expansion over Z[x]; only for
    small matrices, used to validate berkowitz_charpoly."""
    n = len(M)

    def pmul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def padd(a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] += y
        return out

    # entries of xI - M as coefficient lists (ascending powers)
    E = [[([int(-M[i][j])] if i != j else [int(-M[i][j]), 1]) for j in range(n)]
         for i in range(n)]

    def rec(rows, cols):
        if len(cols) == 1:
            return E[rows[0]][cols[0]]
        total = [0]
        r = rows[0]
        for i, c in enumerate(cols):
            term = pmul(E[r][c], rec(rows[1:], cols[:i] + cols[i + 1:]))
            if i % 2:
                term = [-t for t in term]
            total = padd(total, term)
        return total

    p = rec(tuple(range(n)), tuple(range(n))) if n else [1]
    return list(reversed([int(c) for c in p]))  # descending powers


def descartes_positive_roots(coeffs_desc) -> int:
    """Number of strictly positive roots of a real-rooted polynomial, by the
    sign-change count of its coefficients (exact for real-rooted input)."""
    signs = [1 if c > 0 else -1 for c in coeffs_desc if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia_from_charpoly(coeffs_desc) -> tuple:
    """(positive, negative, zero) eigenvalue counts of a symmetric matrix
    from its characteristic polynomial det(xI - M)."""
    n = len(coeffs_desc) - 1
    # strip zero roots: trailing zero coefficients
    z = 0
    trimmed = list(coeffs_desc)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
        z += 1
    p = descartes_positive_roots(trimmed)
    # negative roots: substitute x -> -x, i.e. flip signs of odd-degree coeffs
    deg = len(trimmed) - 1
    flipped = [c if (deg - i) % 2 == 0 else -c for i, c in enumerate(trimmed)]
    m = descartes_positive_roots(flipped)
    if p + m + z != n:
        raise InvariantViolation(
            "sign counts inconsistent (input not real-rooted?)",
            witness={"p": p, "n": m, "z": z, "order": n},
        )
    return p, m, z


def inertia_exact(M, berkowitz_cap: int = 400) -> tuple:
    """Exact (positive, negative, zero) signature of a symmetric matrix.

    Berkowitz + Descartes up to berkowitz_cap; above that, the Jacobi
    sign-change rule on leading principal minors (valid only when all of them
    are nonzero, as for connection matrices in canonical order; raises
    ZeroDivisionError otherwise so callers can decide).
    """
    A = np.array(M)
    n = A.shape[0]
    if A.shape[0] != A.shape[1]:
        raise ValueError("inertia needs a square matrix")
    if not _is_symmetric(A):
        raise ValueError("inertia_exact needs a symmetric matrix")
    if n <= berkowitz_cap:
        return inertia_from_charpoly(berkowitz_charpoly(A))
    return inertia_via_minor_signs(A)


def inertia_via_minor_signs(M) -> tuple:
    """Signature from the sign changes in (1, Delta_1, ..., Delta_n)."""
    signs = [1] + leading_minor_signs(M)
    neg = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    n = len(signs) - 1
    return n - neg, neg, 0


def _is_symmetric(A: np.ndarray) -> bool:
    return A.shape[0] == A.shape[1] and (A == A.T).all()


def charpoly_eval(coeffs_desc, x):
    acc = 0
    for c in coeffs_desc:
        acc = acc * x + c
    return acc


def cauchy_binet_coeffs(F, G, minor_cap: int = 8) -> list:
    """Characteristic-polynomial coefficients p_k of F^T G with
    p(x) = sum_k p_k (-x)^(m-k), computed via Berkowitz and, when both
    dimensions are within minor_cap, cross-checked against the minor-sum
    sum over |P|=k of det(F_P) det(G_P)."""
    F = np.array(F, dtype=object)
    G = np.array(G, dtype=object)
    if F.shape != G.shape:
        raise ValueError("F and G must have identical shape")
    n, m = F.shape
    cp = berkowitz_charpoly(F.T @ G)  # descending: x^m + c1 x^(m-1) + ...
    # det(xI - A) = sum_k p_k (-1)^k x^(m-k) * (-1)^m ... normalize:
    # p_k = (-1)^k * coefficient of x^(m-k)
    pk = [(-1) ** k * cp[k] for k in range(m + 1)]
    if n <= minor_cap and m <= minor_cap:
        brute = minor_sum_coeffs(F, G)
        if brute != pk:
            raise InvariantViolation(
                "Cauchy-Binet mismatch", witness={"charpoly": pk, "minors": brute}
            )
    return pk


def minor_sum_coeffs(F, G) -> list:
    """sum over k-minors of det(F_P)det(G_P), for k = 0..m (brute force)."""
    F = np.array(F, dtype=object)
    G = np.array(G, dtype=object)
    n, m = F.shape
    out = [1]
    for k in range(1, m + 1):
        total = 0
        if k <= n:
            for rows in itertools.combinations(range(n), k):
                for cols in itertools.combinations(range(m), k):
                    fp = F[np.ix_(rows, cols)]
                    gp = G[np.ix_(rows, cols)]
                    total += det_cofactor(fp.tolist()) * det_cofactor(gp.tolist())
        out.append(total)
    return out
