from math import comb, factorial

import pytest

import simplexion as sx
from simplexion.errors import ResourceLimitError
from simplexion.refinement import (
    order_complex,
    predicted_refinement_fvector,
    refinement_order,
)


def stirling2_formula(n, k):
    """Independent Stirling numbers: inclusion-exclusion over surjections."""
    if k == 0:
        return 1 if n == 0 else 0
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def test_barycentric_k2():
    b = sx.barycentric(sx.close([(0, 1)]))
    assert b.f_vector() == (3, 2)


def test_barycentric_k3():
    b = sx.barycentric(sx.close([(0, 1, 2)]))
    assert b.f_vector() == (7, 12, 6)


def test_barycentric_preserves_euler(corpus):
    for _, G in corpus:
        if len(G) > 100:
            continue
        assert sx.barycentric(G).euler_characteristic() == G.euler_characteristic()


def test_barycentric_empty():
    assert sx.barycentric(sx.Complex()).is_empty


def test_barycentric_commutes_with_union():
    A, B = sx.cycle(4), sx.close([(0, 1, 2)])
    left = sx.barycentric(sx.disjoint_union(A, B))
    right = sx.disjoint_union(sx.barycentric(A), sx.barycentric(B))
    assert left.f_vector() == right.f_vector()
    assert left.euler_characteristic() == right.euler_characteristic()


def test_dimension_properly_colors_refinement_graph(corpus):
    # comparable simplices have different dimension, so dim is a proper
    # coloring of the containment graph (refinements are Eulerian)
    for _, G in corpus[:8]:
        if len(G) > 60:
            continue
        elems = refinement_order(G)
        b = sx.barycentric(G)
        for e in b.simplices:
            if len(e) == 2:
                assert len(elems[e[0]]) != len(elems[e[1]])


def test_dim1_refinement_bipartite_by_parity():
    # for one-dimensional complexes the containment graph is the edge
    # subdivision, bipartite with the dimension-parity classes (a vertex
    # inside a triangle of a 2-complex already breaks this, so the claim
    # is tested exactly where it is true)
    for G in (sx.cycle(4), sx.cycle(7), sx.close([(0, 1)]), sx.path(5)):
        elems = refinement_order(G)
        b = sx.barycentric(G)
        for e in b.simplices:
            if len(e) == 2:
                assert len(elems[e[0]]) % 2 != len(elems[e[1]]) % 2


def test_refinement_cap():
    with pytest.raises(ResourceLimitError):
        sx.barycentric(sx.cross_polytope(3), cap=10)


def test_stirling_matrix_entries():
    for r in range(7):
        S = sx.stirling_matrix(r)
        for x in range(1, r + 2):
            for y in range(1, r + 2):
                expected = stirling2_formula(y, x) * factorial(x)
                assert S[x - 1][y - 1] == expected
        # diagonal k!
        for k in range(1, r + 2):
            assert S[k - 1][k - 1] == factorial(k)


def test_stirling_apply_examples():
    assert sx.stirling_apply(sx.stirling_matrix(1), (2, 1)) == (3, 2)
    assert sx.stirling_apply(sx.stirling_matrix(2), (3, 3, 1)) == (7, 12, 6)


def test_stirling_matches_refinement(corpus):
    for _, G in corpus:
        if G.is_empty or len(G) > 120:
            continue
        S = sx.stirling_matrix(G.max_dim())
        assert sx.stirling_apply(S, G.f_vector()) == sx.barycentric(G).f_vector()


def test_stirling_two_levels():
    for G in (sx.close([(0, 1, 2)]), sx.cross_polytope(2)):
        b1 = sx.barycentric(G)
        b2 = sx.barycentric(b1)
        S = sx.stirling_matrix(G.max_dim())
        assert sx.stirling_apply(S, b1.f_vector()) == b2.f_vector()


def test_predicted_fvector(corpus):
    for _, G in corpus:
        if G.is_empty or len(G) > 120:
            continue
        assert predicted_refinement_fvector(G) == sx.barycentric(G).f_vector()


def test_euler_unique_vector():
    assert sx.euler_unique_vector(1) == [1, -1]
    assert sx.euler_unique_vector(3) == [1, -1, 1, -1]
    for r in range(7):
        vec = sx.euler_unique_vector(r)
        assert vec == [(-1) ** k for k in range(r + 1)]


def test_euler_vector_recovers_chi(corpus):
    for _, G in corpus:
        if G.is_empty:
            continue
        vec = sx.euler_unique_vector(6)
        f = G.f_vector()
        assert sum(a * b for a, b in zip(vec, f)) == G.euler_characteristic()


def test_connection_graph():
    k2 = sx.close([(0, 1)])
    labels, edges = sx.connection_graph(k2)
    assert labels == [(0,), (1,), (0, 1)]
    assert edges == [(0, 2), (1, 2)]
    pts = sx.close([(0,), (1,)])
    assert sx.connection_graph(pts)[1] == []
    assert sx.connection_graph(pts, dual=True)[1] == [(0, 1)]


def test_order_complex_general_poset():
    # divisor lattice of 12 under strict divisibility
    elems = [1, 2, 3, 4, 6, 12]
    oc = order_complex(elems, lambda a, b: a != b and b % a == 0)
    # chains: contractible poset with minimum -> chi = 1
    assert oc.euler_characteristic() == 1


def test_simplexion_cap_env(monkeypatch):
    monkeypatch.setenv("SIMPLEXION_CAP", "10")
    with pytest.raises(ResourceLimitError):
        sx.barycentric(sx.cross_polytope(2))
    monkeypatch.delenv("SIMPLEXION_CAP")
    assert len(sx.barycentric(sx.cross_polytope(2))) == 146
