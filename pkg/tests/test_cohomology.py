from fractions import Fraction

import numpy as np
import pytest

import simplexion as sx
from simplexion import cohomology as coh
from simplexion.exact import rank_exact
from simplexion.rng import SplitMix64


def test_exterior_derivative_k2():
    data = coh.exterior_derivative(sx.close([(0, 1)]))
    assert data.d[0].tolist() == [[-1, 1]]
    assert data.dims == (2, 1)


def test_gradient_rank_c4():
    data = coh.exterior_derivative(sx.cycle(4))
    assert rank_exact(data.d[0]) == 3


def test_dd_zero(corpus):
    for _, G in corpus:
        if G.is_empty or len(G) > 150:
            continue
        coh.exterior_derivative(G)  # raises on dd != 0


def test_betti_examples():
    assert coh.betti(sx.cycle(4)).betti == (1, 1)
    assert coh.betti(sx.cross_polytope(2)).betti == (1, 0, 1)
    assert coh.betti(sx.close([(0, 1, 2)])).betti == (1, 0, 0)
    assert coh.betti(sx.icosahedron()).betti == (1, 0, 1)
    assert coh.betti(sx.cross_polytope(3)).betti == (1, 0, 0, 1)
    assert coh.betti(sx.Complex()).betti == ()
    two = sx.close([(0,), (1,)])
    assert coh.betti(two).betti == (2,)


def test_euler_poincare(corpus, random_complexes):
    for _, G in corpus:
        if len(G) > 200:
            continue
        assert coh.betti(G).euler_characteristic == G.euler_characteristic()
    for G in random_complexes[:20]:
        assert coh.betti(G).euler_characteristic == G.euler_characteristic()


def test_betti_numeric_agrees(corpus):
    for _, G in corpus:
        if G.is_empty or len(G) > 200:
            continue
        assert coh.betti_numeric(G) == coh.betti(G).betti


def test_mckean_singer(corpus):
    res = coh.mckean_singer(sx.close([(0, 1)]))
    assert res["exact_zero_powers"] and res["numeric_max_err"] < 1e-8
    for _, G in corpus:
        if G.is_empty or len(G) > 80:
            continue
        res = coh.mckean_singer(G)
        assert res["exact_zero_powers"]
        assert res["numeric_max_err"] < 1e-8


def test_hodge_block_str_zero_k2():
    H = coh.hodge(sx.close([(0, 1)]))
    w = np.array([1, 1, -1])
    assert int((w * np.diag(H)).sum()) == 0


def test_lefschetz_identity(corpus):
    for _, G in corpus[:10]:
        if G.is_empty or len(G) > 70:
            continue
        res = coh.lefschetz(G, {v: v for v in G.vertices()})
        chi = G.euler_characteristic()
        assert res["cohomological"] == res["fixed_point_sum"] == chi


def test_lefschetz_c4_maps():
    c4 = sx.cycle(4)
    rot = coh.lefschetz(c4, {0: 1, 1: 2, 2: 3, 3: 0})
    assert rot == {"cohomological": 0, "fixed_point_sum": 0}
    refl = coh.lefschetz(c4, {0: 0, 2: 2, 1: 3, 3: 1})
    assert refl == {"cohomological": 2, "fixed_point_sum": 2}


def test_lefschetz_rejects_non_automorphism():
    with pytest.raises(ValueError):
        coh.lefschetz(sx.cycle(4), {0: 1, 1: 0, 2: 2, 3: 3})


def test_all_automorphisms_of_cycles():
    for n in (4, 5, 6):
        G = sx.cycle(n)
        autos = coh.automorphisms(G)
        assert len(autos) == 2 * n  # dihedral group
        for perm in autos:
            r = coh.lefschetz(G, perm)
            assert r["cohomological"] == r["fixed_point_sum"]


def test_kuenneth_unit():
    res = coh.kuenneth_check(sx.cycle(4), sx.close([(0,)]))
    assert res["ok"]
    prod = sx.ring_product_complex(sx.cycle(4), sx.close([(0,)]))
    assert coh.betti(prod).betti == (1, 1)


def test_kuenneth_contractible_product():
    a = sx.close([(0, 1)])
    prod = sx.ring_product_complex(a, a)
    assert coh.betti(prod).betti == (1, 0, 0)


def test_kuenneth_k2_c4():
    res = coh.kuenneth_check(sx.close([(0, 1)]), sx.cycle(4))
    assert res["ok"]
    assert res["hodge_spectrum_err"] < 1e-6
    assert res["connection_spectrum_err"] < 1e-6


def test_interaction_cohomology_examples():
    rep = coh.interaction_cohomology(sx.close([(0, 1)]))
    alt = sum((-1) ** k * b for k, b in enumerate(rep.betti))
    assert alt == -1
    rep = coh.interaction_cohomology(sx.cycle(4))
    assert sum((-1) ** k * b for k, b in enumerate(rep.betti)) == 0
    rep = coh.interaction_cohomology(sx.close([(0, 1, 2)]))
    assert sum((-1) ** k * b for k, b in enumerate(rep.betti)) == 1


def test_interaction_alternating_is_wu(corpus, random_complexes):
    for _, G in corpus:
        if G.is_empty or len(G) > 30:
            continue
        rep = coh.interaction_cohomology(G)
        alt = sum((-1) ** k * b for k, b in enumerate(rep.betti))
        assert alt == sx.wu_characteristic(G, 2)
    for G in random_complexes[:10]:
        if G.is_empty or len(coh.interaction_pairs(G)) > 1500:
            continue
        rep = coh.interaction_cohomology(G)
        alt = sum((-1) ** k * b for k, b in enumerate(rep.betti))
        assert alt == sx.wu_characteristic(G, 2)


def test_interaction_euler_poly_counts_pairs():
    rep = coh.interaction_cohomology(sx.close([(0, 1)]))
    # degree 0: (a,a),(b,b); degree 1: (a,ab),(ab,a),(b,ab),(ab,b); degree 2: (ab,ab)
    assert rep.euler_poly == (2, 4, 1)


def test_wu_gauss_bonnet(corpus):
    k2 = sx.close([(0, 1)])
    curv = coh.wu_gauss_bonnet(k2)
    assert curv == {0: Fraction(-1, 2), 1: Fraction(-1, 2)}
    for _, G in corpus:
        if G.is_empty or len(G) > 90:
            continue
        assert sum(coh.wu_gauss_bonnet(G).values()) == sx.wu_characteristic(G, 2)


def test_alexander_dual_of_complete():
    G = sx.complete(4)
    assert coh.alexander_dual(G, range(4)).is_empty


def test_alexander_duality_c5():
    res = coh.alexander_duality_check(sx.cycle(5), range(5))
    assert res["ok"]
    assert res["reduced_G"] == {1: 1}
    assert res["reduced_dual"] == {1: 1}


def test_alexander_duality_simplex_boundary():
    # boundary of the 4-simplex on 5 vertices: a 3-sphere, dual empty
    faces = [tuple(sorted(set(range(5)) - {i})) for i in range(5)]
    G = sx.close(faces)
    res = coh.alexander_duality_check(G, range(5))
    assert res["ok"]
    assert res["reduced_G"] == {3: 1}
    assert res["reduced_dual"] == {-1: 1}


def test_alexander_duality_random():
    gen = SplitMix64(17)
    for trial in range(6):
        G = sx.erdos_renyi(sx.RandomModel(n=6, p=0.4, seed=500 + trial))
        res = coh.alexander_duality_check(G, range(6))
        assert res["ok"]


def test_stokes_k2():
    k2 = sx.close([(0, 1)])
    lhs, rhs = coh.stokes_pairing(k2, 0, [5, 9], [1])
    assert lhs == rhs == 4  # f(b) - f(a)


def test_stokes_closed_curve():
    c4 = sx.cycle(4)
    data = coh.exterior_derivative(c4)
    # fundamental class: orient the cycle coherently
    chain = []
    for e in data.bases[1]:
        chain.append(1 if (e[0] + 1) % 4 == e[1] else -1)
    lhs, rhs = coh.stokes_pairing(c4, 0, [3, 1, 4, 1], chain)
    assert lhs == rhs == 0


def test_stokes_random_octahedron():
    G = sx.cross_polytope(2)
    data = coh.exterior_derivative(G)
    gen = SplitMix64(23)
    for k in range(2):
        for _ in range(5):
            form = [gen.below(9) - 4 for _ in range(len(data.bases[k]))]
            chain = [gen.below(9) - 4 for _ in range(len(data.bases[k + 1]))]
            lhs, rhs = coh.stokes_pairing(G, k, form, chain)
            assert lhs == rhs


def test_stokes_shape_errors():
    with pytest.raises(ValueError):
        coh.stokes_pairing(sx.close([(0, 1)]), 0, [1], [1])
    with pytest.raises(ValueError):
        coh.stokes_pairing(sx.close([(0, 1)]), 5, [1], [1])


def test_lefschetz_octahedron_full_group():
    G = sx.cross_polytope(2)
    autos = coh.automorphisms(G)
    assert len(autos) == 48  # hyperoctahedral group B_3
    for perm in autos:
        r = coh.lefschetz(G, perm)
        assert r["cohomological"] == r["fixed_point_sum"]


def test_lefschetz_icosahedron_generators():
    # symmetries read off the golden-ratio coordinate model
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts += [(s1, s2 * phi, 0), (0, s1, s2 * phi), (s2 * phi, 0, s1)]
    pts = sorted(set(pts))
    index = {p: i for i, p in enumerate(pts)}

    def near(p):
        for q, i in index.items():
            if sum((a - b) ** 2 for a, b in zip(p, q)) < 1e-9:
                return i
        raise KeyError(p)

    G = sx.icosahedron()
    transforms = [
        lambda p: (p[2], p[0], p[1]),       # coordinate rotation, order 3
        lambda p: (-p[0], -p[1], p[2]),     # half-turn
        lambda p: (-p[0], -p[1], -p[2]),    # antipodal (orientation-reversing)
    ]
    expected = [2, 2, 0]
    for T, L in zip(transforms, expected):
        perm = {i: near(T(p)) for p, i in index.items()}
        r = coh.lefschetz(G, perm)
        assert r["cohomological"] == r["fixed_point_sum"] == L


def test_lefschetz_cross3_sample():
    G = sx.cross_polytope(3)
    autos = coh.automorphisms(G, cap=8)
    assert len(autos) == 384  # hyperoctahedral group B_4
    for perm in autos[::48]:
        r = coh.lefschetz(G, perm)
        assert r["cohomological"] == r["fixed_point_sum"]


def test_interaction_distinguishes_cylinder_from_mobius():
    # both have chi = 0 and wu = 0; the quadratic Betti vectors differ,
    # at the original triangulations and at their refinements
    cyl = sx.close([(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5), (0, 2, 5),
                    (0, 3, 5)])
    mob = sx.close([(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 0), (4, 0, 1)])
    for G in (cyl, mob):
        assert G.euler_characteristic() == 0
        assert sx.wu_characteristic(G, 2) == 0
    assert coh.interaction_cohomology(cyl).betti == (0, 0, 1, 1, 0)
    assert coh.interaction_cohomology(mob).betti == (0, 0, 0, 0, 0)
    assert coh.interaction_cohomology(sx.barycentric(cyl)).betti == (0, 0, 1, 1, 0)
    assert coh.interaction_cohomology(sx.barycentric(mob)).betti == (0, 0, 0, 0, 0)
