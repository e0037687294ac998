import pytest

from deljoin import (CapExceeded, EMPTY, Z2Complex, betti,
                     cone_collapse_report, deleted_join, deleted_product,
                     discrete_points, isomorphic, join, simplex_skeleton,
                     verify_join_decomposition, z2_join)
from deljoin.complexes import cycle_complex
from deljoin.deleted import cross_polytope_boundary

from oracle import deleted_join_cells, deleted_product_cells

POINT = discrete_points(1)
EDGE = simplex_skeleton(1, 1)
P3 = discrete_points(3)
TRI = simplex_skeleton(2, 1)
K5 = simplex_skeleton(4, 1)


def test_deleted_join_hexagon():
    X = deleted_join(P3)
    assert X.complex.f_vector() == (6, 6)
    # spec-level hand enumeration: edges are exactly {i#1, j#2} for i != j
    expected = {tuple(sorted((f"p{i}#1", f"p{j}#2")))
                for i in range(3) for j in range(3) if i != j}
    assert set(X.complex.simplices_by_dim()[1]) == expected
    assert bool(isomorphic(X.complex, cycle_complex(6)))
    assert betti(X) == [1, 1]


def test_deleted_join_edge():
    X = deleted_join(EDGE)
    edges = set(X.complex.simplices_by_dim()[1])
    assert edges == {("v0#1", "v1#1"), ("v0#2", "v1#2"),
                     ("v0#1", "v1#2"), ("v0#2", "v1#1")}
    assert bool(isomorphic(X.complex, cycle_complex(4)))


def test_deleted_join_against_oracle():
    for K in [POINT, EDGE, P3, TRI, K5, cycle_complex(5)]:
        X = deleted_join(K)
        got = {frozenset((v[:-2], int(v[-1])) for v in s)
               for s in X.complex.simplices}
        assert got == deleted_join_cells(K.simplices)


def test_deleted_join_freeness_and_involution():
    for K in [P3, K5, TRI]:
        X = deleted_join(K)
        X.validate()  # freeness, simpliciality, involutivity
        for v in X.complex.vertices:
            assert X.involution[X.involution[v]] == v


def test_deleted_join_of_full_simplex_is_cross_polytope():
    for n in range(4):
        X = deleted_join(simplex_skeleton(n, n))
        Y = cross_polytope_boundary(n)
        assert X.complex.f_vector() == Y.complex.f_vector()
        assert bool(isomorphic(X.complex, Y.complex))


def test_deleted_join_sphere():
    assert betti(deleted_join(K5)) == [1, 0, 0, 1]


def test_deleted_join_rejects_empty_and_caps():
    with pytest.raises(ValueError):
        deleted_join(EMPTY)
    with pytest.raises(CapExceeded):
        deleted_join(K5, cap=10)


def test_deleted_product_triangle():
    dp = deleted_product(simplex_skeleton(2, 2))
    assert dp.cell_counts() == (6, 6)
    assert betti(dp) == [1, 1]


def test_deleted_product_arc():
    arc = join(discrete_points(2), POINT)
    dp = deleted_product(arc)
    assert dp.cell_counts() == (6, 4)
    assert betti(dp)[0] == 2
    assert sum(betti(dp)[1:]) == 0


def test_deleted_product_points():
    dp = deleted_product(P3)
    assert dp.cell_counts() == (6,)
    assert betti(dp) == [6]


def test_deleted_product_against_oracle():
    for K in [P3, TRI, K5, join(discrete_points(2), POINT)]:
        dp = deleted_product(K)
        got = {cell for level in dp.cells for cell in level}
        assert got == deleted_product_cells(K.simplices)


def test_deleted_product_swap():
    for K in [TRI, K5]:
        dp = deleted_product(K)
        dp.check_free_swap()
        for level in dp.cells:
            assert len(level) % 2 == 0  # swap orbits pair the cells


def test_deleted_product_needs_two_vertices():
    with pytest.raises(ValueError):
        deleted_product(POINT)


def test_z2_join():
    s0 = deleted_join(POINT)
    c4 = z2_join(s0, s0)
    assert bool(isomorphic(c4.complex, cycle_complex(4)))
    c4.validate()

    big = z2_join(deleted_join(K5), deleted_join(P3))
    assert big.complex.dim == 3 + 1 + 1

    X = deleted_join(P3)
    same = z2_join(X, Z2Complex(EMPTY, {}))
    assert bool(isomorphic(same.complex, X.complex))


def test_join_decomposition_corpus():
    corpus = [POINT, EDGE, P3, TRI, K5]
    for K in corpus:
        for L in corpus:
            rep = verify_join_decomposition(K, L)
            assert rep.passed
    # larger pairs on each side of the 2-skeleton of the 6-simplex
    vkf2 = simplex_skeleton(6, 2)
    assert verify_join_decomposition(vkf2, P3).passed
    assert verify_join_decomposition(P3, vkf2).passed
    assert verify_join_decomposition(K5, vkf2).passed


def test_join_decomposition_point_point():
    rep = verify_join_decomposition(POINT, POINT)
    assert rep.passed
    # both sides are the 4-cycle on the four copies
    A = deleted_join(join(POINT, POINT))
    assert bool(isomorphic(A.complex, cycle_complex(4)))


def test_join_decomposition_bijection_is_simplicial():
    rep = verify_join_decomposition(K5, P3)
    A = deleted_join(join(K5, P3))
    B = z2_join(deleted_join(K5), deleted_join(P3))
    mapped = {tuple(sorted(rep.bijection[v] for v in s))
              for s in A.complex.simplices}
    assert mapped == B.complex.simplices


def test_cone_collapse_examples():
    r = cone_collapse_report(discrete_points(2))
    assert r.quotient_betti == (1, 1) and r.matches

    r = cone_collapse_report(TRI)
    assert r.quotient_betti == (1, 0, 1) and r.matches

    r = cone_collapse_report(P3)
    assert r.quotient_betti == (1, 5) and r.matches


def test_cone_collapse_k5():
    r = cone_collapse_report(K5)
    assert r.matches
    assert r.quotient_betti == r.suspension_betti


def test_cone_collapse_point():
    r = cone_collapse_report(POINT)
    assert r.quotient_betti == (2,)  # suspension of the empty space
    assert r.matches


def test_cross_polytope_is_free():
    for n in range(4):
        cross_polytope_boundary(n).validate()


def test_z2_validation_catches_violations():
    tri_full = simplex_skeleton(1, 1)
    with pytest.raises(ValueError):
        Z2Complex(tri_full, {"v0": "v1", "v1": "v0"})  # edge {v0,v1} breaks freeness
    P2 = discrete_points(2)
    with pytest.raises(ValueError):
        Z2Complex(P2, {"p0": "p0", "p1": "p1"})  # fixed points
    Z2Complex(P2, {"p0": "p1", "p1": "p0"}).validate()
