from math import comb

import pytest

from deljoin import (EMPTY, SimplicialComplex, cone, cone_with_apex,
                     cycle_complex, discrete_points, isomorphic, join, link,
                     links_intersection, simplex_skeleton)
from deljoin.deleted import cross_polytope_boundary

from oracle import powerset_closed


def test_skeleton_counts():
    assert simplex_skeleton(4, 1).f_vector() == (5, 10)
    assert simplex_skeleton(6, 2).f_vector() == (7, 21, 35)
    K = simplex_skeleton(8, 3)
    assert K.f_vector() == (9, 36, 84, 126)
    assert K.dim == 3


def test_skeleton_rejects_bad_arguments():
    with pytest.raises(ValueError):
        simplex_skeleton(2, 3)
    with pytest.raises(ValueError):
        simplex_skeleton(-1, 0)
    with pytest.raises(ValueError):
        simplex_skeleton(3, -1)


def test_discrete_points():
    P = discrete_points(3)
    assert P.f_vector() == (3,)
    assert P.dim == 0
    assert discrete_points(1).f_vector() == (1,)
    assert discrete_points(2).f_vector() == (2,)
    with pytest.raises(ValueError):
        discrete_points(0)


def test_join_counts_and_dim():
    K = simplex_skeleton(4, 1)
    L = discrete_points(3)
    J = join(K, L)
    assert len(J.vertices) == 8
    assert J.dim == 2
    assert len(J) == (len(K) + 1) * (len(L) + 1) - 1

    sq = join(discrete_points(2), discrete_points(2))
    assert bool(isomorphic(sq, cycle_complex(4)))

    relabeled = join(K, EMPTY)
    assert relabeled.f_vector() == K.f_vector()
    assert bool(isomorphic(relabeled, K))
    assert join(EMPTY, EMPTY) == EMPTY


def test_join_dim_formula():
    cases = [(discrete_points(2), simplex_skeleton(2, 1)),
             (simplex_skeleton(1, 1), simplex_skeleton(1, 1)),
             (discrete_points(1), discrete_points(3))]
    for K, L in cases:
        assert join(K, L).dim == K.dim + L.dim + 1


def test_cone():
    C6 = cycle_complex(6)
    C = cone(C6)
    assert C.f_vector() == (7, 12, 6)
    assert cone(EMPTY).f_vector() == (1,)
    claw = cone(discrete_points(3))
    assert claw.f_vector() == (4, 3)

    K = simplex_skeleton(4, 1)
    assert link(cone(K), "c") == K  # exact simplex-set equality

    inner, apex1 = cone_with_apex(discrete_points(1))
    outer, apex2 = cone_with_apex(inner)
    assert apex1 == "c" and apex2 == "c'"
    assert link(outer, apex2) == inner


def test_cross_polytope_counts():
    for n in range(4):
        X = cross_polytope_boundary(n)
        f = X.complex.f_vector()
        assert len(f) == n + 1
        for i in range(n + 1):
            assert f[i] == 2 ** (i + 1) * comb(n + 1, i + 1)
    with pytest.raises(ValueError):
        cross_polytope_boundary(-1)


def test_link():
    oct2 = cross_polytope_boundary(2).complex
    lk = link(oct2, "a0")
    assert bool(isomorphic(lk, cycle_complex(4)))
    tri = simplex_skeleton(2, 1)
    assert link(tri, "v0").f_vector() == (2,)
    with pytest.raises(ValueError):
        link(tri, "nope")


def test_links_intersection():
    K = simplex_skeleton(4, 1)
    P = join(K, discrete_points(3))
    li = links_intersection(P, ["L/p0", "L/p1", "L/p2"])
    assert li.contains_join
    assert bool(isomorphic(li.complex, K))

    tri = simplex_skeleton(2, 1)
    li = links_intersection(tri, ["v0", "v1", "v2"])
    assert li.complex == EMPTY
    assert li.contains_join  # vacuously: the three vertices are in P

    oct2 = cross_polytope_boundary(2).complex
    li = links_intersection(oct2, ["a0", "b0", "a1"])
    assert li.complex.f_vector() == (2,)
    assert set(li.complex.vertices) == {"a2", "b2"}

    with pytest.raises(ValueError):
        links_intersection(tri, ["v0", "v0", "v1"])
    with pytest.raises(ValueError):
        links_intersection(tri, ["v0", "v1", "zz"])


def test_face_closure_is_validated():
    with pytest.raises(ValueError):
        SimplicialComplex("bad", [("a", "b")])  # endpoints missing
    ok = SimplicialComplex("ok", [("a",), ("b",), ("a", "b")])
    assert ok.dim == 1


def test_face_closure_exhaustive():
    for K in [simplex_skeleton(5, 2), join(simplex_skeleton(2, 1),
                                           discrete_points(3)),
              cone(cycle_complex(5))]:
        assert powerset_closed(K.simplices)


def test_empty_complex():
    assert EMPTY.dim == -1
    assert EMPTY.f_vector() == ()
    assert len(EMPTY) == 0


def test_join_associative_up_to_iso():
    small = [discrete_points(2), discrete_points(1), simplex_skeleton(1, 1)]
    for A in small:
        for B in small:
            for C in small:
                left = join(join(A, B), C)
                right = join(A, join(B, C))
                if len(left.vertices) <= 12:
                    assert bool(isomorphic(left, right))


def test_facets():
    K = simplex_skeleton(2, 2)
    assert K.facets() == (("v0", "v1", "v2"),)
    P = discrete_points(2)
    assert P.facets() == (("p0",), ("p1",))


def test_isomorphic_with_witness():
    C6 = cycle_complex(6)
    rotated = {f"v{i}": f"v{(i + 2) % 6}" for i in range(6)}
    assert bool(isomorphic(C6, C6, witness=rotated))
    bad = {f"v{i}": f"v{i}" for i in range(6)}
    bad["v0"], bad["v1"] = "v3", "v0"
    res = isomorphic(C6, C6, witness=bad)
    assert not res


def test_isomorphic_search():
    C6 = cycle_complex(6)
    relabeled = C6.relabel({f"v{i}": f"x{(5 * i + 1) % 6}" for i in range(6)})
    res = isomorphic(C6, relabeled)
    assert res.status == "isomorphic"
    mapped = {tuple(sorted(res.witness[v] for v in s)) for s in C6.simplices}
    assert mapped == relabeled.simplices

    assert isomorphic(cycle_complex(4), cycle_complex(6)).status == "not_isomorphic"


def test_isomorphic_cap():
    a = cross_polytope_boundary(3).complex
    b = cross_polytope_boundary(3).complex
    res = isomorphic(a, b, node_cap=1)
    assert res.status == "cap_exceeded"
