import pytest

from deljoin import (Z2Complex, betti, cohomological_index, cover_class,
                     deleted_join, discrete_points, homology_sphere_certificate,
                     index_of, index_report, join, quotient, simplex_skeleton,
                     z2_join)
from deljoin.complexes import SimplicialComplex, cone, cycle_complex
from deljoin.deleted import cross_polytope_boundary


def _antipodal_cycle(m: int) -> Z2Complex:
    # 2m-cycle with the rotation by m; free for m >= 2
    C = cycle_complex(2 * m)
    T = {f"v{i}": f"v{(i + m) % (2 * m)}" for i in range(2 * m)}
    return Z2Complex(C, T)


def test_quotient_hexagon():
    Q = quotient(_antipodal_cycle(3))
    assert Q.cell_counts() == (3, 3)


def test_quotient_c4():
    Q = quotient(_antipodal_cycle(2))
    assert Q.cell_counts() == (2, 2)
    # the two edges are parallel: same endpoints
    e0, e1 = Q.cells[1]
    assert e0.faces == e1.faces or set(e0.faces) == set(e1.faces)


def test_quotient_octahedron():
    Q = quotient(cross_polytope_boundary(2))
    assert Q.cell_counts() == (3, 6, 4)


def test_quotient_halves_counts_and_euler():
    for X in [cross_polytope_boundary(3), deleted_join(simplex_skeleton(4, 1)),
              deleted_join(discrete_points(3))]:
        Q = quotient(X)
        f = X.complex.f_vector()
        assert Q.cell_counts() == tuple(c // 2 for c in f)
        chi_x = sum((-1) ** i * c for i, c in enumerate(f))
        chi_q = sum((-1) ** i * c for i, c in enumerate(Q.cell_counts()))
        assert chi_x == 2 * chi_q


def test_quotient_rejects_nonfree():
    # validation happens on the Z2Complex itself
    with pytest.raises(ValueError):
        Z2Complex(cycle_complex(4),
                  {"v0": "v1", "v1": "v0", "v2": "v3", "v3": "v2"})


def test_cover_class_values():
    X = _antipodal_cycle(3)
    Q = quotient(X)
    cc = cover_class(X, Q)
    # w is nonzero on an odd number of the 3 quotient edges
    assert bin(cc.w_bits).count("1") % 2 == 1
    for v in X.complex.vertices:
        assert cc.sheet[v] ^ cc.sheet[X.involution[v]] == 1


def test_cover_class_copy_convention():
    X = deleted_join(discrete_points(3))
    Q = quotient(X)
    cc = cover_class(X, Q)
    for v in X.complex.vertices:
        assert cc.sheet[v] == (0 if v.endswith("#1") else 1)


def test_index_cross_polytopes():
    for n in range(4):
        assert index_of(cross_polytope_boundary(n)) == n


def test_index_examples():
    assert index_of(deleted_join(simplex_skeleton(4, 1))) == 3
    assert index_of(deleted_join(discrete_points(1))) == 0
    assert index_of(deleted_join(discrete_points(3))) == 1


def test_index_bounds_and_ladder():
    for X in [cross_polytope_boundary(2), deleted_join(simplex_skeleton(2, 1)),
              z2_join(deleted_join(discrete_points(1)),
                      deleted_join(discrete_points(3)))]:
        comp = cohomological_index(X, full_ladder=True)
        assert 0 <= comp.h <= X.complex.dim
        # ladder never resurrects: True...True False...False
        seen_false = False
        for level in comp.ladder:
            if not level:
                seen_false = True
            else:
                assert not seen_false


def test_index_connected_is_positive():
    for X in [cross_polytope_boundary(1), deleted_join(discrete_points(3)),
              deleted_join(simplex_skeleton(6, 2))]:
        assert index_of(X) >= 1


def test_index_disconnected_is_max_of_components():
    # S0 (two points): quotient is a point, h = 0
    assert index_of(deleted_join(discrete_points(1))) == 0
    # disjoint union of an S0-pair and an antipodal 4-cycle: h = 1
    c4 = _antipodal_cycle(2)
    simps = list(c4.complex.simplices) + [("z0",), ("z1",)]
    T = dict(c4.involution)
    T.update({"z0": "z1", "z1": "z0"})
    X = Z2Complex(SimplicialComplex("mixed", simps), T)
    assert index_of(X) == 1


def test_sphere_certificates():
    assert homology_sphere_certificate(deleted_join(discrete_points(3)), 1).tight
    assert homology_sphere_certificate(deleted_join(discrete_points(1)), 0).tight
    cert = homology_sphere_certificate(deleted_join(simplex_skeleton(6, 2)), 5)
    assert cert.is_sphere and cert.h == 5 and cert.tight

    # cones are contractible: two swapped disjoint cones are never a sphere
    co = cone(discrete_points(3))
    mapping = {v: v + "+" for v in co.vertices}
    twin = co.relabel(mapping, name="twin")
    simps = list(co.simplices) + list(twin.simplices)
    T = dict(mapping)
    T.update({w: v for v, w in mapping.items()})
    double = Z2Complex(SimplicialComplex("double_cone", simps), T)
    for n in range(double.complex.dim + 1):
        assert not homology_sphere_certificate(double, n).is_sphere


def test_sphere_certificate_wrong_dimension():
    X = deleted_join(simplex_skeleton(4, 1))  # 3-sphere
    assert not homology_sphere_certificate(X, 2).is_sphere
    assert homology_sphere_certificate(X, 3).tight


def test_join_additivity_on_tight_spheres():
    cases = [(deleted_join(discrete_points(1)), 0),
             (deleted_join(discrete_points(3)), 1),
             (deleted_join(simplex_skeleton(4, 1)), 3)]
    for X, hx in cases:
        for Y, hy in cases:
            assert index_of(z2_join(X, Y)) == hx + hy + 1


def test_index_report_shape():
    rep = index_report(deleted_join(simplex_skeleton(4, 1)))
    assert rep["dim"] == 3
    assert rep["betti"] == [1, 0, 0, 1]
    assert rep["h"] == 3
    assert rep["sphere_certificate"] and rep["tight"]
    assert "timings_ms" in rep


def test_index_rejects_empty():
    from deljoin import EMPTY
    with pytest.raises(ValueError):
        index_of(Z2Complex(EMPTY, {}))


def test_index_invariant_under_relabeling():
    X = deleted_join(simplex_skeleton(2, 1))
    h0 = index_of(X)
    mapping = {v: f"zz{idx}" for idx, v in enumerate(X.complex.vertices)}
    relabeled = X.complex.relabel(mapping, name="relabeled")
    T = {mapping[v]: mapping[w] for v, w in X.involution.items()}
    assert index_of(Z2Complex(relabeled, T)) == h0
