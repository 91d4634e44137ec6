import pytest
from hypothesis import given, settings, strategies as st

from chromsurf.complex import (
    ApexCollisionError, DimensionMismatchError, NonUniformError, NotClosedError, RedundantFacetError,
    DegenerateFacetError, TooFewVerticesError, UnknownVertexError, build_complex, check_orientation,
    classify_closed_manifold, cone, connected_sum, cyclic_polytope_boundary, euler_characteristic, f_vector,
    find_isomorphism, is_neighborly, relabel, suspension, vertex_link)
from chromsurf.library import rp2_6, simplex_boundary, torus7

from oracles import closed_surface_edges_ok, euler, gale_facets


def test_single_triangle():
    K = build_complex([[1, 2, 3]])
    assert f_vector(K) == (3, 3, 1)
    assert euler_characteristic(K) == 1
    assert vertex_link(K, 1).facets == ((2, 3),)
    with pytest.raises(NotClosedError):
        classify_closed_manifold(K)


@pytest.mark.parametrize("rows,err", [([[1, 2, 3], [1, 2]], NonUniformError),
                                      ([[1, 1, 2]], DegenerateFacetError),
                                      ([[1, 2, 3], [3, 2, 1]], RedundantFacetError)])
def test_malformed(rows, err):
    with pytest.raises(err):
        build_complex(rows)


def test_torus7_against_oracle():
    K = torus7()
    assert closed_surface_edges_ok(K.facets) and euler(K.facets) == 0
    c = classify_closed_manifold(K)
    assert c.orientable and c.genus == 1
    assert check_orientation(K, c.orientation)
    for v in K.vertices:
        link = vertex_link(K, v)
        assert f_vector(link) == (6, 6)


def test_unknown_vertex():
    with pytest.raises(UnknownVertexError):
        vertex_link(torus7(), 99)


def test_cone_and_suspension():
    edge = build_complex([[1, 2]])
    assert cone(edge, 3).facets == ((1, 2, 3),)
    with pytest.raises(ApexCollisionError):
        cone(edge, 1)
    hexagon = build_complex([[i, i % 6 + 1] for i in range(1, 7)])
    assert len(cone(hexagon).facets) == 6
    S = suspension(hexagon)
    assert classify_closed_manifold(S).euler == 2


@given(st.sets(st.tuples(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9))
               .filter(lambda t: len(set(t)) == 3).map(lambda t: tuple(sorted(t))), min_size=1, max_size=15))
def test_link_of_cone_apex_is_complex(facets):
    K = build_complex(facets)
    assert vertex_link(cone(K, 100), 100).facets == K.facets


def test_connected_sums():
    T = torus7()
    TT = connected_sum(T, T)
    c = classify_closed_manifold(TT)
    assert c.orientable and c.genus == 2 and c.euler == -2
    TP = connected_sum(T, rp2_6())
    c = classify_closed_manifold(TP)
    assert not c.orientable and c.euler == -1 and c.genus == 3
    Ks = connected_sum(T, simplex_boundary(3))
    assert euler_characteristic(Ks) == 0
    with pytest.raises(DimensionMismatchError):
        connected_sum(T, simplex_boundary(4))


@pytest.mark.parametrize("m", [5, 6, 7, 8, 9])
def test_cyclic_polytope_vs_gale_oracle(m):
    K = cyclic_polytope_boundary(m, 4)
    assert sorted(K.facets) == sorted(gale_facets(m, 4))
    assert len(K.facets) == m * (m - 3) // 2
    assert is_neighborly(K)
    r = classify_closed_manifold(K)
    assert r.is_closed_manifold and r.euler == 0


def test_cyclic_polytope_7():
    assert f_vector(cyclic_polytope_boundary(7, 4)) == (7, 21, 28, 14)
    with pytest.raises(TooFewVerticesError):
        cyclic_polytope_boundary(4, 4)


def test_cyclic_polytope_matches_convex_hull():
    scipy = pytest.importorskip("scipy.spatial")
    import numpy as np
    m = 8
    ts = np.arange(1, m + 1, dtype=float)
    pts = np.stack([ts, ts ** 2, ts ** 3, ts ** 4], axis=1)
    hull = scipy.ConvexHull(pts)
    faces = {tuple(sorted(int(i) + 1 for i in s)) for s in hull.simplices}
    assert faces == set(cyclic_polytope_boundary(m, 4).facets)


@settings(max_examples=30)
@given(st.permutations(list(range(1, 8))))
def test_isomorphism_found_for_relabelings(perm):
    T = torus7()
    mapping = dict(zip(range(1, 8), perm))
    iso = find_isomorphism(T, relabel(T, mapping))
    assert iso is not None
    assert set(relabel(T, iso).facets) == set(relabel(T, mapping).facets)


def test_non_isomorphic():
    assert find_isomorphism(torus7(), cyclic_polytope_boundary(7, 3)) is None
