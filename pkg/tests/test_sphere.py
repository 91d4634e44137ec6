import pytest

from chromsurf.coloring import ColoringProblem, search_coloring
from chromsurf.complex import build_complex, classify_closed_manifold
from chromsurf.sphere import (B15_FACETS, HAMILTONIAN_PATH, MissingStructure, ball_b15, boundary_triangles,
                              build_sphere, induced_subcomplex, path_hemisphere, verify_k5_obstruction)


@pytest.fixture(scope="module")
def built():
    return build_sphere()


def test_ball():
    B = ball_b15()
    assert len(B.facets) == 66 and len(B.vertices) == 15
    assert not search_coloring(ColoringProblem(B, 3)).colorable
    bd = boundary_triangles(B15_FACETS)
    assert classify_closed_manifold(build_complex(bd)).euler == 2
    assert len(path_hemisphere(B15_FACETS, list(HAMILTONIAN_PATH))) * 2 == len(bd)


def test_sphere_shape(built):
    K = built.complex
    c = classify_closed_manifold(K)
    assert len(K.vertices) == 167 and c.is_closed_manifold and c.orientable
    assert len(built.attachments) == 10


def test_ball_copies_are_induced(built):
    for a in built.attachments:
        B = induced_subcomplex(built.complex, a.ball_vertices)
        assert len(B.facets) == 66


def test_obstruction_needs_every_chain(built):
    K = built.complex
    sets = built.ball_vertex_sets()
    a, b = built.attachments[3].edge
    first = built.attachments[3].ball_vertices[0]
    stripped = build_complex([f for f in K.facets if not {a, b, first} <= set(f)])
    with pytest.raises(MissingStructure):
        verify_k5_obstruction(stripped, ball_vertex_sets=sets)
    sets.pop((a, b))
    with pytest.raises(MissingStructure):
        verify_k5_obstruction(K, ball_vertex_sets=sets)
