"""Small named triangulations used throughout the package."""

from __future__ import annotations

from .complex import SimplicialComplex, build_complex


def torus7() -> SimplicialComplex:
    """Seven-vertex torus: {i,i+1,i+3} and {i,i+2,i+3} mod 7, labels 1..7."""
    rows = []
    for i in range(7):
        rows.append([(i + d) % 7 + 1 for d in (0, 1, 3)])
        rows.append([(i + d) % 7 + 1 for d in (0, 2, 3)])
    return build_complex(rows, name="torus7")


# Six-vertex projective plane, labeled so that 124, 125, 345, 136 and 456 are triangles.
RP2_6_FACETS = [
    (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 6), (1, 5, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 6), (3, 4, 5), (4, 5, 6),
]


def rp2_6() -> SimplicialComplex:
    return build_complex(RP2_6_FACETS, name="rp2_6")


def simplex_boundary(dim: int) -> SimplicialComplex:
    """Boundary of the dim-simplex on vertices 1..dim+1."""
    vs = list(range(1, dim + 2))
    return build_complex([[u for u in vs if u != v] for v in vs], name=f"simplex_boundary_{dim}")


FANO_TRIPLES = [(1, 2, 4), (1, 3, 7), (1, 5, 6), (2, 3, 5), (2, 6, 7), (3, 4, 6), (4, 5, 7)]
