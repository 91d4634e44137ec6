"""A 167-vertex 3-sphere that admits no (4,2)-coloring.

The complete graph K5 sits on vertices 151..155 as a bipyramid over the
triangle 153 154 155 with the extra central edge 151-152. To every K5 edge
ab we attach a copy of a 15-vertex ball B that has no (3,2)-coloring, joined
to ab by the chain of tetrahedra {a, b, p_i, p_(i+1)} along a Hamiltonian
path p_1..p_15 on the boundary of B. Every ball vertex then spans a triangle
with a and b, so a monochromatic edge ab in a 4-coloring would force B into
three colors. Hence no K5 edge is monochromatic, and five colors are needed.

Gluing details that make the result a manifold:

* thickening: a new vertex t is coned over D together with the triangles
  {a, p_i, p_(i+1)}, where D is the hemisphere of the boundary of B cut out
  by the closed path p_1..p_15 p_1. Ball, chain and cone form a 3-ball;
* attaching: one tetrahedron {a, b, x, p_1} glues that 3-ball onto a
  triangle {a, b, x} of the surface it faces (the cavity 151 152 153 154 for
  the central edge, the outer bipyramid otherwise);
* closing: vertex 166 cones the cavity surface and 167 the outer one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .coloring import ColoringProblem, search_coloring
from .complex import SimplicialComplex, build_complex

# Tetrahedra of the ball; vertex 7 is the renamed vertex 16 of the source sphere.
B15_FACETS: tuple[tuple[int, int, int, int], ...] = (
    (1, 2, 5, 6), (1, 2, 5, 12), (1, 2, 6, 12), (1, 3, 8, 11), (1, 4, 5, 6), (1, 4, 5, 7),
    (1, 4, 6, 12), (1, 4, 10, 13), (1, 4, 7, 10), (1, 4, 12, 13), (1, 5, 12, 13), (1, 5, 7, 13),
    (1, 8, 9, 14), (1, 8, 10, 14), (1, 8, 10, 15), (1, 8, 11, 15), (1, 9, 11, 15), (1, 9, 14, 15),
    (1, 10, 13, 14), (1, 7, 10, 15), (1, 7, 13, 14), (1, 7, 14, 15), (2, 3, 4, 13), (2, 3, 4, 15),
    (2, 3, 13, 15), (2, 4, 7, 8), (2, 4, 10, 13), (2, 4, 7, 10), (2, 5, 6, 14), (2, 5, 12, 14),
    (2, 6, 8, 12), (2, 6, 7, 8), (2, 6, 9, 14), (2, 6, 7, 9), (2, 8, 9, 14), (2, 8, 12, 14),
    (2, 7, 9, 10), (3, 4, 12, 13), (3, 4, 12, 15), (3, 5, 6, 14), (3, 5, 8, 11), (3, 5, 11, 14),
    (3, 6, 9, 14), (3, 6, 7, 9), (3, 9, 12, 13), (3, 7, 9, 12), (3, 9, 13, 15), (3, 9, 14, 15),
    (3, 7, 12, 15), (3, 7, 14, 15), (4, 5, 7, 8), (4, 6, 12, 15), (5, 8, 11, 13), (5, 7, 8, 13),
    (5, 11, 12, 13), (5, 11, 12, 14), (6, 8, 12, 15), (6, 8, 13, 15), (6, 7, 8, 13), (8, 10, 12, 14),
    (8, 10, 12, 15), (8, 11, 13, 15), (7, 9, 10, 12), (9, 11, 12, 13), (9, 11, 13, 15), (7, 10, 12, 15),
)

HAMILTONIAN_PATH = (14, 12, 11, 9, 10, 2, 13, 15, 4, 8, 1, 3, 5, 6, 7)

K5_VERTICES = (151, 152, 153, 154, 155)
CAVITY_APEX = 166
OUTER_APEX = 167
CORE_TETRAHEDRA = ((151, 152, 153, 155), (151, 152, 154, 155))
CAVITY_TRIANGLES = ((151, 152, 153), (151, 152, 154), (151, 153, 154), (152, 153, 154))
OUTER_TRIANGLES = tuple(sorted(
    tuple(sorted((apex, x, y)))
    for apex in (151, 152) for x, y in ((153, 154), (154, 155), (153, 155))
))
CENTRAL_EDGE = (151, 152)


class SphereConstructionError(RuntimeError):
    pass


class MissingStructure(SphereConstructionError):
    pass


def ball_b15() -> SimplicialComplex:
    return build_complex(B15_FACETS, name="B15")


def boundary_triangles(tetrahedra) -> list[tuple[int, ...]]:
    """Triangles lying in exactly one of the given tetrahedra, sorted."""
    count = Counter(t for f in tetrahedra for t in combinations(sorted(f), 3))
    return sorted(t for t, c in count.items() if c == 1)


def path_hemisphere(tetrahedra, path) -> list[tuple[int, ...]]:
    """Boundary triangles on one side of the closed curve path + (last, first).

    The curve is a Hamiltonian cycle of the boundary sphere, so it splits the
    triangles into two discs; the disc containing the least triangle is returned.
    """
    bd = boundary_triangles(tetrahedra)
    cut = {tuple(sorted(e)) for e in zip(path, path[1:] + path[:1])}
    for e in cut:
        if sum(1 for t in bd if set(e) <= set(t)) != 2:
            raise SphereConstructionError(f"edge {e} of the path is not on the boundary")
    side = {bd[0]}
    queue = [bd[0]]
    while queue:
        t = queue.pop()
        for e in combinations(t, 2):
            if e in cut:
                continue
            for u in bd:
                if u not in side and set(e) <= set(u):
                    side.add(u)
                    queue.append(u)
    if len(side) * 2 != len(bd):
        raise SphereConstructionError("the closed path does not split the boundary into two halves")
    return sorted(side)


@dataclass(frozen=True)
class Attachment:
    edge: tuple[int, int]
    ball_vertices: tuple[int, ...]
    path: tuple[int, ...]
    thickening_vertex: int
    glued_triangle: tuple[int, int, int]
    inside_cavity: bool


@dataclass(frozen=True)
class SphereBuild:
    complex: SimplicialComplex
    attachments: tuple[Attachment, ...]

    def ball_vertex_sets(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return {a.edge: a.ball_vertices for a in self.attachments}


def k5_edges() -> list[tuple[int, int]]:
    return list(combinations(K5_VERTICES, 2))


def _pick_glue_triangle(surface: set, edge, prefer_central: bool) -> tuple[int, int, int]:
    a, b = edge
    cands = sorted(t for t in surface if a in t and b in t)
    if not cands:
        raise SphereConstructionError(f"no surface triangle contains the edge {edge}")
    if prefer_central:
        return cands[0]
    k5 = [t for t in cands if all(v in K5_VERTICES for v in t)]
    return (k5 or cands)[0]


def build_sphere() -> SphereBuild:
    ball = B15_FACETS
    half = path_hemisphere(ball, list(HAMILTONIAN_PATH))
    tets: list[tuple[int, ...]] = list(CORE_TETRAHEDRA)
    cavity = set(CAVITY_TRIANGLES)
    outer = set(OUTER_TRIANGLES)
    attachments = []
    for i, (a, b) in enumerate(k5_edges(), start=1):
        off = 15 * (i - 1)
        ren = {v: v + off for v in range(1, 16)}
        path = [ren[v] for v in HAMILTONIAN_PATH]
        t = 155 + i
        piece = [tuple(ren[v] for v in f) for f in ball]
        piece += [(a, b, p, q) for p, q in zip(path, path[1:])]
        piece += [(t,) + tuple(ren[v] for v in tri) for tri in half]
        piece += [(t, a, p, q) for p, q in zip(path, path[1:])]
        inside = (a, b) == CENTRAL_EDGE
        surface = cavity if inside else outer
        glue = _pick_glue_triangle(surface, (a, b), inside)
        x = next(v for v in glue if v not in (a, b))
        piece.append((a, b, x, path[0]))
        new_bd = set(boundary_triangles(piece))
        if glue not in new_bd:
            raise SphereConstructionError(f"attachment for {(a, b)} does not expose {glue}")
        surface ^= new_bd
        tets += piece
        attachments.append(Attachment((a, b), tuple(sorted(ren.values())), tuple(path), t, glue, inside))
    tets += [(CAVITY_APEX,) + tri for tri in sorted(cavity)]
    tets += [(OUTER_APEX,) + tri for tri in sorted(outer)]
    K = build_complex(tets, name="non_4_2_colorable")
    return SphereBuild(K, tuple(attachments))


def build_non_4_2_colorable_sphere() -> SimplicialComplex:
    return build_sphere().complex


def induced_subcomplex(K: SimplicialComplex, vertices) -> SimplicialComplex:
    vs = set(vertices)
    return build_complex([f for f in K.facets if set(f) <= vs])


@dataclass(frozen=True)
class EdgeObstruction:
    edge: tuple[int, int]
    ball_vertices: tuple[int, ...]
    all_triangles_present: bool
    ball_3_colorable: bool
    nodes: int


@dataclass(frozen=True)
class ObstructionReport:
    edges: tuple[EdgeObstruction, ...]

    @property
    def holds(self) -> bool:
        return (len(self.edges) == 10 and all(e.all_triangles_present and not e.ball_3_colorable
                                              for e in self.edges))


def verify_k5_obstruction(K: SimplicialComplex, k5_vertices=K5_VERTICES,
                          ball_vertex_sets: dict | None = None) -> ObstructionReport:
    """Check that no 4-coloring of K can leave an edge of the K5 monochromatic.

    For each K5 edge ab, every vertex v of its ball must span a triangle abv
    in K, and the ball (the subcomplex induced on its vertices) must admit no
    (3,2)-coloring.
    """
    if ball_vertex_sets is None:
        ball_vertex_sets = {e: tuple(range(15 * i + 1, 15 * i + 16))
                            for i, e in enumerate(combinations(sorted(k5_vertices), 2))}
    triangles = K.faces(2)
    out = []
    for e in combinations(sorted(k5_vertices), 2):
        if e not in ball_vertex_sets:
            raise MissingStructure(f"no ball given for K5 edge {e}")
        vs = tuple(sorted(ball_vertex_sets[e]))
        a, b = e
        missing = [v for v in vs if tuple(sorted((a, b, v))) not in triangles]
        if missing:
            raise MissingStructure(f"edge {e}: no triangle with ball vertices {missing}")
        try:
            B = induced_subcomplex(K, vs)
        except ValueError as exc:
            raise MissingStructure(f"edge {e}: ball vertices span no tetrahedra") from exc
        if B.dim < 2:
            raise MissingStructure(f"edge {e}: ball vertices span no triangles")
        res = search_coloring(ColoringProblem(B, 3))
        if res.colorable:
            raise MissingStructure(f"edge {e}: the attached ball is (3,2)-colorable")
        out.append(EdgeObstruction(e, vs, True, False, res.stats.nodes))
    return ObstructionReport(tuple(out))
