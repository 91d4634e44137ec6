"""Pure abstract simplicial complexes stored as facet sets.

Vertices are positive integers. Facets are kept as sorted tuples and the
facet list itself is sorted, so two complexes are equal exactly when their
canonical facet lists agree.
"""

from __future__ import annotations

import sys
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class ComplexError(ValueError):
    pass


class NonUniformError(ComplexError):
    pass


class DegenerateFacetError(ComplexError):
    pass


class RedundantFacetError(ComplexError):
    pass


class UnknownVertexError(ComplexError):
    pass


class NotClosedError(ComplexError):
    pass


class NotManifoldError(ComplexError):
    pass


class DisconnectedError(ComplexError):
    pass


class ApexCollisionError(ComplexError):
    pass


class DimensionMismatchError(ComplexError):
    pass


class IdentificationCollisionError(ComplexError):
    pass


class TooFewVerticesError(ComplexError):
    pass


Facet = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple[Facet, ...]
    name: str | None = field(default=None, compare=False)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dim(self) -> int:
        return len(self.facets[0]) - 1

    def __len__(self) -> int:
        return len(self.facets)

    def __contains__(self, face) -> bool:
        face = set(face)
        return any(face <= set(f) for f in self.facets)

    def faces(self, k: int) -> set[Facet]:
        """All k-dimensional faces."""
        out: set[Facet] = set()
        for f in self.facets:
            out.update(combinations(f, k + 1))
        return out

    def renamed(self, name: str | None) -> "SimplicialComplex":
        return SimplicialComplex(self.facets, name)


def build_complex(facets: Iterable[Iterable[int]], name: str | None = None) -> SimplicialComplex:
    rows = [list(f) for f in facets]
    if not rows:
        raise ComplexError("empty facet list")
    size = len(rows[0])
    canon = []
    for row in rows:
        if len(row) != size:
            raise NonUniformError(f"facet {row} has {len(row)} vertices, expected {size}")
        if any(not isinstance(v, int) or isinstance(v, bool) or v < 1 for v in row):
            raise ComplexError(f"facet {row} has a non-positive or non-integer label")
        if len(set(row)) != len(row):
            raise DegenerateFacetError(f"facet {row} repeats a vertex")
        canon.append(tuple(sorted(row)))
    if size == 0:
        raise ComplexError("facets must be nonempty")
    counts = Counter(canon)
    dup = [f for f, c in counts.items() if c > 1]
    if dup:
        raise RedundantFacetError(f"facet {list(min(dup))} listed more than once")
    return SimplicialComplex(tuple(sorted(counts)), name)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(K.faces(k)) for k in range(K.dim + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(f_vector(K)))


def vertex_link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    rows = [tuple(u for u in f if u != v) for f in K.facets if v in f]
    if not rows:
        raise UnknownVertexError(f"vertex {v} not in complex")
    if len(rows[0]) == 0:
        raise ComplexError("link of a vertex in a 0-dimensional complex is empty")
    return build_complex(rows)


def cone(K: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    if apex is None:
        apex = max(K.vertices) + 1
    if apex in K.vertices:
        raise ApexCollisionError(f"apex {apex} already a vertex")
    return build_complex([f + (apex,) for f in K.facets])


def suspension(K: SimplicialComplex, apices: tuple[int, int] | None = None) -> SimplicialComplex:
    if apices is None:
        top = max(K.vertices)
        apices = (top + 1, top + 2)
    a, b = apices
    if a == b or a in K.vertices or b in K.vertices:
        raise ApexCollisionError(f"apices {apices} collide")
    return build_complex([f + (a,) for f in K.facets] + [f + (b,) for f in K.facets])


def facet_components(facets: Sequence[Facet]) -> list[list[Facet]]:
    """Connected components of the facet graph (adjacent = sharing a ridge)."""
    by_ridge: dict[Facet, list[int]] = defaultdict(list)
    for i, f in enumerate(facets):
        for r in combinations(f, len(f) - 1):
            by_ridge[r].append(i)
    seen = [False] * len(facets)
    comps = []
    for start in range(len(facets)):
        if seen[start]:
            continue
        seen[start] = True
        queue, comp = deque([start]), []
        while queue:
            i = queue.popleft()
            comp.append(facets[i])
            for r in combinations(facets[i], len(facets[i]) - 1):
                for j in by_ridge[r]:
                    if not seen[j]:
                        seen[j] = True
                        queue.append(j)
        comps.append(comp)
    return comps


def is_connected(K: SimplicialComplex) -> bool:
    """Connectivity of the underlying space (vertices joined through facets)."""
    parent = {v: v for v in K.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for f in K.facets:
        r = find(f[0])
        for v in f[1:]:
            parent[find(v)] = r
    return len({find(v) for v in K.vertices}) == 1


def _ridge_counts(K: SimplicialComplex) -> Counter:
    c: Counter = Counter()
    for f in K.facets:
        c.update(combinations(f, len(f) - 1))
    return c


def orient_facets(K: SimplicialComplex) -> dict[Facet, int] | None:
    """Coherent orientation signs relative to sorted vertex order, or None.

    Assumes every ridge lies in exactly two facets. Removing the i-th vertex
    of a facet with sign e induces sign e*(-1)^i on the ridge; neighbours must
    induce opposite signs.
    """
    by_ridge: dict[Facet, list[tuple[int, int]]] = defaultdict(list)
    for fi, f in enumerate(K.facets):
        for i in range(len(f)):
            by_ridge[f[:i] + f[i + 1:]].append((fi, i))
    sign = [0] * len(K.facets)
    for start in range(len(K.facets)):
        if sign[start]:
            continue
        sign[start] = 1
        queue = deque([start])
        while queue:
            fi = queue.popleft()
            f = K.facets[fi]
            for i in range(len(f)):
                induced = sign[fi] * (-1) ** i
                for gj, j in by_ridge[f[:i] + f[i + 1:]]:
                    if gj == fi:
                        continue
                    want = -induced * (-1) ** j
                    if sign[gj] == 0:
                        sign[gj] = want
                        queue.append(gj)
                    elif sign[gj] != want:
                        return None
    return dict(zip(K.facets, sign))


def check_orientation(K: SimplicialComplex, signs: dict[Facet, int]) -> bool:
    """Every ridge receives opposite induced orientations from its two cofacets."""
    induced: dict[Facet, list[int]] = defaultdict(list)
    for f in K.facets:
        for i in range(len(f)):
            induced[f[:i] + f[i + 1:]].append(signs[f] * (-1) ** i)
    return all(len(v) == 2 and v[0] == -v[1] for v in induced.values())


@dataclass(frozen=True)
class SurfaceClassification:
    is_closed_surface: bool
    orientable: bool
    euler: int
    genus: int
    orientation: dict | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ThreeManifoldReport:
    is_closed_manifold: bool
    orientable: bool
    euler: int
    vertex_links_spheres: bool
    orientation: dict | None = field(default=None, compare=False, repr=False)


def _is_cycle(edges: Sequence[Facet]) -> bool:
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(n) != 2 for n in adj.values()):
        return False
    start = edges[0][0]
    prev, cur, steps = None, start, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == start:
            break
    return steps == len(adj)


def is_2_sphere(K: SimplicialComplex) -> bool:
    if K.dim != 2:
        return False
    try:
        c = classify_closed_manifold(K)
    except ComplexError:
        return False
    return c.euler == 2


def classify_closed_manifold(K: SimplicialComplex):
    d = K.dim
    if d not in (2, 3):
        raise DimensionMismatchError(f"classification supports dimension 2 or 3, got {d}")
    ridges = _ridge_counts(K)
    for r, c in sorted(ridges.items()):
        if c == 1:
            raise NotClosedError(f"face {list(r)} lies in only one facet")
        if c > 2:
            raise NotManifoldError(f"face {list(r)} lies in {c} facets")
    if not is_connected(K):
        raise DisconnectedError("complex is not connected")
    star: dict[int, list[Facet]] = defaultdict(list)
    for f in K.facets:
        for v in f:
            star[v].append(tuple(u for u in f if u != v))
    for v in sorted(star):
        link = star[v]
        ok = _is_cycle(link) if d == 2 else is_2_sphere(build_complex(link))
        if not ok:
            raise NotManifoldError(f"link of vertex {v} is not a {'cycle' if d == 2 else '2-sphere'}")
    chi = euler_characteristic(K)
    signs = orient_facets(K)
    if d == 3:
        return ThreeManifoldReport(True, signs is not None, chi, True, signs)
    if signs is not None:
        return SurfaceClassification(True, True, chi, (2 - chi) // 2, signs)
    return SurfaceClassification(True, False, chi, 2 - chi, None)


def connected_sum(
    K1: SimplicialComplex,
    K2: SimplicialComplex,
    F1: Iterable[int] | None = None,
    F2: Iterable[int] | None = None,
    matching: dict[int, int] | None = None,
) -> SimplicialComplex:
    """Remove a facet from each complex and glue along the boundaries.

    K2 is relabeled: vertices of F2 take the matched labels of F1, all other
    vertices get fresh labels above max(K1) in sorted order.
    """
    if K1.dim != K2.dim:
        raise DimensionMismatchError(f"dimensions differ: {K1.dim} vs {K2.dim}")
    F1 = tuple(sorted(F1)) if F1 is not None else K1.facets[0]
    F2 = tuple(sorted(F2)) if F2 is not None else K2.facets[0]
    if F1 not in set(K1.facets) or F2 not in set(K2.facets):
        raise ComplexError("chosen faces are not facets")
    if matching is None:
        matching = dict(zip(F1, F2))
    if sorted(matching) != list(F1) or sorted(matching.values()) != list(F2):
        raise IdentificationCollisionError("matching is not a bijection F1 -> F2")
    relabel = {b: a for a, b in matching.items()}
    nxt = max(K1.vertices) + 1
    for v in K2.vertices:
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    rows = [f for f in K1.facets if f != F1]
    for f in K2.facets:
        if f == F2:
            continue
        g = [relabel[v] for v in f]
        if len(set(g)) != len(g):
            raise IdentificationCollisionError(f"facet {list(f)} degenerates")
        rows.append(g)
    try:
        return build_complex(rows)
    except RedundantFacetError as e:
        raise IdentificationCollisionError(str(e)) from e


def gale_evenness(subset: Sequence[int], m: int) -> bool:
    s = set(subset)
    outside = [i for i in range(1, m + 1) if i not in s]
    for i, j in zip(outside, outside[1:]):
        if sum(1 for x in s if i < x < j) % 2:
            return False
    return True


def cyclic_polytope_boundary(m: int, dim: int) -> SimplicialComplex:
    """Boundary of the cyclic polytope with m vertices in R^dim."""
    if m < dim + 1:
        raise TooFewVerticesError(f"need at least {dim + 1} vertices, got {m}")
    rows = [c for c in combinations(range(1, m + 1), dim) if gale_evenness(c, m)]
    return build_complex(rows, name=f"cyclic_polytope_{m}_{dim}")


def is_neighborly(K: SimplicialComplex) -> bool:
    n = len(K.vertices)
    return len(K.faces(1)) == n * (n - 1) // 2


def relabel(K: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    return build_complex([[mapping[v] for v in f] for f in K.facets], K.name)


def find_isomorphism(K1: SimplicialComplex, K2: SimplicialComplex) -> dict[int, int] | None:
    """Vertex bijection carrying K1's facets onto K2's, or None.

    Colour refinement on (facet degree, neighbour multiset) seeds a
    backtracking match; facets are checked as soon as they are fully mapped.
    """
    if f_vector(K1) != f_vector(K2):
        return None

    def refine(K):
        star = defaultdict(list)
        for f in K.facets:
            for v in f:
                star[v].append(f)
        color = {v: len(star[v]) for v in K.vertices}
        for _ in range(len(K.vertices)):
            sig = {v: (color[v], tuple(sorted(tuple(sorted(color[u] for u in f if u != v)) for f in star[v])))
                   for v in K.vertices}
            keys = {s: i for i, s in enumerate(sorted(set(sig.values())))}
            new = {v: keys[sig[v]] for v in K.vertices}
            if len(set(new.values())) == len(set(color.values())):
                return new
            color = new
        return color

    star1 = defaultdict(list)
    for f in K1.facets:
        for v in f:
            star1[v].append(f)
    # refine both complexes jointly so class labels are comparable
    joint = build_complex(list(K1.facets) + [tuple(v + max(K1.vertices) for v in f) for f in K2.facets])
    cj = refine(joint)
    off = max(K1.vertices)
    cls1 = {v: cj[v] for v in K1.vertices}
    cls2 = {v: cj[v + off] for v in K2.vertices}
    if Counter(cls1.values()) != Counter(cls2.values()):
        return None
    facets2 = set(K2.facets)
    class_size = Counter(cls1.values())
    order = sorted(K1.vertices, key=lambda v: (class_size[cls1[v]], cls1[v], v))
    # prefer extending along edges so facet checks kick in early
    adj1 = defaultdict(set)
    for f in K1.facets:
        for v in f:
            adj1[v].update(f)
    seq, placed = [], set()
    for root in order:
        if root in placed:
            continue
        placed.add(root)
        seq.append(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in sorted(adj1[v] - placed, key=lambda u: (class_size[cls1[u]], u)):
                placed.add(u)
                seq.append(u)
                queue.append(u)
    by_class2 = defaultdict(list)
    for v in K2.vertices:
        by_class2[cls2[v]].append(v)
    m: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v):
        for f in star1[v]:
            if all(u in m for u in f):
                if tuple(sorted(m[u] for u in f)) not in facets2:
                    return False
        return True

    def go(i):
        if i == len(seq):
            return True
        v = seq[i]
        for w in by_class2[cls1[v]]:
            if w in used:
                continue
            m[v] = w
            used.add(w)
            if consistent(v) and go(i + 1):
                return True
            del m[v]
            used.discard(w)
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * len(seq) + 100))
    try:
        return dict(m) if go(0) else None
    finally:
        sys.setrecursionlimit(old)
