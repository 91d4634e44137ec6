"""Maximum-genus embeddings of Steiner triple systems.

Start from the disc formed by the triples through one point, whose boundary
is a closed walk. Each further triple uvw is glued on as a handle: choose
occurrences of u, v, w on the walk, write it as u A v B w C and replace it by
u A v w C u v B w. In the nonorientable variant the last triple is glued with
a twist instead, giving u A v w B' v u C' w with B', C' reversed. Once every
triple is placed the walk traverses each pair of points exactly once, and
the remaining face is triangulated by a zigzag annulus plus a cone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .coloring import Coloring
from .complex import SimplicialComplex, build_complex, classify_closed_manifold
from .steiner import SteinerTripleSystem


class EmbeddingError(ValueError):
    pass


class TripleNotOnCycleError(EmbeddingError):
    pass


class NotAnSTSError(EmbeddingError):
    pass


class IncompleteCycleError(EmbeddingError):
    pass


class InvalidBaseColoringError(EmbeddingError):
    pass


Selector = Callable[[Sequence[int], tuple[int, int, int]], tuple[int, int, int]]


def scan_selector(word: Sequence[int], triple: tuple[int, int, int]) -> tuple[int, int, int]:
    """Scan from the origin, taking the first position holding a not-yet-taken label.

    The labels are used in the order they are met, so the returned positions
    are increasing.
    """
    want = set(triple)
    pos = []
    for i, v in enumerate(word):
        if v in want:
            pos.append(i)
            want.discard(v)
            if not want:
                return tuple(pos)
    raise TripleNotOnCycleError(f"labels {sorted(want)} of {triple} not found in order on the walk")


def ordered_selector(word: Sequence[int], triple: tuple[int, int, int]) -> tuple[int, int, int]:
    """First u from the origin, then the first v after it, then the first w after that (wrapping)."""
    L = len(word)
    pos, start = [], 0
    for label in triple:
        for step in range(L):
            i = (start + step) % L
            if word[i] == label and i not in pos:
                pos.append(i)
                start = i + 1
                break
        else:
            raise TripleNotOnCycleError(f"label {label} of {triple} not on the walk")
    return tuple(pos)


SELECTORS: dict[str, Selector] = {"scan": scan_selector, "ordered": ordered_selector}


@dataclass
class InsertionStep:
    triple: tuple[int, int, int]
    positions: tuple[int, int, int]
    twisted: bool
    word: tuple[int, ...]


@dataclass
class EmbeddingState:
    sts: SteinerTripleSystem
    star_vertex: int
    star_order: tuple[tuple[int, int, int], ...]
    pending: list[tuple[int, int, int]]
    cycle: tuple[int, ...]
    handles: int = 0
    orientable: bool = True
    history: list[InsertionStep] = field(default_factory=list)

    def word_text(self) -> str:
        return "".join(str(v) for v in self.cycle) if max(self.cycle) < 10 else " ".join(map(str, self.cycle))


def _cyclic_slices(word: Sequence[int], i: int, j: int, k: int):
    """Split the cyclic word at positions i, j, k (in cyclic order) into u, A, v, B, w, C."""
    L = len(word)
    rot = list(word[i:]) + list(word[:i])
    j, k = (j - i) % L, (k - i) % L
    if not 0 < j < k:
        raise TripleNotOnCycleError("occurrences are not in cyclic order")
    return rot[0], rot[1:j], rot[j], rot[j + 1:k], rot[k], rot[k + 1:]


def insert_handle(word: Sequence[int], pos: tuple[int, int, int]) -> list[int]:
    i, j, k = pos
    if i < j < k:
        X, Y = list(word[:i]), list(word[k + 1:])
        u, A, v, B, w = word[i], list(word[i + 1:j]), word[j], list(word[j + 1:k]), word[k]
        return X + [u, v] + B + [w, u] + A + [v, w] + Y
    u, A, v, B, w, C = _cyclic_slices(word, i, j, k)
    return [u] + A + [v, w] + C + [u, v] + B + [w]


def insert_twisted(word: Sequence[int], pos: tuple[int, int, int]) -> list[int]:
    u, A, v, B, w, C = _cyclic_slices(word, *pos)
    return [u] + A + [v, w] + B[::-1] + [v, u] + C[::-1] + [w]


def star_walk(star_vertex: int, star_order: Sequence[Sequence[int]]) -> list[int]:
    word = []
    for t in star_order:
        others = [v for v in t if v != star_vertex]
        word += [star_vertex] + others
    return word


def embed_max_genus(
    sts: SteinerTripleSystem,
    star_vertex: int = 1,
    star_order: Sequence[Sequence[int]] | None = None,
    triple_order: Sequence[Sequence[int]] | None = None,
    orientable: bool = True,
    selector: Selector | str = "scan",
) -> EmbeddingState:
    """Insert every triple as a handle (or a twisted final handle) into the star's boundary walk.

    star_order lists the triples through star_vertex in cyclic order; each is
    read as (star_vertex, first, second) with the other two points in the
    order given. Defaults: sorted triples, points ascending.
    """
    if isinstance(selector, str):
        selector = SELECTORS[selector]
    star = [t for t in sts.triples if star_vertex in t]
    if not star:
        raise NotAnSTSError(f"point {star_vertex} lies in no triple")
    if star_order is None:
        star_order = star
    if sorted(tuple(sorted(t)) for t in star_order) != sorted(star):
        raise NotAnSTSError("star_order must list exactly the triples through the star vertex")
    rest = [t for t in sts.triples if star_vertex not in t]
    if triple_order is None:
        triple_order = rest
    order = [tuple(t) for t in triple_order]
    if sorted(tuple(sorted(t)) for t in order) != sorted(rest):
        raise NotAnSTSError("triple_order must list every triple avoiding the star vertex exactly once")
    if not orientable and not order:
        raise EmbeddingError("the nonorientable variant needs at least one triple outside the star")
    state = EmbeddingState(sts, star_vertex, tuple(tuple(t) for t in star_order), list(order),
                           tuple(star_walk(star_vertex, star_order)), 0, orientable)
    while state.pending:
        t = state.pending.pop(0)
        pos = selector(state.cycle, t)
        L = len(state.cycle)
        pos = tuple(sorted(pos, key=lambda p: (p - pos[0]) % L))
        twisted = not orientable and not state.pending
        new = insert_twisted(state.cycle, pos) if twisted else insert_handle(state.cycle, pos)
        if not twisted:
            state.handles += 1
        state.cycle = tuple(new)
        state.history.append(InsertionStep(t, pos, twisted, state.cycle))
    return state


def walk_pairs(word: Sequence[int]) -> list[tuple[int, int]]:
    L = len(word)
    return [tuple(sorted((word[i], word[(i + 1) % L]))) for i in range(L)]


def is_eulerian_walk(word: Sequence[int], n: int) -> bool:
    pairs = walk_pairs(word)
    return len(pairs) == comb(n, 2) and len(set(pairs)) == len(pairs) and all(a != b for a, b in pairs)


def surface_genus(n: int, orientable: bool) -> int:
    return (n - 1) * (n - 3) // (6 if orientable else 3)


def expected_f_vector(n: int) -> tuple[int, int, int]:
    L = comb(n, 2)
    return (n + L + 1, 5 * L, L // 3 + 3 * L)


def complete_to_triangulation(state: EmbeddingState, verify: bool = True) -> SimplicialComplex:
    n = state.sts.n
    word = state.cycle
    L = len(word)
    if state.pending or L != comb(n, 2):
        raise IncompleteCycleError(f"walk has length {L}, expected {comb(n, 2)} with all triples placed")
    inner = [n + 1 + j for j in range(L)]
    apex = n + L + 1
    rows = [list(t) for t in state.sts.triples]
    for j in range(L):
        o0, o1 = word[j], word[(j + 1) % L]
        i0, i1 = inner[j], inner[(j + 1) % L]
        rows += [[o0, o1, i0], [o1, i0, i1], [apex, i0, i1]]
    kind = "orientable" if state.orientable else "nonorientable"
    K = build_complex(rows, name=f"{state.sts.name or 'sts'}_embedding_{kind}")
    if verify:
        c = classify_closed_manifold(K)
        if c.orientable != state.orientable or c.genus != surface_genus(n, state.orientable):
            raise EmbeddingError(f"completed surface is {c}, not the expected {kind} genus "
                                 f"{surface_genus(n, state.orientable)}")
    return K


def collar_coloring(state: EmbeddingState, base: Coloring) -> Coloring:
    """Extend a (k,2)-coloring of the triple system to the completed surface.

    Inner vertex j sits under the walk edge (w_j, w_{j+1}); it avoids the color of
    w_j whenever that color is 1 or 2, otherwise keeps the previous color.
    The apex takes color 3.
    """
    n = state.sts.n
    missing = [v for v in range(1, n + 1) if v not in base.assignment]
    if missing:
        raise InvalidBaseColoringError(f"points without color: {missing}")
    for t in state.sts.triples:
        if len({base[v] for v in t}) == 1:
            raise InvalidBaseColoringError(f"triple {t} is monochromatic")
    word = state.cycle
    L = len(word)
    out = {v: base[v] for v in range(1, n + 1)}
    cur = 1
    for j in range(L):
        o = base[word[j]]
        if o == 1:
            cur = 2
        elif o == 2:
            cur = 1
        out[n + 1 + j] = cur
    out[n + L + 1] = 3
    return Coloring(out, max(3, base.k))
