"""(k,2)-coloring search over pure complexes.

A (k,2)-coloring assigns one of k colors to every vertex so that no three
vertices of a common facet share a color. The search is a depth-first
backtracking over partial colorings seeded on a starting triple; it only ever
extends the coloring at "reachable" vertices (those completing a constraint
triple with two colored vertices) and always picks the one with the fewest
admissible colors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .complex import SimplicialComplex, build_complex


class ColoringError(ValueError):
    pass


class UnsupportedSError(ColoringError):
    pass


class NotPureError(ColoringError):
    pass


class PartialColoringError(ColoringError):
    pass


class NotStrongColoringError(ColoringError):
    pass


COLORABLE = "colorable"
NOT_COLORABLE = "not_colorable"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class Coloring:
    assignment: dict[int, int]
    k: int

    def __post_init__(self):
        bad = {v: c for v, c in self.assignment.items() if not 1 <= c <= self.k}
        if bad:
            raise ColoringError(f"colors out of range 1..{self.k}: {bad}")

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))


@dataclass(frozen=True)
class Violation:
    triple: tuple[int, ...]
    color: int


@dataclass
class ColoringProblem:
    complex: SimplicialComplex
    k: int
    s: int = 2
    removed_facets: frozenset = frozenset()
    start: tuple[int, ...] | None = None
    priority: tuple[int, ...] = ()
    constraint_triples: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.s != 2:
            raise UnsupportedSError(f"only s=2 is supported, got s={self.s}")
        if self.k < 2:
            raise ColoringError("k must be at least 2")
        if self.complex.dim < 2:
            raise NotPureError("constraint triples need facets of dimension >= 2")
        removed = frozenset(tuple(sorted(f)) for f in self.removed_facets)
        facets = set(self.complex.facets)
        missing = removed - facets
        if missing:
            raise ColoringError(f"removed facets are not facets: {sorted(missing)}")
        self.removed_facets = removed
        triples: set[tuple[int, ...]] = set()
        for f in self.complex.facets:
            if f not in removed:
                triples.update(combinations(f, 3))
        self.constraint_triples = tuple(sorted(triples))
        unknown = [v for v in self.priority if v not in set(self.complex.vertices)]
        if unknown:
            raise ColoringError(f"priority vertices not in the complex: {unknown}")
        self.priority = tuple(self.priority)


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    wall_time: float = 0.0


@dataclass
class SearchOutcome:
    status: str
    witness: Coloring | None
    stats: SearchStats

    @property
    def colorable(self) -> bool:
        return self.status == COLORABLE


def verify_coloring(problem: ColoringProblem, c: Coloring) -> Violation | None:
    missing = [v for v in problem.complex.vertices if v not in c.assignment]
    if missing:
        raise PartialColoringError(f"uncolored vertices: {missing[:10]}")
    for t in problem.constraint_triples:
        a, b, d = (c.assignment[v] for v in t)
        if a == b == d:
            return Violation(t, a)
    return None


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Engine:
    """Mutable search state; colors are 1..k, 0 means uncolored."""

    def __init__(self, problem: ColoringProblem, check_reachability: bool = False):
        self.problem = problem
        self.k = problem.k
        self.labels = list(problem.complex.vertices)
        index = {v: i for i, v in enumerate(self.labels)}
        self.index = index
        n = len(self.labels)
        self.n = n
        self.pairs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for t in problem.constraint_triples:
            a, b, c = (index[v] for v in t)
            self.pairs[a].append((b, c))
            self.pairs[b].append((a, c))
            self.pairs[c].append((a, b))
        self.color = [0] * n
        self.forb = [[0] * (self.k + 1) for _ in range(n)]
        self.fmask = [0] * n
        self.reach = [0] * n
        self.frontier: set[int] = set()
        self.uncolored = n
        self.maxc = 0
        self.check_reachability = check_reachability
        self.nodes = 0
        self.max_depth = 0
        self.priority = [index[v] for v in problem.priority]
        self.stopped = False
        self.stuck = -1
        self.check_every = 4096

    def assign(self, i: int, c: int) -> None:
        color, forb, fmask, reach, frontier = self.color, self.forb, self.fmask, self.reach, self.frontier
        bit = 1 << c
        for a, b in self.pairs[i]:
            ca = color[a]
            cb = color[b]
            if ca and not cb:
                o = b
            elif cb and not ca:
                o, ca = a, cb
            else:
                continue
            if reach[o] == 0:
                frontier.add(o)
            reach[o] += 1
            if ca == c:
                row = forb[o]
                if row[c] == 0:
                    fmask[o] |= bit
                row[c] += 1
        color[i] = c
        frontier.discard(i)
        self.uncolored -= 1

    def unassign(self, i: int) -> None:
        color, forb, fmask, reach, frontier = self.color, self.forb, self.fmask, self.reach, self.frontier
        c = color[i]
        color[i] = 0
        bit = 1 << c
        for a, b in self.pairs[i]:
            ca = color[a]
            cb = color[b]
            if ca and not cb:
                o = b
            elif cb and not ca:
                o, ca = a, cb
            else:
                continue
            reach[o] -= 1
            if reach[o] == 0:
                frontier.discard(o)
            if ca == c:
                row = forb[o]
                row[c] -= 1
                if row[c] == 0:
                    fmask[o] &= ~bit
        if reach[i]:
            frontier.add(i)
        self.uncolored += 1

    def options(self, i: int) -> list[int]:
        top = min(self.k, self.maxc + 1)
        m = self.fmask[i]
        return [c for c in range(1, top + 1) if not (m >> c) & 1]

    def select(self):
        """Next (vertex, options); None if some reachable vertex is stuck."""
        top = min(self.k, self.maxc + 1)
        allowed = ((1 << (top + 1)) - 2)
        fmask = self.fmask
        best, best_cnt = -1, 99
        for j in self.frontier:
            cnt = _popcount(allowed & ~fmask[j])
            if cnt < best_cnt or (cnt == best_cnt and j < best):
                best, best_cnt = j, cnt
                if cnt == 0:
                    self.stuck = j
                    return None
        for j in self.priority:
            if not self.color[j]:
                return j, self.options(j)
        if best < 0:
            if self.check_reachability:
                raise AssertionError("no reachable vertex although uncolored vertices remain")
            best = self.color.index(0)
        return best, self.options(best)

    def seeds(self) -> list[tuple[tuple[int, ...], tuple[int, int, int]]]:
        start = self.problem.start
        if start is None:
            triple = self.problem.constraint_triples[0]
        else:
            triple = tuple(sorted(start))[:3]
            if triple not in set(self.problem.constraint_triples):
                raise ColoringError(f"start {start} is not a constraint triple")
        pats = [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
        if self.k >= 3:
            pats.append((1, 2, 3))
        return [(triple, p) for p in pats]

    def apply_prefix(self, prefix: Iterable[tuple[int, int]]) -> bool:
        """Color labeled vertices in order; False if some step is inadmissible."""
        for v, c in prefix:
            i = self.index[v]
            if self.color[i] or not 1 <= c <= self.k or (self.fmask[i] >> c) & 1:
                return False
            self.assign(i, c)
            self.maxc = max(self.maxc, c)
        return True

    def witness(self) -> Coloring:
        return Coloring({v: self.color[i] for i, v in enumerate(self.labels)}, self.k)

    def dfs(self, stop=None) -> bool:
        """Exhaust the subtree below the current state; True on success."""
        stack: list[list] = []
        while True:
            if self.uncolored == 0:
                return True
            sel = self.select()
            if sel is not None:
                v, opts = sel
                stack.append([v, opts, 0, self.maxc])
                self.assign(v, opts[0])
                if opts[0] > self.maxc:
                    self.maxc = opts[0]
                self.nodes += 1
                if len(stack) > self.max_depth:
                    self.max_depth = len(stack)
                if stop is not None and self.nodes % self.check_every == 0 and stop():
                    self.stopped = True
                    return False
                continue
            while stack:
                fr = stack[-1]
                self.unassign(fr[0])
                self.maxc = fr[3]
                fr[2] += 1
                if fr[2] < len(fr[1]):
                    c = fr[1][fr[2]]
                    self.assign(fr[0], c)
                    if c > self.maxc:
                        self.maxc = c
                    self.nodes += 1
                    break
                stack.pop()
            else:
                return False


    def _culprits(self, j: int, top: int, pos: list[int]) -> set[int]:
        """Stack positions explaining why colors 1..top are forbidden at j.

        For each forbidden color the monochromatic pair assigned earliest is
        used. Colors above top were cut by the least-unused-color rule; their
        failures are color-swap images of the failure at top and need no culprit.
        """
        out: set[int] = set()
        color, m = self.color, self.fmask[j]
        for c in range(1, top + 1):
            if not (m >> c) & 1:
                continue
            best = None
            for a, b in self.pairs[j]:
                if color[a] == c and color[b] == c:
                    key = max(pos[a], pos[b])
                    if best is None or key < best[0]:
                        best = (key, pos[a], pos[b])
                        if key < 0:
                            break
            out.update(x for x in best[1:] if x >= 0)
        return out

    def dfs_backjump(self, stop=None) -> bool:
        """Like dfs, but on a dead end jump straight back to the latest choice involved in it."""
        stack: list[list] = []
        pos = [-1] * self.n
        while True:
            if self.uncolored == 0:
                return True
            sel = self.select()
            if sel is not None:
                v, opts = sel
                pos[v] = len(stack)
                stack.append([v, opts, 0, self.maxc, set()])
                self.assign(v, opts[0])
                if opts[0] > self.maxc:
                    self.maxc = opts[0]
                self.nodes += 1
                if len(stack) > self.max_depth:
                    self.max_depth = len(stack)
                if stop is not None and self.nodes % self.check_every == 0 and stop():
                    self.stopped = True
                    return False
                continue
            conflict = self._culprits(self.stuck, min(self.k, self.maxc + 1), pos)
            while True:
                if not conflict:
                    return False
                h = max(conflict)
                while len(stack) - 1 > h:
                    fr = stack.pop()
                    self.unassign(fr[0])
                    pos[fr[0]] = -1
                    self.maxc = fr[3]
                fr = stack[h]
                conflict.discard(h)
                fr[4] |= conflict
                self.unassign(fr[0])
                self.maxc = fr[3]
                fr[2] += 1
                if fr[2] < len(fr[1]):
                    c = fr[1][fr[2]]
                    self.assign(fr[0], c)
                    if c > self.maxc:
                        self.maxc = c
                    self.nodes += 1
                    break
                stack.pop()
                pos[fr[0]] = -1
                conflict = fr[4] | self._culprits(fr[0], min(self.k, fr[3] + 1), pos)


def _seed_prefixes(engine: _Engine) -> list[list[tuple[int, int]]]:
    return [list(zip(t, p)) for t, p in engine.seeds()]


def _split(problem: ColoringProblem, want: int) -> list[list[tuple[int, int]]]:
    """Breadth-first expansion of the seed configurations into subtree roots."""
    probe = _Engine(problem)
    frontier = _seed_prefixes(probe)
    while len(frontier) < want:
        nxt, grew = [], False
        for prefix in frontier:
            e = _Engine(problem)
            if not e.apply_prefix(prefix):
                continue
            if e.uncolored == 0:
                nxt.append(prefix)
                continue
            sel = e.select()
            if sel is None:
                continue
            v, opts = sel
            for c in opts:
                nxt.append(prefix + [(e.labels[v], c)])
            grew = True
        frontier = nxt
        if not grew:
            break
    return frontier


_STOP = None


def _worker_init(event):
    global _STOP
    _STOP = event


def _run_subtree(problem: ColoringProblem, prefix, backjump: bool = True):
    e = _Engine(problem)
    run = e.dfs_backjump if backjump else e.dfs
    ok = e.apply_prefix(prefix) and run(stop=lambda: _STOP is not None and _STOP.is_set())
    if ok and _STOP is not None:
        _STOP.set()
    return (e.witness() if ok else None), e.nodes, e.max_depth + len(prefix)


def search_coloring(problem: ColoringProblem, threads: int = 1,
                    check_reachability: bool = False, node_limit: int | None = None,
                    backjump: bool = True) -> SearchOutcome:
    """Exhaustive search. With node_limit (single-threaded only) the search may give up,
    returning status BUDGET_EXCEEDED."""
    t0 = time.perf_counter()
    stats = SearchStats()
    gave_up = False
    if threads <= 1:
        witness = None
        for prefix in _seed_prefixes(_Engine(problem)):
            if node_limit is not None and stats.nodes >= node_limit:
                gave_up = True
                break
            e = _Engine(problem, check_reachability)
            if not e.apply_prefix(prefix):
                continue
            stop = None
            if node_limit is not None:
                e.check_every = max(1, min(4096, node_limit))
                spent = stats.nodes
                stop = lambda: spent + e.nodes >= node_limit  # noqa: E731
            found = (e.dfs_backjump if backjump else e.dfs)(stop)
            stats.nodes += e.nodes + len(prefix)
            stats.max_depth = max(stats.max_depth, e.max_depth + len(prefix))
            if found:
                witness = e.witness()
                break
            if e.stopped:
                gave_up = True
                break
    else:
        witness = _parallel(problem, threads, stats, backjump)
    stats.wall_time = time.perf_counter() - t0
    if gave_up:
        return SearchOutcome(BUDGET_EXCEEDED, None, stats)
    if witness is not None:
        assert verify_coloring(problem, witness) is None
        return SearchOutcome(COLORABLE, witness, stats)
    return SearchOutcome(NOT_COLORABLE, None, stats)


def _parallel(problem: ColoringProblem, threads: int, stats: SearchStats,
              backjump: bool = True) -> Coloring | None:
    import multiprocessing as mp
    from concurrent.futures import ProcessPoolExecutor, as_completed

    prefixes = _split(problem, 8 * threads)
    ctx = mp.get_context("spawn")
    event = ctx.Manager().Event()
    witness = None
    with ProcessPoolExecutor(threads, mp_context=ctx, initializer=_worker_init, initargs=(event,)) as pool:
        futs = [pool.submit(_run_subtree, problem, p, backjump) for p in prefixes]
        for fut in as_completed(futs):
            w, nodes, depth = fut.result()
            stats.nodes += nodes
            stats.max_depth = max(stats.max_depth, depth)
            if w is not None and witness is None:
                witness = w
                event.set()
    return witness


@dataclass(frozen=True)
class Exceeds:
    k_max: int


def chromatic_number(K: SimplicialComplex, s: int = 2, k_max: int = 8, threads: int = 1) -> int | Exceeds:
    if k_max < 2:
        raise ColoringError("k_max must be at least 2")
    for k in range(2, k_max + 1):
        if search_coloring(ColoringProblem(K, k, s), threads=threads).colorable:
            return k
    return Exceeds(k_max)


def merge_color_classes(K: SimplicialComplex, c: Coloring) -> Coloring:
    """Turn a proper coloring of the 1-skeleton into a (ceil(k/2), 2)-coloring."""
    for f in K.facets:
        cols = [c.assignment[v] for v in f]
        if len(set(cols)) != len(cols):
            raise NotStrongColoringError(f"facet {list(f)} has a repeated color")
    return Coloring({v: (col + 1) // 2 for v, col in c.assignment.items()}, (c.k + 1) // 2)


def remove_facets(K: SimplicialComplex, facets) -> SimplicialComplex:
    drop = {tuple(sorted(f)) for f in facets}
    return build_complex([f for f in K.facets if f not in drop], K.name)
