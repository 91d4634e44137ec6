"""Steiner triple systems, their quasigroups, and Steiner surfaces.

A Steiner surface is the union of two triple systems on the same points
whose triples are disjoint and which together triangulate a closed surface.
Here the second system is the image of the first under a permutation T of
the points. Whether the union is a surface is decided point by point from
the transition permutation

    sigma(x)(y) = mu_minus(x, mu_plus(x, y)),

which must fix x and split the remaining n-1 points into two cycles of
length (n-1)/2. An orientation picks one of those two cycles at every point.

Points are 1..n. Permutations act on 0..n with 0 fixed, which doubles as
the zero element when the points are the nonzero elements of GF(2^d).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .complex import SimplicialComplex, build_complex
from .gf2d import FieldGF2d
from .perm import Permutation, group_orbits


class SteinerError(ValueError):
    pass


class PairUncoveredError(SteinerError):
    pass


class PairDoubleCoveredError(SteinerError):
    pass


class BadOrderError(SteinerError):
    pass


class DomainMismatchError(SteinerError):
    pass


class NotTransversalError(SteinerError):
    pass


class NotDisjointError(SteinerError):
    pass


class NotASurfaceError(SteinerError):
    pass


class OddSOrientableError(SteinerError):
    pass


Triple = tuple[int, int, int]


@dataclass(frozen=True)
class SteinerTripleSystem:
    n: int
    triples: tuple[Triple, ...]
    name: str | None = field(default=None, compare=False)

    def as_complex(self) -> SimplicialComplex:
        return build_complex(self.triples, name=self.name)

    def star(self, v: int) -> list[Triple]:
        return [t for t in self.triples if v in t]


def sts_from_triples(triples: Iterable[Iterable[int]], n: int | None = None,
                     name: str | None = None) -> SteinerTripleSystem:
    rows = [tuple(sorted(t)) for t in triples]
    if any(len(t) != 3 or len(set(t)) != 3 for t in rows):
        raise SteinerError("every block must have three distinct points")
    pts = {v for t in rows for v in t}
    if n is None:
        n = max(pts) if pts else 0
    if pts and (min(pts) < 1 or max(pts) > n):
        raise SteinerError(f"points must lie in 1..{n}")
    if n % 6 not in (1, 3):
        raise BadOrderError(f"no Steiner triple system on {n} points (n mod 6 must be 1 or 3)")
    seen: dict[tuple[int, int], Triple] = {}
    for t in rows:
        for p in combinations(t, 2):
            if p in seen:
                raise PairDoubleCoveredError(f"pair {p} lies in {seen[p]} and {t}")
            seen[p] = t
    for p in combinations(range(1, n + 1), 2):
        if p not in seen:
            raise PairUncoveredError(f"pair {p} lies in no triple")
    return SteinerTripleSystem(n, tuple(sorted(rows)), name)


class SteinerQuasigroup:
    """mu(x, y) = third point of the triple through x and y; mu(x, x) = x."""

    def __init__(self, n: int, table: list[list[int]]):
        self.n = n
        self.table = table

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def triples(self) -> tuple[Triple, ...]:
        out = set()
        for x in range(1, self.n + 1):
            for y in range(x + 1, self.n + 1):
                out.add(tuple(sorted((x, y, self.table[x][y]))))
        return tuple(sorted(out))

    def check_axioms(self) -> bool:
        t, r = self.table, range(1, self.n + 1)
        return all(
            t[x][x] == x and t[x][y] == t[y][x] and t[x][t[x][y]] == y
            for x in r for y in r
        )


def quasigroup_of(sts: SteinerTripleSystem) -> SteinerQuasigroup:
    n = sts.n
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for x in range(1, n + 1):
        table[x][x] = x
    for a, b, c in sts.triples:
        table[a][b] = table[b][a] = c
        table[a][c] = table[c][a] = b
        table[b][c] = table[c][b] = a
    return SteinerQuasigroup(n, table)


def sts_of(mu: SteinerQuasigroup) -> SteinerTripleSystem:
    return sts_from_triples(mu.triples(), mu.n)


def _check_domain(mu: SteinerQuasigroup, T: Permutation) -> None:
    if len(T) != mu.n + 1 or T(0) != 0:
        raise DomainMismatchError(f"permutation must act on 0..{mu.n} fixing 0")


def image_triples(triples: Iterable[Triple], T: Permutation) -> tuple[Triple, ...]:
    return tuple(sorted(tuple(sorted(T(v) for v in t)) for t in triples))


def transported(mu: SteinerQuasigroup, T: Permutation) -> SteinerQuasigroup:
    """The quasigroup of the image system: (x, y) -> T(mu(T^-1 x, T^-1 y))."""
    _check_domain(mu, T)
    Ti = T.inverse()
    n = mu.n
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for x in range(1, n + 1):
        row = mu.table[Ti(x)]
        table[x] = [0] + [T(row[Ti(y)]) for y in range(1, n + 1)]
    return SteinerQuasigroup(n, table)


def transition_permutation(mu_minus: SteinerQuasigroup, x: int, mu_plus: SteinerQuasigroup) -> Permutation:
    """y -> mu_minus(x, mu_plus(x, y)) on 0..n (0 fixed)."""
    rm, rp = mu_minus.table[x], mu_plus.table[x]
    return Permutation([0] + [rm[rp[y]] for y in range(1, mu_minus.n + 1)])


def shift_permutation(mu: SteinerQuasigroup, x: int, T: Permutation) -> Permutation:
    return transition_permutation(mu, x, transported(mu, T))


@dataclass
class TransversalReport:
    is_transversal: bool
    cycle_types: dict[int, tuple[int, ...]]
    orientable: bool | None = None
    orientation: "Orientation | None" = None
    checked_points: tuple[int, ...] = ()


@dataclass(frozen=True)
class Orientation:
    """x -> the orbit of sigma(x) designated positive."""

    choice: dict[int, frozenset[int]]

    def flipped(self, sigmas: Sequence[Permutation]) -> "Orientation":
        out = {}
        for x, orb in self.choice.items():
            rest = frozenset(range(1, len(sigmas[x]))) - orb - {x}
            out[x] = rest
        return Orientation(out)


def _stabilizes(gens: Iterable[Permutation], triples: Sequence[Triple]) -> bool:
    ts = set(triples)
    return all(set(image_triples(triples, g)) == ts for g in gens)


def is_transversal(mu: SteinerQuasigroup, T: Permutation,
                   group: Sequence[Permutation] | None = None,
                   orientation: bool = True) -> TransversalReport:
    """Check the 1 + two (n-1)/2-cycles structure of every transition permutation.

    If group generators are given (elements preserving both triple systems),
    only the smallest point of each orbit is checked.
    """
    _check_domain(mu, T)
    plus = transported(mu, T)
    n = mu.n
    m = (n - 1) // 2
    pts = list(range(1, n + 1))
    if group:
        for g in group:
            if len(g) != n + 1 or g(0) != 0:
                raise DomainMismatchError("group elements must act on 0..n fixing 0")
        if not (_stabilizes(group, mu.triples()) and _stabilizes(group, plus.triples())):
            raise SteinerError("supplied group does not preserve both triple systems")
        pts = sorted(min(o) for o in group_orbits(group, pts))
    want = (1, m, m)
    types, ok = {}, True
    for x in pts:
        ct = transition_permutation(mu, x, plus).cycle_type(range(1, n + 1))
        types[x] = ct
        if ct != want:
            ok = False
    rep = TransversalReport(ok, types, checked_points=tuple(pts))
    if ok and orientation:
        o = orient(mu, plus)
        rep.orientable = o is not None
        rep.orientation = o
    return rep


def is_orientation(mu_minus: SteinerQuasigroup, mu_plus: SteinerQuasigroup,
                   choice: dict[int, frozenset[int]]) -> bool:
    """x in choice[mu_plus(x,y)]  <=>  x in choice[mu_minus(x,y)] for all x != y."""
    n = mu_minus.n
    for x in range(1, n + 1):
        rp, rm = mu_plus.table[x], mu_minus.table[x]
        for y in range(1, n + 1):
            if y != x and (x in choice[rp[y]]) != (x in choice[rm[y]]):
                return False
    return True


def orient(mu_minus: SteinerQuasigroup, mu_plus: SteinerQuasigroup) -> Orientation | None:
    """Propagate a local orientation from the base point; None if nonorientable.

    Base point v = 1 with positive orbit through 2. For every u in that orbit
    and every x in the sigma(u)-orbit of v, the positive orbit at x is forced
    to be the sigma(x)-orbit of u. Orientable exactly when this assigns one
    orbit to every point and the result is a valid orientation.
    """
    n = mu_minus.n
    sig = [None] + [transition_permutation(mu_minus, x, mu_plus) for x in range(1, n + 1)]
    for x in range(1, n + 1):
        if sig[x].cycle_type(range(1, n + 1)) != (1, (n - 1) // 2, (n - 1) // 2):
            raise NotASurfaceError(f"transition at {x} does not have two equal cycles")
    v = 1
    choice: dict[int, frozenset[int]] = {v: sig[v].orbit(2)}
    for u in sorted(choice[v]):
        for x in sorted(sig[u].orbit(v)):
            o = sig[x].orbit(u)
            if choice.setdefault(x, o) != o:
                return None
    if len(choice) != n or not is_orientation(mu_minus, mu_plus, choice):
        return None
    return Orientation(choice)


def orientability_of_steiner_surface(mu: SteinerQuasigroup, T: Permutation) -> Orientation | None:
    return orient(mu, transported(mu, T))


def orientation_from_shift(mu: SteinerQuasigroup, T: Permutation, s_plus: Permutation) -> Orientation | None:
    """Orientation x -> orbit of sigma(x) through s_plus(x), if that choice is coherent."""
    plus = transported(mu, T)
    n = mu.n
    choice = {}
    for x in range(1, n + 1):
        if s_plus(x) == x:
            raise SteinerError("s_plus must be fixed-point free on the points")
        choice[x] = transition_permutation(mu, x, plus).orbit(s_plus(x))
    return Orientation(choice) if is_orientation(mu, plus, choice) else None


def same_orientation_up_to_flip(a: Orientation, b: Orientation) -> bool:
    same = all(a.choice[x] == b.choice[x] for x in a.choice)
    opposite = all(not (a.choice[x] & b.choice[x]) for x in a.choice)
    return same or opposite


def steiner_surface(mu: SteinerQuasigroup, T: Permutation, name: str | None = None) -> SimplicialComplex:
    _check_domain(mu, T)
    lower = mu.triples()
    upper = image_triples(lower, T)
    common = set(lower) & set(upper)
    if common:
        raise NotDisjointError(f"triple {min(common)} lies in both systems")
    if not is_transversal(mu, T, orientation=False).is_transversal:
        raise NotTransversalError("the two triple systems do not form a surface")
    return build_complex(list(lower) + list(upper), name=name)


def steiner_euler(n: int) -> int:
    return -n * (n - 7) // 6


# --- constructions ---------------------------------------------------------

def bose_label(s: int, x: int, y: int) -> int:
    q = 2 * s + 1
    return 1 + (x % q) + q * (y % 3)


def bose(s: int) -> SteinerTripleSystem:
    """Bose system on Z_{2s+1} x Z_3."""
    if s < 1:
        raise SteinerError("s must be at least 1")
    q = 2 * s + 1
    half = s + 1  # inverse of 2 mod q
    rows = [[bose_label(s, x, y) for y in range(3)] for x in range(q)]
    for y in range(3):
        for x1, x2 in combinations(range(q), 2):
            rows.append([bose_label(s, x1, y), bose_label(s, x2, y),
                         bose_label(s, (x1 + x2) * half, y + 1)])
    return sts_from_triples(rows, 3 * q, name=f"bose_{s}")


def _bose_perm(s: int, fn) -> Permutation:
    q = 2 * s + 1
    img = [0] * (3 * q + 1)
    for x in range(q):
        for y in range(3):
            img[bose_label(s, x, y)] = bose_label(s, *fn(x, y))
    return Permutation(img)


def bose_transversal(s: int, kind: str = "orientable") -> Permutation:
    if kind == "orientable":
        if s % 2 or s < 2:
            raise OddSOrientableError(f"the orientable recipe needs even s >= 2, got {s}")
        swap = {0: (0, 0), 1: (1, 2), 2: (1, 1)}
        return _bose_perm(s, lambda x, y: (x + swap[y][0], swap[y][1]))
    if kind == "nonorientable":
        return _bose_perm(s, lambda x, y: (x + y, y))
    raise SteinerError(f"unknown kind {kind!r}")


def bose_row_shift(s: int) -> Permutation:
    """(x, y) -> (x, y+1)."""
    return _bose_perm(s, lambda x, y: (x, y + 1))


def projective_sts(F: FieldGF2d) -> SteinerTripleSystem:
    N = F.order
    rows = [(a, b, a ^ b) for a in range(1, N) for b in range(a + 1, N) if (a ^ b) > b]
    return sts_from_triples(rows, N - 1, name=f"pg_{N}")


def affine_label(vec: Sequence[int]) -> int:
    return 1 + sum(c * 3 ** i for i, c in enumerate(vec))


def affine_sts(k: int) -> SteinerTripleSystem:
    if k < 1:
        raise SteinerError("k must be at least 1")
    pts = list(product(range(3), repeat=k))
    rows = set()
    for a, b in combinations(pts, 2):
        c = tuple((-x - y) % 3 for x, y in zip(a, b))
        rows.add(tuple(sorted((affine_label(a), affine_label(b), affine_label(c)))))
    return sts_from_triples(rows, 3 ** k, name=f"ag_{k}_3")


def cyclic_sts(n: int, base_blocks: Iterable[Sequence[int]]) -> SteinerTripleSystem:
    """Develop base blocks over Z_n (labels x+1); short orbits are deduplicated."""
    rows = {tuple(sorted((b + i) % n + 1 for b in blk)) for blk in base_blocks for i in range(n)}
    return sts_from_triples(rows, n, name=f"cyclic_{n}")
