"""Searches for transversals of projective triple systems up to symmetry.

Two permutations T and g T h with g, h in the automorphism group of PG(N)
give isomorphic Steiner surfaces, so it suffices to test one permutation per
double coset.

* For N = 8 every permutation of F_8 fixing 0 is enumerated and the 5040 of
  them are partitioned into GL(3,2) double cosets.
* For N - 1 = p prime only the normalizer of the Singer cycle is searched:
  maps x -> c * x^e, i.e. i -> g + e*i on discrete logarithms. The classes
  are taken under the Singer cycle and the Frobenius acting on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .gf2d import FieldGF2d, make_field
from .perm import Permutation
from .steiner import SteinerError, SteinerQuasigroup, is_transversal, projective_sts, quasigroup_of


class NotPrimeOrderError(SteinerError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def linear_group(F: FieldGF2d) -> list[Permutation]:
    """All F_2-linear bijections of the field, as permutations of 0..N-1."""
    d, N = F.d, F.order
    out = []

    def extend(images: list[int], span: set[int]):
        if len(images) == d:
            img = [0] * N
            for x in range(N):
                v = 0
                for i in range(d):
                    if x >> i & 1:
                        v ^= images[i]
                img[x] = v
            out.append(Permutation(img))
            return
        for y in range(1, N):
            if y not in span:
                extend(images + [y], span | {s ^ y for s in span})

    extend([], {0})
    return sorted(out, key=lambda p: p.images)


@dataclass(frozen=True)
class CosetClass:
    representative: Permutation
    size: int
    is_transversal: bool
    orientable: bool | None
    label: str = ""


@dataclass(frozen=True)
class Census:
    field_order: int
    group_order: int
    classes: tuple[CosetClass, ...]

    @property
    def transversal(self) -> tuple[CosetClass, ...]:
        return tuple(c for c in self.classes if c.is_transversal)


def _classify(mu: SteinerQuasigroup, T: Permutation) -> tuple[bool, bool | None]:
    rep = is_transversal(mu, T)
    return rep.is_transversal, rep.orientable


def enumerate_transversal_cosets_d3(generators: list[Permutation] | None = None) -> Census:
    """Partition the 0-fixing permutations of F_8 into GL(3,2) double cosets and test each."""
    F = make_field(3)
    mu = quasigroup_of(projective_sts(F))
    group = linear_group(F)
    gens = generators or group
    perms = [Permutation((0,) + p) for p in permutations(range(1, 8))]
    index = {p: i for i, p in enumerate(perms)}
    uf = _UnionFind(len(perms))
    for i, p in enumerate(perms):
        for g in gens:
            uf.union(i, index[g * p])
            uf.union(i, index[p * g])
    members: dict[int, list[int]] = {}
    for i in range(len(perms)):
        members.setdefault(uf.find(i), []).append(i)
    classes = []
    for root in sorted(members):
        T = perms[root]
        ok, ori = _classify(mu, T)
        classes.append(CosetClass(T, len(members[root]), ok, ori))
    return Census(8, len(group), tuple(classes))


def singer_normalizer_search(F: FieldGF2d) -> Census:
    """Classes of maps x -> c x^e (e a unit mod N-1) under Singer and Frobenius on both sides.

    Every class contains a monomial x^e; the least such exponent labels it.
    """
    N = F.order
    p = N - 1
    if not _is_prime(p):
        raise NotPrimeOrderError(f"N-1 = {p} is not prime")
    mu = quasigroup_of(projective_sts(F))
    units = [e for e in range(1, p) if gcd(e, p) == 1]
    maps = [(g, e) for e in units for g in range(p)]
    index = {m: i for i, m in enumerate(maps)}
    uf = _UnionFind(len(maps))
    frob = [(1 << j) % p for j in range(F.d)]
    for i, (g, e) in enumerate(maps):
        # left: i -> g + e*i followed by i -> d + f*i; right: the other order
        uf.union(i, index[((g + 1) % p, e)])
        for f in frob:
            uf.union(i, index[((f * g) % p, (f * e) % p)])
            uf.union(i, index[(g, (e * f) % p)])
    members: dict[int, list[int]] = {}
    for i in range(len(maps)):
        members.setdefault(uf.find(i), []).append(i)
    classes = []
    for root in sorted(members, key=lambda r: min(maps[i][1] for i in members[r] if maps[i][0] == 0)):
        e = min(maps[i][1] for i in members[root] if maps[i][0] == 0)
        T = Permutation([0] + [F.pow(x, e) for x in range(1, N)])
        ok, ori = _classify(mu, T)
        classes.append(CosetClass(T, len(members[root]), ok, ori, f"X^{e}"))
    return Census(N, p * F.d, tuple(classes))


def common_symmetries(mu: SteinerQuasigroup, T: Permutation,
                      candidates: list[Permutation]) -> list[Permutation]:
    """Candidates preserving both the triple system and its image under T."""
    base = set(mu.triples())
    image = {tuple(sorted(T(v) for v in t)) for t in base}
    out = []
    for g in candidates:
        if all(tuple(sorted(g(v) for v in t)) in base for t in base) and \
                all(tuple(sorted(g(v) for v in t)) in image for t in image):
            out.append(g)
    return out
