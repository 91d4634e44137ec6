"""One-line permutations of {0, ..., size-1}.

Composition follows right actions: ``(p * q)(x) == q(p(x))``, i.e. apply p
first. Point sets {1..n} are represented with 0 as an extra fixed point.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        self.images = tuple(images)
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a permutation of 0..n-1")
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(range(size))

    @classmethod
    def from_cycles(cls, size: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(size))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation(o[x] for x in self.images)

    def __pow__(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        out = Permutation.identity(len(self))
        for _ in range(abs(e)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def conjugate(self, a: "Permutation") -> "Permutation":
        """a^-1 * self * a, the permutation x^a -> (x^self)^a."""
        return a.inverse() * self * a

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self, points: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        pts = range(len(self.images)) if points is None else points
        seen, out = set(), []
        for x in pts:
            if x in seen:
                continue
            cyc, y = [], x
            while y not in seen:
                seen.add(y)
                cyc.append(y)
                y = self.images[y]
            out.append(tuple(cyc))
        return out

    def cycle_type(self, points: Iterable[int] | None = None) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles(points)))

    def orbit(self, x: int) -> frozenset[int]:
        out, y = {x}, self.images[x]
        while y != x:
            out.add(y)
            y = self.images[y]
        return frozenset(out)

    def order(self) -> int:
        from math import lcm
        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out


def generate_group(gens: Sequence[Permutation]) -> list[Permutation]:
    """All elements of the group generated by gens (closure by BFS)."""
    if not gens:
        raise ValueError("need at least one generator")
    e = Permutation.identity(len(gens[0]))
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return sorted(seen, key=lambda p: p.images)


def group_orbits(gens: Sequence[Permutation], points: Iterable[int]) -> list[frozenset[int]]:
    pts = list(points)
    seen, out = set(), []
    for x in pts:
        if x in seen:
            continue
        orb, queue = {x}, deque([x])
        while queue:
            y = queue.popleft()
            for g in gens:
                z = g(y)
                if z not in orb:
                    orb.add(z)
                    queue.append(z)
        seen |= orb
        out.append(frozenset(orb))
    return out
