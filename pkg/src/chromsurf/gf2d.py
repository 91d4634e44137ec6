"""GF(2^d) arithmetic with log/antilog tables and permutation polynomials.

Elements are the integers 0..2^d-1 read as coefficient bit-vectors, so
addition is XOR. The primitive element ``a`` is the class of x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from .perm import Permutation


class FieldError(ValueError):
    pass


class NotPrimitiveError(FieldError):
    pass


class NotBijectiveError(FieldError):
    pass


class PolynomialSyntaxError(FieldError):
    pass


DEFAULT_MODULI = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
}


def _powers_of_x(d: int, modulus: int) -> list[int] | None:
    """Successive powers of x mod the polynomial, or None if x is not primitive."""
    top = 1 << d
    size = top - 1
    out, v = [], 1
    for _ in range(size):
        out.append(v)
        v <<= 1
        if v & top:
            v ^= modulus
        if v == 1 and len(out) < size:
            return None
    return out if v == 1 else None


def smallest_primitive_modulus(d: int) -> int:
    for m in range((1 << d) + 1, 1 << (d + 1), 2):
        if _powers_of_x(d, m) is not None:
            return m
    raise NotPrimitiveError(f"no primitive polynomial of degree {d}")


@dataclass(frozen=True)
class FieldGF2d:
    d: int
    modulus: int
    exp: tuple[int, ...] = field(repr=False)
    log: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return 1 << self.d

    @property
    def a(self) -> int:
        return self.exp[1]

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.order - 1)]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self.exp[(self.log[x] * e) % (self.order - 1)]

    def inv(self, x: int) -> int:
        return self.pow(x, -1)

    def a_pow(self, e: int) -> int:
        return self.exp[e % (self.order - 1)]

    def modulus_text(self) -> str:
        terms = [("x^%d" % i if i > 1 else ("x" if i == 1 else "1"))
                 for i in range(self.d, -1, -1) if (self.modulus >> i) & 1]
        return " + ".join(terms)


def make_field(d: int, modulus: int | None = None) -> FieldGF2d:
    if not 2 <= d <= 16:
        raise FieldError(f"degree must be in 2..16, got {d}")
    if modulus is None:
        modulus = DEFAULT_MODULI.get(d) or smallest_primitive_modulus(d)
    if modulus >> d != 1:
        raise NotPrimitiveError(f"modulus {modulus:#b} does not have degree {d}")
    powers = _powers_of_x(d, modulus)
    if powers is None:
        raise NotPrimitiveError(f"x is not primitive modulo {modulus:#b}")
    log = [0] * (1 << d)
    for i, v in enumerate(powers):
        log[v] = i
    return FieldGF2d(d, modulus, tuple(powers), tuple(log))


@dataclass(frozen=True)
class FieldPolynomial:
    """Sum of c_e X^e with e >= 1; maps 0 to 0."""

    coefficients: tuple[tuple[int, int], ...]  # sorted (exponent, coefficient), nonzero coefficients

    @staticmethod
    def from_terms(terms: dict[int, int]) -> "FieldPolynomial":
        return FieldPolynomial(tuple(sorted((e, c) for e, c in terms.items() if c)))

    @staticmethod
    def monomial(r: int) -> "FieldPolynomial":
        return FieldPolynomial(((r, 1),))

    def __call__(self, F: FieldGF2d, x: int) -> int:
        out = 0
        for e, c in self.coefficients:
            out ^= F.mul(c, F.pow(x, e))
        return out

    def degree(self) -> int:
        return max(e for e, _ in self.coefficients)

    def text(self, F: FieldGF2d) -> str:
        parts = []
        for e, c in sorted(self.coefficients, reverse=True):
            mono = "X" if e == 1 else f"X^{e}"
            if c == 1:
                parts.append(mono)
            else:
                k = F.log[c]
                parts.append(("a" if k == 1 else f"a^{k}") + "*" + mono)
        return " + ".join(parts) if parts else "0"


_TERM = re.compile(r"^(?:(?P<coef>a(?:\^(?P<apow>-?\d+))?|\d+)\s*\*?\s*)?X(?:\^(?P<exp>\d+))?$")


def parse_polynomial(text: str, F: FieldGF2d) -> FieldPolynomial:
    """Parse e.g. "a*X^11 + X^6 + X"; coefficients are a, a^k, or integer bit-values."""
    terms: dict[int, int] = {}
    pieces = [p.strip() for p in text.split("+")]
    if not text.strip() or any(not p for p in pieces):
        raise PolynomialSyntaxError(f"empty term in {text!r}")
    for p in pieces:
        m = _TERM.match(p.replace(" ", ""))
        if not m:
            raise PolynomialSyntaxError(f"cannot parse term {p!r} (constant terms are not allowed)")
        coef = m.group("coef")
        if coef is None:
            c = 1
        elif coef.startswith("a"):
            c = F.a_pow(int(m.group("apow") or 1))
        else:
            c = int(coef)
            if not 0 <= c < F.order:
                raise PolynomialSyntaxError(f"coefficient {c} outside the field")
        e = int(m.group("exp") or 1)
        if e < 1:
            raise PolynomialSyntaxError("exponent must be positive")
        terms[e] = terms.get(e, 0) ^ c
    return FieldPolynomial.from_terms(terms)


def eval_permutation_polynomial(F: FieldGF2d, P: FieldPolynomial | int) -> Permutation:
    """One-line permutation x -> P(x) of the whole field (0 included)."""
    if isinstance(P, int):
        if gcd(P, F.order - 1) != 1:
            raise NotBijectiveError(f"X^{P} is not a permutation: gcd({P}, {F.order - 1}) != 1")
        P = FieldPolynomial.monomial(P)
    images = [P(F, x) for x in range(F.order)]
    if len(set(images)) != F.order:
        raise NotBijectiveError(f"{P.text(F)} is not a bijection")
    return Permutation(images)


def interpolate(F: FieldGF2d, perm: Permutation) -> FieldPolynomial:
    """Unique polynomial of degree <= N-2 (no constant term) agreeing with perm.

    Requires perm(0) = 0. The coefficient of X^i is sum_x perm(x) x^(N-1-i).
    """
    N = F.order
    if perm(0) != 0:
        raise FieldError("permutation must fix 0")
    terms = {}
    for i in range(1, N - 1):
        c = 0
        for x in range(1, N):
            c ^= F.mul(perm(x), F.pow(x, N - 1 - i))
        terms[i] = c
    return FieldPolynomial.from_terms(terms)


def multiplication(F: FieldGF2d, c: int) -> Permutation:
    return Permutation([F.mul(c, x) for x in range(F.order)])


def frobenius(F: FieldGF2d, j: int = 1) -> Permutation:
    return Permutation([F.pow(x, 1 << j) for x in range(F.order)])


def is_additive(F: FieldGF2d, perm: Permutation) -> bool:
    return all(perm(x ^ y) == perm(x) ^ perm(y) for x in range(F.order) for y in range(x + 1, F.order))
