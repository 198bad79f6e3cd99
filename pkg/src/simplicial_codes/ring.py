"""Arithmetic in R = Z2[u]/<u^3 - u>, the Gray map and Lee weights.

An element ``a + b*u + d*u^2`` is stored by its three Z2 coefficients.
A length-m vector over R is stored as three m-bit integers (coefficient
bit-planes), so that sums are XORs and inner products reduce to parities
of ANDs.  Position i of [m] (1-based) lives at bit i-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "RingElement",
    "RingVector",
    "ELEMENTS",
    "UNITS",
    "ZERO",
    "ONE",
    "U",
    "U2",
    "add",
    "mul",
    "decompose",
    "compose",
    "gray",
    "lee_weight",
    "is_unit",
    "dot",
    "gray_vec",
    "lee_weight_vec",
    "parity",
    "all_vectors",
]


def parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True, order=True)
class RingElement:
    """One element ``a + b*u + d*u^2`` of R."""

    a: int = 0
    b: int = 0
    d: int = 0

    def __post_init__(self):
        for name in ("a", "b", "d"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"coefficient {name} must be 0 or 1, got {getattr(self, name)!r}")

    @classmethod
    def from_code(cls, code: int) -> "RingElement":
        """Unpack the 3-bit code ``a | b<<1 | d<<2``."""
        if not 0 <= code < 8:
            raise ValueError(f"ring code must be in [0, 8), got {code}")
        return cls(code & 1, (code >> 1) & 1, (code >> 2) & 1)

    @property
    def code(self) -> int:
        return self.a | (self.b << 1) | (self.d << 2)

    @classmethod
    def parse(cls, text: str) -> "RingElement":
        """Parse strings such as ``"0"``, ``"1+u"``, ``"u+u^2"`` or ``"1 + u + u²"``."""
        s = text.replace(" ", "").replace("²", "^2").lower()
        if s == "0":
            return ZERO
        a = b = d = 0
        for term in s.split("+"):
            if term == "1":
                a ^= 1
            elif term == "u":
                b ^= 1
            elif re.fullmatch(r"u\^2|u\*\*2|uu", term):
                d ^= 1
            else:
                raise ValueError(f"cannot parse ring element {text!r}")
        return cls(a, b, d)

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a ^ other.a, self.b ^ other.b, self.d ^ other.d)

    __sub__ = __add__

    def __neg__(self) -> "RingElement":
        return self

    def __mul__(self, other: "RingElement") -> "RingElement":
        a, b, d = self.a, self.b, self.d
        x, y, z = other.a, other.b, other.d
        # u^3 = u, u^4 = u^2
        return RingElement(
            a & x,
            (a & y) ^ (b & x) ^ (b & z) ^ (d & y),
            (a & z) ^ (d & x) ^ (b & y) ^ (d & z),
        )

    def __str__(self) -> str:
        terms = [t for t, c in (("1", self.a), ("u", self.b), ("u^2", self.d)) if c]
        return "+".join(terms) if terms else "0"


ELEMENTS: tuple[RingElement, ...] = tuple(RingElement.from_code(c) for c in range(8))
ZERO = ELEMENTS[0]
ONE = RingElement(1, 0, 0)
U = RingElement(0, 1, 0)
U2 = RingElement(0, 0, 1)
UNITS = frozenset({ONE, RingElement(1, 1, 1)})


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def is_unit(x: RingElement) -> bool:
    return any(x * y == ONE for y in ELEMENTS)


def decompose(x: RingElement) -> tuple[int, int, int]:
    """Coordinates (alpha, beta, gamma) with x = (1+u^2)alpha + u^2(beta + (u+u^2)gamma)."""
    return x.a, x.a ^ x.b ^ x.d, x.b


def compose(alpha: int, beta: int, gamma: int) -> RingElement:
    """Inverse of :func:`decompose`."""
    return RingElement(alpha, gamma, alpha ^ beta ^ gamma)


def gray(x: RingElement) -> tuple[int, int, int]:
    """Gray image (a+b, b+d, d)."""
    return x.a ^ x.b, x.b ^ x.d, x.d


def lee_weight(x: RingElement) -> int:
    return sum(gray(x))


@dataclass(frozen=True)
class RingVector:
    """A vector in R^m held as coefficient bit-planes ``a``, ``b``, ``d``."""

    m: int
    a: int = 0
    b: int = 0
    d: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("length must be nonnegative")
        full = (1 << self.m) - 1
        for name in ("a", "b", "d"):
            plane = getattr(self, name)
            if plane < 0 or plane & ~full:
                raise ValueError(f"plane {name} has bits outside length {self.m}")

    @classmethod
    def zero(cls, m: int) -> "RingVector":
        return cls(m)

    @classmethod
    def from_elements(cls, elems: Sequence[RingElement]) -> "RingVector":
        a = b = d = 0
        for i, e in enumerate(elems):
            a |= e.a << i
            b |= e.b << i
            d |= e.d << i
        return cls(len(elems), a, b, d)

    @classmethod
    def from_abg(cls, m: int, alpha: int, beta: int, gamma: int) -> "RingVector":
        """Build ``(1+u^2)alpha + u^2(beta + (u+u^2)gamma)`` from three m-bit planes."""
        return cls(m, alpha, gamma, alpha ^ beta ^ gamma)

    @classmethod
    def unit_vector(cls, m: int, i: int, scalar: RingElement = ONE) -> "RingVector":
        """``scalar * e_i`` for 0-based position ``i``."""
        if not 0 <= i < m:
            raise IndexError(i)
        bit = 1 << i
        return cls(m, bit * scalar.a, bit * scalar.b, bit * scalar.d)

    def abg(self) -> tuple[int, int, int]:
        """The (alpha, beta, gamma) planes."""
        return self.a, self.a ^ self.b ^ self.d, self.b

    def __len__(self) -> int:
        return self.m

    def __getitem__(self, i: int) -> RingElement:
        if not 0 <= i < self.m:
            raise IndexError(i)
        return RingElement((self.a >> i) & 1, (self.b >> i) & 1, (self.d >> i) & 1)

    def __iter__(self) -> Iterator[RingElement]:
        return (self[i] for i in range(self.m))

    def _check(self, other: "RingVector") -> None:
        if self.m != other.m:
            raise ValueError(f"length mismatch: {self.m} != {other.m}")

    def __add__(self, other: "RingVector") -> "RingVector":
        self._check(other)
        return RingVector(self.m, self.a ^ other.a, self.b ^ other.b, self.d ^ other.d)

    __sub__ = __add__

    def scale(self, s: RingElement) -> "RingVector":
        """Coordinatewise product ``s * self``."""
        full = (1 << self.m) - 1
        x, y, z = (full if c else 0 for c in (s.a, s.b, s.d))
        a, b, d = self.a, self.b, self.d
        return RingVector(
            self.m,
            a & x,
            (a & y) ^ (b & x) ^ (b & z) ^ (d & y),
            (a & z) ^ (d & x) ^ (b & y) ^ (d & z),
        )

    def dot(self, other: "RingVector") -> RingElement:
        self._check(other)
        a, b, d = self.a, self.b, self.d
        x, y, z = other.a, other.b, other.d
        return RingElement(
            parity(a & x),
            parity((a & y) ^ (b & x) ^ (b & z) ^ (d & y)),
            parity((a & z) ^ (d & x) ^ (b & y) ^ (d & z)),
        )

    def gray(self) -> int:
        """Gray image as a 3m-bit integer, blocks (a+b | b+d | d)."""
        m = self.m
        return (self.a ^ self.b) | ((self.b ^ self.d) << m) | (self.d << (2 * m))

    def gray_bits(self) -> list[int]:
        g = self.gray()
        return [(g >> j) & 1 for j in range(3 * self.m)]

    def lee_weight(self) -> int:
        return (self.a ^ self.b).bit_count() + (self.b ^ self.d).bit_count() + self.d.bit_count()

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self) + ")"


def dot(v: RingVector, w: RingVector) -> RingElement:
    return v.dot(w)


def gray_vec(v: RingVector) -> int:
    return v.gray()


def lee_weight_vec(v: RingVector) -> int:
    return v.lee_weight()


def all_vectors(m: int) -> Iterable[RingVector]:
    """Every vector of R^m, indexed by ``a | b<<m | d<<2m``."""
    full = (1 << m) - 1
    for idx in range(1 << (3 * m)):
        yield RingVector(m, idx & full, (idx >> m) & full, idx >> (2 * m))
