"""Simplicial complexes of Z2^m, the chi indicator, character sums and counts.

Binary vectors of Z2^m are plain ``int`` bitmasks; element i of [m] is bit
i-1.  A subset L of [m] and its indicator vector are the same mask.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

DEFAULT_MAX_WIDTH = 24

PARTS = ("1a", "1b", "2", "3a", "3b", "4", "5", "6", "7")


class CountPreconditionError(ValueError):
    """The fixed vector handed to a counting part violates chi(v|M) = 0."""


def mask_from_subset(subset: Iterable[int], m: int) -> int:
    """1-based subset of [m] to bitmask."""
    mask = 0
    for i in subset:
        if not 1 <= i <= m:
            raise ValueError(f"element {i} outside [1, {m}]")
        mask |= 1 << (i - 1)
    return mask


def subset_from_mask(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1]


def support(v: int) -> frozenset[int]:
    return frozenset(subset_from_mask(v))


def covers(v: int, w: int) -> bool:
    """True iff w is below v, i.e. Supp(w) is a subset of Supp(v)."""
    return w & ~v == 0


def _check_width(m: int, *vectors: int) -> None:
    for v in vectors:
        if v < 0 or v >> m:
            raise ValueError(f"vector {v:#b} does not fit width {m}")


def chi(v: int, s: int, m: Optional[int] = None) -> int:
    """1 if Supp(v) and Supp(s) are disjoint, else 0."""
    if m is not None:
        _check_width(m, v, s)
    return int(v & s == 0)


@dataclass(frozen=True)
class ComplexSpec:
    """Delta_L (all vectors with support inside ``generator``) or its complement."""

    m: int
    generator: int
    complemented: bool = False

    def __post_init__(self):
        if not 1 <= self.m <= DEFAULT_MAX_WIDTH:
            raise ValueError(f"width m={self.m} outside [1, {DEFAULT_MAX_WIDTH}]")
        _check_width(self.m, self.generator)

    @property
    def rank(self) -> int:
        return self.generator.bit_count()

    @property
    def size(self) -> int:
        inner = 1 << self.rank
        return (1 << self.m) - inner if self.complemented else inner

    def __contains__(self, v: int) -> bool:
        return covers(self.generator, v) != self.complemented

    def enumerate(self) -> list[int]:
        return enumerate_complex(self)


def _submasks(mask: int) -> list[int]:
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    out.reverse()
    return out


def enumerate_complex(spec: ComplexSpec) -> list[int]:
    """Members of the complex in ascending bitmask order."""
    if not spec.complemented:
        return _submasks(spec.generator)
    outside = ~spec.generator
    return [v for v in range(1 << spec.m) if v & outside]


def char_sum(spec: ComplexSpec, alpha: int) -> int:
    """Sum of (-1)^(alpha.t) over the complex, in closed form."""
    _check_width(spec.m, alpha)
    inner = (1 << spec.rank) * chi(alpha, spec.generator)
    if not spec.complemented:
        return inner
    return (1 << spec.m) * (alpha == 0) - inner


def literal_char_sum(spec: ComplexSpec, alpha: int) -> int:
    _check_width(spec.m, alpha)
    return sum(1 - 2 * ((alpha & t).bit_count() & 1) for t in enumerate_complex(spec))


@dataclass(frozen=True)
class GeneralComplex:
    """A simplicial complex given by its maximal faces."""

    m: int
    maximal_faces: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "maximal_faces", tuple(self.maximal_faces))
        _check_width(self.m, *self.maximal_faces)
        faces = self.maximal_faces
        if len(set(faces)) != len(faces):
            raise ValueError("duplicate maximal face")
        for f, g in combinations(faces, 2):
            if covers(f, g) or covers(g, f):
                raise ValueError(f"faces {f:#b} and {g:#b} are nested")

    @classmethod
    def from_faces(cls, m: int, faces: Iterable[int]) -> "GeneralComplex":
        """Keep only the maximal members of an arbitrary family of faces."""
        faces = sorted(set(faces))
        maximal = [f for f in faces if not any(g != f and covers(g, f) for g in faces)]
        return cls(m, tuple(maximal))

    def down_closure(self) -> list[int]:
        seen: set[int] = set()
        for f in self.maximal_faces:
            seen.update(_submasks(f))
        return sorted(seen)


def generating_function_size(c: GeneralComplex) -> int:
    """|Delta| by inclusion-exclusion over nonempty families of maximal faces."""
    faces = c.maximal_faces
    if len(faces) > 20:
        raise ValueError("inclusion-exclusion limited to 20 maximal faces")
    total = 0
    for r in range(1, len(faces) + 1):
        sign = 1 if r % 2 else -1
        for family in combinations(faces, r):
            meet = (1 << c.m) - 1
            for f in family:
                meet &= f
            total += sign * (1 << meet.bit_count())
    return total


def generating_function(c: GeneralComplex) -> dict[int, int]:
    """Expanded m-variable generating function as ``{monomial mask: coefficient}``.

    Expands sum over families S of (-1)^(|S|+1) prod_{i in meet(S)} (1 + y_i);
    the result should be the indicator of the complex.
    """
    coeffs: Counter[int] = Counter()
    faces = c.maximal_faces
    for r in range(1, len(faces) + 1):
        sign = 1 if r % 2 else -1
        for family in combinations(faces, r):
            meet = (1 << c.m) - 1
            for f in family:
                meet &= f
            for mono in _submasks(meet):
                coeffs[mono] += sign
    return {k: v for k, v in sorted(coeffs.items()) if v}


# -- counting lemma ---------------------------------------------------------


def _p(e: int) -> int:
    return 1 << e


def _nonzero_meets(m: int, s: int) -> int:
    """#{v : chi(v|s) = 0}."""
    k = s.bit_count()
    return (_p(k) - 1) * _p(m - k)


def _both_meet(m: int, M: int, N: int) -> int:
    return _nonzero_meets(m, M) + _nonzero_meets(m, N) - _nonzero_meets(m, M | N)


def count(m: int, L: int, M: int, N: int, part: str, v: Optional[int] = None) -> int:
    """Closed-form counts of the counting lemma.

    Parts ``1a``/``1b`` use L; the rest use M and N.  Parts ``3a`` and ``3b``
    need a fixed ``v`` with chi(v|M) = 0; the pair parts ``4``, ``6``, ``7``
    are products of the single-vector counts.
    """
    _check_width(m, L, M, N)
    l, mm = L.bit_count(), M.bit_count()
    if part == "1a":
        return _p(m - l)
    if part == "1b":
        return _nonzero_meets(m, L)
    if part == "2":
        return _both_meet(m, M, N)
    if part in ("3a", "3b"):
        if v is None:
            raise CountPreconditionError(f"part {part} needs a fixed vector v")
        _check_width(m, v)
        if chi(v, M):
            raise CountPreconditionError("fixed vector must meet M")
        if part == "3a":
            return (_p(mm) - 2) * _p(m - mm)
        return _p(m - mm) - 1
    if part == "4":
        return _both_meet(m, M, N) * (_p(mm) - 2) * _p(m - mm)
    if part == "5":
        return (_p((M & ~N).bit_count()) - 1) * _p(m - (M | N).bit_count())
    if part == "6":
        return count(m, L, M, N, "5") * (_p(mm) - 2) * _p(m - mm)
    if part == "7":
        return _both_meet(m, M, N) * (_p(m - mm) - 1)
    raise ValueError(f"unknown part {part!r}; expected one of {PARTS}")


def brute_count(m: int, L: int, M: int, N: int, part: str, v: Optional[int] = None) -> int:
    """The same counts by scanning Z2^m (or Z2^m x Z2^m) against the predicate."""
    space = range(1 << m)

    def c(x, s):
        return int(x & s == 0)

    if part == "1a":
        return sum(c(x, L) for x in space)
    if part == "1b":
        return sum(1 - c(x, L) for x in space)
    if part == "2":
        return sum(1 for x in space if not c(x, M) and not c(x, N))
    if part in ("3a", "3b"):
        if v is None or c(v, M):
            raise CountPreconditionError("fixed vector must meet M")
        if part == "3a":
            return sum(1 for w in space if not c(w, M) and not c(v ^ w, M))
        return sum(1 for w in space if w != v and not c(w, M) and c(v ^ w, M))
    if part == "4":
        return sum(
            1 for x in space for w in space
            if not c(x, M) and not c(x, N) and not c(w, M) and not c(x ^ w, M)
        )
    if part == "5":
        return sum(1 for x in space if not c(x, M) and c(x, N))
    if part == "6":
        return sum(
            1 for x in space for w in space
            if not c(x, M) and c(x, N) and not c(w, M) and not c(x ^ w, M)
        )
    if part == "7":
        return sum(
            1 for x in space for w in space
            if x != w and not c(x, M) and not c(x, N) and not c(w, M) and c(x ^ w, M)
        )
    raise ValueError(f"unknown part {part!r}; expected one of {PARTS}")


def fixed_vector_counts(m: int, M: int, part: str) -> set[int]:
    """Brute counts of part 3a/3b for every admissible fixed v (to check independence of v)."""
    return {brute_count(m, 0, M, 0, part, v) for v in range(1 << m) if v & M}
