"""Defining sets D = (1+u^2)D1 + u^2(D2 + (u+u^2)D3) and the codes C_D.

The defining set is kept as three factor lists; element (i, j, k) sits at
flat index ``i*|D2|*|D3| + j*|D3| + k`` and has (alpha, beta, gamma) planes
equal to (t1, t2, t3).  Messages x in R^m are indexed by the integer
``a | b<<m | d<<2m`` of their coefficient planes, which is also the row
order of the Gray generator matrix (e_i, then u*e_i, then u^2*e_i).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .ring import ONE, U, U2, RingVector
from .simplicial import ComplexSpec, enumerate_complex, mask_from_subset, subset_from_mask

DEFAULT_LENGTH_BUDGET = 1 << 24
DEFAULT_MESSAGE_LOG2 = 18


def message_log2_budget() -> int:
    """Message-count budget (log2), overridable by SIMPLICIAL_CODES_MESSAGE_LOG2."""
    return int(os.environ.get("SIMPLICIAL_CODES_MESSAGE_LOG2", DEFAULT_MESSAGE_LOG2))

# message rows x code columns processed per numpy block
_BLOCK_CELLS = 1 << 22

CASES = {
    (False, False, False): 1,
    (True, False, False): 2,
    (False, True, False): 3,
    (False, False, True): 4,
    (True, True, False): 5,
    (True, False, True): 6,
    (False, True, True): 7,
    (True, True, True): 8,
}
CASE_FLAGS = {v: k for k, v in CASES.items()}


class InvalidSpecError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DefiningSetSpec:
    """m, the masks L, M, N and whether each factor is Delta or its complement."""

    m: int
    L: int
    M: int
    N: int
    comp_l: bool = False
    comp_m: bool = False
    comp_n: bool = False

    @classmethod
    def from_subsets(cls, m: int, L: Iterable[int] = (), M: Iterable[int] = (),
                     N: Iterable[int] = (), comp_l=False, comp_m=False, comp_n=False):
        """Build from 1-based subsets of [m]."""
        if m < 1:
            raise InvalidSpecError("m must be positive")
        try:
            masks = [mask_from_subset(s, m) for s in (L, M, N)]
        except ValueError as exc:
            raise InvalidSpecError(str(exc)) from None
        return cls(m, *masks, bool(comp_l), bool(comp_m), bool(comp_n))

    @classmethod
    def for_case(cls, case: int, m: int, L, M, N) -> "DefiningSetSpec":
        return cls.from_subsets(m, L, M, N, *CASE_FLAGS[case])

    @property
    def case(self) -> int:
        return CASES[(self.comp_l, self.comp_m, self.comp_n)]

    @property
    def factors(self) -> tuple[ComplexSpec, ComplexSpec, ComplexSpec]:
        return (
            ComplexSpec(self.m, self.L, self.comp_l),
            ComplexSpec(self.m, self.M, self.comp_m),
            ComplexSpec(self.m, self.N, self.comp_n),
        )

    @property
    def length(self) -> int:
        n = 1
        for f in self.factors:
            n *= f.size
        return n

    @property
    def proper_nonempty(self) -> bool:
        """The tables' standing hypothesis: each of L, M, N is nonempty and not [m]."""
        full = (1 << self.m) - 1
        return all(0 != s != full for s in (self.L, self.M, self.N))

    def validate(self) -> None:
        if self.m < 1:
            raise InvalidSpecError("m must be positive")
        full = (1 << self.m) - 1
        for name, s, comp in (("L", self.L, self.comp_l), ("M", self.M, self.comp_m),
                              ("N", self.N, self.comp_n)):
            if s < 0 or s & ~full:
                raise InvalidSpecError(f"{name} has elements outside [1, {self.m}]")
            if comp and s == full:
                raise InvalidSpecError(f"complement of Delta_{name} with {name} = [m] is empty")

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "L": subset_from_mask(self.L),
            "M": subset_from_mask(self.M),
            "N": subset_from_mask(self.N),
            "comp_L": self.comp_l,
            "comp_M": self.comp_m,
            "comp_N": self.comp_n,
            "case": self.case,
        }

    def __str__(self) -> str:
        def fmt(name, s, c):
            return f"{name}={{{','.join(map(str, subset_from_mask(s)))}}}{'^c' if c else ''}"

        return (f"case {self.case}: m={self.m} " + " ".join(
            fmt(*t) for t in (("L", self.L, self.comp_l), ("M", self.M, self.comp_m),
                              ("N", self.N, self.comp_n))))


def plane_dtype(m: int):
    """Smallest unsigned dtype holding an m-bit plane."""
    for dt in (np.uint8, np.uint16, np.uint32):
        if m <= np.iinfo(dt).bits:
            return dt
    return np.uint64


def message_planes(m: int, start: int = 0, stop: Optional[int] = None):
    """Coefficient planes (a, b, d) of messages ``start..stop-1``."""
    stop = 1 << (3 * m) if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    full = (1 << m) - 1
    dt = plane_dtype(m)
    return (idx & full).astype(dt), ((idx >> m) & full).astype(dt), (idx >> (2 * m)).astype(dt)


def _par(x: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(x) & 1).astype(np.uint8)


def dot_planes(ma, mb, md, da, db, dd):
    """Ring inner products of every message against every code column.

    Inputs are coefficient-plane arrays; returns the (a, b, d) coefficient
    arrays of shape (len(messages), len(columns)).
    """
    ma, mb, md = (x[:, None] for x in (ma, mb, md))
    da, db, dd = (x[None, :] for x in (da, db, dd))
    a = _par(ma & da)
    b = _par((ma & db) ^ (mb & da) ^ (mb & dd) ^ (md & db))
    d = _par((ma & dd) ^ (md & da) ^ (mb & db) ^ (md & dd))
    return a, b, d


def _bits_to_int(bits: np.ndarray) -> int:
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def int_to_bits(value: int, width: int) -> np.ndarray:
    raw = value.to_bytes((width + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:width]


class Code:
    """The code C_D of a validated defining-set spec.

    Holds the three factor lists and the flattened coefficient planes of D
    as numpy arrays.  Immutable after construction.
    """

    def __init__(self, spec: DefiningSetSpec, budget: int = DEFAULT_LENGTH_BUDGET,
                 order: Optional[Sequence[int]] = None, message_log2: Optional[int] = None):
        spec.validate()
        self.message_log2 = message_log2
        n = spec.length
        if n > budget:
            raise BudgetExceeded(f"|D| = {n} exceeds budget {budget}")
        self.spec = spec
        self.m = spec.m
        self.factors = tuple(np.array(enumerate_complex(f), dtype=np.int64) for f in spec.factors)
        f1, f2, f3 = self.factors
        t1 = np.repeat(f1, len(f2) * len(f3))
        t2 = np.tile(np.repeat(f2, len(f3)), len(f1))
        t3 = np.tile(f3, len(f1) * len(f2))
        if order is not None:
            order = np.asarray(order)
            if sorted(order.tolist()) != list(range(n)):
                raise ValueError("order must be a permutation of range(|D|)")
            t1, t2, t3 = t1[order], t2[order], t3[order]
        self.t1, self.t2, self.t3 = t1, t2, t3
        # coefficient planes of each column: a = t1, b = t3, d = t1 + t2 + t3
        dt = plane_dtype(self.m)
        self.col_a, self.col_b, self.col_d = (x.astype(dt) for x in (t1, t3, t1 ^ t2 ^ t3))
        self.length = n

    def permuted(self, order: Sequence[int]) -> "Code":
        """Same spec with columns taken in ``order`` (relative to the canonical order)."""
        return Code(self.spec, budget=max(self.length, 1), order=order,
                    message_log2=self.message_log2)

    @staticmethod
    def flat_index(i: int, j: int, k: int, sizes: tuple[int, int, int]) -> int:
        return i * sizes[1] * sizes[2] + j * sizes[2] + k

    @property
    def factor_sizes(self) -> tuple[int, int, int]:
        return tuple(len(f) for f in self.factors)

    def elements(self) -> list[RingVector]:
        return [RingVector(self.m, int(a), int(b), int(d))
                for a, b, d in zip(self.col_a, self.col_b, self.col_d)]

    def __iter__(self) -> Iterator[RingVector]:
        return iter(self.elements())

    def __len__(self) -> int:
        return self.length

    def _check_messages(self, log2_budget: Optional[int]) -> None:
        if log2_budget is None:
            log2_budget = self.message_log2
        budget = message_log2_budget() if log2_budget is None else log2_budget
        if 3 * self.m > budget:
            raise BudgetExceeded(f"2^{3 * self.m} messages exceed budget 2^{budget}")

    def codeword(self, v: RingVector) -> RingVector:
        """(v.d) for d in D, as a ring vector of length |D|."""
        if v.m != self.m:
            raise ValueError(f"message length {v.m} != m = {self.m}")
        msg = [np.array([p], dtype=plane_dtype(self.m)) for p in (v.a, v.b, v.d)]
        a, b, d = dot_planes(*msg, self.col_a, self.col_b, self.col_d)
        return RingVector(self.length, _bits_to_int(a[0]), _bits_to_int(b[0]), _bits_to_int(d[0]))

    def gray_codeword(self, v: RingVector) -> int:
        return self.codeword(v).gray()

    @cached_property
    def kernel_size(self) -> int:
        """Number of messages x with x.d = 0 for every d in D, by enumeration."""
        return kernel_size(self)

    @cached_property
    def gray_rows(self) -> tuple[int, ...]:
        return tuple(gray_generator_rows(self))

    @cached_property
    def size(self) -> int:
        """|C_D| = 2^(3m) / |ker c_D|."""
        return (1 << (3 * self.m)) // self.kernel_size

    @property
    def dimension(self) -> int:
        return self.size.bit_length() - 1


def build_defining_set(spec: DefiningSetSpec, budget: int = DEFAULT_LENGTH_BUDGET) -> list[RingVector]:
    return Code(spec, budget).elements()


def codeword(v: RingVector, code: Code) -> RingVector:
    return code.codeword(v)


def kernel_size(code: Code, log2_budget: Optional[int] = None) -> int:
    code._check_messages(log2_budget)
    m = code.m
    ma, mb, md = message_planes(m)
    step = max(1, _BLOCK_CELLS // max(1, len(ma)))
    for start in range(0, code.length, step):
        sl = slice(start, start + step)
        a, b, d = dot_planes(ma, mb, md, code.col_a[sl], code.col_b[sl], code.col_d[sl])
        keep = ~(a.any(axis=1) | b.any(axis=1) | d.any(axis=1))
        ma, mb, md = ma[keep], mb[keep], md[keep]
        if len(ma) == 1:  # only the zero message remains
            break
    return len(ma)


def gray_generator_rows(code: Code) -> list[int]:
    """Gray images of c_D(e_i), c_D(u e_i), c_D(u^2 e_i) as integers of 3|D| bits."""
    m = code.m
    rows = []
    for scalar in (ONE, U, U2):
        for i in range(m):
            rows.append(code.gray_codeword(RingVector.unit_vector(m, i, scalar)))
    return rows


def gray_generator_matrix(code: Code) -> np.ndarray:
    """Binary matrix with 3m rows and 3|D| columns."""
    width = 3 * code.length
    return np.array([int_to_bits(r, width) for r in code.gray_rows], dtype=np.uint8).reshape(
        3 * code.m, width)


def matrix_to_text(matrix: np.ndarray) -> str:
    return "\n".join("".join("1" if x else "0" for x in row) for row in matrix) + "\n"


def gf2_basis(rows: Iterable[int]) -> list[int]:
    """Echelon basis of the GF(2) row space of integer-encoded rows."""
    basis: list[int] = []  # kept with strictly decreasing leading bits
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return basis


def gf2_rank(rows: Iterable[int]) -> int:
    return len(gf2_basis(rows))
