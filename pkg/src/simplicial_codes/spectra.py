"""Lee weight distributions of C_D by three routes.

* :func:`brute_force_distribution` evaluates every codeword coordinate by the
  ring inner product and counts Gray-image weights (the oracle).
* :func:`charsum_distribution` evaluates each message's weight from products
  of factor character sums, without touching the |D| coordinates.
* :func:`table_distribution` evaluates the closed-form (weight, frequency)
  rows of the eight cases.

Frequencies are message-level unless stated otherwise: they count messages
x in R^m, so the zero weight carries |ker c_D|.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
import re
from typing import Callable, Mapping, Optional

import numpy as np

from .construction import (
    BudgetExceeded,
    Code,
    DefiningSetSpec,
    dot_planes,
    message_planes,
)
from .ring import RingVector
from .simplicial import char_sum

MESSAGE = "message"
CODEWORD = "codeword"
LEVELS = (MESSAGE, CODEWORD)

DEFAULT_BRUTE_LOG2 = 34
_BLOCK_CELLS = 1 << 22

# advertised number of distinct nonzero weights per case
ADVERTISED_WEIGHTS = {1: 2, 2: 4, 3: 5, 4: 4, 5: 10, 6: 8, 7: 8, 8: 16}


class TableHypothesisError(ValueError):
    """The closed-form tables need L, M, N nonempty and proper."""


@dataclass(frozen=True)
class WeightDistribution:
    level: str
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.level not in LEVELS:
            raise ValueError(f"level must be one of {LEVELS}")
        ws = [w for w, _ in self.entries]
        if ws != sorted(set(ws)):
            raise ValueError("entries must be sorted by distinct weight")
        if any(f <= 0 for _, f in self.entries):
            raise ValueError("frequencies must be positive")

    @classmethod
    def from_counts(cls, level: str, counts: Mapping[int, int]) -> "WeightDistribution":
        return cls(level, tuple(sorted((int(w), int(f)) for w, f in counts.items() if f)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, w: int) -> int:
        return self.as_dict().get(w, 0)

    @property
    def total(self) -> int:
        return sum(f for _, f in self.entries)

    @property
    def weights(self) -> list[int]:
        return [w for w, _ in self.entries]

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w, _ in self.entries if w]

    def scaled_down(self, kernel: int) -> "WeightDistribution":
        """Message level to codeword level."""
        if self.level != MESSAGE:
            raise ValueError("already codeword level")
        bad = [(w, f) for w, f in self.entries if f % kernel]
        if bad:
            raise ValueError(f"frequencies {bad} not divisible by kernel size {kernel}")
        return WeightDistribution(CODEWORD, tuple((w, f // kernel) for w, f in self.entries))

    def scaled_up(self, kernel: int) -> "WeightDistribution":
        if self.level != CODEWORD:
            raise ValueError("already message level")
        return WeightDistribution(MESSAGE, tuple((w, f * kernel) for w, f in self.entries))

    def __add__(self, other: "WeightDistribution") -> "WeightDistribution":
        if self.level != other.level:
            raise ValueError("cannot merge distributions of different levels")
        c = Counter(self.as_dict())
        c.update(other.as_dict())
        return WeightDistribution.from_counts(self.level, c)

    def to_json_obj(self) -> dict:
        return {"level": self.level, "entries": [list(e) for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, data) -> "WeightDistribution":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["level"], tuple((int(w), int(f)) for w, f in data["entries"]))

    def to_csv(self) -> str:
        return "weight,frequency\n" + "".join(f"{w},{f}\n" for w, f in self.entries)


@dataclass
class Discrepancy:
    """One disagreement between two evaluators, with enough to replay it."""

    kind: str
    spec: dict
    detail: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return asdict(self)


def compare_distributions(reference: WeightDistribution, candidate: WeightDistribution,
                          spec: DefiningSetSpec, kind: str) -> list[Discrepancy]:
    ref, cand = reference.as_dict(), candidate.as_dict()
    out = []
    for w in sorted(set(ref) | set(cand)):
        if ref.get(w, 0) != cand.get(w, 0):
            out.append(Discrepancy(kind, spec.to_dict(), {
                "weight": w, "expected": ref.get(w, 0), "got": cand.get(w, 0)}))
    return out


# -- direct enumeration -----------------------------------------------------


def _lee_block(code: Code, ma, mb, md) -> np.ndarray:
    a, b, d = dot_planes(ma, mb, md, code.col_a, code.col_b, code.col_d)
    w = np.count_nonzero(a ^ b, axis=1)
    w += np.count_nonzero(b ^ d, axis=1)
    w += np.count_nonzero(d, axis=1)
    return w


def _brute_shard(code: Code, start: int, stop: int) -> np.ndarray:
    rows = max(1, _BLOCK_CELLS // max(1, code.length))
    hist = np.zeros(3 * code.length + 1, dtype=np.int64)
    for lo in range(start, stop, rows):
        ma, mb, md = message_planes(code.m, lo, min(stop, lo + rows))
        hist += np.bincount(_lee_block(code, ma, mb, md), minlength=len(hist))
    return hist


def message_weights_brute(code: Code, log2_budget: Optional[int] = None) -> np.ndarray:
    """Lee weight of c_D(x) for every message index x, by direct evaluation."""
    _check_brute(code, log2_budget)
    total = 1 << (3 * code.m)
    rows = max(1, _BLOCK_CELLS // max(1, code.length))
    out = np.empty(total, dtype=np.int64)
    for lo in range(0, total, rows):
        hi = min(total, lo + rows)
        out[lo:hi] = _lee_block(code, *message_planes(code.m, lo, hi))
    return out


def _check_brute(code: Code, log2_budget: Optional[int]) -> None:
    budget = int(os.environ.get("SIMPLICIAL_CODES_BRUTE_LOG2", DEFAULT_BRUTE_LOG2))
    code._check_messages(log2_budget)
    work = (1 << (3 * code.m)) * code.length
    if work > 1 << budget:
        raise BudgetExceeded(f"2^{3 * code.m} messages x |D|={code.length} exceeds 2^{budget}")


def _finish(code: Code, counts: Mapping[int, int], level: str) -> WeightDistribution:
    dist = WeightDistribution.from_counts(MESSAGE, counts)
    if level == MESSAGE:
        return dist
    if level == CODEWORD:
        return dist.scaled_down(code.kernel_size)
    raise ValueError(f"unknown level {level!r}")


def brute_force_distribution(code: Code, level: str = MESSAGE, log2_budget: Optional[int] = None,
                             shards: int = 1, workers: Optional[int] = None) -> WeightDistribution:
    """Histogram of wt_L(c_D(x)) over all x in R^m by direct evaluation.

    The message range is cut into ``shards`` disjoint pieces, each with its
    own histogram; pieces are summed at the end (optionally on a thread pool).
    """
    _check_brute(code, log2_budget)
    total = 1 << (3 * code.m)
    shards = max(1, min(shards, total))
    bounds = [(total * i // shards, total * (i + 1) // shards) for i in range(shards)]
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda b: _brute_shard(code, *b), bounds))
    else:
        parts = [_brute_shard(code, *b) for b in bounds]
    hist = np.sum(parts, axis=0)
    return _finish(code, {w: int(f) for w, f in enumerate(hist) if f}, level)


# -- character sums ---------------------------------------------------------


def factor_char_sums(code: Code) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For each factor, its character sum against every vector of Z2^m."""
    space = range(1 << code.m)
    return tuple(np.array([char_sum(f, a) for a in space], dtype=np.int64)
                 for f in code.spec.factors)


def message_weights_charsum(code: Code, log2_budget: Optional[int] = None) -> np.ndarray:
    """Lee weight of c_D(x) for every message index, from character sums.

    With x = (1+u^2)alpha + u^2(beta + (u+u^2)gamma),
    2 wt = 3|D| - S1(alpha) [S2(gamma) S3(beta) + S2(beta) |D3| + S2(beta+gamma) S3(beta)].
    """
    code._check_messages(log2_budget)
    m = code.m
    s1, s2, s3 = factor_char_sums(code)
    n3 = code.spec.factors[2].size
    v = np.arange(1 << m)
    beta, gamma = v[:, None], v[None, :]
    inner = s2[gamma] * s3[beta] + s2[beta] * n3 + s2[beta ^ gamma] * s3[beta]
    twice = 3 * code.length - s1[:, None, None] * inner[None, :, :]  # [alpha, beta, gamma]
    if np.any(twice & 1) or np.any(twice < 0):
        raise ArithmeticError("character-sum weight is not a nonnegative integer")
    by_abg = twice // 2
    # message index a | b<<m | d<<2m with a = alpha, b = gamma, d = alpha+beta+gamma
    a, b, d = message_planes(m)
    a, b, d = (x.astype(np.int64) for x in (a, b, d))
    return by_abg[a, a ^ b ^ d, b]


def charsum_lee_weight(code: Code, x: RingVector) -> int:
    """Lee weight of one codeword c_D(x) from character sums."""
    alpha, beta, gamma = x.abg()
    f1, f2, f3 = code.spec.factors
    inner = (char_sum(f2, gamma) * char_sum(f3, beta) + char_sum(f2, beta) * f3.size
             + char_sum(f2, beta ^ gamma) * char_sum(f3, beta))
    twice = 3 * code.length - char_sum(f1, alpha) * inner
    return twice // 2


def charsum_distribution(code: Code, level: str = MESSAGE,
                         log2_budget: Optional[int] = None) -> WeightDistribution:
    weights = message_weights_charsum(code, log2_budget)
    vals, freqs = np.unique(weights, return_counts=True)
    return _finish(code, dict(zip(vals.tolist(), freqs.tolist())), level)


# -- closed-form tables -----------------------------------------------------


@dataclass(frozen=True)
class TableParams:
    m: int
    l: int  # |L|
    M: int  # |M|
    N: int  # |N|
    U: int  # |M u N|

    @classmethod
    def of(cls, spec: DefiningSetSpec) -> "TableParams":
        return cls(spec.m, spec.L.bit_count(), spec.M.bit_count(), spec.N.bit_count(),
                   (spec.M | spec.N).bit_count())


def P(e: int) -> Fraction:
    return Fraction(2) ** e


Row = tuple[Callable[[TableParams], Fraction], Callable[[TableParams], Fraction]]

# Each row: (Lee weight, message-level frequency) as functions of the cardinalities.
TABLES: dict[int, list[Row]] = {
    1: [
        (lambda q: 3 * P(q.l + q.M + q.N - 1),
         lambda q: P(3*q.m) + P(3*q.m - q.l - q.M - q.U + 1) - P(3*q.m - q.l - q.M)
         - P(3*q.m - q.l - q.M - q.N + 1)),
        (lambda q: P(q.l + q.M + q.N),
         lambda q: P(3*q.m - q.l - q.M) + P(3*q.m - q.l - q.M - q.N + 1)
         - 3 * P(3*q.m - q.l - q.M - q.U)),
        (lambda q: 0, lambda q: P(3*q.m - q.l - q.M - q.U)),
    ],
    2: [
        (lambda q: 3 * P(q.m + q.M + q.N - 1),
         lambda q: (P(q.m - q.l) - 1) * P(2*q.m - q.M - q.U)),
        (lambda q: P(q.M + q.N - 1) * (3 * P(q.m) - P(q.l + 1)),
         lambda q: (P(q.m - q.l) - 1) * (P(2*q.m - q.M - q.N + 1) + P(2*q.m - q.M)
                                         - 3 * P(2*q.m - q.M - q.U))),
        (lambda q: 3 * (P(q.m) - P(q.l)) * P(q.M + q.N - 1),
         lambda q: P(3*q.m) - P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.N + 1)
         + P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: (P(q.m) - P(q.l)) * P(q.M + q.N),
         lambda q: P(2*q.m - q.M - q.N + 1) + P(2*q.m - q.M) - 3 * P(2*q.m - q.M - q.U)),
        (lambda q: 0, lambda q: P(2*q.m - q.M - q.U)),
    ],
    3: [
        (lambda q: 3 * P(q.m + q.l + q.N - 1),
         lambda q: P(3*q.m - q.l - q.M - q.U) - P(2*q.m - q.l - q.U + 1) - P(2*q.m - q.l - q.M)
         + P(q.m - q.l + 1)),
        (lambda q: (3 * P(q.m - 1) - P(q.M)) * P(q.l + q.N),
         lambda q: P(3*q.m - q.l - q.M - q.N + 1) - P(2*q.m - q.l - q.N + 1) + P(3*q.m - q.l - q.M)
         - 3 * P(3*q.m - q.l - q.M - q.U) - P(2*q.m - q.l) + P(2*q.m - q.l - q.M)
         + P(2*q.m - q.l - q.U + 1)),
        (lambda q: 3 * (P(q.m) - P(q.M)) * P(q.l + q.N - 1),
         lambda q: P(3*q.m) - P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.N + 1)
         + P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: P(q.m + q.l + q.N),
         lambda q: P(2*q.m - q.l - q.U + 1) + P(2*q.m - q.l - q.M) - 3 * P(q.m - q.l)),
        (lambda q: (P(q.m) - P(q.M)) * P(q.l + q.N),
         lambda q: P(2*q.m - q.l - q.N + 1) + P(2*q.m - q.l) - P(2*q.m - q.l - q.M)
         - P(2*q.m - q.l - q.U + 1)),
        (lambda q: 0, lambda q: P(q.m - q.l)),
    ],
    4: [
        (lambda q: P(q.l + q.M - 1) * (3 * P(q.m) - P(q.N + 1)),
         lambda q: P(3*q.m - q.l - q.M - q.N + 1) - P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: 3 * P(q.l + q.M - 1) * (P(q.m) - P(q.N)),
         lambda q: P(3*q.m) - P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.N + 1)
         + P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: P(q.m + q.l + q.M),
         lambda q: P(3*q.m - q.l - q.M - q.U) - P(2*q.m - q.l - q.M)),
        (lambda q: P(q.l + q.M) * (P(q.m) - P(q.N)),
         lambda q: P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.U)),
        (lambda q: 0, lambda q: P(2*q.m - q.l - q.M)),
    ],
    5: [
        (lambda q: 3 * (P(q.m) - P(q.l)) * P(q.m + q.N - 1),
         lambda q: P(2*q.m - q.M - q.U) - P(q.m - q.M) - P(q.m - q.U + 1) + 2),
        (lambda q: 3 * (P(q.m) - P(q.M)) * P(q.m + q.N - 1),
         lambda q: P(q.m - q.l) - 1),
        (lambda q: (P(q.m) - P(q.l)) * (3 * P(q.m - 1) - P(q.M)) * P(q.N),
         lambda q: P(q.m - q.M) - P(q.m - q.N + 1) + P(2*q.m - q.M - q.N + 1)
         - 3 * P(2*q.m - q.M - q.U) + P(2*q.m - q.M) - P(q.m) + P(q.m - q.U + 1)),
        (lambda q: (3 * P(q.m - 1) - P(q.l)) * (P(q.m) - P(q.M)) * P(q.N),
         lambda q: P(2*q.m - q.l - q.N + 1) - P(q.m - q.N + 1) - P(2*q.m - q.l - q.U + 1)
         + P(q.m - q.U + 1) + P(2*q.m - q.l) - P(q.m) - P(2*q.m - q.l - q.M) + P(q.m - q.M)),
        (lambda q: 3 * P(q.m + q.N - 1) * (P(q.m) - P(q.M)) - P(q.m + q.l + q.N),
         lambda q: P(2*q.m - q.l - q.U + 1) - P(q.m - q.U + 1) - 3 * P(q.m - q.l) - P(q.m - q.M)
         + P(2*q.m - q.l - q.M) + 3),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * P(q.N - 1),
         lambda q: P(3*q.m) - P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.N + 1)
         + P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: 3 * P(q.m + q.N - 1) * (P(q.m) - P(q.l) - P(q.M)) + P(q.l + q.M + q.N),
         lambda q: P(3*q.m - q.l - q.M - q.N + 1) - P(2*q.m - q.l - q.N + 1)
         - P(2*q.m - q.M - q.N + 1) + P(q.m - q.N + 1) + P(2*q.m - q.l - q.U + 1)
         - P(q.m - q.U + 1) + P(3*q.m - q.l - q.M) - P(2*q.m - q.M) - P(2*q.m - q.l) + P(q.m)
         - 3 * P(3*q.m - q.l - q.M - q.U) + P(2*q.m - q.l - q.M) + 3 * P(2*q.m - q.M - q.U)
         - P(q.m - q.M)),
        (lambda q: 3 * (P(q.m) - P(q.l) - P(q.M)) * P(q.m + q.N - 1),
         lambda q: P(3*q.m - q.l - q.M - q.U) - P(2*q.m - q.l - q.M) - P(2*q.m - q.M - q.U)
         + P(q.m - q.M) - P(2*q.m - q.l - q.U + 1) + P(q.m - q.l + 1) + P(q.m - q.U + 1) - 2),
        (lambda q: (P(q.m) - P(q.l)) * P(q.m + q.N),
         lambda q: P(q.m - q.U + 1) + P(q.m - q.M) - 3),
        (lambda q: (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * P(q.N),
         lambda q: P(q.m) + P(q.m - q.N + 1) - P(q.m - q.M) - P(q.m - q.U + 1)),
        (lambda q: 0, lambda q: 1),
    ],
    6: [
        (lambda q: (P(q.m) - P(q.l)) * (3 * P(q.m) - P(q.N + 1)) * P(q.M - 1),
         lambda q: P(2*q.m - q.M - q.N + 1) - P(2*q.m - q.M - q.U + 1)),
        (lambda q: (P(q.m) - P(q.l)) * P(q.m + q.M),
         lambda q: P(2*q.m - q.M - q.U) - P(q.m - q.M)),
        (lambda q: 3 * (P(q.m) - P(q.N)) * P(q.m + q.M - 1),
         lambda q: P(2*q.m - q.l - q.M) - P(q.m - q.M)),
        (lambda q: (3 * P(q.m) - P(q.l + 1)) * (P(q.m) - P(q.N)) * P(q.M - 1),
         lambda q: P(3*q.m - q.l - q.M) - P(2*q.m - q.M) - P(3*q.m - q.l - q.M - q.U)
         + P(2*q.m - q.M - q.U)),
        (lambda q: (3 * P(q.m) - P(q.l + 1)) * (P(q.m) - P(q.N)) * P(q.M - 1) - P(q.l + q.M + q.N),
         lambda q: P(3*q.m - q.l - q.M - q.U) - P(2*q.m - q.M - q.U) - P(2*q.m - q.l - q.M)
         + P(q.m - q.M)),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.N)) * P(q.M - 1),
         lambda q: P(3*q.m) - P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.N + 1)
         + P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.N)) * P(q.M - 1) - P(q.l + q.M + q.N - 1),
         lambda q: P(3*q.m - q.l - q.M - q.N + 1) - P(2*q.m - q.M - q.N + 1)
         - P(3*q.m - q.l - q.M - q.U + 1) + P(2*q.m - q.M - q.U + 1)),
        (lambda q: (P(q.m) - P(q.l)) * (P(q.m) - P(q.N)) * P(q.M),
         lambda q: P(2*q.m - q.M) - P(2*q.m - q.M - q.U)),
        (lambda q: 0, lambda q: P(q.m - q.M)),
    ],
    7: [
        (lambda q: (P(q.m) - P(q.M)) * (3 * P(q.m) - P(q.N + 1)) * P(q.l - 1)
         + (P(q.m) - P(q.N)) * P(q.l + q.M - 1) - P(q.l + q.M + q.N - 1),
         lambda q: P(2*q.m - q.l - q.U + 1) - P(q.m - q.l + 1)),
        (lambda q: (P(q.m) - P(q.N)) * P(q.m + q.l),
         lambda q: P(2*q.m - q.l - q.M) - P(q.m - q.l)),
        (lambda q: (P(q.m) - P(q.M)) * (3 * P(q.m) - P(q.N + 1)) * P(q.l - 1),
         lambda q: P(2*q.m - q.l - q.N + 1) - P(2*q.m - q.l - q.U + 1)),
        (lambda q: (3 * P(q.m) - P(q.M + 1)) * (P(q.m) - P(q.N)) * P(q.l - 1),
         lambda q: P(3*q.m - q.l - q.M) - P(2*q.m - q.l) + P(2*q.m - q.l - q.M)
         - P(3*q.m - q.l - q.M - q.U)),
        (lambda q: (3 * P(q.m) - P(q.M + 1)) * (P(q.m) - P(q.N)) * P(q.l - 1) - P(q.l + q.M + q.N),
         lambda q: P(3*q.m - q.l - q.M - q.U) - P(2*q.m - q.l - q.M) - P(2*q.m - q.l - q.U + 1)
         + P(q.m - q.l + 1)),
        (lambda q: 3 * (P(q.m) - P(q.M)) * (P(q.m) - P(q.N)) * P(q.l - 1),
         lambda q: P(3*q.m) - P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.N + 1)
         + P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: 3 * (P(q.m) - P(q.M)) * (P(q.m) - P(q.N)) * P(q.l - 1) - P(q.l + q.M + q.N - 1),
         lambda q: P(3*q.m - q.l - q.M - q.N + 1) - P(3*q.m - q.l - q.M - q.U + 1)
         - P(2*q.m - q.l - q.N + 1) + P(2*q.m - q.l - q.U + 1)),
        (lambda q: (P(q.m) - P(q.M)) * (P(q.m) - P(q.N)) * P(q.l),
         lambda q: P(2*q.m - q.l) - P(2*q.m - q.l - q.M)),
        (lambda q: 0, lambda q: P(q.m - q.l)),
    ],
    8: [
        (lambda q: (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (3 * P(q.m - 1) - P(q.N))
         + (P(q.m) - P(q.l)) * (P(q.m) - P(q.N + 1)) * P(q.M - 1),
         lambda q: P(q.m - q.U + 1) - 2),
        (lambda q: 3 * (P(q.m) - P(q.M)) * (P(q.m) - P(q.N)) * P(q.m - 1),
         lambda q: P(q.m - q.l) - 1),
        (lambda q: (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (3 * P(q.m - 1) - P(q.N)),
         lambda q: P(q.m - q.N + 1) - P(q.m - q.U + 1)),
        (lambda q: (P(q.m) - P(q.l)) * (3 * P(q.m - 1) - P(q.M)) * (P(q.m) - P(q.N)),
         lambda q: P(q.m - q.M) + P(2*q.m - q.M) - P(q.m) - P(2*q.m - q.M - q.U)),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m - 1) - P(q.N - 1))
         + P(q.l + q.M + q.N - 1),
         lambda q: P(3*q.m - q.l - q.M - q.N + 1) - P(2*q.m - q.l - q.N + 1)
         - P(2*q.m - q.M - q.N + 1) + P(q.m - q.N + 1) - P(3*q.m - q.l - q.M - q.U + 1)
         + P(2*q.m - q.l - q.U + 1) + P(2*q.m - q.M - q.U + 1) - P(q.m - q.U + 1)),
        (lambda q: (3 * P(q.m - 1) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m) - P(q.N)),
         lambda q: P(2*q.m - q.l) - P(q.m) - P(2*q.m - q.l - q.M) + P(q.m - q.M)),
        (lambda q: (P(q.m) - P(q.l)) * (3 * P(q.m - 1) - P(q.M)) * (P(q.m) - P(q.N)),
         lambda q: P(2*q.m - q.M - q.U) - P(q.m - q.M) - P(q.m - q.U + 1) + 2),
        (lambda q: (3 * P(q.m - 1) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m) - P(q.N))
         - (P(q.m) - P(q.N)) * P(q.l + q.M),
         lambda q: P(2*q.m - q.l - q.M) - P(q.m - q.M) - P(q.m - q.l) + 1),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m - 1) - P(q.N - 1))
         - (P(q.m) - P(q.N)) * P(q.l + q.M - 1) + P(q.l + q.M + q.N),
         lambda q: P(3*q.m - q.l - q.M - q.U) - P(2*q.m - q.M - q.U) - P(2*q.m - q.l - q.M)
         + P(q.m - q.M) - P(2*q.m - q.l - q.U + 1) + P(q.m - q.U + 1) + P(q.m - q.l + 1) - 2),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m - 1) - P(q.N - 1))
         - (P(q.m) - P(q.M)) * P(q.l + q.N - 1) - (P(q.m) - P(q.N)) * P(q.l + q.M - 1)
         + P(q.l + q.M + q.N - 1),
         lambda q: P(2*q.m - q.l - q.U + 1) - P(q.m - q.U + 1) - P(q.m - q.l + 1) + 2),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m - 1) - P(q.N - 1))
         - (P(q.m) - P(q.l)) * P(q.M + q.N - 1),
         lambda q: P(2*q.m - q.M - q.N + 1) - P(2*q.m - q.M - q.U + 1) - P(q.m - q.N + 1)
         + P(q.m - q.U + 1)),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m - 1) - P(q.N - 1))
         - (P(q.m) - P(q.M)) * P(q.l + q.N - 1),
         lambda q: P(2*q.m - q.l - q.N + 1) - P(q.m - q.N + 1) - P(2*q.m - q.l - q.U + 1)
         + P(q.m - q.U + 1)),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m - 1) - P(q.N - 1))
         - (P(q.m) - P(q.N)) * P(q.l + q.M - 1),
         lambda q: P(q.m) - P(q.m - q.M) + P(3*q.m - q.l - q.M) - P(2*q.m - q.M) - P(2*q.m - q.l)
         - P(3*q.m - q.l - q.M - q.U) + P(2*q.m - q.M - q.U) + P(2*q.m - q.l - q.M)),
        (lambda q: (P(q.m) - P(q.l)) * (P(q.m) - P(q.N)) * P(q.m),
         lambda q: P(q.m - q.M) - 1),
        (lambda q: 3 * (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m - 1) - P(q.N - 1)),
         lambda q: P(3*q.m) - P(3*q.m - q.l - q.M) - P(3*q.m - q.l - q.M - q.N + 1)
         + P(3*q.m - q.l - q.M - q.U + 1)),
        (lambda q: (P(q.m) - P(q.l)) * (P(q.m) - P(q.M)) * (P(q.m) - P(q.N)),
         lambda q: P(q.m) - P(q.m - q.M)),
        (lambda q: 0, lambda q: 1),
    ],
}

# Row corrections derived from the character-sum weight formula, keyed by
# (case, 0-based row).  Only applied on request; the printed rows stay the default.
ERRATA: dict[tuple[int, int], Row] = {
    # alpha = 0, beta nonzero off M u N, gamma off M and not in {0, beta}:
    # the weight loses A * 2^(|M|+|N|) against the printed expression
    (8, 6): (lambda q: (P(q.m) - P(q.l)) * (3 * P(q.m - 1) - P(q.M)) * (P(q.m) - P(q.N))
             - (P(q.m) - P(q.l)) * P(q.M + q.N),
             lambda q: P(2*q.m - q.M - q.U) - P(q.m - q.M) - P(q.m - q.U + 1) + 2),
}

# |C_D| = 2^size_exponent for each case
SIZE_EXPONENT: dict[int, Callable[[TableParams], int]] = {
    1: lambda q: q.l + q.M + q.U,
    2: lambda q: q.m + q.M + q.U,
    3: lambda q: 2 * q.m + q.l,
    4: lambda q: q.m + q.l + q.M,
    5: lambda q: 3 * q.m,
    6: lambda q: 2 * q.m + q.M,
    7: lambda q: 2 * q.m + q.l,
    8: lambda q: 3 * q.m,
}


class FormulaDomainError(ArithmeticError):
    """A table row evaluated to a negative or fractional value."""

    def __init__(self, message: str, discrepancy: Discrepancy):
        super().__init__(message)
        self.discrepancy = discrepancy


def table_rows(spec: DefiningSetSpec, errata: bool = False) -> list[tuple[int, Fraction, Fraction]]:
    """Raw (row index, weight, frequency) triples of the matching table."""
    if not spec.proper_nonempty:
        raise TableHypothesisError("table formulas need nonempty proper L, M, N")
    q = TableParams.of(spec)
    rows = []
    for i, row in enumerate(TABLES[spec.case]):
        w, f = ERRATA.get((spec.case, i), row) if errata else row
        rows.append((i, w(q), f(q)))
    return rows


def table_distribution(spec: DefiningSetSpec, errata: bool = False) -> WeightDistribution:
    """Message-level Lee weight distribution from the closed-form table rows.

    Rows with equal weight are merged; rows with zero frequency are dropped.
    With ``errata`` the rows listed in :data:`ERRATA` replace the printed ones.
    """
    counts: Counter[int] = Counter()
    for i, w, f in table_rows(spec, errata):
        if f < 0 or f.denominator != 1 or w < 0 or w.denominator != 1:
            raise FormulaDomainError(
                f"row {i} of case {spec.case} evaluates to weight {w}, frequency {f}",
                Discrepancy("formula-domain", spec.to_dict(),
                            {"row": i, "weight": str(w), "frequency": str(f)}))
        counts[int(w)] += int(f)
    return WeightDistribution.from_counts(MESSAGE, counts)


def table_size(spec: DefiningSetSpec) -> int:
    """|C_D| claimed for the case."""
    return 1 << SIZE_EXPONENT[spec.case](TableParams.of(spec))


# -- enumerator polynomials -------------------------------------------------


@dataclass(frozen=True)
class EnumeratorPolynomial:
    """Lee_C(X, Y) = sum_i A_i X^(3n-i) Y^i."""

    n: int
    terms: tuple[tuple[int, int], ...]  # (i, A_i), ascending i

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self.terms)

    def __str__(self) -> str:
        parts = []
        for i, a in self.terms:
            mono = ""
            if 3 * self.n - i:
                mono += f"X^{3 * self.n - i}"
            if i:
                mono += f"Y^{i}"
            parts.append((str(a) if a != 1 or not mono else "") + mono)
        return " + ".join(parts)


def enumerator(dist: WeightDistribution, n: int) -> EnumeratorPolynomial:
    if dist.level != CODEWORD:
        raise ValueError("enumerator needs a codeword-level distribution")
    for w, _ in dist.entries:
        if w > 3 * n:
            raise ValueError(f"weight {w} exceeds 3n = {3 * n}")
    return EnumeratorPolynomial(n, dist.entries)


_TERM = re.compile(r"^(\d*)\s*(?:X\^\{?(\d+)\}?)?\s*(?:Y\^\{?(\d+)\}?)?$")


def parse_enumerator(text: str) -> dict[int, int]:
    """Parse ``"X^192 + 9X^128Y^64 + ..."`` into ``{Y exponent: coefficient}``.

    Repeated exponents are summed.
    """
    coeffs: Counter[int] = Counter()
    for raw in text.replace("\\", "").split("+"):
        term = raw.strip().replace(" ", "")
        mt = _TERM.match(term)
        if not term or not mt:
            raise ValueError(f"cannot parse term {raw!r}")
        c, _, y = mt.groups()
        coeffs[int(y) if y else 0] += int(c) if c else 1
    return dict(sorted(coeffs.items()))


def l_weight_count(dist: WeightDistribution) -> int:
    return len(dist.nonzero_weights)
