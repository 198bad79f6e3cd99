"""Minimality, self-orthogonality and [n, k, d] of the binary Gray image.

Binary codewords are Python ints (bit j = coordinate j).  Everything here
works either on a :class:`~simplicial_codes.construction.Code` or on a plain
:class:`BinaryCode` given by generator rows, so small hand-made codes can be
checked through the same entry points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .construction import Code, DefiningSetSpec, gf2_basis
from .spectra import (
    CODEWORD,
    Discrepancy,
    WeightDistribution,
    brute_force_distribution,
    charsum_distribution,
    compare_distributions,
    enumerator,
    table_distribution,
    TableHypothesisError,
    TableParams,
)

SCHEMA = "simplicial-codes/analysis-report/v1"
DEFAULT_CODEWORD_LOG2 = 16


class ZeroCodeError(ValueError):
    """The code has no nonzero codeword."""


class CodewordBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BinaryCode:
    """Binary linear code of length ``n`` spanned by integer rows."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for r in self.rows:
            if r < 0 or r >> self.n:
                raise ValueError(f"row {r:#x} wider than n = {self.n}")

    @classmethod
    def from_code(cls, code: Code) -> "BinaryCode":
        return cls(3 * code.length, code.gray_rows)

    @classmethod
    def from_codewords(cls, n: int, words) -> "BinaryCode":
        return cls(n, tuple(gf2_basis(words)))

    @property
    def basis(self) -> list[int]:
        return gf2_basis(self.rows)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def codewords(self, log2_budget: int = DEFAULT_CODEWORD_LOG2) -> list[int]:
        """All codewords in Gray-code order, starting from 0."""
        basis = self.basis
        if len(basis) > log2_budget:
            raise CodewordBudgetExceeded(f"2^{len(basis)} codewords exceed budget 2^{log2_budget}")
        out = [0]
        c = 0
        for i in range(1, 1 << len(basis)):
            c ^= basis[(i & -i).bit_length() - 1]
            out.append(c)
        return out

    def weight_distribution(self, log2_budget: int = DEFAULT_CODEWORD_LOG2) -> WeightDistribution:
        counts: dict[int, int] = {}
        for c in self.codewords(log2_budget):
            w = c.bit_count()
            counts[w] = counts.get(w, 0) + 1
        return WeightDistribution.from_counts(CODEWORD, counts)


CodeLike = Union[Code, BinaryCode]


def _binary(code: CodeLike) -> BinaryCode:
    return code if isinstance(code, BinaryCode) else BinaryCode.from_code(code)


# -- minimality ---------------------------------------------------------------


def ashikhmin_barg(dist: WeightDistribution) -> bool:
    """2 * w0 > w_inf over the nonzero weights present."""
    ws = dist.nonzero_weights
    if not ws:
        raise ZeroCodeError("no nonzero codeword")
    return 2 * min(ws) > max(ws)


@dataclass(frozen=True)
class MinimalityResult:
    minimal: bool
    witnesses: tuple[tuple[int, int], ...] = ()  # (covered, covering)
    checked: int = 0


def _rank_with_kernel(rows: list[int]) -> tuple[int, list[int]]:
    """GF(2) rank of ``rows`` and a basis of the row-combination kernel.

    Kernel vectors are bitmasks over row indices.  Pivots are keyed by the
    lowest set bit.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for i, r in enumerate(rows):
        combo = 1 << i
        while r:
            low = r & -r
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = (r, combo)
                break
            r ^= hit[0]
            combo ^= hit[1]
        if not r:
            kernel.append(combo)
    return len(pivots), kernel


def _rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


def _combine(basis: list[int], combo: int) -> int:
    c = 0
    i = 0
    while combo:
        if combo & 1:
            c ^= basis[i]
        combo >>= 1
        i += 1
    return c


def exact_minimality(code: CodeLike, log2_budget: int = DEFAULT_CODEWORD_LOG2,
                     max_witnesses: int = 8) -> MinimalityResult:
    """Check every nonzero codeword for minimality.

    A nonzero c is minimal iff the codewords supported inside supp(c) are
    just {0, c}, i.e. the basis rows restricted to the complement of supp(c)
    have rank k - 1.  When that fails the restricted kernel yields a covered
    codeword, reported as a (covered, covering) witness pair.
    """
    b = _binary(code)
    basis = b.basis
    k = len(basis)
    if k > log2_budget:
        raise CodewordBudgetExceeded(f"2^{k} codewords exceed budget 2^{log2_budget}")
    witnesses = []
    c = 0
    checked = 0
    for i in range(1, 1 << k):
        c ^= basis[(i & -i).bit_length() - 1]
        outside = ~c
        masked = [r & outside for r in basis]
        checked += 1
        if _rank(masked) == k - 1:
            continue
        _, kernel = _rank_with_kernel(masked)
        for combo in kernel:
            sub = _combine(basis, combo)
            if sub and sub != c:
                witnesses.append((sub, c))
                break
        if len(witnesses) >= max_witnesses:
            break
    return MinimalityResult(not witnesses, tuple(witnesses), checked)


def pairwise_minimality(code: CodeLike, log2_budget: int = 12) -> MinimalityResult:
    """Literal O(|C|^2) scan for a nonzero codeword covering another one."""
    words = [c for c in _binary(code).codewords(log2_budget) if c]
    witnesses = [(c1, c2) for c1 in words for c2 in words if c1 != c2 and c1 & ~c2 == 0]
    return MinimalityResult(not witnesses, tuple(witnesses), len(words))


def is_minimal_binary(n: int, rows) -> bool:
    return exact_minimality(BinaryCode(n, tuple(rows))).minimal


@dataclass(frozen=True)
class Table9Verdict:
    applicable: bool
    satisfied: bool
    row: str
    w0: Optional[int]
    w_inf: Optional[int]
    condition: str

    def to_json_obj(self) -> dict:
        return {"applicable": self.applicable, "satisfied": self.satisfied, "row": self.row,
                "w0": self.w0, "w_inf": self.w_inf, "condition": self.condition}


def table9_condition(spec: DefiningSetSpec, errata: bool = False) -> Table9Verdict:
    """Closed-form w0, w_inf and the sufficient minimality condition per case.

    The printed case-2 condition |L| <= m-2 gives 2 w0 = w_inf at |L| = m-2,
    so the strict inequality needs |L| <= m-3; ``errata`` uses that bound.
    """
    if not spec.proper_nonempty:
        return Table9Verdict(False, False, "-", None, None, "needs nonempty proper L, M, N")
    q = TableParams.of(spec)
    m, l, M, N = q.m, q.l, q.M, q.N
    p = lambda e: 1 << e  # noqa: E731
    A, B, C = p(m) - p(l), p(m) - p(M), p(m) - p(N)
    case = spec.case

    def verdict(row, w0, winf, ok, cond, applicable=True):
        return Table9Verdict(applicable, applicable and ok, row, w0, winf, cond)

    if case == 1:
        return verdict("1", p(l + M + N), 3 * p(l + M + N - 1), True, "none")
    if case == 2:
        if errata:
            return verdict("2", A * p(M + N), 3 * p(m + M + N - 1), l <= m - 3, "|L| <= m-3")
        return verdict("2", A * p(M + N), 3 * p(m + M + N - 1), l <= m - 2, "|L| <= m-2")
    if case == 3:
        return verdict("3", B * p(l + N), 3 * p(m + l + N - 1), M <= m - 3, "|M| <= m-3")
    if case == 4:
        return verdict("4", C * p(l + M), p(l + M - 1) * (3 * p(m) - p(N + 1)), N <= m - 2,
                       "|N| <= m-2")
    if case == 5:
        w0 = A * B * p(N)
        if l <= M:
            return verdict("5a", w0, 3 * A * p(m + N - 1), M <= m - 3, "|M| <= m-3")
        return verdict("5b", w0, 3 * B * p(m + N - 1), l <= m - 3, "|L| <= m-3")
    if case == 6:
        w0 = A * C * p(M)
        if N <= l + 1:
            return verdict("6a", w0, 3 * C * p(m + M - 1), l <= m - 3, "|L| <= m-3")
        if spec.M & ~spec.N:
            return verdict("6b", w0, A * (3 * p(m) - p(N + 1)) * p(M - 1), N <= m - 2,
                           "|N| <= m-2")
        return verdict("6b", w0, None, False, "M subset of N: no row", applicable=False)
    if case == 7:
        w0 = B * C * p(l)
        if M <= m - 2 and N <= m - 2:
            winf = B * (3 * p(m) - p(N + 1)) * p(l - 1) + C * p(l + M - 1) - p(l + M + N - 1)
            return verdict("7", w0, winf, True, "none (w_inf needs |M|, |N| <= m-2)")
        return verdict("7", w0, None, False, "w_inf guard |M|, |N| <= m-2 fails",
                       applicable=False)
    w0 = A * B * C
    w1 = A * B * (3 * p(m - 1) - p(N)) + A * (p(m) - p(N + 1)) * p(M - 1)
    w2 = 3 * B * C * p(m - 1)
    if w1 >= w2:
        return verdict("8a", w0, w1, M <= m - 2 and N <= m - 2, "|M|, |N| <= m-2")
    return verdict("8b", w0, w2, l <= m - 3, "|L| <= m-3")


# -- self-orthogonality -------------------------------------------------------


@dataclass(frozen=True)
class SelfOrthogonality:
    mod4: bool
    gram_zero: bool


def weights_mod4(dist: WeightDistribution) -> bool:
    return all(w % 4 == 0 for w in dist.nonzero_weights)


def gram_zero(rows) -> bool:
    """Every pair of generator rows (self-pairs included) meets evenly."""
    rows = list(rows)
    return all((rows[i] & rows[j]).bit_count() % 2 == 0
               for i in range(len(rows)) for j in range(i, len(rows)))


def self_orthogonality(code: CodeLike, dist: Optional[WeightDistribution] = None,
                       log2_budget: int = DEFAULT_CODEWORD_LOG2) -> SelfOrthogonality:
    b = _binary(code)
    if dist is None:
        dist = b.weight_distribution(log2_budget) if isinstance(code, BinaryCode) \
            else charsum_distribution(code, CODEWORD)
    return SelfOrthogonality(weights_mod4(dist), gram_zero(b.rows))


def code_params(code: Code, dist: Optional[WeightDistribution] = None) -> tuple[int, int, int]:
    """(n, k, d) of the Gray image: 3|D|, log2|C_D|, least nonzero Lee weight."""
    if dist is None:
        dist = charsum_distribution(code, CODEWORD)
    ws = dist.nonzero_weights
    if not ws:
        raise ZeroCodeError("d undefined for the zero code")
    return 3 * code.length, code.dimension, min(ws)


# -- report -------------------------------------------------------------------


@dataclass
class AnalysisReport:
    spec: dict
    n: int
    k: int
    d: Optional[int]
    w0: Optional[int]
    w_inf: Optional[int]
    ab_minimal: Optional[bool]
    table9_applicable: bool
    table9_satisfied: bool
    exact_minimal: Optional[bool]
    weights_mod4: bool
    gram_self_orthogonal: Optional[bool]
    distribution: WeightDistribution
    enumerator: str
    method: str = "charsum"
    table9: Optional[dict] = None
    witnesses: list = field(default_factory=list)
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def minimal(self) -> Optional[bool]:
        """Exact verdict when computed, else True if a sufficient condition holds."""
        if self.exact_minimal is not None:
            return self.exact_minimal
        return True if self.ab_minimal else None

    @property
    def self_orthogonal(self) -> Optional[bool]:
        return self.gram_self_orthogonal

    def to_json_obj(self) -> dict:
        return {
            "schema": SCHEMA,
            "spec": self.spec,
            "method": self.method,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "w0": self.w0,
            "w_inf": self.w_inf,
            "ab_minimal": self.ab_minimal,
            "table9_applicable": self.table9_applicable,
            "table9_satisfied": self.table9_satisfied,
            "table9": self.table9,
            "exact_minimal": self.exact_minimal,
            "minimality_witnesses": [[hex(a), hex(b)] for a, b in self.witnesses],
            "weights_mod4": self.weights_mod4,
            "gram_self_orthogonal": self.gram_self_orthogonal,
            "distribution": self.distribution.to_json_obj(),
            "enumerator": self.enumerator,
            "discrepancies": [d.to_json_obj() for d in self.discrepancies],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)


METHODS = ("brute", "charsum", "table", "all")


def distributions(code: Code, method: str = "charsum", errata: bool = False,
                  log2_budget: Optional[int] = None) -> tuple[WeightDistribution, list[Discrepancy]]:
    """Message-level distribution by ``method``; ``all`` cross-checks the three.

    For ``all`` the returned distribution is the brute-force one (the oracle).
    """
    if method == "brute":
        return brute_force_distribution(code, log2_budget=log2_budget), []
    if method == "charsum":
        return charsum_distribution(code, log2_budget=log2_budget), []
    if method == "table":
        return table_distribution(code.spec, errata=errata), []
    if method != "all":
        raise ValueError(f"method must be one of {METHODS}")
    brute = brute_force_distribution(code, log2_budget=log2_budget)
    found = compare_distributions(brute, charsum_distribution(code, log2_budget=log2_budget),
                                  code.spec, "charsum-vs-brute")
    try:
        table = table_distribution(code.spec, errata=errata)
        found += compare_distributions(brute, table, code.spec, "table-vs-brute")
    except TableHypothesisError:
        pass
    return brute, found


def analyze(spec: DefiningSetSpec, method: str = "charsum", exact_log2: int = DEFAULT_CODEWORD_LOG2,
            errata: bool = False, log2_budget: Optional[int] = None,
            level: str = CODEWORD) -> AnalysisReport:
    """Full analysis of C_D; exact minimality is skipped when k > ``exact_log2``.

    ``level`` picks which distribution goes in the report; the verdicts always
    use the codeword-level one.
    """
    code = Code(spec, message_log2=log2_budget)
    message, found = distributions(code, method, errata, log2_budget)
    dist = message.scaled_down(code.kernel_size)
    ws = dist.nonzero_weights
    t9 = table9_condition(spec, errata)
    exact = None
    witnesses: list = []
    if code.dimension <= exact_log2:
        res = exact_minimality(code, exact_log2)
        exact, witnesses = res.minimal, list(res.witnesses)
    return AnalysisReport(
        spec=spec.to_dict(),
        n=3 * code.length,
        k=code.dimension,
        d=min(ws) if ws else None,
        w0=min(ws) if ws else None,
        w_inf=max(ws) if ws else None,
        ab_minimal=ashikhmin_barg(dist) if ws else None,
        table9_applicable=t9.applicable,
        table9_satisfied=t9.satisfied,
        exact_minimal=exact,
        weights_mod4=weights_mod4(dist),
        gram_self_orthogonal=gram_zero(code.gray_rows),
        distribution=dist if level == CODEWORD else message,
        enumerator=str(enumerator(dist, code.length)),
        method=method,
        table9=t9.to_json_obj(),
        witnesses=witnesses,
        discrepancies=found,
    )
