"""Command-line front end.

Subcommands::

    simplicial-codes analyze --m 5 --L 1,2 --M 2,3 --N 3,4
    simplicial-codes verify-tables --m-values 3,4 --trials 20 --seed 0
    simplicial-codes reproduce-examples

Exit codes: 0 success, 1 verification mismatch, 2 invalid spec,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .analysis import (
    CodewordBudgetExceeded,
    METHODS,
    analyze,
    exact_minimality,
    gram_zero,
    weights_mod4,
)
from .construction import CASE_FLAGS, BudgetExceeded, Code, DefiningSetSpec, InvalidSpecError
from .reference import REFERENCES
from .simplicial import PARTS, CountPreconditionError, brute_count, count
from .spectra import (
    CODEWORD,
    LEVELS,
    MESSAGE,
    Discrepancy,
    FormulaDomainError,
    brute_force_distribution,
    charsum_distribution,
    compare_distributions,
    enumerator,
    parse_enumerator,
    table_distribution,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

# JSON config keys accepted alongside the flags (same names as the flag dests)
CONFIG_KEYS = ("m", "L", "M", "N", "comp_L", "comp_M", "comp_N", "method", "level", "out",
               "format", "seed", "trials", "budget_log2", "m_values", "cases", "errata")


def parse_subset(text) -> list[int]:
    """``"1,2,3"`` (or a JSON list) to a list of 1-based indices."""
    if text is None:
        return []
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    text = str(text).strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidSpecError(f"bad subset {text!r}; expected comma-separated integers") from None


def _int_list(text) -> list[int]:
    return parse_subset(text)


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset flags from the --config JSON file."""
    if not getattr(args, "config", None):
        return args
    data = json.loads(Path(args.config).read_text())
    for key, value in data.items():
        if key not in CONFIG_KEYS:
            continue
        if getattr(args, key, None) in (None, False):
            setattr(args, key, value)
    return args


def _check_budget(args) -> None:
    # --budget-log2 is passed down explicitly and wins over the environment
    if args.budget_log2 is not None and int(args.budget_log2) <= 0:
        raise InvalidSpecError("--budget-log2 must be positive")


def spec_from_args(args) -> DefiningSetSpec:
    if args.m is None:
        raise InvalidSpecError("--m is required")
    spec = DefiningSetSpec.from_subsets(
        int(args.m), parse_subset(args.L), parse_subset(args.M), parse_subset(args.N),
        bool(args.comp_L), bool(args.comp_M), bool(args.comp_N))
    spec.validate()
    return spec


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- analyze ----------------------------------------------------------------


def cmd_analyze(args) -> int:
    spec = spec_from_args(args)
    method = args.method or "charsum"
    level = args.level or CODEWORD
    if method not in METHODS:
        raise InvalidSpecError(f"--method must be one of {METHODS}")
    if level not in LEVELS:
        raise InvalidSpecError(f"--level must be one of {LEVELS}")
    log2 = args.budget_log2
    report = analyze(spec, method=method, errata=bool(args.errata), log2_budget=log2, level=level)
    if (args.format or "json") == "csv":
        _emit(report.distribution.to_csv(), args.out)
    else:
        obj = report.to_json_obj()
        obj["version"] = __version__
        _emit(_dump(obj), args.out)
    return EXIT_MISMATCH if report.discrepancies else EXIT_OK


# -- verify-tables ----------------------------------------------------------


def sample_specs(case: int, m: int, trials: int, rng: random.Random) -> list[DefiningSetSpec]:
    """``trials`` random proper nonempty (L, M, N) for one case and width."""
    hi = (1 << m) - 1
    flags = CASE_FLAGS[case]
    return [DefiningSetSpec(m, rng.randrange(1, hi), rng.randrange(1, hi), rng.randrange(1, hi),
                            *flags) for _ in range(trials)]


def verify_spec(spec: DefiningSetSpec, errata: bool = False,
                log2_budget: Optional[int] = None) -> list[Discrepancy]:
    code = Code(spec, message_log2=log2_budget)
    brute = brute_force_distribution(code)
    found = compare_distributions(brute, charsum_distribution(code), spec, "charsum-vs-brute")
    try:
        table = table_distribution(spec, errata=errata)
    except FormulaDomainError as exc:
        return found + [exc.discrepancy]
    return found + compare_distributions(brute, table, spec, "table-vs-brute")


def counting_sweep(rng: random.Random, triples: int, max_m: int = 5) -> list[dict]:
    """Closed-form counting lemma against predicate counts; returns mismatches."""
    bad = []
    for _ in range(triples):
        m = rng.randint(1, max_m)
        L, M, N = (rng.randrange(0, 1 << m) for _ in range(3))
        for part in PARTS:
            vs = [None]
            if part in ("3a", "3b"):
                vs = [v for v in range(1 << m) if v & M]
                if not vs:
                    continue
            for v in vs:
                try:
                    want = brute_count(m, L, M, N, part, v)
                    got = count(m, L, M, N, part, v)
                except CountPreconditionError:
                    continue
                if want != got:
                    bad.append({"m": m, "L": L, "M": M, "N": N, "part": part, "v": v,
                                "expected": want, "got": got})
    return bad


def cmd_verify_tables(args) -> int:
    seed = 0 if args.seed is None else int(args.seed)
    trials = 20 if args.trials is None else int(args.trials)
    m_values = _int_list(args.m_values) or [3, 4]
    cases = _int_list(args.cases) or list(range(1, 9))
    rng = random.Random(seed)
    summary: dict = {"seed": seed, "trials": trials, "m_values": m_values, "cases": {},
                     "errata": bool(args.errata), "mismatches": [], "version": __version__}
    for case in cases:
        checked = failed = 0
        for m in m_values:
            for spec in sample_specs(case, m, trials, rng):
                found = verify_spec(spec, bool(args.errata), args.budget_log2)
                checked += 1
                if found:
                    failed += 1
                    summary["mismatches"].extend(d.to_json_obj() for d in found)
        summary["cases"][str(case)] = {"checked": checked, "mismatched_specs": failed}
    if args.counting:
        bad = counting_sweep(rng, 50)
        summary["counting"] = {"triples": 50, "mismatches": bad}
    _emit(_dump(summary), args.out)
    ok = not summary["mismatches"] and not summary.get("counting", {}).get("mismatches")
    return EXIT_OK if ok else EXIT_MISMATCH


# -- reproduce-examples -----------------------------------------------------


def reproduce(ref) -> dict:
    spec = ref.spec
    code = Code(spec)
    dist = charsum_distribution(code, CODEWORD)
    got = dist.as_dict()
    printed = parse_enumerator(ref.enumerator)
    params = (3 * code.length, code.dimension, min(dist.nonzero_weights))
    minimal = exact_minimality(code).minimal
    mod4 = weights_mod4(dist)
    gram = gram_zero(code.gray_rows)
    record = {
        "name": ref.name,
        "spec": spec.to_dict(),
        "params": list(params),
        "params_expected": list(ref.params),
        "params_ok": params == ref.params,
        "enumerator": str(enumerator(dist, code.length)),
        "enumerator_ok": got == printed,
        "minimal": minimal,
        "weights_mod4": mod4,
        "gram_self_orthogonal": gram,
        "distinct_nonzero_weights": len(dist.nonzero_weights),
        "discrepancies": [],
    }
    if got != printed:
        detail = {"printed": {str(k): v for k, v in printed.items()},
                  "computed": {str(k): v for k, v in got.items()},
                  "printed_sum": sum(printed.values()), "computed_sum": sum(got.values())}
        ratios = {printed[w] / got[w] for w in got if w and w in printed}
        if len(ratios) == 1:
            detail["printed_over_computed_nonzero"] = ratios.pop()
        if ref.known_divergence:
            detail["note"] = ref.known_divergence
        record["discrepancies"].append(
            Discrepancy("enumerator-divergence", spec.to_dict(), detail).to_json_obj())
    record["passed"] = (record["params_ok"] and minimal and gram
                        and (record["enumerator_ok"] or bool(ref.known_divergence)))
    return record


def cmd_reproduce_examples(args) -> int:
    records = [reproduce(r) for r in REFERENCES]
    _emit(_dump({"references": records, "version": __version__}), args.out)
    return EXIT_OK if all(r["passed"] for r in records) else EXIT_MISMATCH


# -- entry point --------------------------------------------------------------


def _spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help="ambient dimension m")
    for name in ("L", "M", "N"):
        p.add_argument(f"--{name}", default=None, help=f"1-based comma list for {name}")
        p.add_argument(f"--comp-{name}", dest=f"comp_{name}", action="store_true",
                       default=None, help=f"use the complement of Delta_{name}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplicial-codes",
                                     description="Lee weight distributions and Gray-image "
                                                 "properties of simplicial-complex codes over "
                                                 "Z2[u]/(u^3-u).")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file with the same field names as the flags")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--budget-log2", dest="budget_log2", type=int, default=None,
                       help="log2 cap on enumerated messages")
        p.add_argument("--errata", action="store_true", default=None,
                       help="apply the derived table corrections")

    a = sub.add_parser("analyze", help="analyze one defining set")
    _spec_flags(a)
    a.add_argument("--method", choices=METHODS, default=None)
    a.add_argument("--level", choices=(MESSAGE, CODEWORD), default=None)
    a.add_argument("--format", choices=("json", "csv"), default=None)
    common(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-tables", help="three-way evaluator sweep")
    v.add_argument("--m-values", dest="m_values", default=None, help="comma list, default 3,4")
    v.add_argument("--cases", default=None, help="comma list, default 1..8")
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--counting", action="store_true", help="also sweep the counting lemma")
    common(v)
    v.set_defaults(func=cmd_verify_tables)

    r = sub.add_parser("reproduce-examples", help="check the published reference instances")
    common(r)
    r.set_defaults(func=cmd_reproduce_examples)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = _merge_config(parser.parse_args(argv))
    try:
        _check_budget(args)
        return args.func(args)
    except InvalidSpecError as exc:
        print(f"invalid spec: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BudgetExceeded, CodewordBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
