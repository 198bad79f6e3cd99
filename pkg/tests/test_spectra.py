import json
import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from simplicial_codes.construction import CASE_FLAGS, Code, DefiningSetSpec
from simplicial_codes.ring import all_vectors
from simplicial_codes.spectra import (
    ADVERTISED_WEIGHTS, CODEWORD, ERRATA, MESSAGE, TableHypothesisError, WeightDistribution,
    brute_force_distribution, charsum_distribution, charsum_lee_weight, compare_distributions,
    enumerator, l_weight_count, message_weights_brute, message_weights_charsum,
    parse_enumerator, table_distribution, table_rows, table_size,
)

EX1 = DefiningSetSpec.for_case(1, 5, [1, 2], [2, 3], [3, 4])


def random_spec(rng, case, m):
    hi = (1 << m) - 1
    return DefiningSetSpec(m, rng.randrange(1, hi), rng.randrange(1, hi), rng.randrange(1, hi),
                           *CASE_FLAGS[case])


def literal_distribution(spec):
    """Lee weights via RingVector arithmetic over every message (slow oracle)."""
    D = Code(spec).elements()
    counts = Counter()
    for v in all_vectors(spec.m):
        counts[sum(v.dot(d).a ^ v.dot(d).b for d in D) + sum(v.dot(d).b ^ v.dot(d).d for d in D)
               + sum(v.dot(d).d for d in D)] += 1
    return WeightDistribution.from_counts(MESSAGE, counts)


@pytest.mark.parametrize("case", range(1, 9))
def test_brute_force_matches_literal_ring_arithmetic(case):
    spec = random_spec(random.Random(case), case, 2 if case > 4 else 3)
    assert brute_force_distribution(Code(spec)) == literal_distribution(spec)


def test_example_one_levels():
    code = Code(EX1)
    msg = brute_force_distribution(code)
    assert msg.as_dict() == {0: 256, 64: 2304, 96: 30208}
    assert msg.total == 1 << 15
    cw = brute_force_distribution(code, CODEWORD)
    assert cw.as_dict() == {0: 1, 64: 9, 96: 118}
    assert cw.total == code.size == 128


def test_charsum_per_message_agreement():
    rng = random.Random(2)
    for case in range(1, 9):
        code = Code(random_spec(rng, case, 3))
        assert np.array_equal(message_weights_brute(code), message_weights_charsum(code))


def test_charsum_single_message():
    code = Code(EX1)
    weights = message_weights_brute(code)
    for idx, v in enumerate(all_vectors(5)):
        if idx % 997 == 0:
            assert charsum_lee_weight(code, v) == weights[idx] == code.codeword(v).lee_weight()


def test_zero_message_has_weight_zero():
    rng = random.Random(3)
    for case in range(1, 9):
        assert message_weights_charsum(Code(random_spec(rng, case, 3)))[0] == 0


def test_table_case_one_values():
    spec = DefiningSetSpec.for_case(1, 5, [1, 2], [2, 3], [3, 4])
    assert table_distribution(spec).as_dict() == {0: 256, 64: 2304, 96: 30208}


def test_table_case_eight_zero_row():
    spec = DefiningSetSpec.for_case(8, 3, [1], [1], [1])
    assert table_distribution(spec)[0] == 1


def test_table_needs_proper_nonempty():
    with pytest.raises(TableHypothesisError):
        table_distribution(DefiningSetSpec.from_subsets(3, [], [1], [1]))
    with pytest.raises(TableHypothesisError):
        table_distribution(DefiningSetSpec.from_subsets(3, [1, 2, 3], [1], [1]))


@pytest.mark.parametrize("case", range(1, 8))
def test_printed_tables_agree_with_brute_force(case):
    rng = random.Random(40 + case)
    for m in (3, 4):
        for _ in range(10):
            spec = random_spec(rng, case, m)
            code = Code(spec)
            ref = brute_force_distribution(code)
            assert charsum_distribution(code) == ref
            assert table_distribution(spec) == ref, str(spec)


def test_printed_case_eight_row_seven_is_off():
    spec = DefiningSetSpec.from_subsets(3, [2, 3], [1], [3], True, True, True)
    ref = brute_force_distribution(Code(spec))
    printed = table_distribution(spec)
    found = compare_distributions(ref, printed, spec, "table-vs-brute")
    assert {(d.detail["weight"], d.detail["expected"], d.detail["got"]) for d in found} == {
        (224, 14, 12), (240, 27, 29)}
    assert table_distribution(spec, errata=True) == ref
    assert set(ERRATA) == {(8, 6)}


def test_case_eight_with_errata_agrees():
    rng = random.Random(48)
    for m in (3, 4):
        for _ in range(15):
            spec = random_spec(rng, 8, m)
            assert table_distribution(spec, errata=True) == brute_force_distribution(Code(spec))


def test_table_size_matches_kernel():
    rng = random.Random(9)
    for case in range(1, 9):
        for m in (3, 4):
            spec = random_spec(rng, case, m)
            assert table_size(spec) == Code(spec).size


@pytest.mark.parametrize("case", range(1, 9))
def test_conservation_and_weight_bounds(case):
    rng = random.Random(60 + case)
    for m in (3, 4):
        spec = random_spec(rng, case, m)
        code = Code(spec)
        msg = charsum_distribution(code)
        cw = msg.scaled_down(code.kernel_size)
        assert msg.total == 1 << (3 * m)
        assert cw.total == code.size
        assert cw[0] == 1
        assert max(cw.weights) <= 3 * code.length
        assert l_weight_count(cw) <= ADVERTISED_WEIGHTS[case]


def test_sharded_and_threaded_runs_are_identical():
    code = Code(DefiningSetSpec.from_subsets(4, [1, 2], [3], [2, 4], comp_l=True))
    base = brute_force_distribution(code)
    assert brute_force_distribution(code, shards=7) == base
    assert brute_force_distribution(code, shards=5, workers=3) == base
    assert brute_force_distribution(code) == base


def test_distribution_serialization_roundtrip():
    d = WeightDistribution.from_counts(CODEWORD, {96: 118, 0: 1, 64: 9})
    assert json.loads(d.to_json()) == {"level": "codeword", "entries": [[0, 1], [64, 9], [96, 118]]}
    assert WeightDistribution.from_json(d.to_json()) == d
    assert d.to_csv() == "weight,frequency\n0,1\n64,9\n96,118\n"


def test_distribution_merge_and_scaling():
    a = WeightDistribution.from_counts(MESSAGE, {0: 2, 4: 6})
    b = WeightDistribution.from_counts(MESSAGE, {4: 2, 8: 6})
    assert (a + b).as_dict() == {0: 2, 4: 8, 8: 6}
    assert a.scaled_down(2).scaled_up(2) == a
    with pytest.raises(ValueError):
        a.scaled_down(4)
    with pytest.raises(ValueError):
        a + WeightDistribution.from_counts(CODEWORD, {0: 1})
    with pytest.raises(ValueError):
        WeightDistribution(MESSAGE, ((4, 1), (0, 1)))


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.integers(0, 500), st.integers(1, 10**6), min_size=1))
def test_from_counts_roundtrip(counts):
    d = WeightDistribution.from_counts(MESSAGE, counts)
    assert d.as_dict() == counts
    assert WeightDistribution.from_json(d.to_json_obj()) == d


def test_enumerator_strings():
    cw = WeightDistribution.from_counts(CODEWORD, {0: 1, 64: 9, 96: 118})
    assert str(enumerator(cw, 64)) == "X^192 + 9X^128Y^64 + 118X^96Y^96"
    assert str(enumerator(WeightDistribution.from_counts(CODEWORD, {0: 1}), 5)) == "X^15"
    full = WeightDistribution.from_counts(CODEWORD, {0: 1, 6: 1})
    assert str(enumerator(full, 2)) == "X^6 + Y^6"
    with pytest.raises(ValueError):
        enumerator(full, 1)
    with pytest.raises(ValueError):
        enumerator(full.scaled_up(1), 2)


def test_example_four_enumerator():
    spec = DefiningSetSpec.for_case(4, 4, [1, 2, 3], [1, 2], [2, 3])
    code = Code(spec)
    cw = charsum_distribution(code, CODEWORD)
    assert str(enumerator(cw, code.length)) == (
        "X^1152 + 14X^768Y^384 + X^640Y^512 + 492X^576Y^576 + 4X^512Y^640")


def test_parse_enumerator():
    assert parse_enumerator("X^192 + 9X^128Y^64 + 118 X^96 Y^96") == {0: 1, 64: 9, 96: 118}
    assert parse_enumerator("X^{10} + Y^{10}") == {0: 1, 10: 1}
    assert parse_enumerator("4X^1120Y^896 + X^2016") == {0: 1, 896: 4}
    with pytest.raises(ValueError):
        parse_enumerator("X^2 + ?")


def test_l_weight_count():
    assert l_weight_count(WeightDistribution.from_counts(CODEWORD, {0: 1})) == 0
    assert l_weight_count(brute_force_distribution(Code(EX1), CODEWORD)) == 2
    ex3 = DefiningSetSpec.for_case(3, 5, [1, 2, 3], [2, 3], [2, 3, 4])
    assert l_weight_count(charsum_distribution(Code(ex3), CODEWORD)) == 5


def test_table_rows_are_integral_on_hypotheses():
    rng = random.Random(77)
    for case in range(1, 9):
        for m in (3, 5, 7):
            spec = random_spec(rng, case, m)
            for _, w, f in table_rows(spec, errata=True):
                assert w.denominator == 1 and f.denominator == 1 and f >= 0
