# poetry run pytest src/birthday_coincidence/test/test_triples_exact.py

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from birthday_coincidence.calc.bonferroni import bound_ladder, q_term
from birthday_coincidence.calc.triples_exact import (
    PUBLISHED_TERMS,
    tau0,
    tau_entries,
    tau_k,
    tau_table,
    truncated_tau0,
)
from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.oracle.exhaustive import exhaustive_law
from birthday_coincidence.schema.prob import Params, Provenance, Statistic

REFERENCE = Params(n=100, d=365)

# 10^6 회 시뮬레이션 열과 그 4σ
SIMULATED = {
    1: (0.381977, 0.0020),
    2: (0.176321, 0.0016),
    3: (0.049634, 0.0009),
    4: (0.009604, 0.0004),
    5: (0.001375, 0.00015),
}


@pytest.fixture(scope="module")
def reference_entries():
    return {entry.k: entry for entry in tau_entries(REFERENCE, 5)}


def test_tau0_small_case():
    assert tau0(Params(n=4, d=3)) == (Fraction(19, 27), Fraction(19, 27))
    assert tau0(Params(n=2, d=3)) == (1, 1)


def test_tau1_chains_reduced_instance():
    p = Params(n=7, d=4)
    entry = tau_k(p, 1)
    reduced = tau0(Params(n=4, d=3))
    expected_q = Fraction(math.comb(7, 3) * 4 * 3 ** 4, 4 ** 7)
    assert entry.q_factor == expected_q
    assert entry.value_bracket == (expected_q * reduced[0], expected_q * reduced[1])


def test_impossible_counts_are_zero():
    entry = tau_k(Params(n=5, d=365), 2)
    assert entry.value_bracket == (0, 0)
    with pytest.raises(InvalidParamsError):
        tau_k(REFERENCE, -1)


def test_reference_tau0_disagrees_with_printed_value():
    lower, upper = tau0(REFERENCE)
    assert upper - lower < Fraction(1, 10 ** 9)
    assert 0.3795 <= float(lower) <= float(upper) <= 0.3815
    # printed 0.386
    assert abs(float(lower) - 0.386) > 4e-3


@pytest.mark.parametrize("k", sorted(SIMULATED))
def test_reference_tau_k_matches_simulation(reference_entries, k):
    entry = reference_entries[k]
    simulated, four_sigma = SIMULATED[k]
    assert entry.q_factor == q_term(REFERENCE, k)
    assert float(entry.midpoint) == pytest.approx(simulated, abs=four_sigma)
    assert entry.half_width < Fraction(1, 10 ** 9)


def test_reference_table_sums_to_one():
    table = tau_table(REFERENCE, 33)
    assert table.provenance == Provenance.BRACKETED
    assert float(table.total) == pytest.approx(1.0, abs=1e-7)


# 축소 인스턴스 사다리를 네 번째 한계에서 멈춘 값 (출판된 표)
FOUR_TERM_TAUS = {1: 0.383326, 2: 0.176649, 3: 0.049843, 4: 0.009656, 5: 0.001365}


@pytest.fixture(scope="module")
def four_term_entries():
    return {entry.k: entry for entry in tau_entries(REFERENCE, 5, terms=PUBLISHED_TERMS)}


@pytest.mark.parametrize("k", sorted(FOUR_TERM_TAUS))
def test_four_term_column_matches_printed_table(four_term_entries, k):
    entry = four_term_entries[k]
    assert entry.terms == 4
    assert float(entry.truncated_value) == pytest.approx(FOUR_TERM_TAUS[k], abs=2e-6)
    # 구간 값은 절단과 무관
    assert entry.half_width < Fraction(1, 10 ** 9)


def test_truncation_differs_from_exact_value():
    reduced = Params(n=97, d=364)
    truncated = truncated_tau0(reduced, 4)
    assert 1 - truncated == bound_ladder(reduced, 4).partial_sums[3]
    assert float(1 - truncated) == pytest.approx(0.58789, abs=2e-5)
    lower, upper = tau0(reduced)
    assert float(1 - upper) == pytest.approx(0.58940, abs=2e-5)
    assert float(lower - truncated) < -1e-3


def test_truncation_exhausting_the_ladder_is_exact():
    p = Params(n=7, d=4)
    assert truncated_tau0(Params(n=4, d=3), 10) == tau0(Params(n=4, d=3))[0]
    entry = tau_k(p, 1, terms=10)
    assert entry.truncated_value == entry.value_bracket[0]
    assert tau_k(Params(n=5, d=365), 2, terms=4).truncated_value == 0
    assert tau_k(p, 1).truncated_value is None
    with pytest.raises(InvalidParamsError):
        tau_k(p, 1, terms=0)


def test_tau_entries_rejects_negative_kmax():
    with pytest.raises(InvalidParamsError):
        tau_entries(REFERENCE, -1)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=8))
def test_small_table_collapses_to_exhaustive_law(d, n):
    while d ** n > 20_000:
        n -= 1
    p = Params(n=n, d=d)
    law = exhaustive_law(p, Statistic.TRIPLES_COUNT).law
    entries = tau_entries(p, n // 3)
    for entry in entries:
        assert entry.value_bracket[0] == entry.value_bracket[1]
    collapsed = {entry.k: entry.value_bracket[0] for entry in entries if entry.value_bracket[0]}
    assert collapsed == law.entries


def main():
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
