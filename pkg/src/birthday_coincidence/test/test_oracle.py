# poetry run test-oracle

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from birthday_coincidence.calc.doubles_exact import expected_doubles
from birthday_coincidence.calc.mckinney import prob_no_r_repeat
from birthday_coincidence.calc.triples_exact import tau_entries
from birthday_coincidence.errors import InstanceTooLargeError, InvalidParamsError
from birthday_coincidence.oracle import DPOracle, ExhaustiveOracle, dp_law, exhaustive_law
from birthday_coincidence.oracle.exhaustive import exhaustive_joint_law
from birthday_coincidence.schema.prob import Params, Provenance, Statistic
from birthday_coincidence.utils.oracle_util import get_oracle

REFERENCE = Params(n=100, d=365)


@pytest.fixture(scope="module")
def reference_triples():
    return dp_law(REFERENCE, Statistic.TRIPLES_COUNT).law


def test_tiny_triples_law():
    result = exhaustive_law(Params(n=4, d=3), Statistic.TRIPLES_COUNT)
    assert result.law.entries == {0: Fraction(19, 27), 1: Fraction(8, 27)}
    assert result.law.provenance == Provenance.EXACT
    assert dp_law(Params(n=4, d=3), Statistic.TRIPLES_COUNT).law.entries == result.law.entries


def test_joint_law_sums_to_one():
    joint = exhaustive_joint_law(Params(n=5, d=4))
    assert sum(joint.values()) == 1
    # 다섯 명이 모두 같은 날
    assert joint[(0, 0, 5)] == Fraction(4, 4 ** 5)


def test_single_day_calendar():
    for statistic, expected in (
        (Statistic.DOUBLES_COUNT, {1: Fraction(1)}),
        (Statistic.TRIPLES_COUNT, {0: Fraction(1)}),
        (Statistic.MAX_MULTIPLICITY, {2: Fraction(1)}),
    ):
        assert dp_law(Params(n=2, d=1), statistic).law.entries == expected


def test_guards():
    with pytest.raises(InstanceTooLargeError, match="d\\^n <= 10\\^7"):
        exhaustive_law(Params(n=10, d=10), Statistic.DOUBLES_COUNT)
    with pytest.raises(InstanceTooLargeError, match="n <= 150"):
        dp_law(Params(n=151, d=365), Statistic.DOUBLES_COUNT)
    with pytest.raises(InstanceTooLargeError):
        DPOracle().check_instance(Params(n=10, d=401))


def test_guard_is_a_value_error():
    with pytest.raises(ValueError):
        ExhaustiveOracle().check_instance(Params(n=30, d=2))


def test_get_oracle():
    assert isinstance(get_oracle("dp"), DPOracle)
    assert isinstance(get_oracle("exhaustive"), ExhaustiveOracle)
    with pytest.raises(InvalidParamsError):
        get_oracle("sampling")


def test_interface_helpers():
    oracle = DPOracle()
    p = Params(n=23, d=365)
    assert float(1 - oracle.prob_no_r_repeat(p, 2)) == pytest.approx(0.5073, abs=2e-4)
    assert oracle.mean(p, Statistic.DOUBLES_COUNT) == expected_doubles(p)


@pytest.mark.parametrize("n, d", [(23, 365), (40, 50), (60, 20)])
def test_max_multiplicity_law_matches_occupancy_profiles(n, d):
    law = dp_law(Params(n=n, d=d), Statistic.MAX_MULTIPLICITY).law
    assert law.total == 1
    for r in range(2, 7):
        below = sum((prob for m, prob in law.entries.items() if m < r), Fraction(0))
        assert below == prob_no_r_repeat(n, d, r), r


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=8),
    st.sampled_from(list(Statistic)),
)
def test_dp_matches_exhaustive(d, n, statistic):
    while d ** n > 20_000:
        n -= 1
    p = Params(n=n, d=d)
    assert dp_law(p, statistic).law.entries == exhaustive_law(p, statistic).law.entries


@pytest.mark.slow
def test_reference_triples_law(reference_triples):
    law = reference_triples
    assert law.total == 1
    assert 0.3795 <= float(law.get(0)) <= 0.3815
    for entry in tau_entries(REFERENCE, 5):
        lower, upper = entry.value_bracket
        assert lower <= law.get(entry.k) <= upper


@pytest.mark.slow
def test_reference_doubles_mean_is_exact():
    law = dp_law(REFERENCE, Statistic.DOUBLES_COUNT).law
    assert law.mean() == expected_doubles(REFERENCE)
    assert float(law.mean()) == pytest.approx(10.3645, abs=1e-4)


def main():
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
