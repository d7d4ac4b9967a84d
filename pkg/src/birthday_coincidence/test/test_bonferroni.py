# poetry run test-calc

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from birthday_coincidence.calc.bonferroni import (
    bound_ladder,
    last_nonzero_index,
    partial_sum,
    prob_some_triple_day,
    q_term,
    tail_bound,
)
from birthday_coincidence.errors import InvalidParamsError, NonConvergenceError
from birthday_coincidence.oracle.exhaustive import exhaustive_joint_law
from birthday_coincidence.schema.prob import Params

REFERENCE = Params(n=100, d=365)


def _exact_triple_day(p: Params) -> Fraction:
    joint = exhaustive_joint_law(p)
    return sum((prob for (_, triples, _), prob in joint.items() if triples >= 1), Fraction(0))


def test_first_term_closed_form():
    assert q_term(REFERENCE, 1) == Fraction(math.comb(100, 3) * 365 * 364 ** 97, 365 ** 100)
    assert q_term(REFERENCE, 0) == 1


@pytest.mark.parametrize("k, expected", [
    (1, 0.930145),
    (2, 0.3996),
    (3, 0.1054),
    (4, 0.019153181),
    (5, 2.548039e-3),
    (6, 2.57641e-4),
])
def test_reference_terms(k, expected):
    assert float(q_term(REFERENCE, k)) == pytest.approx(expected, rel=1e-3)


def test_partial_sum_stops_the_ladder():
    ladder = bound_ladder(REFERENCE, 6)
    for m in range(1, 7):
        assert partial_sum(100, 365, m) == ladder.partial_sums[m - 1]
    assert partial_sum(100, 365, 0) == 0
    assert partial_sum(2, 5, 3) == 0
    # 항이 하나뿐이면 그 뒤는 정확한 값
    assert partial_sum(4, 3, 5) == Fraction(8, 27)
    with pytest.raises(InvalidParamsError):
        partial_sum(10, 365, -1)


def test_terms_vanish_past_last_index():
    p = Params(n=10, d=2)
    assert last_nonzero_index(10, 2) == 2
    assert q_term(p, 3) == 0
    assert q_term(Params(n=8, d=365), 3) == 0


def test_reference_ladder_partial_sums():
    ladder = bound_ladder(REFERENCE, 6)
    sums = [float(s) for s in ladder.partial_sums]
    assert sums[0] == pytest.approx(0.9301, abs=5e-4)
    assert sums[1] == pytest.approx(0.5305, abs=1e-3)
    assert sums[3] == pytest.approx(0.6168, abs=1e-3)
    # v_2 + q_5, not the printed 0.614261
    assert sums[4] == pytest.approx(0.619357, abs=5e-5)
    assert ladder.valid_from == 1
    assert not ladder.exhausted


def test_reference_ladder_brackets_target():
    ladder = bound_ladder(REFERENCE, 8, tol=Fraction(1, 10 ** 4))
    lower, upper = ladder.bracket
    assert ladder.converged
    assert ladder.width < Fraction(1, 10 ** 4)
    assert 0.6189 < float(lower) <= float(upper) < 0.6193


def test_tail_bound_is_next_term():
    assert tail_bound(REFERENCE, 6) == q_term(REFERENCE, 7)


def test_small_instance_is_exact():
    p = Params(n=4, d=3)
    assert q_term(p, 1) == Fraction(8, 27)
    ladder = bound_ladder(p, 3)
    assert ladder.exhausted
    assert ladder.bracket == (Fraction(8, 27), Fraction(8, 27))
    assert prob_some_triple_day(p, Fraction(1, 10 ** 9)) == (Fraction(8, 27), Fraction(8, 27))


def test_fewer_than_three_people():
    ladder = bound_ladder(Params(n=2, d=5), 3)
    assert ladder.terms == []
    assert ladder.bracket == (0, 0)
    assert prob_some_triple_day(Params(n=2, d=5), 1e-6) == (0, 0)


def test_non_convergence_is_reported():
    with pytest.raises(NonConvergenceError):
        prob_some_triple_day(REFERENCE, Fraction(1, 10 ** 12), max_terms=2)


def test_bad_arguments():
    with pytest.raises(InvalidParamsError):
        bound_ladder(REFERENCE, 0)
    with pytest.raises(InvalidParamsError):
        prob_some_triple_day(REFERENCE, 0)
    with pytest.raises(InvalidParamsError):
        q_term(REFERENCE, -1)


@st.composite
def small_instances(draw):
    d = draw(st.integers(min_value=1, max_value=6))
    n = draw(st.integers(min_value=1, max_value=8))
    while d ** n > 20_000:
        n -= 1
    return Params(n=n, d=d)


@settings(max_examples=40, deadline=None)
@given(small_instances(), st.integers(min_value=1, max_value=4))
def test_truncated_ladder_contains_exhaustive_value(p, k_max):
    exact = _exact_triple_day(p)
    lower, upper = bound_ladder(p, k_max).bracket
    assert lower <= exact <= upper


@settings(max_examples=40, deadline=None)
@given(small_instances())
def test_exhausted_ladder_equals_exhaustive_value(p):
    lower, upper = prob_some_triple_day(p, Fraction(1, 10 ** 12))
    exact = _exact_triple_day(p)
    assert lower == upper == exact


def main():
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
