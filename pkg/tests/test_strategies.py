"""Optimized evaluators: equivalence with the literal path and counter behavior."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from primerec import (
    DomainError,
    OpCounter,
    Strategy,
    Window,
    WindowExhaustedError,
    evaluate,
    f_literal,
    f_shortcircuit,
    f_windowed,
    predicted_literal_cost,
    window_divisor_counts,
)
from primerec import strategies as strategies_mod
from primerec.oracle import divisor_count_enum, next_prime_oracle


class TestStrategyEnum:
    def test_parse_tokens(self):
        assert Strategy.parse("literal") is Strategy.LITERAL_FORMULA
        assert Strategy.parse("windowed") is Strategy.WINDOWED_SIEVE
        assert Strategy.parse("ORACLE") is Strategy.ORACLE_DIRECT

    def test_parse_rejects_unknown(self):
        with pytest.raises(DomainError, match="literal, windowed, oracle"):
            Strategy.parse("fast")


class TestWindowDivisorCounts:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (5, [4, 2, 4, 3, 4]),
            (1, [2]),
            (3, [3, 2, 4]),
        ],
    )
    def test_counts(self, n, expected):
        window = window_divisor_counts(n, OpCounter())
        assert window.lo == n + 1
        assert window.hi == 2 * n
        assert list(window.dcounts) == expected

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            window_divisor_counts(0, OpCounter())

    def test_d_at_checks_bounds(self):
        window = window_divisor_counts(5, OpCounter())
        assert window.d_at(7) == 2
        with pytest.raises(DomainError):
            window.d_at(5)
        with pytest.raises(DomainError):
            window.d_at(11)

    def test_window_shape_invariant_enforced(self):
        with pytest.raises(DomainError):
            Window(lo=3, hi=5, dcounts=np.array([2, 3, 4]))
        with pytest.raises(DomainError):
            Window(lo=3, hi=4, dcounts=np.array([2]))

    def test_matches_enumeration_for_all_windows_to_2000(self):
        top = 2000
        table = np.array([0] + [divisor_count_enum(i) for i in range(1, 2 * top + 1)])
        for n in range(1, top + 1):
            window = window_divisor_counts(n, OpCounter())
            assert np.array_equal(window.dcounts, table[n + 1 : 2 * n + 1]), n


class TestFWindowed:
    @pytest.mark.parametrize("n, expected", [(5, 7), (1, 2), (100, 101)])
    def test_values(self, n, expected):
        assert f_windowed(n, OpCounter()) == expected

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            f_windowed(0, OpCounter())

    def test_counts_one_indicator_per_window_index(self):
        counter = OpCounter()
        f_windowed(10, counter)
        assert counter.p_evals == 10
        assert counter.floor_pair_evals == 0

    def test_exhausted_window_is_loud(self, monkeypatch):
        # Impossible for real inputs (there is always a prime in (n, 2n]),
        # so force a window with no divisor count of 2.
        def fake_window(n, counter):
            return Window(lo=n + 1, hi=2 * n, dcounts=np.full(n, 4, dtype=np.int64))

        monkeypatch.setattr(strategies_mod, "window_divisor_counts", fake_window)
        with pytest.raises(WindowExhaustedError, match="no prime"):
            strategies_mod.f_windowed(6, OpCounter())


class TestFShortcircuit:
    @pytest.mark.parametrize("n, expected", [(2, 3), (23, 29), (1, 2)])
    def test_values(self, n, expected):
        assert f_shortcircuit(n, OpCounter()) == expected

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            f_shortcircuit(0, OpCounter())

    def test_evaluates_indicators_up_to_next_prime_only(self):
        counter = OpCounter()
        value = f_shortcircuit(7, counter)
        assert value == 11
        assert counter.p_evals == 4  # 8, 9, 10, 11
        assert counter.floor_pair_evals == 8 + 9 + 10 + 11


class TestPredictedLiteralCost:
    @pytest.mark.parametrize("n, expected", [(1, 2), (5, 13), (7, 38)])
    def test_values(self, n, expected):
        assert predicted_literal_cost(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            predicted_literal_cost(0)


class TestEvaluate:
    def test_counts_are_strategy_specific(self):
        for strategy, floor_pairs, marks in [
            (Strategy.LITERAL_FORMULA, sum(range(6, 11)), 0),
            (Strategy.WINDOWED_SIEVE, 0, 17),
            (Strategy.ORACLE_DIRECT, 0, 0),
        ]:
            counter = OpCounter()
            assert evaluate(5, strategy, counter) == 7
            assert counter.floor_pair_evals == floor_pairs
            assert counter.multiple_marks == marks

    def test_rejects_non_strategy(self):
        with pytest.raises(DomainError):
            evaluate(5, "windowed", OpCounter())

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            evaluate(0, Strategy.ORACLE_DIRECT, OpCounter())


class TestAgreement:
    def test_all_evaluators_agree_small_range(self):
        for n in range(1, 121):
            expected = next_prime_oracle(n)
            assert f_literal(n) == expected
            assert f_shortcircuit(n, OpCounter()) == expected
            assert f_windowed(n, OpCounter()) == expected

    @given(st.integers(min_value=1, max_value=300))
    def test_strategies_agree(self, n):
        results = {s: evaluate(n, s, OpCounter()) for s in Strategy}
        assert len(set(results.values())) == 1


class TestCostSeparation:
    def test_literal_outgrows_windowed_marks(self):
        # The real asymptotic gap: literal floor pairs grow ~n^2 against the
        # window's ~n log n marks, so their ratio widens with n.
        ratios = {}
        for n in (64, 1024):
            literal = OpCounter()
            evaluate(n, Strategy.LITERAL_FORMULA, literal)
            windowed = OpCounter()
            evaluate(n, Strategy.WINDOWED_SIEVE, windowed)
            ratios[n] = (literal.floor_pair_evals, windowed.multiple_marks)
        small, big = ratios[64], ratios[1024]
        assert big[0] * small[1] > small[0] * big[1]
