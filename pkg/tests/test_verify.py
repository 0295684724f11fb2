import math

import mpmath
import pytest

from tilelab import (
    BoundReport,
    DomainError,
    claim_report,
    configuration_count,
    goal,
    new_grid,
    optimal_moves_log_bound,
    optimal_moves_mobility_bound,
    parse_moves,
    solvable_states_branching_bound,
    solvable_states_mobility_bound,
    verify_solution,
)


class TestVerifySolution:
    def test_accepts_known_solution(self, example_grid):
        assert verify_solution(example_grid, parse_moves("RDDRD"))

    def test_rejects_wrong_sequence(self, example_grid):
        assert not verify_solution(example_grid, parse_moves("RDDR"))
        assert not verify_solution(example_grid, ())

    def test_total_mode_tolerates_boundary_moves(self):
        # D and R fall off the board at the goal and must act as identity
        assert verify_solution(goal(2), parse_moves("DR"))

    def test_empty_sequence_on_goal(self):
        assert verify_solution(goal(3), ())


class TestBoundFormulas:
    def test_configuration_count(self):
        assert configuration_count(2) == 24
        assert configuration_count(3) == 362880
        assert configuration_count(4) == math.factorial(16)

    def test_log_bound_against_high_precision(self):
        mpmath.mp.dps = 50
        for n in (2, 3, 4, 5):
            want = mpmath.log(mpmath.factorial(n * n)) / mpmath.log(4)
            assert abs(optimal_moves_log_bound(n) - float(want)) < 1e-9

    def test_log_bound_n3_value(self):
        assert optimal_moves_log_bound(3) == pytest.approx(9.2345665099, abs=1e-9)

    def test_branching_bound_values(self):
        assert solvable_states_branching_bound(2) == 8
        assert solvable_states_branching_bound(3) == 82948

    def test_branching_bound_floor_is_exact(self):
        # the inner floor((log4((n^2)!) - 1) / 2) must be taken on exact
        # integers; recover m from the output and check it both ways
        mpmath.mp.dps = 60
        for n in (2, 3, 4, 5, 6):
            val = solvable_states_branching_bound(n)
            m = 0
            while 4 * 3 ** (m + 1) * 4 ** (m + 1) + 4 <= val:
                m += 1
            assert 4 * 3 ** m * 4 ** m + 4 == val
            want = int(mpmath.floor(
                (mpmath.log(mpmath.factorial(n * n)) / mpmath.log(4) - 1) / 2))
            assert m == want

    def test_mobility_bounds_at_n3(self):
        assert solvable_states_mobility_bound(3) == 8
        assert optimal_moves_mobility_bound(3) == 16

    def test_domains(self):
        for fn in (configuration_count, optimal_moves_log_bound,
                   solvable_states_branching_bound):
            with pytest.raises(DomainError):
                fn(1)
        for fn in (solvable_states_mobility_bound, optimal_moves_mobility_bound):
            with pytest.raises(DomainError):
                fn(2)


class TestClaimReport:
    def test_n2_verdicts(self, table2):
        rep = claim_report(2, table2)
        assert rep.ground_truth_count == 12
        assert rep.ground_truth_diameter == 6
        assert rep.verdicts == {
            "optimal_moves_log_bound": "fails",
            "solvable_states_branching_bound": "fails",
            "solvable_states_mobility_bound": "untested",
            "optimal_moves_mobility_bound": "untested",
            "configuration_count": "holds",
        }
        assert rep.mobility_bound is None
        assert rep.quadratic_move_bound is None

    def test_n3_verdicts(self, table3):
        rep = claim_report(3, table3)
        assert rep.ground_truth_count == 181440
        assert rep.ground_truth_diameter == 31
        assert rep.verdicts == {
            "optimal_moves_log_bound": "fails",
            "solvable_states_branching_bound": "fails",
            "solvable_states_mobility_bound": "fails",
            "optimal_moves_mobility_bound": "fails",
            "configuration_count": "holds",
        }
        assert rep.mobility_bound == 8
        assert rep.quadratic_move_bound == 16

    def test_report_builds_own_table_when_omitted(self):
        rep = claim_report(2)
        assert rep.ground_truth_count == 12

    def test_table_size_mismatch(self, table2):
        with pytest.raises(ValueError):
            claim_report(3, table2)

    def test_out_of_scale_n(self):
        with pytest.raises(DomainError):
            claim_report(4)

    def test_to_json_shape(self, table2):
        doc = claim_report(2, table2).to_json()
        assert set(doc) == {"n", "ground_truth", "bounds", "verdicts"}
        assert doc["ground_truth"] == {"solvable_states": 12, "diameter": 6}
        assert set(doc["bounds"]) == {
            "optimal_moves_log_bound",
            "solvable_states_branching_bound",
            "solvable_states_mobility_bound",
            "optimal_moves_mobility_bound",
            "configuration_count",
        }
        assert doc["bounds"]["configuration_count"] == 24
        assert isinstance(doc["verdicts"], dict)

    def test_report_dataclass_round_trip(self, table2):
        rep = claim_report(2, table2)
        assert isinstance(rep, BoundReport)
        assert rep.to_json()["verdicts"] == rep.verdicts
