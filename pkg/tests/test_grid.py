import json
import random

import pytest
from hypothesis import given, strategies as st

from tilelab import (
    BLANK,
    DuplicateTile,
    IllegalMove,
    MissingBlank,
    Move,
    MOVES,
    MultipleBlanks,
    TileGrid,
    ValueOutOfRange,
    apply_move,
    apply_move_total,
    apply_seq,
    format_grid_text,
    format_moves,
    goal,
    grid_from_json,
    grid_to_json,
    grids_equal,
    inverse_move,
    is_goal,
    legal_moves,
    load_grid,
    move_target,
    new_grid,
    new_tensor_grid,
    parse_grid_text,
    parse_moves,
    reverse_seq,
    tensor_apply,
    tensor_goal,
)


def random_grid(n: int, rng: random.Random) -> TileGrid:
    cells = list(range(n * n))
    rng.shuffle(cells)
    return new_grid(n, cells)


class TestConstruction:
    def test_goal_layout(self):
        g = goal(3)
        assert g.cells == (1, 2, 3, 4, 5, 6, 7, 8, BLANK)
        assert g.blank_index == 8
        assert g.blank_pos == (3, 3)
        assert is_goal(g)

    def test_goal_rejects_small_side(self):
        with pytest.raises(ValueError):
            goal(1)

    def test_new_grid_accepts_none_blank(self):
        g = new_grid(2, [1, None, 2, 3])
        assert g.cells == (1, BLANK, 2, 3)
        assert g.blank_index == 1

    def test_new_grid_shape_checked_before_contents(self):
        with pytest.raises(ValueError, match="expected 4 entries"):
            new_grid(2, [1, 2, 3])

    def test_missing_blank(self):
        with pytest.raises(MissingBlank):
            new_grid(2, [1, 2, 3, 3])

    def test_multiple_blanks(self):
        with pytest.raises(MultipleBlanks):
            new_grid(2, [None, 0, 1, 2])

    def test_value_out_of_range(self):
        with pytest.raises(ValueOutOfRange):
            new_grid(2, [1, 2, 4, None])
        with pytest.raises(ValueOutOfRange):
            new_grid(2, [1, 2, -1, None])

    def test_duplicate_tile(self):
        with pytest.raises(DuplicateTile):
            new_grid(3, [1, 1, 2, 3, 4, 5, 6, 7, None])

    def test_rows(self):
        g = goal(2)
        assert g.rows() == [[1, 2], [3, BLANK]]


class TestMoves:
    def test_canonical_order_and_arms(self):
        assert [m.letter for m in MOVES] == ["U", "D", "R", "L"]
        assert [m.arm for m in MOVES] == [1, 2, 3, 4]

    def test_inverse_pairs(self):
        assert inverse_move(Move.UP) is Move.DOWN
        assert inverse_move(Move.DOWN) is Move.UP
        assert inverse_move(Move.RIGHT) is Move.LEFT
        assert inverse_move(Move.LEFT) is Move.RIGHT

    def test_legal_moves_at_corner(self):
        # goal blank sits bottom-right: only U and L stay on the board
        assert legal_moves(goal(3)) == (Move.UP, Move.LEFT)

    def test_legal_moves_at_center(self):
        g = new_grid(3, [1, 2, 3, 4, None, 5, 6, 7, 8])
        assert legal_moves(g) == MOVES

    def test_move_target_off_board(self):
        assert move_target(goal(2), Move.DOWN) is None
        assert move_target(goal(2), Move.RIGHT) is None

    def test_apply_move_swaps_blank(self):
        g = apply_move(goal(2), Move.UP)
        assert g.cells == (1, BLANK, 3, 2)
        assert g.blank_index == 1

    def test_strict_raises_at_boundary(self):
        with pytest.raises(IllegalMove):
            apply_move(goal(2), Move.DOWN)

    def test_total_is_identity_at_boundary(self):
        g = goal(2)
        assert apply_move_total(g, Move.DOWN) is g
        assert apply_move_total(g, Move.RIGHT) is g

    def test_apply_seq_reports_failing_index(self):
        with pytest.raises(IllegalMove) as err:
            apply_seq(goal(3), parse_moves("ULDDD"))
        assert err.value.index == 3  # U, L, D land legally; the fourth move falls off
        assert err.value.move is Move.DOWN

    def test_apply_seq_total_skips_illegal(self):
        # D starts illegal and R is illegal after UU; both must act as identity
        strict = apply_seq(goal(3), parse_moves("UU"))
        padded = apply_seq(goal(3), parse_moves("DUUR"), total=True)
        assert grids_equal(strict, padded)


class TestSequences:
    def test_parse_moves(self):
        assert parse_moves("RDDRD") == (
            Move.RIGHT, Move.DOWN, Move.DOWN, Move.RIGHT, Move.DOWN)
        assert parse_moves(" r d\n") == (Move.RIGHT, Move.DOWN)
        assert parse_moves("") == ()

    def test_parse_moves_rejects_junk(self):
        with pytest.raises(ValueError):
            parse_moves("RDX")

    def test_format_moves_round_trip(self):
        s = "ULURDLDR"
        assert format_moves(parse_moves(s)) == s

    def test_reverse_of_rddrd(self):
        assert format_moves(reverse_seq(parse_moves("RDDRD"))) == "ULUUL"

    def test_reverse_seq_undoes(self, example_grid):
        seq = parse_moves("RDDRD")
        there = apply_seq(example_grid, seq)
        back = apply_seq(there, reverse_seq(seq))
        assert grids_equal(back, example_grid)

    @given(st.integers(0, 10 ** 9), st.integers(0, 40))
    def test_random_walk_round_trips(self, seed, steps):
        rng = random.Random(seed)
        g = random_grid(3, rng)
        seq = []
        cur = g
        for _ in range(steps):
            m = rng.choice(legal_moves(cur))
            cur = apply_move(cur, m)
            seq.append(m)
        assert grids_equal(apply_seq(cur, reverse_seq(seq)), g)


class TestSerialization:
    def test_parse_grid_text(self, example_grid):
        text = "1 _ 2 4\n5 6 3 8\n9 10 7 11\n13 14 15 12\n"
        assert grids_equal(parse_grid_text(text), example_grid)

    def test_text_round_trip(self):
        rng = random.Random(7)
        for n in (2, 3, 4):
            for _ in range(20):
                g = random_grid(n, rng)
                assert grids_equal(parse_grid_text(format_grid_text(g)), g)

    def test_text_rejects_ragged_rows(self):
        with pytest.raises(ValueError):
            parse_grid_text("1 2\n3 _ 4\n")

    def test_text_rejects_bad_token(self):
        with pytest.raises(ValueError):
            parse_grid_text("1 x\n3 _\n")

    def test_text_rejects_empty(self):
        with pytest.raises(ValueError):
            parse_grid_text("  \n ")

    def test_json_round_trip(self, example_grid):
        doc = grid_to_json(example_grid)
        assert doc["n"] == 4
        assert doc["cells"][1] is None
        assert grids_equal(grid_from_json(doc), example_grid)
        assert grids_equal(grid_from_json(json.dumps(doc)), example_grid)

    def test_json_rejects_missing_keys(self):
        with pytest.raises(ValueError):
            grid_from_json({"cells": [1, 2, 3, None]})

    def test_load_grid_sniffs_format(self, example_grid):
        assert grids_equal(load_grid("1 2\n3 _\n"), new_grid(2, [1, 2, 3, None]))
        assert grids_equal(
            load_grid(json.dumps(grid_to_json(example_grid))), example_grid)


class TestTensorGrid:
    def test_goal_blank_position(self):
        g = tensor_goal(2, 3)
        assert g.cells == (1, 2, 3, 4, 5, 6, 7, BLANK)
        assert g.blank_pos == (2, 2, 2)

    def test_validation_mirrors_square_grid(self):
        with pytest.raises(MissingBlank):
            new_tensor_grid(2, 2, [1, 2, 3, 3])
        with pytest.raises(ValueOutOfRange):
            new_tensor_grid(2, 2, [1, 2, 9, None])

    def test_d2_matches_tile_grid(self):
        # axis 1 with direction -1/+1 is U/D; axis 2 is L/R
        pairs = [((1, -1), Move.UP), ((1, 1), Move.DOWN),
                 ((2, 1), Move.RIGHT), ((2, -1), Move.LEFT)]
        rng = random.Random(11)
        for _ in range(50):
            flat = random_grid(3, rng)
            cube = new_tensor_grid(3, 2, flat.cells)
            for (axis, direction), move in pairs:
                j = move_target(flat, move)
                if j is None:
                    with pytest.raises(IllegalMove):
                        tensor_apply(cube, axis, direction)
                    assert tensor_apply(cube, axis, direction, total=True) is cube
                else:
                    stepped = tensor_apply(cube, axis, direction)
                    assert stepped.cells == apply_move(flat, move).cells

    def test_d3_axis_strides(self):
        g = tensor_goal(2, 3)  # blank at flat index 7 = (2, 2, 2)
        assert tensor_apply(g, 1, -1).blank_index == 3
        assert tensor_apply(g, 2, -1).blank_index == 5
        assert tensor_apply(g, 3, -1).blank_index == 6

    def test_d3_round_trip(self):
        g = tensor_goal(3, 3)
        walked = g
        path = [(1, -1), (2, -1), (3, -1), (1, 1)]
        for axis, direction in path:
            walked = tensor_apply(walked, axis, direction)
        for axis, direction in reversed(path):
            walked = tensor_apply(walked, axis, -direction)
        assert walked.cells == g.cells

    def test_invalid_axis_and_direction(self):
        g = tensor_goal(2, 2)
        with pytest.raises(ValueError):
            tensor_apply(g, 0, 1)
        with pytest.raises(ValueError):
            tensor_apply(g, 1, 2)
