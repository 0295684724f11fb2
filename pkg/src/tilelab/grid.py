"""Square sliding-tile grids and the four blank moves.

A grid of side n holds the tiles 1..n*n-1 plus one blank cell.  Moves are
named for the direction the blank travels: U and D change the blank's row
by -1/+1, R and L change its column by +1/-1.  (U, D) and (R, L) are
inverse pairs.  Strict application raises on a move that would push the
blank off the board; total application returns the grid unchanged instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

BLANK = 0  # internal marker; the public blank spelling is None (JSON null, "_" in text)


class GridError(ValueError):
    """Base class for malformed grid contents."""


class DuplicateTile(GridError):
    pass


class MissingBlank(GridError):
    pass


class MultipleBlanks(GridError):
    pass


class ValueOutOfRange(GridError):
    pass


class IllegalMove(Exception):
    """Strict-mode move would push the blank off the board."""

    def __init__(self, move: "Move", index: int | None = None):
        self.move = move
        self.index = index
        at = "" if index is None else f" at step {index}"
        super().__init__(f"illegal move {move.letter}{at}")


class Move(Enum):
    """The four blank moves, in canonical order U < D < R < L."""

    UP = ("U", -1, 0)
    DOWN = ("D", 1, 0)
    RIGHT = ("R", 0, 1)
    LEFT = ("L", 0, -1)

    def __init__(self, letter: str, dr: int, dc: int):
        self.letter = letter
        self.dr = dr
        self.dc = dc

    @property
    def arm(self) -> int:
        """1-based position of this move in the canonical case order."""
        return _ARM[self]

    def __repr__(self):  # pragma: no cover - debugging nicety
        return f"Move.{self.name}"


MOVES: tuple[Move, ...] = (Move.UP, Move.DOWN, Move.RIGHT, Move.LEFT)
_ARM = {m: i + 1 for i, m in enumerate(MOVES)}
_BY_LETTER = {m.letter: m for m in MOVES}
_INVERSE = {Move.UP: Move.DOWN, Move.DOWN: Move.UP,
            Move.RIGHT: Move.LEFT, Move.LEFT: Move.RIGHT}

MoveSeq = tuple[Move, ...]


@dataclass(frozen=True)
class TileGrid:
    """Immutable n x n grid; cells are row-major with 0 standing for the blank."""

    n: int
    cells: tuple[int, ...]
    blank_index: int  # row-major index of the blank; kept in sync by construction

    @property
    def blank_pos(self) -> tuple[int, int]:
        """1-indexed (row, column) of the blank."""
        r, c = divmod(self.blank_index, self.n)
        return r + 1, c + 1

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.cells[i * n:(i + 1) * n]) for i in range(n)]


def new_grid(n: int, entries: Sequence[int | None]) -> TileGrid:
    """Validate and build a grid from row-major entries (None or 0 = blank).

    Raises MissingBlank/MultipleBlanks/ValueOutOfRange/DuplicateTile on bad
    contents and ValueError on a bad shape.
    """
    if n < 2:
        raise ValueError(f"grid side must be at least 2, got {n}")
    cells = tuple(BLANK if v is None else v for v in entries)
    if len(cells) != n * n:
        raise ValueError(f"expected {n * n} entries, got {len(cells)}")
    blanks = [i for i, v in enumerate(cells) if v == BLANK]
    if not blanks:
        raise MissingBlank("grid has no blank cell")
    if len(blanks) > 1:
        raise MultipleBlanks(f"grid has {len(blanks)} blank cells")
    for v in cells:
        if not isinstance(v, int) or v < 0 or v >= n * n:
            raise ValueOutOfRange(f"cell value {v!r} outside 1..{n * n - 1}")
    seen = set()
    for v in cells:
        if v != BLANK and v in seen:
            raise DuplicateTile(f"tile {v} appears more than once")
        seen.add(v)
    return TileGrid(n, cells, blanks[0])


def goal(n: int) -> TileGrid:
    """Goal grid: cell (i, j) holds (i-1)*n + j, blank in the bottom-right corner."""
    if n < 2:
        raise ValueError(f"grid side must be at least 2, got {n}")
    cells = tuple(range(1, n * n)) + (BLANK,)
    return TileGrid(n, cells, n * n - 1)


def grids_equal(a: TileGrid, b: TileGrid) -> bool:
    return a.n == b.n and a.cells == b.cells


def is_goal(g: TileGrid) -> bool:
    return grids_equal(g, goal(g.n))


def move_target(g: TileGrid, m: Move) -> int | None:
    """Row-major index the blank would move to, or None if off the board."""
    r, c = divmod(g.blank_index, g.n)
    nr, nc = r + m.dr, c + m.dc
    if 0 <= nr < g.n and 0 <= nc < g.n:
        return nr * g.n + nc
    return None


def legal_moves(g: TileGrid) -> tuple[Move, ...]:
    return tuple(m for m in MOVES if move_target(g, m) is not None)


def _swap(g: TileGrid, j: int) -> TileGrid:
    lst = list(g.cells)
    lst[g.blank_index], lst[j] = lst[j], lst[g.blank_index]
    return TileGrid(g.n, tuple(lst), j)


def apply_move(g: TileGrid, m: Move) -> TileGrid:
    """Strict application: raises IllegalMove at the boundary."""
    j = move_target(g, m)
    if j is None:
        raise IllegalMove(m)
    return _swap(g, j)


def apply_move_total(g: TileGrid, m: Move) -> TileGrid:
    """Total application: a boundary move is the identity."""
    j = move_target(g, m)
    return g if j is None else _swap(g, j)


def apply_seq(g: TileGrid, seq: Iterable[Move], total: bool = False) -> TileGrid:
    """Apply moves left to right; strict mode reports the failing step index."""
    for i, m in enumerate(seq):
        j = move_target(g, m)
        if j is None:
            if total:
                continue
            raise IllegalMove(m, index=i)
        g = _swap(g, j)
    return g


def inverse_move(m: Move) -> Move:
    return _INVERSE[m]


def reverse_seq(seq: Sequence[Move]) -> MoveSeq:
    """Inverse sequence: reverse the order and invert each move.

    Applying reverse_seq(s) to apply_seq(g, s) returns g whenever s was legal.
    """
    return tuple(_INVERSE[m] for m in reversed(seq))


def parse_moves(text: str) -> MoveSeq:
    """Parse a move string like "RDDRD" (whitespace ignored)."""
    out = []
    for ch in text:
        if ch.isspace():
            continue
        m = _BY_LETTER.get(ch.upper())
        if m is None:
            raise ValueError(f"unknown move letter {ch!r}")
        out.append(m)
    return tuple(out)


def format_moves(seq: Iterable[Move]) -> str:
    return "".join(m.letter for m in seq)


# ---------------------------------------------------------------------------
# serialization

def parse_grid_text(text: str) -> TileGrid:
    """Parse the text format: n lines of n whitespace-separated tokens, "_" = blank."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty grid text")
    n = len(rows)
    entries: list[int | None] = []
    for line in rows:
        if len(line) != n:
            raise ValueError(f"expected {n} tokens per line, got {len(line)}")
        for tok in line:
            if tok == "_":
                entries.append(None)
            else:
                try:
                    entries.append(int(tok))
                except ValueError:
                    raise ValueError(f"bad cell token {tok!r}") from None
    return new_grid(n, entries)


def format_grid_text(g: TileGrid) -> str:
    width = len(str(g.n * g.n - 1))
    lines = []
    for row in g.rows():
        lines.append(" ".join(("_" if v == BLANK else str(v)).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


def grid_to_json(g: TileGrid) -> dict:
    return {"n": g.n, "cells": [None if v == BLANK else v for v in g.cells]}


def grid_from_json(doc: dict | str) -> TileGrid:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict) or "n" not in doc or "cells" not in doc:
        raise ValueError('grid JSON must be {"n": int, "cells": [...]}')
    return new_grid(doc["n"], doc["cells"])


def load_grid(text: str) -> TileGrid:
    """Parse either serialization; JSON if the text starts with '{'."""
    if text.lstrip().startswith("{"):
        return grid_from_json(text)
    return parse_grid_text(text)


# ---------------------------------------------------------------------------
# order-d generalization (d = 2 reduces to TileGrid semantics)

@dataclass(frozen=True)
class TensorGrid:
    """Order-d cube of side n; cells are lexicographic with 0 for the blank."""

    n: int
    d: int
    cells: tuple[int, ...]
    blank_index: int

    @property
    def blank_pos(self) -> tuple[int, ...]:
        """1-indexed coordinate tuple of the blank."""
        idx = self.blank_index
        coords = []
        for _ in range(self.d):
            idx, rem = divmod(idx, self.n)
            coords.append(rem + 1)
        return tuple(reversed(coords))


def tensor_goal(n: int, d: int) -> TensorGrid:
    if n < 2:
        raise ValueError(f"side must be at least 2, got {n}")
    if d < 2:
        raise ValueError(f"order must be at least 2, got {d}")
    size = n ** d
    return TensorGrid(n, d, tuple(range(1, size)) + (BLANK,), size - 1)


def new_tensor_grid(n: int, d: int, entries: Sequence[int | None]) -> TensorGrid:
    size = n ** d
    cells = tuple(BLANK if v is None else v for v in entries)
    if len(cells) != size:
        raise ValueError(f"expected {size} entries, got {len(cells)}")
    blanks = [i for i, v in enumerate(cells) if v == BLANK]
    if not blanks:
        raise MissingBlank("grid has no blank cell")
    if len(blanks) > 1:
        raise MultipleBlanks(f"grid has {len(blanks)} blank cells")
    seen = set()
    for v in cells:
        if not isinstance(v, int) or v < 0 or v >= size:
            raise ValueOutOfRange(f"cell value {v!r} outside 1..{size - 1}")
        if v != BLANK and v in seen:
            raise DuplicateTile(f"tile {v} appears more than once")
        seen.add(v)
    return TensorGrid(n, d, cells, blanks[0])


def tensor_apply(g: TensorGrid, axis: int, direction: int, total: bool = False) -> TensorGrid:
    """Move the blank one step along `axis` (1-based); direction is +1 or -1.

    On a 2-cube, axis 1 matches U/D and axis 2 matches R/L.
    """
    if not 1 <= axis <= g.d:
        raise ValueError(f"axis must be in 1..{g.d}, got {axis}")
    if direction not in (-1, 1):
        raise ValueError(f"direction must be +1 or -1, got {direction}")
    stride = g.n ** (g.d - axis)
    coord = (g.blank_index // stride) % g.n
    nc = coord + direction
    if not 0 <= nc < g.n:
        if total:
            return g
        raise IllegalMove(Move.UP if direction < 0 else Move.DOWN)
    j = g.blank_index + direction * stride
    lst = list(g.cells)
    lst[g.blank_index], lst[j] = lst[j], lst[g.blank_index]
    return TensorGrid(g.n, g.d, tuple(lst), j)
