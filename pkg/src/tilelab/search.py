"""State-space search over sliding-tile grids.

enumerate_reachable runs breadth-first search outward from the goal and is
the ground truth every closed-form claim is checked against.  solve_optimal
returns a provably minimal solution (BFS for n <= 3, iterative-deepening
A* with the Manhattan heuristic for n = 4).  exhaust_sequences is the
brute-force enumerator over raw move strings; it exists to be metered, not
to be fast.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .grid import (
    BLANK, MOVES, Move, MoveSeq, TileGrid, apply_seq, goal, grids_equal,
    inverse_move, legal_moves, move_target,
)

DEFAULT_STATE_CAP = 2_000_000


class Unsolvable(Exception):
    """The grid is not in the goal's reachable component."""


class ResourceLimit(Exception):
    """A configured state or depth cap was exceeded."""


class NotFound(Exception):
    """Exhaustive enumeration ran out of candidates."""


@dataclass(frozen=True)
class SearchResult:
    psi: int            # minimal number of moves
    seq: MoveSeq        # one optimal witness
    expanded: int       # states expanded while searching


@dataclass
class ReachabilityTable:
    """Exact census of the goal's component: packed state -> optimal depth."""

    n: int
    states: dict[int, int]
    count: int = 0
    diameter: int = 0
    depth_histogram: list[int] = field(default_factory=list)

    def depth_of(self, g: TileGrid) -> int | None:
        return self.states.get(encode(g.cells, self.n))


def _bits(n: int) -> int:
    return max(4, (n * n - 1).bit_length())


def encode(cells: tuple[int, ...], n: int) -> int:
    """Pack row-major cells into one canonical integer (4 bits per cell for n <= 4)."""
    b = _bits(n)
    code = 0
    for i, v in enumerate(cells):
        code |= v << (b * i)
    return code


def decode(code: int, n: int) -> tuple[int, ...]:
    b = _bits(n)
    mask = (1 << b) - 1
    return tuple((code >> (b * i)) & mask for i in range(n * n))


def _neighbor_indices(n: int) -> list[list[int]]:
    """neighbors[i] = row-major targets of the blank at i, in U < D < R < L order."""
    out = []
    for i in range(n * n):
        r, c = divmod(i, n)
        cand = []
        for m in MOVES:
            nr, nc = r + m.dr, c + m.dc
            if 0 <= nr < n and 0 <= nc < n:
                cand.append(nr * n + nc)
        out.append(cand)
    return out


def enumerate_reachable(n: int, depth_limit: int | None = None,
                        max_states: int = DEFAULT_STATE_CAP) -> ReachabilityTable:
    """BFS from goal(n) over legal moves; exact depths for every reachable state.

    Full enumeration is desk-scale for n in {2, 3}; larger n requires a
    depth_limit.  Raises ResourceLimit when max_states is exceeded.
    """
    if n >= 4 and depth_limit is None:
        raise ValueError("full enumeration beyond n = 3 needs an explicit depth_limit")
    b = _bits(n)
    nbrs = _neighbor_indices(n)
    start = goal(n)
    code0 = encode(start.cells, n)
    depths = {code0: 0}
    frontier: deque[tuple[int, int]] = deque([(code0, start.blank_index)])
    diameter = 0
    hist = [1]
    while frontier:
        code, bi = frontier.popleft()
        d = depths[code]
        if depth_limit is not None and d >= depth_limit:
            continue
        for j in nbrs[bi]:
            v = (code >> (b * j)) & ((1 << b) - 1)
            nxt = code - (v << (b * j)) + (v << (b * bi))  # blank contributes 0
            if nxt not in depths:
                if len(depths) >= max_states:
                    raise ResourceLimit(f"state cap {max_states} exceeded at depth {d + 1}")
                depths[nxt] = d + 1
                if d + 1 > diameter:
                    diameter = d + 1
                    hist.append(0)
                hist[d + 1] += 1
                frontier.append((nxt, j))
    return ReachabilityTable(n=n, states=depths, count=len(depths),
                             diameter=diameter, depth_histogram=hist)


def is_solvable(g: TileGrid) -> bool:
    """Parity test for membership in the goal's component.

    Every legal move transposes the blank with one tile (flipping the parity
    of the full cell permutation, blank read as the largest symbol) and
    changes the blank's taxicab distance from the home corner by one.  The
    two parities therefore stay equal exactly on the goal's component; the
    test suite confirms agreement with BFS membership exhaustively at n = 2.
    """
    n = g.n
    tiles = [v for v in g.cells if v != BLANK]
    inversions = 0
    for i in range(len(tiles)):
        vi = tiles[i]
        for j in range(i + 1, len(tiles)):
            if vi > tiles[j]:
                inversions += 1
    inversions += n * n - 1 - g.blank_index  # blank as largest symbol
    r, c = g.blank_pos
    taxicab = (n - r) + (n - c)
    return inversions % 2 == taxicab % 2


def _manhattan_table(n: int) -> list[list[int]]:
    """table[value][index] = taxicab distance from index to value's home cell."""
    table = [[0] * (n * n) for _ in range(n * n)]
    for v in range(1, n * n):
        hr, hc = divmod(v - 1, n)
        for i in range(n * n):
            r, c = divmod(i, n)
            table[v][i] = abs(r - hr) + abs(c - hc)
    return table


def _solve_bfs(g: TileGrid) -> SearchResult:
    n = g.n
    b = _bits(n)
    nbrs = _neighbor_indices(n)
    move_of = {}  # packed state -> (parent code, parent blank, move letter index)
    code0 = encode(g.cells, n)
    target = encode(goal(n).cells, n)
    if code0 == target:
        return SearchResult(0, (), 0)
    seen = {code0}
    frontier = deque([(code0, g.blank_index)])
    expanded = 0
    while frontier:
        code, bi = frontier.popleft()
        expanded += 1
        r, c = divmod(bi, n)
        for m in MOVES:
            nr, nc = r + m.dr, c + m.dc
            if not (0 <= nr < n and 0 <= nc < n):
                continue
            j = nr * n + nc
            v = (code >> (b * j)) & ((1 << b) - 1)
            nxt = code - (v << (b * j)) + (v << (b * bi))
            if nxt in seen:
                continue
            seen.add(nxt)
            move_of[nxt] = (code, bi, m)
            if nxt == target:
                seq = []
                cur = nxt
                while cur != code0:
                    cur, _, mv = move_of[cur]
                    seq.append(mv)
                seq.reverse()
                return SearchResult(len(seq), tuple(seq), expanded)
            frontier.append((nxt, j))
    raise Unsolvable("goal not reachable from this grid")


def _solve_ida(g: TileGrid) -> SearchResult:
    n = g.n
    dist = _manhattan_table(n)
    cells = list(g.cells)
    bi = g.blank_index
    h0 = sum(dist[v][i] for i, v in enumerate(cells) if v != BLANK)
    goal_cells = list(goal(n).cells)
    expanded = 0
    path: list[Move] = []

    def dfs(bi: int, gcost: int, h: int, bound: int, last: Move | None) -> int | bool:
        nonlocal expanded
        f = gcost + h
        if f > bound:
            return f
        if h == 0 and cells == goal_cells:
            return True
        expanded += 1
        nxt_bound = None
        r, c = divmod(bi, n)
        for m in MOVES:
            if last is not None and m is inverse_move(last):
                continue
            nr, nc = r + m.dr, c + m.dc
            if not (0 <= nr < n and 0 <= nc < n):
                continue
            j = nr * n + nc
            v = cells[j]
            dh = dist[v][bi] - dist[v][j]  # tile v moves from j to bi
            cells[bi], cells[j] = v, BLANK
            path.append(m)
            t = dfs(j, gcost + 1, h + dh, bound, m)
            if t is True:
                return True
            cells[bi], cells[j] = BLANK, v
            path.pop()
            if nxt_bound is None or (t is not False and t < nxt_bound):
                nxt_bound = t
        return nxt_bound if nxt_bound is not None else False

    bound = h0
    while True:
        t = dfs(bi, 0, h0, bound, None)
        if t is True:
            return SearchResult(len(path), tuple(path), expanded)
        if t is False:
            raise Unsolvable("goal not reachable from this grid")
        bound = t


def solve_optimal(g: TileGrid, algo: str = "auto") -> SearchResult:
    """Minimal solution from g; raises Unsolvable off the goal's component.

    "auto" picks BFS for n <= 3 and IDA* with the Manhattan heuristic for
    n = 4; "bfs" and "ida" force one of the two.
    """
    if algo not in ("auto", "bfs", "ida"):
        raise ValueError(f'algo must be "auto", "bfs" or "ida", got {algo!r}')
    if g.n > 4:
        raise ValueError("optimal solving is supported for n <= 4")
    if not is_solvable(g):
        raise Unsolvable("parity test failed: grid is outside the goal's component")
    if algo == "auto":
        algo = "bfs" if g.n <= 3 else "ida"
    if algo == "bfs" and g.n >= 4:
        raise ValueError("BFS is capped at n <= 3; use ida for n = 4")
    return _solve_bfs(g) if algo == "bfs" else _solve_ida(g)


def candidate_sequences(k_max: int) -> Iterator[MoveSeq]:
    """All move sequences of length 1..k_max in length-then-lexicographic order."""
    for length in range(1, k_max + 1):
        for cand in product(MOVES, repeat=length):
            yield cand


def exhaust_sequences(g: TileGrid, k_max: int, ledger=None) -> MoveSeq:
    """First sequence (length-then-lex, U < D < R < L) whose total-mode
    application reaches goal; the empty sequence is checked first.

    Theta(4^k) probes; raises NotFound when no candidate works.  With a
    ledger, each candidate costs one probe decision and the winning sequence
    is replayed through the instrumented verifier, which keeps the whole run
    inside budget("search", n, k_max).
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    target = goal(g.n)

    def probe(result: TileGrid) -> bool:
        if ledger is not None:
            ledger.add("compare", 1)
        return grids_equal(result, target)

    if probe(g):
        return ()
    for cand in candidate_sequences(k_max):
        if probe(apply_seq(g, cand, total=True)):
            if ledger is not None:
                from .cost import instrumented_verify
                instrumented_verify(g, cand, ledger)
            return cand
    raise NotFound(f"no sequence of length <= {k_max} reaches goal")
