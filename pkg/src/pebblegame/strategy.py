"""Move sequences: synthesis of optimal plays, replay verification, intervals.

A move is ``+i`` (place a pebble on square i) or ``-i`` (remove one).  The
text wire format is one move per line, newline terminated.  Replays always
apply the game rule that square i may change only when i == 1 or square i-1
is occupied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional

from . import config, dp
from .errors import ResourceLimitError, UnsolvableError

# Rule identifiers used in verification reports.
RULE_INITIAL = "initial"
RULE_FINAL = "final"
RULE_ADD = "add"
RULE_REMOVE = "remove"
RULE_OCCUPANCY = "occupancy"
RULE_BUDGET = "budget"


class Move(NamedTuple):
    place: bool
    square: int

    def __str__(self) -> str:
        return f"{'+' if self.place else '-'}{self.square}"

    def flipped(self) -> "Move":
        return Move(not self.place, self.square)


def place(square: int) -> Move:
    return Move(True, square)


def remove(square: int) -> Move:
    return Move(False, square)


def parse_move(text: str) -> Move:
    text = text.strip()
    if len(text) < 2 or text[0] not in "+-" or not text[1:].isdigit():
        raise ValueError(f"malformed move {text!r}; expected +<i> or -<i>")
    return Move(text[0] == "+", int(text[1:]))


def format_moves(moves: Iterable[Move]) -> str:
    return "".join(f"{move}\n" for move in moves)


def parse_moves(text: str) -> tuple:
    return tuple(parse_move(line) for line in text.splitlines() if line.strip())


@dataclass(frozen=True)
class Strategy:
    """A move sequence on an n-square board, with replay-derived metadata.

    Construction checks square bounds only; legality of the sequence is the
    verifier's job, so arbitrary (even broken) sequences can be carried.
    """

    n: int
    moves: tuple
    peak_pebbles: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"board size must be >= 1, got {self.n}")
        moves = tuple(self.moves)
        object.__setattr__(self, "moves", moves)
        occupied = set()
        peak = 0
        for move in moves:
            if not 1 <= move.square <= self.n:
                raise ValueError(
                    f"move {move} references a square outside the {self.n}-square board"
                )
            if move.place:
                occupied.add(move.square)
            else:
                occupied.discard(move.square)
            if len(occupied) > peak:
                peak = len(occupied)
        object.__setattr__(self, "peak_pebbles", peak)

    @property
    def step_count(self) -> int:
        return len(self.moves)

    def to_text(self) -> str:
        return format_moves(self.moves)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    step_count: int
    peak_pebbles: int
    first_violation: Optional[tuple]  # (step, rule) or None
    nesting_violations: tuple  # ((square, (start, end-or-None)), ...)


class ReplayChecker:
    """Incremental legality checker; feed moves one at a time.

    Structural violations (double place, remove from empty, disabled move)
    halt the replay because later board states would be meaningless.  A
    budget overshoot is recorded but the replay continues, so the true peak
    is still reported.  Nested residence intervals are detected online: when
    an interval of square i closes while square i+1 has been held at least
    as long, that interval contributed nothing.
    """

    def __init__(self, n: int, budget: int | None = None, initial: Iterable[int] = ()):
        self.n = n
        self.budget = budget
        self.board = set(initial)
        if any(not 1 <= i <= n for i in self.board):
            raise ValueError("initial pebbles outside the board")
        self._open_start = {i: 0 for i in self.board}
        self.peak = len(self.board)
        self.steps = 0
        self.first_violation: Optional[tuple] = None
        self.halted = False
        self.nesting: list = []

    def feed(self, move: Move) -> None:
        self.steps += 1
        if self.halted:
            return
        step = self.steps
        i = move.square
        if not 1 <= i <= self.n:
            raise ValueError(f"move {move} outside the {self.n}-square board")
        enabled = i == 1 or (i - 1) in self.board
        if move.place:
            if i in self.board:
                self._halt(step, RULE_OCCUPANCY)
                return
            if not enabled:
                self._halt(step, RULE_ADD)
                return
            self.board.add(i)
            self._open_start[i] = step
            if len(self.board) > self.peak:
                self.peak = len(self.board)
            if (
                self.budget is not None
                and len(self.board) > self.budget
                and self.first_violation is None
            ):
                self.first_violation = (step, RULE_BUDGET)
        else:
            if i not in self.board:
                self._halt(step, RULE_OCCUPANCY)
                return
            if not enabled:
                self._halt(step, RULE_REMOVE)
                return
            start = self._open_start.pop(i)
            self.board.discard(i)
            above = i + 1
            if above in self.board and self._open_start[above] <= start:
                self.nesting.append((i, (start, step - 1)))

    def _halt(self, step: int, rule: str) -> None:
        self.halted = True
        if self.first_violation is None:
            self.first_violation = (step, rule)

    def finish(self, expected: frozenset | None) -> None:
        """Apply end-of-sequence checks: final configuration, open-interval nesting."""
        if self.halted:
            return
        for i in sorted(self.board):
            above = i + 1
            if above in self.board and self._open_start[above] <= self._open_start[i]:
                self.nesting.append((i, (self._open_start[i], None)))
        if expected is not None and self.board != set(expected):
            if self.first_violation is None:
                self.first_violation = (self.steps, RULE_FINAL)


def verify(strategy: Strategy, budget: int) -> VerificationReport:
    """Replay a strategy from the empty board and report every rule outcome.

    Valid means: every move legal, final board exactly {square n}, and the
    peak pebble count within the budget.  Nesting violations are reported
    but do not make the strategy invalid.
    """
    checker = ReplayChecker(strategy.n, budget=budget)
    for move in strategy.moves:
        checker.feed(move)
    checker.finish(expected=frozenset({strategy.n}))
    return VerificationReport(
        valid=checker.first_violation is None and checker.peak <= budget,
        step_count=strategy.step_count,
        peak_pebbles=checker.peak,
        first_violation=checker.first_violation,
        nesting_violations=tuple(checker.nesting),
    )


def _split_for(n: int, s: int, tables: dp.DpTables | None) -> int:
    s_eff = min(s, n)
    if tables is not None and n <= tables.nmax and s_eff <= tables.smax:
        m = tables.m[n][s_eff]
    else:
        m = dp.split_point(n, s)
    if not m:
        raise UnsolvableError(f"no split for n={n}, S={s}")
    return m


def iter_strategy_moves(
    n: int, s: int, *, tables: dp.DpTables | None = None
) -> Iterator[Move]:
    """Stream the moves of the canonical optimal play for (n, s).

    The play for n >= 2 with split m is: win the m-game, win the shifted
    (n-m)-game with one less pebble while a pebble rests on m, then undo the
    m-game with one less pebble by playing it backwards.  Emission is lazy so
    very long plays never need to be materialized.
    """
    if not dp.is_solvable(n, s):
        raise UnsolvableError(
            f"n={n} is not solvable with S={s} pebbles (limit is n <= 2**(S-1))"
        )
    depth_limit = s + (n - 1).bit_length() + 2
    return _emit(n, s, 0, False, tables, depth_limit)


def _emit(n, s, offset, flipped, tables, fuel) -> Iterator[Move]:
    if fuel <= 0:
        raise RuntimeError("split recursion deeper than its proven bound; this is a bug")
    if n == 1:
        yield Move(not flipped, offset + 1)
        return
    m = _split_for(n, s, tables)
    if not flipped:
        yield from _emit(m, s, offset, False, tables, fuel - 1)
        yield from _emit(n - m, s - 1, offset + m, False, tables, fuel - 1)
        yield from _emit(m, s - 1, offset, True, tables, fuel - 1)
    else:
        yield from _emit(m, s - 1, offset, False, tables, fuel - 1)
        yield from _emit(n - m, s - 1, offset + m, True, tables, fuel - 1)
        yield from _emit(m, s, offset, True, tables, fuel - 1)


def synthesize(
    n: int,
    s: int,
    *,
    tables: dp.DpTables | None = None,
    max_moves: int | None = None,
) -> Strategy:
    """Materialize the canonical optimal play; length equals f_cost(n, s)."""
    cap = config.DEFAULT_MATERIALIZATION_CAP if max_moves is None else max_moves
    moves = []
    for move in iter_strategy_moves(n, s, tables=tables):
        if len(moves) >= cap:
            raise ResourceLimitError(
                f"play for n={n}, S={s} exceeds the materialization cap ({cap} moves)"
            )
        moves.append(move)
    return Strategy(n, tuple(moves))


def reverse_strategy(strategy: Strategy) -> Strategy:
    """Time-reverse a play: reversed order, place and remove swapped.

    An involution on any move sequence.  When the input is a valid solution,
    the result replayed from {square n} legally empties the board, because
    placing and removing share the same enabling condition.
    """
    return Strategy(
        strategy.n, tuple(move.flipped() for move in reversed(strategy.moves))
    )


@dataclass(frozen=True)
class IntervalView:
    """Residence intervals per square over step indices.

    ``squares[i - 1]`` lists the intervals of square i as (start, end) pairs
    meaning the square is occupied after steps start..end, end being None for
    the final interval that is never closed.
    """

    n: int
    squares: tuple

    def occupied_after(self, step: int) -> frozenset:
        result = set()
        for index, intervals in enumerate(self.squares, 1):
            for start, end in intervals:
                if start <= step and (end is None or step <= end):
                    result.add(index)
                    break
        return frozenset(result)

    def nesting_violations(self) -> tuple:
        """All intervals of square i contained in an interval of square i+1."""
        found = []
        for i in range(1, self.n):
            for start, end in self.squares[i - 1]:
                for outer_start, outer_end in self.squares[i]:
                    if outer_start <= start and (
                        outer_end is None or (end is not None and end <= outer_end)
                    ):
                        found.append((i, (start, end)))
                        break
        return tuple(found)

    def to_text(self) -> str:
        lines = []
        for index, intervals in enumerate(self.squares, 1):
            parts = [
                f"[{start},{end}]" if end is not None else f"[{start},)"
                for start, end in intervals
            ]
            lines.append(f"s{index}: {' '.join(parts)}" if parts else f"s{index}:")
        return "".join(line + "\n" for line in lines)


def to_intervals(strategy: Strategy) -> IntervalView:
    """Convert a move sequence to its residence intervals.

    Requires occupancy consistency (no double place, no remove from empty);
    enabling-rule violations do not prevent the conversion.
    """
    open_start = {}
    intervals: list = [[] for _ in range(strategy.n)]
    for step, move in enumerate(strategy.moves, 1):
        i = move.square
        if move.place:
            if i in open_start:
                raise ValueError(f"step {step}: square {i} is already occupied")
            open_start[i] = step
        else:
            if i not in open_start:
                raise ValueError(f"step {step}: square {i} is not occupied")
            intervals[i - 1].append((open_start.pop(i), step - 1))
    for i, start in open_start.items():
        intervals[i - 1].append((start, None))
    for row in intervals:
        row.sort(key=lambda pair: pair[0])
    return IntervalView(strategy.n, tuple(tuple(row) for row in intervals))
