"""Core model for Nim-like games played on a ring of piles.

A position is a tuple of pile sizes arranged on a circle.  A move picks a
window of consecutive piles and removes stones from them (at least one stone
in total).  Two rule variants exist:

* ``STATIC``: emptied piles stay on the ring as zeros, so the pile count
  never changes.
* ``SHRINKING``: piles emptied by a move vanish and the circle closes up, so
  every position holds only positive piles and the ring shrinks over time.

Positions are identified up to rotation and reflection of the ring; the
canonical representative is the lexicographically smallest tuple among all
rotations of the position and of its reversal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, TypeAlias

Position: TypeAlias = tuple[int, ...]

# Sanity caps: piles fit 32 bits, totals fit 64 bits.
MAX_PILE = 2**32 - 1
MAX_TOTAL = 2**64 - 1


class Variant(Enum):
    """Ring behaviour when a pile reaches zero."""

    STATIC = "cn"
    SHRINKING = "scn"


class GameError(Exception):
    """Base class for rule violations."""


class InvalidPositionError(GameError):
    """Position violates the variant's pile constraints."""


class InvalidMoveError(GameError):
    """Move is malformed or not legal for the given position.

    ``reason`` is a stable machine-readable code: ``"window"`` (bad window
    start or removal vector length), ``"removal-bounds"`` (negative removal or
    more stones than a pile holds), or ``"zero-total"`` (no stones removed).
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class TerminalPositionError(GameError):
    """Raised when moves are requested from a position that has none."""


class BudgetExceededError(GameError):
    """Raised when a position's total stones exceed the configured cap."""


@dataclass(frozen=True)
class Rules:
    """Game parameters: the ring variant and the window width k."""

    variant: Variant
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"window width must be >= 1, got {self.k}")

    @property
    def key(self) -> tuple[str, int]:
        return (self.variant.value, self.k)


@dataclass(frozen=True)
class Move:
    """Removal of stones from a window of consecutive piles.

    ``window_start`` indexes the first pile of the window; the window then
    runs clockwise and wraps around the ring.  ``removals[j]`` is taken from
    pile ``(window_start + j) % m``.  The window width is ``min(k, m)``: when
    k or more piles remain the window has width k, otherwise it covers every
    remaining pile.
    """

    window_start: int
    removals: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.removals)


@dataclass(frozen=True)
class EnumerationScope:
    """Bounds for exhaustive position sweeps.

    ``exact_sum``, when set, restricts the sweep to positions with exactly
    that many stones; otherwise all totals up to ``sum_max`` are covered.
    """

    pile_count_min: int
    pile_count_max: int
    sum_max: int
    exact_sum: Optional[int] = None

    def __post_init__(self) -> None:
        if not (0 <= self.pile_count_min <= self.pile_count_max):
            raise ValueError(
                f"invalid pile count range "
                f"[{self.pile_count_min}, {self.pile_count_max}]"
            )
        if self.sum_max < 0:
            raise ValueError(f"sum_max must be >= 0, got {self.sum_max}")
        if self.exact_sum is not None and not (0 <= self.exact_sum <= self.sum_max):
            raise ValueError(
                f"exact_sum {self.exact_sum} outside [0, {self.sum_max}]"
            )

    def sums(self) -> range:
        if self.exact_sum is not None:
            return range(self.exact_sum, self.exact_sum + 1)
        return range(self.sum_max + 1)


def window_width(rules: Rules, pile_count: int) -> int:
    """Width of a move window on a ring of ``pile_count`` piles."""
    return min(rules.k, pile_count)


@lru_cache(maxsize=64)
def _dihedral_index_maps(m: int) -> tuple[tuple[int, ...], ...]:
    """Index permutations realizing all rotations and reflections of an m-ring."""
    if m == 0:
        return ((),)
    maps = []
    for r in range(m):
        maps.append(tuple((i + r) % m for i in range(m)))
    for r in range(m):
        maps.append(tuple((r - i) % m for i in range(m)))
    return tuple(dict.fromkeys(maps))


def orientations(pos: Position) -> Iterator[Position]:
    """All rotation/reflection images of ``pos`` in a fixed order.

    Rotations by ascending offset come first, then the reflected images by
    ascending offset; duplicate index maps (possible on tiny or palindromic
    rings) are visited once.
    """
    for idx in _dihedral_index_maps(len(pos)):
        yield tuple(pos[i] for i in idx)


def canonicalize(pos: Position) -> Position:
    """Lexicographically smallest tuple over all rotations and reflections."""
    if len(pos) <= 1:
        return pos
    return min(orientations(pos))


def dihedral_orbit(pos: Position) -> frozenset[Position]:
    """All distinct rotation/reflection images of ``pos``.

    The orbit size divides ``2 * len(pos)`` and the canonical form is the
    orbit's minimum.
    """
    if len(pos) <= 1:
        return frozenset((pos,))
    return frozenset(orientations(pos))


def validate_position(rules: Rules, pos: Position) -> None:
    """Check pile constraints for the variant; raise InvalidPositionError."""
    total = 0
    for p in pos:
        if not isinstance(p, int) or isinstance(p, bool):
            raise InvalidPositionError(f"pile sizes must be integers, got {p!r}")
        if p < 0:
            raise InvalidPositionError(f"pile sizes must be >= 0, got {p}")
        if rules.variant is Variant.SHRINKING and p == 0:
            raise InvalidPositionError(
                "shrinking-ring positions hold only positive piles"
            )
        if p > MAX_PILE:
            raise InvalidPositionError(f"pile size {p} exceeds 32-bit cap")
        total += p
    if total > MAX_TOTAL:
        raise InvalidPositionError("total stones exceed 64-bit cap")


def is_terminal(rules: Rules, pos: Position) -> bool:
    """True when no move exists: the empty ring, or an all-zero static ring."""
    if rules.variant is Variant.SHRINKING:
        return len(pos) == 0
    return not any(pos)


def _window_indices(m: int, start: int, width: int) -> tuple[int, ...]:
    return tuple((start + j) % m for j in range(width))


def apply_move(rules: Rules, pos: Position, move: Move) -> Position:
    """Apply ``move`` to ``pos`` and return the successor position.

    For SHRINKING rules, piles emptied by the move are dropped and the circle
    closes up, preserving the circular order of the survivors.  The result is
    not canonicalized; callers decide whether to reduce it.

    Raises:
        TerminalPositionError: ``pos`` has no moves at all.
        InvalidMoveError: the window or removal vector is malformed, a removal
            exceeds its pile, or no stones are removed.
    """
    m = len(pos)
    if is_terminal(rules, pos):
        raise TerminalPositionError(f"no moves from terminal position {pos}")
    w = window_width(rules, m)
    if not (0 <= move.window_start < m):
        raise InvalidMoveError(
            "window", f"window_start {move.window_start} outside [0, {m})"
        )
    if len(move.removals) != w:
        raise InvalidMoveError(
            "window",
            f"expected {w} removal entries for a {m}-pile ring, "
            f"got {len(move.removals)}",
        )
    total = 0
    new = list(pos)
    for j, r in enumerate(move.removals):
        idx = (move.window_start + j) % m
        if r < 0 or r > pos[idx]:
            raise InvalidMoveError(
                "removal-bounds",
                f"removal {r} invalid for pile {idx} holding {pos[idx]}",
            )
        new[idx] -= r
        total += r
    if total == 0:
        raise InvalidMoveError("zero-total", "a move must remove at least one stone")
    if rules.variant is Variant.SHRINKING:
        return tuple(p for p in new if p > 0)
    return tuple(new)


def legal_moves(rules: Rules, pos: Position) -> list[tuple[Move, Position]]:
    """Enumerate moves from ``pos``, one witness per distinct successor.

    Successors are canonicalized and deduplicated: when several moves reach
    the same canonical position, the lexicographically smallest
    ``(window_start, removals)`` pair is kept as the witness.  The returned
    list is sorted by (successor, window_start, removals).

    Raises:
        TerminalPositionError: ``pos`` has no moves.
    """
    m = len(pos)
    if is_terminal(rules, pos):
        raise TerminalPositionError(f"no moves from terminal position {pos}")
    w = window_width(rules, m)
    starts = range(1) if m <= rules.k else range(m)
    shrink = rules.variant is Variant.SHRINKING
    by_successor: dict[Position, Move] = {}
    for start in starts:
        idxs = _window_indices(m, start, w)
        for removals in itertools.product(*(range(pos[i] + 1) for i in idxs)):
            if not any(removals):
                continue
            new = list(pos)
            for j, r in enumerate(removals):
                new[idxs[j]] -= r
            if shrink:
                succ = canonicalize(tuple(p for p in new if p > 0))
            else:
                succ = canonicalize(tuple(new))
            if succ not in by_successor:
                # Iteration runs in ascending (window_start, removals) order,
                # so the first witness seen is the smallest.
                by_successor[succ] = Move(start, removals)
    return sorted(
        ((mv, succ) for succ, mv in by_successor.items()),
        key=lambda item: (item[1], item[0].window_start, item[0].removals),
    )


def compositions(total: int, parts: int, *, positive: bool) -> Iterator[Position]:
    """Ordered tuples of ``parts`` integers summing to ``total``, lex ascending.

    With ``positive`` every entry is >= 1, otherwise entries may be zero.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = 1 if positive else 0
    if total < lo * parts:
        return

    def rec(remaining: int, slots: int, prefix: list[int]) -> Iterator[Position]:
        if slots == 1:
            if remaining >= lo:
                yield tuple(prefix + [remaining])
            return
        for v in range(lo, remaining - lo * (slots - 1) + 1):
            prefix.append(v)
            yield from rec(remaining - v, slots - 1, prefix)
            prefix.pop()

    yield from rec(total, parts, [])


def canonical_level(total: int, parts: int, *, positive: bool) -> list[Position]:
    """Canonical positions with exactly ``parts`` piles summing to ``total``."""
    # Lex-ascending enumeration visits each orbit's minimum first, so a
    # composition is canonical exactly when it has not been seen as an image.
    seen: set[Position] = set()
    out: list[Position] = []
    for pos in compositions(total, parts, positive=positive):
        if pos in seen:
            continue
        out.append(pos)
        seen.update(dihedral_orbit(pos))
    return out


def enumerate_positions(
    scope: EnumerationScope, *, positive: bool
) -> Iterator[Position]:
    """Stream canonical positions in ``scope``, ordered by (sum, lex).

    ``positive`` selects shrinking-ring mode (every pile >= 1, pile counts
    range over the scope) versus static mode (piles >= 0 and each ring length
    in the scope enumerated at its fixed length).  Each canonical position is
    produced exactly once.
    """
    for s in scope.sums():
        level: list[Position] = []
        for m in range(scope.pile_count_min, scope.pile_count_max + 1):
            level.extend(canonical_level(s, m, positive=positive))
        level.sort()
        yield from level


def parse_position(text: str) -> Position:
    """Parse ``"5,3,1,6,4"`` into a position; the empty string is the empty ring."""
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        return tuple(int(part.strip()) for part in stripped.split(","))
    except ValueError as exc:
        raise InvalidPositionError(f"cannot parse position {text!r}") from exc


def format_position(pos: Position) -> str:
    """Inverse of :func:`parse_position`."""
    return ",".join(str(p) for p in pos)
