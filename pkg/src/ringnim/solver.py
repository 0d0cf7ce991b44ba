"""Exhaustive win/loss solver for ring Nim positions.

Normal play: the player who takes the last stone wins.  A position is ``P``
(previous player wins, i.e. the player to move loses) exactly when every
successor is ``N``; terminal positions are ``P`` vacuously.  A position is
``N`` when at least one successor is ``P``.

Two evaluation modes share one set of move semantics:

* :func:`status` solves a single position top-down with memoization, for
  interactive and service use.  Totals are capped by a solve budget.
* :func:`solve_space` sweeps a bounded scope bottom-up by ascending stone
  total, for exhaustive verification.  Both modes agree everywhere.

Statuses are invariant under rotation and reflection, so results are memoized
per canonical form and recorded under every image of the orbit for cheap
lookups.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Optional

from .ring import (
    BudgetExceededError,
    EnumerationScope,
    Move,
    Position,
    Rules,
    TerminalPositionError,
    Variant,
    canonical_level,
    canonicalize,
    dihedral_orbit,
    is_terminal,
    legal_moves,
)

# Cap on total stones for single-position solves; guards the exponential
# state space behind interactive endpoints.
DEFAULT_SOLVE_BUDGET = 64


class Status(Enum):
    P = "P"
    N = "N"


class SolveCache:
    """Memoized statuses keyed by (rules, position).

    Entries are stored under every rotation/reflection image of a solved
    position so raw successors can be probed without canonicalizing first.
    The cache may be shared across threads: concurrent writers always derive
    identical values for a key (statuses are a pure function of rules and
    position), so lost updates are benign and last-write-wins is safe.  This
    contract is exercised by the test suite rather than assumed.
    """

    def __init__(self) -> None:
        self._tables: dict[tuple[str, int], dict[Position, bool]] = {}
        self._witnesses: dict[tuple[str, int], dict[Position, Move]] = {}

    def table(self, rules: Rules) -> dict[Position, bool]:
        """Image-expanded status table for ``rules`` (True means P)."""
        return self._tables.setdefault(rules.key, {})

    def lookup(self, rules: Rules, pos: Position) -> Optional[bool]:
        return self._tables.get(rules.key, {}).get(pos)

    def store(self, rules: Rules, canonical: Position, is_p: bool) -> None:
        table = self.table(rules)
        for image in dihedral_orbit(canonical):
            table[image] = is_p

    def witness(self, rules: Rules, canonical: Position) -> Optional[Move]:
        return self._witnesses.get(rules.key, {}).get(canonical)

    def store_witness(self, rules: Rules, canonical: Position, move: Move) -> None:
        self._witnesses.setdefault(rules.key, {})[canonical] = move

    def __len__(self) -> int:
        return sum(len(t) for t in self._tables.values())


def _iter_successors(k: int, shrink: bool, pos: Position):
    """Yield raw successors of ``pos``; duplicates possible.

    Cheap candidates come first so that N positions shed their winning move
    early: single-stone removals, then full window clears, then the complete
    removal sweep window by window.
    """
    m = len(pos)
    w = k if k < m else m
    starts = (0,) if m <= k else tuple(range(m))
    for i in range(m):
        pi = pos[i]
        if pi == 0:
            continue
        if pi == 1 and shrink:
            yield pos[:i] + pos[i + 1 :]
        else:
            yield pos[:i] + (pi - 1,) + pos[i + 1 :]
    for start in starts:
        cleared = list(pos)
        emptied = 0
        for j in range(w):
            idx = (start + j) % m
            emptied += cleared[idx]
            cleared[idx] = 0
        if emptied:
            yield tuple(x for x in cleared if x) if shrink else tuple(cleared)
    for start in starts:
        if start + w <= m:
            cur = pos[start : start + w]
            prefix = pos[:start]
            suffix = pos[start + w :]
            for u in itertools.product(*(range(c + 1) for c in cur)):
                if u == cur:
                    continue
                succ = prefix + u + suffix
                if shrink and 0 in u:
                    succ = tuple(x for x in succ if x)
                yield succ
        else:
            tail = m - start
            cur = pos[start:] + pos[: w - tail]
            middle = pos[w - tail : start]
            for u in itertools.product(*(range(c + 1) for c in cur)):
                if u == cur:
                    continue
                succ = u[tail:] + middle + u[:tail]
                if shrink and 0 in u:
                    succ = tuple(x for x in succ if x)
                yield succ


def _status_raw(rules: Rules, pos: Position, table: dict[Position, bool]) -> bool:
    """Top-down solve of a raw position; returns True iff P."""
    hit = table.get(pos)
    if hit is not None:
        return hit
    canon = canonicalize(pos)
    hit = table.get(canon)
    if hit is None:
        hit = _solve_canonical(rules, canon, table)
    return hit


def _solve_canonical(
    rules: Rules, canon: Position, table: dict[Position, bool]
) -> bool:
    shrink = rules.variant is Variant.SHRINKING
    if is_terminal(rules, canon):
        is_p = True
    elif len(canon) <= rules.k:
        # The single window spans the whole ring, so clearing it reaches the
        # terminal P position: every nonterminal position here is N.
        is_p = False
    else:
        is_p = True
        for succ in _iter_successors(rules.k, shrink, canon):
            child = table.get(succ)
            if child is None:
                child = _status_raw(rules, succ, table)
            if child:
                is_p = False
                break
    for image in dihedral_orbit(canon):
        table[image] = is_p
    return is_p


def status(
    rules: Rules,
    pos: Position,
    cache: Optional[SolveCache] = None,
    *,
    max_total: int = DEFAULT_SOLVE_BUDGET,
) -> Status:
    """Win/loss status of ``pos`` under ``rules``.

    Deterministic and independent of cache warm-up or sharing.  Raises
    BudgetExceededError when the position holds more than ``max_total``
    stones.
    """
    total = sum(pos)
    if total > max_total:
        raise BudgetExceededError(
            f"position holds {total} stones, above the solve budget {max_total}"
        )
    if cache is None:
        cache = SolveCache()
    is_p = _status_raw(rules, pos, cache.table(rules))
    return Status.P if is_p else Status.N


def winning_moves(
    rules: Rules,
    pos: Position,
    cache: Optional[SolveCache] = None,
    *,
    max_total: int = DEFAULT_SOLVE_BUDGET,
) -> list[tuple[Move, Position]]:
    """All (move, canonical successor) pairs that land on a P position.

    Empty exactly when ``pos`` itself is P (including terminal positions).
    Sorted by (successor, window_start, removals); one witness move per
    distinct successor, as produced by :func:`ringnim.ring.legal_moves`.
    """
    total = sum(pos)
    if total > max_total:
        raise BudgetExceededError(
            f"position holds {total} stones, above the solve budget {max_total}"
        )
    if cache is None:
        cache = SolveCache()
    if is_terminal(rules, pos):
        return []
    table = cache.table(rules)
    out = []
    for move, succ in legal_moves(rules, pos):
        if _status_raw(rules, succ, table):
            out.append((move, succ))
    return out


def best_move(
    rules: Rules,
    pos: Position,
    cache: Optional[SolveCache] = None,
    *,
    max_total: int = DEFAULT_SOLVE_BUDGET,
) -> Move:
    """A deterministic strongest move from ``pos``.

    From an N position: the winning move whose canonical successor is
    lexicographically smallest.  From a P position (no winning move exists):
    the move with the lexicographically smallest canonical successor, a
    deterministic stall.  Raises TerminalPositionError when ``pos`` has no
    moves.
    """
    if is_terminal(rules, pos):
        raise TerminalPositionError(f"no moves from terminal position {pos}")
    if cache is None:
        cache = SolveCache()
    canon = canonicalize(pos)
    cached = cache.witness(rules, canon)
    if cached is not None and canon == pos:
        return cached
    wins = winning_moves(rules, pos, cache, max_total=max_total)
    if wins:
        move = wins[0][0]
    else:
        move = legal_moves(rules, pos)[0][0]
    if canon == pos:
        cache.store_witness(rules, canon, move)
    return move


def _solve_level(
    rules: Rules,
    level: list[Position],
    table: dict[Position, bool],
    jobs: int,
) -> list[tuple[Position, bool]]:
    """Statuses for one exact-sum layer of canonical positions.

    Successor totals are strictly smaller, so every lookup hits layers that
    are already complete; layer members never depend on each other.  With
    ``jobs`` > 1 the layer is split into contiguous chunks solved by a thread
    pool, and results are merged in enumeration order so the outcome is
    identical for any worker count.
    """
    k = rules.k
    shrink = rules.variant is Variant.SHRINKING

    def compute(pos: Position) -> bool:
        if is_terminal(rules, pos):
            return True
        if len(pos) <= k:
            return False
        for succ in _iter_successors(k, shrink, pos):
            if table[succ]:
                return False
        return True

    if jobs <= 1 or len(level) < 2 * jobs:
        return [(pos, compute(pos)) for pos in level]
    chunks = [level[i::jobs] for i in range(jobs)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(lambda c: [(p, compute(p)) for p in c], chunks))
    merged = [pair for part in parts for pair in part]
    merged.sort()
    return merged


def solve_space(
    rules: Rules, scope: EnumerationScope, *, jobs: int = 1
) -> dict[Position, Status]:
    """Statuses for every canonical position in ``scope``.

    Sweeps stone totals in ascending order so each layer only consults
    completed layers.  For shrinking rules the sweep internally covers all
    pile counts from zero up to the scope's maximum (successors shrink out of
    narrower scopes) and the returned map is filtered back to the request.
    """
    positive = rules.variant is Variant.SHRINKING
    pile_lo = 0 if positive else scope.pile_count_min
    sum_hi = scope.exact_sum if scope.exact_sum is not None else scope.sum_max
    wanted_sums = set(scope.sums())
    table: dict[Position, bool] = {}
    result: dict[Position, Status] = {}
    for s in range(sum_hi + 1):
        level: list[Position] = []
        for m in range(pile_lo, scope.pile_count_max + 1):
            level.extend(canonical_level(s, m, positive=positive))
        level.sort()
        solved = _solve_level(rules, level, table, jobs)
        for pos, is_p in solved:
            for image in dihedral_orbit(pos):
                table[image] = is_p
        if s in wanted_sums:
            for pos, is_p in solved:
                if len(pos) >= scope.pile_count_min:
                    result[pos] = Status.P if is_p else Status.N
    return result
