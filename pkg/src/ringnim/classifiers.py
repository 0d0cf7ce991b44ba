"""Closed-form P-position classifiers for solved ring Nim games.

Each predicate decides membership in the published winning-condition family
for one game, independently of the exhaustive solver; the verifier checks the
two routes against each other.  All patterns are stated up to rotation and
reflection, so every predicate searches the dihedral orientations of its
input.  Pattern variables follow the usual conventions: ``M`` for the largest
pile in the pattern, ``m`` for the smallest, ``q`` for a common difference,
``p`` for a free integer parameter.

Games on a static ring (``cn:n,k``) classify fixed-length tuples with
non-negative piles; games on a shrinking ring (``scn:n,k``) classify any pile
count up to n, all piles positive.  The shrinking-ring games with window
width k are insensitive to the starting pile count: fewer piles simply mean
the same game on a smaller ring, which is why the predicates dispatch on
pile count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Optional

from .ring import GameError, Position, Rules, Variant, orientations as _orientations


class UnknownClassifierError(GameError):
    """No classifier is registered under the requested id."""


def _require_length(pos: Position, n: int) -> None:
    if len(pos) != n:
        raise ValueError(f"expected a {n}-pile position, got {len(pos)} piles")


def _require_shrinking(pos: Position, n: int) -> None:
    if len(pos) > n:
        raise ValueError(f"expected at most {n} piles, got {len(pos)}")
    if any(p <= 0 for p in pos):
        raise ValueError("shrinking-ring positions hold only positive piles")


def nim_sum(values: tuple[int, ...]) -> int:
    """Bitwise XOR of pile sizes; zero for the empty tuple."""
    return reduce(lambda a, b: a ^ b, values, 0)


def tau(pos: Position) -> Position:
    """Remove one stone from every pile; requires all piles positive.

    Maps an all-positive position on a shrinking ring to a non-negative
    position of the same length on a static ring.
    """
    if any(p < 1 for p in pos):
        raise ValueError("tau requires every pile to hold at least one stone")
    return tuple(p - 1 for p in pos)


def tau_inverse(pos: Position) -> Position:
    """Add one stone to every pile; inverse of :func:`tau`."""
    if any(p < 0 for p in pos):
        raise ValueError("tau_inverse requires non-negative piles")
    return tuple(p + 1 for p in pos)


def fit_opposite_difference(
    pos: Position,
) -> Optional[tuple[int, int, int, int]]:
    """Fit a 6-pile position to the equal-opposite-difference pattern.

    Searches for an orientation ``(a, b+q, c, a+q, b, c+q)`` with ``q >= 0``;
    opposite piles then differ by the same amount q in a consistent direction.
    Returns ``(a, b, c, q)`` for the first fitting orientation in the fixed
    search order (rotations by ascending offset, then reflections), or None.
    """
    _require_length(pos, 6)
    for x in _orientations(pos):
        q = x[3] - x[0]
        if q >= 0 and x[1] - x[4] == q and x[5] - x[2] == q:
            return (x[0], x[4], x[2], q)
    return None


def p_cn52(pos: Position) -> bool:
    """Static ring, 5 piles, window 2: some orientation reads (M, m, a, b, m)
    with M the largest pile, m the smallest, and M + m = a + b."""
    _require_length(pos, 5)
    mx, mn = max(pos), min(pos)
    for x in _orientations(pos):
        if x[0] == mx and x[1] == mn and x[4] == mn and x[2] + x[3] == mx + mn:
            return True
    return False


def p_cn53(pos: Position) -> bool:
    """Static ring, 5 piles, window 3: some orientation reads (0, M, a, b, M)
    with a + b = M."""
    _require_length(pos, 5)
    for x in _orientations(pos):
        if x[0] == 0 and x[1] == x[4] and x[2] + x[3] == x[1]:
            return True
    return False


def p_cn63(pos: Position) -> bool:
    """Static ring, 6 piles, window 3: the equal-opposite-difference pattern."""
    return fit_opposite_difference(pos) is not None


def p_cn64(pos: Position) -> bool:
    """Static ring, 6 piles, window 4: some orientation fits the
    equal-opposite-difference pattern with nim_sum(a, b, c) = 0.

    Different orientations bind different (a, b, c), so every fitting
    orientation is tried, not just the first.
    """
    _require_length(pos, 6)
    for x in _orientations(pos):
        q = x[3] - x[0]
        if q >= 0 and x[1] - x[4] == q and x[5] - x[2] == q:
            if x[0] ^ x[4] ^ x[2] == 0:
                return True
    return False


def p_cn86(pos: Position) -> bool:
    """Static ring, 8 piles, window 6: some orientation reads
    (0, M, a, M-a, alpha, M-b, b, M) with alpha = min(M, a + b).

    The equations force M to be the largest pile.
    """
    _require_length(pos, 8)
    for x in _orientations(pos):
        if (
            x[0] == 0
            and x[1] == x[7]
            and x[2] + x[3] == x[1]
            and x[5] + x[6] == x[1]
            and x[4] == min(x[1], x[2] + x[6])
        ):
            return True
    return False


def p_cn_moore(k: int, pos: Position) -> bool:
    """Static ring of k+1 piles with window k: P exactly when all piles are
    equal.  The window covers all but one pile, so this is the take-from-all-
    but-one game."""
    _require_length(pos, k + 1)
    return len(set(pos)) <= 1


def p_scn42(pos: Position) -> bool:
    """Shrinking ring, up to 4 piles, window 2.

    P-positions: the empty ring, three equal piles, and four piles
    alternating between two distinct values.  Four equal piles are N.
    """
    _require_shrinking(pos, 4)
    m = len(pos)
    if m == 0:
        return True
    if m == 3:
        return pos[0] == pos[1] == pos[2]
    if m == 4:
        return pos[0] == pos[2] and pos[1] == pos[3] and pos[0] != pos[1]
    return False


def p_scn52(pos: Position) -> bool:
    """Shrinking ring, up to 5 piles, window 2.

    Positions with fewer than five piles follow the 4-pile game.  A 5-pile
    position is P when some orientation matches one of (with m the smallest
    pile and M the largest):

    * (M, m, a, b, m) with m < a, b < M and m + M = a + b
    * (m+1, M, m, m, M) with m even and M >= m + 2
    * (m+1, M, m, m, M) with m odd and M >= m + 3
    * (m+2, m+1, m, m, m+1) with m odd
    * (m+1, m+1, m, m, m+2) with m odd
    """
    _require_shrinking(pos, 5)
    if len(pos) < 5:
        return p_scn42(pos)
    mn, mx = min(pos), max(pos)
    stepped = (mn + 1, mx, mn, mn, mx)
    stepped_ok = (mn % 2 == 0 and mx >= mn + 2) or (mn % 2 == 1 and mx >= mn + 3)
    for x in _orientations(pos):
        if (
            x[0] == mx
            and x[1] == mn
            and x[4] == mn
            and mn < x[2] < mx
            and mn < x[3] < mx
            and x[2] + x[3] == mn + mx
        ):
            return True
        if stepped_ok and x == stepped:
            return True
        if mn % 2 == 1 and (
            x == (mn + 2, mn + 1, mn, mn, mn + 1)
            or x == (mn + 1, mn + 1, mn, mn, mn + 2)
        ):
            return True
    return False


def p_scn53(pos: Position) -> bool:
    """Shrinking ring, up to 5 piles, window 3.

    P-positions: the empty ring, four equal piles, and 5-pile positions with
    an orientation matching (1, M, a, b, M) with 1 <= a < b <= M and
    1 + M = a + b, or (2, 2p, p+1, p, 2p-1) for some p >= 2.  One to three
    piles are always N (the window covers the whole ring).
    """
    _require_shrinking(pos, 5)
    m = len(pos)
    if m == 0:
        return True
    if m < 4:
        return False
    if m == 4:
        return len(set(pos)) == 1
    for x in _orientations(pos):
        if (
            x[0] == 1
            and x[1] == x[4]
            and x[2] < x[3] <= x[1]
            and 1 + x[1] == x[2] + x[3]
        ):
            return True
        p = x[3]
        if p >= 2 and x == (2, 2 * p, p + 1, p, 2 * p - 1):
            return True
    return False


def scn86_family(pos: Position) -> bool:
    """8-pile pattern family for the shrinking ring with window 6.

    True when some orientation reads (1, M, a, M-a+1, alpha, M-b+1, b, M)
    with alpha = min(M, a + b - 1); the equations force M to be the largest
    pile.  This is the raw family before the exceptional alternating
    configurations are removed; :func:`p_scn86` applies the exclusion.
    Decrementing every pile maps this family exactly onto the P-positions of
    the static 8-pile game with window 6.
    """
    _require_length(pos, 8)
    if any(p < 1 for p in pos):
        raise ValueError("shrinking-ring positions hold only positive piles")
    for x in _orientations(pos):
        if (
            x[0] == 1
            and x[1] == x[7]
            and x[3] == x[1] - x[2] + 1
            and x[5] == x[1] - x[6] + 1
            and x[4] == min(x[1], x[2] + x[6] - 1)
        ):
            return True
    return False


def _scn86_exception(pos: Position) -> bool:
    """The near-alternating family (1, 2p-1, p, p, 2p-1, p, p, 2p-1), p >= 1.

    These members of the 8-pile pattern family are N, not P: the move to the
    all-equal 7-pile position (p, ..., p) escapes the family.
    """
    for x in _orientations(pos):
        if x[0] != 1:
            continue
        p = x[2]
        if p >= 1 and x == (1, 2 * p - 1, p, p, 2 * p - 1, p, p, 2 * p - 1):
            return True
    return False


def p_scn86(pos: Position) -> bool:
    """Shrinking ring, up to 8 piles, window 6.

    P-positions: the empty ring, seven equal piles, and 8-pile members of
    :func:`scn86_family` other than the exceptional near-alternating
    configurations (1, 2p-1, p, p, 2p-1, p, p, 2p-1).  One to six piles are
    always N.
    """
    _require_shrinking(pos, 8)
    m = len(pos)
    if m == 0:
        return True
    if m < 7:
        return False
    if m == 7:
        return len(set(pos)) == 1
    return scn86_family(pos) and not _scn86_exception(pos)


@dataclass(frozen=True)
class Classifier:
    """A registered game classifier with its rules and pile-count coverage."""

    id: str
    rules: Rules
    pile_count_min: int
    pile_count_max: int
    predicate: Callable[[Position], bool]


_STATIC_CLASSIFIERS: dict[str, tuple[int, int, Callable[[Position], bool]]] = {
    "cn:5,2": (5, 2, p_cn52),
    "cn:5,3": (5, 3, p_cn53),
    "cn:6,3": (6, 3, p_cn63),
    "cn:6,4": (6, 4, p_cn64),
    "cn:8,6": (8, 6, p_cn86),
}

_SHRINKING_CLASSIFIERS: dict[str, tuple[int, int, Callable[[Position], bool]]] = {
    "scn:4,2": (4, 2, p_scn42),
    "scn:5,2": (5, 2, p_scn52),
    "scn:5,3": (5, 3, p_scn53),
    "scn:8,6": (8, 6, p_scn86),
}


def classifier_ids() -> list[str]:
    """All registered ids; the moore family is parameterized as cn:moore:k."""
    return [*_STATIC_CLASSIFIERS, *_SHRINKING_CLASSIFIERS, "cn:moore:k"]


def resolve_classifier(classifier_id: str) -> Classifier:
    """Look up a classifier by id such as ``"scn:4,2"`` or ``"cn:moore:3"``.

    Raises UnknownClassifierError for unrecognized ids.
    """
    if classifier_id in _STATIC_CLASSIFIERS:
        n, k, predicate = _STATIC_CLASSIFIERS[classifier_id]
        return Classifier(classifier_id, Rules(Variant.STATIC, k), n, n, predicate)
    if classifier_id in _SHRINKING_CLASSIFIERS:
        n, k, predicate = _SHRINKING_CLASSIFIERS[classifier_id]
        return Classifier(classifier_id, Rules(Variant.SHRINKING, k), 0, n, predicate)
    if classifier_id.startswith("cn:moore:"):
        raw = classifier_id[len("cn:moore:") :]
        try:
            k = int(raw)
        except ValueError:
            k = 0
        if k >= 1:
            return Classifier(
                classifier_id,
                Rules(Variant.STATIC, k),
                k + 1,
                k + 1,
                lambda pos, _k=k: p_cn_moore(_k, pos),
            )
    raise UnknownClassifierError(
        f"unknown classifier {classifier_id!r}; known: {', '.join(classifier_ids())}"
    )
