"""Plain reference implementations used to pin expected values.

Everything here is deliberately naive and structurally different from the
package code: raw tuples, no canonical reduction, no dedup, no shortcut
rules.  Slow but obviously correct, suitable only for small positions.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def ref_rotations(pos):
    return [pos[i:] + pos[:i] for i in range(max(1, len(pos)))]


def ref_images(pos):
    return ref_rotations(pos) + ref_rotations(tuple(reversed(pos)))


def ref_canonical(pos):
    return min(ref_images(pos))


def ref_successors(shrink: bool, k: int, pos):
    """Every (move, successor) pair, raw and undeduplicated."""
    m = len(pos)
    if m == 0 or sum(pos) == 0:
        return []
    w = min(k, m)
    starts = [0] if m <= k else list(range(m))
    out = []
    for start in starts:
        idxs = [(start + j) % m for j in range(w)]
        for rem in itertools.product(*[range(pos[i] + 1) for i in idxs]):
            if sum(rem) == 0:
                continue
            nxt = list(pos)
            for j, r in zip(idxs, rem):
                nxt[j] -= r
            if shrink:
                nxt = [x for x in nxt if x > 0]
            out.append(((start, rem), tuple(nxt)))
    return out


@lru_cache(maxsize=None)
def ref_is_p(shrink: bool, k: int, pos) -> bool:
    """True when the player to move loses under perfect play."""
    succs = ref_successors(shrink, k, pos)
    if not succs:
        return True
    return all(not ref_is_p(shrink, k, s) for _, s in succs)


def ref_positive_compositions(total: int, parts: int):
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)] if total >= 1 else []
    out = []
    for first in range(1, total - parts + 2):
        for rest in ref_positive_compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def ref_nonneg_compositions(total: int, parts: int):
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in ref_nonneg_compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def ref_canonical_set(total: int, parts: int, positive: bool):
    gen = ref_positive_compositions if positive else ref_nonneg_compositions
    return sorted({ref_canonical(p) for p in gen(total, parts)})
