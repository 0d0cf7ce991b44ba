/**
 * Client-side move checking.
 *
 * The checks here mirror the service's own validation, in the same order and
 * with the same reason codes, so the client can reject a bad move without a
 * round trip and so an inline message always matches what the server would
 * have said.
 */

import type { Move, MoveVerdict, Variant } from "./types.js";

/** Number of piles a move touches on an m-pile ring under parameter k. */
export function windowWidth(k: number, pileCount: number): number {
  return Math.min(k, pileCount);
}

/** True when the board has no moves left. */
export function isTerminal(variant: Variant, piles: number[]): boolean {
  if (variant === "scn") {
    return piles.length === 0;
  }
  return piles.every((p) => p === 0);
}

/**
 * Check a prospective board for the new-game form.  Returns an error message
 * to show next to the input, or null when the board is playable.
 */
export function validateStart(
  variant: Variant,
  k: number,
  piles: number[],
): string | null {
  if (!Number.isInteger(k) || k < 1) {
    return "k must be a positive integer";
  }
  if (piles.length === 0) {
    return "the ring needs at least one pile";
  }
  for (const p of piles) {
    if (!Number.isInteger(p) || p < 0) {
      return "piles must be non-negative integers";
    }
    if (variant === "scn" && p === 0) {
      return "a shrinking ring holds positive piles only";
    }
  }
  if (variant === "cn" && k > piles.length) {
    return `a static ring of ${piles.length} piles cannot host a window of ${k}`;
  }
  if (isTerminal(variant, piles)) {
    return "the game needs at least one stone";
  }
  return null;
}

/**
 * Decide whether a move is legal on the given board.  Agreement with the
 * service is load-bearing: the UI only submits moves this function accepts.
 */
export function validateMove(
  variant: Variant,
  k: number,
  piles: number[],
  move: Move,
): MoveVerdict {
  const m = piles.length;
  if (isTerminal(variant, piles)) {
    return { ok: false, reason: "window", message: "the game is already over" };
  }
  const w = windowWidth(k, m);
  if (!Number.isInteger(move.windowStart) || move.windowStart < 0 || move.windowStart >= m) {
    return {
      ok: false,
      reason: "window",
      message: `window start ${move.windowStart} outside [0, ${m})`,
    };
  }
  if (move.removals.length !== w) {
    return {
      ok: false,
      reason: "window",
      message: `expected ${w} removal entries for a ${m}-pile ring, got ${move.removals.length}`,
    };
  }
  let total = 0;
  for (let j = 0; j < w; j++) {
    const r = move.removals[j]!;
    const idx = (move.windowStart + j) % m;
    const have = piles[idx]!;
    if (!Number.isInteger(r) || r < 0 || r > have) {
      return {
        ok: false,
        reason: "removal-bounds",
        message: `removal ${r} invalid for pile ${idx} holding ${have}`,
      };
    }
    total += r;
  }
  if (total === 0) {
    return {
      ok: false,
      reason: "zero-total",
      message: "a move must remove at least one stone",
    };
  }
  return { ok: true };
}

/**
 * Apply a validated move locally.  Shrinking boards drop emptied piles and
 * close up, preserving the circular order of the survivors; static boards
 * keep their zeros in place.
 */
export function applyLocally(
  variant: Variant,
  piles: number[],
  move: Move,
): number[] {
  const m = piles.length;
  const next = [...piles];
  for (let j = 0; j < move.removals.length; j++) {
    const idx = (move.windowStart + j) % m;
    next[idx]! -= move.removals[j]!;
  }
  if (variant === "scn") {
    return next.filter((p) => p > 0);
  }
  return next;
}
