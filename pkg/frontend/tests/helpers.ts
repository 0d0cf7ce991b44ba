/** Deterministic randomness and board/move generators for the test suites. */

import type { Move, Rules, Variant } from "../src/types.js";
import { windowWidth } from "../src/validate.js";

/** Small seeded PRNG; good enough for reproducible test corpora. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export type Rng = () => number;

/** Uniform integer in [lo, hi], inclusive on both ends. */
export function randInt(rng: Rng, lo: number, hi: number): number {
  return lo + Math.floor(rng() * (hi - lo + 1));
}

export function choice<T>(rng: Rng, items: readonly T[]): T {
  return items[randInt(rng, 0, items.length - 1)]!;
}

/**
 * Random playable board with total at most maxSum.  Static boards may hold
 * zeros but never start all-zero; shrinking boards are all-positive.
 */
export function randomBoard(
  rng: Rng,
  variant: Variant,
  maxSum: number,
): { rules: Rules; piles: number[] } {
  const m = randInt(rng, 1, 6);
  const piles: number[] = [];
  for (let i = 0; i < m; i++) {
    piles.push(variant === "scn" ? randInt(rng, 1, 3) : randInt(rng, 0, 3));
  }
  if (variant === "cn" && piles.reduce((a, b) => a + b, 0) === 0) {
    piles[randInt(rng, 0, m - 1)] = randInt(rng, 1, 3);
  }
  let sum = piles.reduce((a, b) => a + b, 0);
  while (sum < maxSum && rng() < 0.6) {
    piles[randInt(rng, 0, m - 1)]! += 1;
    sum += 1;
  }
  const k = variant === "cn" ? randInt(rng, 1, m) : randInt(rng, 1, 6);
  return { rules: { variant, k }, piles };
}

/** Random legal move: valid window, per-pile bounds, at least one stone. */
export function randomLegalMove(
  rng: Rng,
  rules: Rules,
  piles: number[],
): Move {
  const m = piles.length;
  const w = windowWidth(rules.k, m);
  const starts: number[] = [];
  for (let s = 0; s < m; s++) {
    for (let j = 0; j < w; j++) {
      if (piles[(s + j) % m]! > 0) {
        starts.push(s);
        break;
      }
    }
  }
  const windowStart = choice(rng, starts);
  const removals: number[] = [];
  for (let j = 0; j < w; j++) {
    removals.push(randInt(rng, 0, piles[(windowStart + j) % m]!));
  }
  if (removals.reduce((a, b) => a + b, 0) === 0) {
    const positive: number[] = [];
    for (let j = 0; j < w; j++) {
      if (piles[(windowStart + j) % m]! > 0) {
        positive.push(j);
      }
    }
    const slot = choice(rng, positive);
    removals[slot] = randInt(rng, 1, piles[(windowStart + slot) % m]!);
  }
  return { windowStart, removals };
}

/** Lex-least image of a ring under rotation and reflection. */
export function canonicalForm(piles: number[]): number[] {
  const m = piles.length;
  if (m === 0) {
    return [];
  }
  let best: number[] | null = null;
  for (const base of [piles, [...piles].reverse()]) {
    for (let s = 0; s < m; s++) {
      const image: number[] = [];
      for (let j = 0; j < m; j++) {
        image.push(base[(s + j) % m]!);
      }
      if (best === null || lexLess(image, best)) {
        best = image;
      }
    }
  }
  return best!;
}

function lexLess(a: number[], b: number[]): boolean {
  for (let i = 0; i < a.length; i++) {
    if (a[i]! !== b[i]!) {
      return a[i]! < b[i]!;
    }
  }
  return false;
}

/**
 * Random candidate move that may be ill-formed in one of several ways, for
 * checking that the local validator and the service refuse the same things
 * for the same reasons.
 */
export function randomCandidateMove(
  rng: Rng,
  rules: Rules,
  piles: number[],
): Move {
  const m = piles.length;
  const w = windowWidth(rules.k, m);
  const kind = randInt(rng, 0, 5);
  if (m === 0 || kind === 0) {
    return randInt(rng, 0, 1) === 0
      ? { windowStart: m + randInt(rng, 0, 3), removals: new Array<number>(Math.max(w, 1)).fill(1) }
      : { windowStart: -1 - randInt(rng, 0, 2), removals: new Array<number>(Math.max(w, 1)).fill(1) };
  }
  if (kind === 1) {
    const wrong = w + choice(rng, [-w, -1, 1, 3]);
    return {
      windowStart: randInt(rng, 0, m - 1),
      removals: new Array<number>(Math.max(wrong, 0)).fill(1),
    };
  }
  if (kind === 2) {
    const windowStart = randInt(rng, 0, m - 1);
    const removals = new Array<number>(w).fill(0);
    const slot = randInt(rng, 0, w - 1);
    removals[slot] = piles[(windowStart + slot) % m]! + randInt(rng, 1, 3);
    return { windowStart, removals };
  }
  if (kind === 3) {
    const windowStart = randInt(rng, 0, m - 1);
    const removals = new Array<number>(w).fill(0);
    removals[randInt(rng, 0, w - 1)] = -randInt(rng, 1, 2);
    return { windowStart, removals };
  }
  if (kind === 4) {
    return { windowStart: randInt(rng, 0, m - 1), removals: new Array<number>(w).fill(0) };
  }
  if (piles.some((p) => p > 0)) {
    return randomLegalMove(rng, rules, piles);
  }
  // Terminal board: any well-shaped move still gets refused.
  return { windowStart: randInt(rng, 0, m - 1), removals: new Array<number>(w).fill(1) };
}
