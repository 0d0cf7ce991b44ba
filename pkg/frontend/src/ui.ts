/** Small DOM builders for the board, the removal editor, and the move log. */

import type { LogEntry, PileStatus } from "./types.js";

/** Ring indices covered by a window, in removal order. */
export function windowIndices(start: number, width: number, pileCount: number): number[] {
  const out: number[] = [];
  for (let j = 0; j < width; j++) {
    out.push((start + j) % pileCount);
  }
  return out;
}

/** One-line rendering of a played move, matching the service's coordinates. */
export function describeMove(entry: LogEntry): string {
  const removals = entry.move.removals.join(",");
  return `${entry.by}: window ${entry.move.windowStart} removals ${removals} -> (${entry.result.join(",")})`;
}

export function buildBoard(
  piles: number[],
  selected: Set<number>,
  windowStart: number | null,
  onPick: (index: number) => void,
): HTMLElement {
  const board = el("div", "board");
  if (piles.length === 0) {
    board.append(el("p", "empty-board", "(empty ring)"));
    return board;
  }
  piles.forEach((count, index) => {
    const pile = document.createElement("button");
    pile.type = "button";
    pile.className = "pile";
    if (selected.has(index)) {
      pile.classList.add("in-window");
    }
    if (index === windowStart) {
      pile.classList.add("window-start");
    }
    pile.append(el("span", "pile-index", `[${index}]`));
    pile.append(el("span", "pile-count", String(count)));
    pile.addEventListener("click", () => onPick(index));
    board.append(pile);
  });
  return board;
}

export function buildRemovalEditor(
  piles: number[],
  indices: number[],
  values: number[],
  onChange: (slot: number, value: number) => void,
): HTMLElement {
  const editor = el("div", "removal-editor");
  indices.forEach((pileIndex, slot) => {
    const row = el("label", "removal-row");
    row.append(el("span", "removal-label", `pile [${pileIndex}]`));
    const input = document.createElement("input");
    input.type = "number";
    input.min = "0";
    input.max = String(piles[pileIndex] ?? 0);
    input.value = String(values[slot] ?? 0);
    input.addEventListener("input", () => {
      onChange(slot, Number(input.value));
    });
    row.append(input);
    editor.append(row);
  });
  return editor;
}

export function buildLog(entries: LogEntry[]): HTMLElement {
  const list = el("ol", "move-log");
  for (const entry of entries) {
    list.append(el("li", `log-${entry.by}`, describeMove(entry)));
  }
  return list;
}

export function statusBadge(status: PileStatus): HTMLElement {
  const badge = el("span", `badge badge-${status.toLowerCase()}`, status);
  badge.title =
    status === "P"
      ? "the player to move loses under perfect play"
      : "the player to move wins under perfect play";
  return badge;
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}
