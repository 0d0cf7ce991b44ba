/** Browser entry point: wires the form, the board, and the session together. */

import { ApiError, GameApi } from "./api.js";
import { bannerFor, IllegalMoveError, newGame, submitHumanMove } from "./state.js";
import type { Move, SessionState, Variant } from "./types.js";
import {
  buildBoard,
  buildLog,
  buildRemovalEditor,
  statusBadge,
  windowIndices,
} from "./ui.js";
import { windowWidth } from "./validate.js";

const ENGINE_REPLY_DELAY_MS = 600;

const api = new GameApi("");

let session: SessionState | null = null;
let windowStart: number | null = null;
let removals: number[] = [];
let inFlight = false;

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const els = {
  form: byId<HTMLFormElement>("new-game"),
  variant: byId<HTMLSelectElement>("variant"),
  k: byId<HTMLInputElement>("k"),
  piles: byId<HTMLInputElement>("start-piles"),
  formError: byId<HTMLElement>("form-error"),
  game: byId<HTMLElement>("game"),
  status: byId<HTMLElement>("status"),
  banner: byId<HTMLElement>("banner"),
  board: byId<HTMLElement>("board"),
  editor: byId<HTMLElement>("editor"),
  moveError: byId<HTMLElement>("move-error"),
  submit: byId<HTMLButtonElement>("submit-move"),
  log: byId<HTMLElement>("log"),
};

function parsePiles(text: string): number[] {
  const parts = text.split(",").map((s) => s.trim()).filter((s) => s.length > 0);
  return parts.map((s) => Number(s));
}

function selectWindow(index: number): void {
  if (session === null || session.over || inFlight) {
    return;
  }
  windowStart = index;
  const width = windowWidth(session.rules.k, session.piles.length);
  removals = new Array<number>(width).fill(0);
  els.moveError.textContent = "";
  render(session);
}

function render(state: SessionState, note = ""): void {
  els.game.hidden = false;
  els.status.replaceChildren(statusBadge(state.status));
  els.banner.textContent = note !== "" ? note : bannerFor(state) ?? "";

  const width = windowWidth(state.rules.k, state.piles.length);
  const indices =
    windowStart !== null && state.piles.length > 0
      ? windowIndices(windowStart, width, state.piles.length)
      : [];
  els.board.replaceChildren(
    buildBoard(state.piles, new Set(indices), windowStart, selectWindow),
  );
  if (indices.length > 0 && !state.over) {
    els.editor.replaceChildren(
      buildRemovalEditor(state.piles, indices, removals, (slot, value) => {
        removals[slot] = value;
      }),
    );
    els.submit.hidden = false;
  } else {
    els.editor.replaceChildren();
    els.submit.hidden = true;
  }
  els.log.replaceChildren(buildLog(state.log));
}

async function startGame(event: Event): Promise<void> {
  event.preventDefault();
  if (inFlight) {
    return;
  }
  els.formError.textContent = "";
  const variant = els.variant.value as Variant;
  const k = Number(els.k.value);
  const piles = parsePiles(els.piles.value);
  inFlight = true;
  try {
    session = await newGame(api, { variant, k }, piles);
    windowStart = null;
    removals = [];
    els.moveError.textContent = "";
    render(session);
  } catch (err) {
    if (err instanceof IllegalMoveError) {
      els.formError.textContent = err.message;
    } else if (err instanceof ApiError && err.code === "budget-exceeded") {
      els.formError.textContent = `board too large for the service: ${err.message}`;
    } else if (err instanceof ApiError) {
      els.formError.textContent = err.message;
    } else {
      els.formError.textContent = "could not reach the service";
    }
  } finally {
    inFlight = false;
  }
}

async function playMove(): Promise<void> {
  if (session === null || windowStart === null || inFlight) {
    return;
  }
  const move: Move = { windowStart, removals: [...removals] };
  els.moveError.textContent = "";
  inFlight = true;
  try {
    const next = await submitHumanMove(api, session, move);
    session = next;
    windowStart = null;
    removals = [];
    const humanEntry = next.log[next.log.length - (next.winner === "you" ? 1 : 2)];
    if (humanEntry !== undefined && next.log[next.log.length - 1]?.by === "engine") {
      // Show the board the human left behind, then the engine's reply.
      render({ ...next, piles: humanEntry.result, log: next.log.slice(0, -1) },
        "engine is thinking");
      await new Promise((resolve) => setTimeout(resolve, ENGINE_REPLY_DELAY_MS));
    }
    render(next);
  } catch (err) {
    if (err instanceof IllegalMoveError) {
      els.moveError.textContent = `illegal move (${err.verdict.reason}): ${err.message}`;
    } else if (err instanceof ApiError) {
      els.moveError.textContent = `${err.code}: ${err.message}`;
    } else {
      els.moveError.textContent = "could not reach the service";
    }
  } finally {
    inFlight = false;
  }
}

els.form.addEventListener("submit", (event) => {
  void startGame(event);
});
els.submit.addEventListener("click", () => {
  void playMove();
});

void api.health().then((ok) => {
  if (!ok) {
    els.formError.textContent = "service unreachable; start it with: ringnim serve";
  }
});
