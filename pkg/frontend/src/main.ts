// Wires the page to the play service. All rules questions (legal moves,
// outcomes, hints) are answered by the service; this file only renders
// responses and posts the moves the user picks.

import { ApiError, GameClient } from "./api.js";
import type { SessionResponse, Variant } from "./types.js";
import {
  bannerFor,
  describeError,
  findMove,
  formatPair,
  renderAnalysis,
  renderHistory,
  renderHint,
  renderMoveButtons,
  turnLabel,
} from "./ui.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
const client = new GameClient(apiBase);

const setupForm = el<HTMLFormElement>("setup");
const variantInput = el<HTMLSelectElement>("variant");
const aInput = el<HTMLInputElement>("entry-a");
const bInput = el<HTMLInputElement>("entry-b");
const humanFirstInput = el<HTMLInputElement>("human-first");
const noticeBox = el<HTMLElement>("notice");
const gamePanel = el<HTMLElement>("game");
const positionBox = el<HTMLElement>("position");
const statusBox = el<HTMLElement>("status");
const bannerBox = el<HTMLElement>("banner");
const movesBox = el<HTMLElement>("moves");
const multiplierInput = el<HTMLInputElement>("multiplier");
const playButton = el<HTMLButtonElement>("play");
const hintButton = el<HTMLButtonElement>("hint");
const hintBox = el<HTMLElement>("hint-text");
const analysisButton = el<HTMLButtonElement>("toggle-analysis");
const analysisBox = el<HTMLElement>("analysis");
const historyList = el<HTMLElement>("history");

let session: SessionResponse | null = null;
let busy = false;

function notify(text: string, kind: "error" | "info" = "error"): void {
  noticeBox.textContent = text;
  noticeBox.className = text ? `notice ${kind}` : "notice";
}

function render(): void {
  if (!session) {
    gamePanel.hidden = true;
    return;
  }
  gamePanel.hidden = false;
  positionBox.textContent = formatPair(session.position);
  statusBox.textContent = turnLabel(session.status, session.turn);
  const banner = bannerFor(session.status);
  bannerBox.textContent = banner ?? "";
  bannerBox.hidden = banner === null;
  movesBox.innerHTML = renderMoveButtons(session.legal_moves);
  historyList.innerHTML = renderHistory(session.history);
  const playable = session.status === "in_progress" && session.turn === "human";
  multiplierInput.disabled = !playable || busy;
  playButton.disabled = !playable || busy;
  hintButton.disabled = !playable || busy;
  for (const button of movesBox.querySelectorAll("button")) {
    (button as HTMLButtonElement).disabled = !playable || busy;
  }
}

async function mutate(action: () => Promise<SessionResponse>): Promise<void> {
  if (busy) return;
  busy = true;
  render();
  try {
    session = await action();
    notify("");
    hintBox.textContent = "";
    analysisBox.hidden = true;
  } catch (err) {
    if (err instanceof ApiError) notify(describeError(err.detail));
    else notify(String(err));
  } finally {
    busy = false;
    render();
  }
}

setupForm.addEventListener("submit", (event) => {
  event.preventDefault();
  void mutate(() =>
    client.createSession({
      variant: variantInput.value as Variant,
      a: Number(aInput.value),
      b: Number(bInput.value),
      human_first: humanFirstInput.checked,
    }),
  );
});

function playMultiplier(multiplier: number): void {
  if (!session) return;
  const move = findMove(session.legal_moves, multiplier);
  if (!move) {
    notify(`k=${multiplier} is not a legal move here`);
    return;
  }
  const id = session.id;
  void mutate(() =>
    client.playMove(id, {
      target_entry: move.target_entry,
      multiplier: move.multiplier,
    }),
  );
}

movesBox.addEventListener("click", (event) => {
  const button = (event.target as HTMLElement).closest("button.move");
  if (!button) return;
  playMultiplier(Number((button as HTMLElement).dataset.multiplier));
});

playButton.addEventListener("click", () => {
  const multiplier = Number(multiplierInput.value);
  if (!Number.isInteger(multiplier) || multiplier < 0) {
    notify("enter a whole multiplier");
    return;
  }
  playMultiplier(multiplier);
});

hintButton.addEventListener("click", () => {
  if (!session || busy) return;
  const [a, b] = session.position;
  client
    .analyze(session.variant, a, b)
    .then((info) => {
      hintBox.textContent = renderHint(info.winning_moves);
    })
    .catch((err) => notify(err instanceof ApiError ? describeError(err.detail) : String(err)));
});

analysisButton.addEventListener("click", () => {
  if (!session) return;
  if (!analysisBox.hidden) {
    analysisBox.hidden = true;
    return;
  }
  const [a, b] = session.position;
  client
    .analyze(session.variant, a, b)
    .then((info) => {
      analysisBox.innerHTML = renderAnalysis(info);
      analysisBox.hidden = false;
    })
    .catch((err) => notify(err instanceof ApiError ? describeError(err.detail) : String(err)));
});

render();
