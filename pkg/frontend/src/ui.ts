// Pure helpers between wire responses and the DOM. Everything here returns
// strings or data so it can be tested without a browser; main.ts owns the
// actual elements. No game rules live on this side of the API.

import type {
  AnalyzeResponse,
  HistoryEntry,
  MoveModel,
  PositionPair,
  Status,
} from "./types.js";

export function formatPair(pair: PositionPair): string {
  return `(${pair[0]},${pair[1]})`;
}

export function formatMove(move: MoveModel): string {
  return `k=${move.multiplier} → ${formatPair(move.result)}`;
}

export function bannerFor(status: Status): string | null {
  if (status === "human_won") return "You won";
  if (status === "engine_won") return "Engine won";
  return null;
}

export function turnLabel(status: Status, turn: "human" | "engine"): string {
  if (status !== "in_progress") return "game over";
  return turn === "human" ? "your turn" : "engine thinking";
}

/** The move whose multiplier matches free-form input, if the service listed it. */
export function findMove(moves: MoveModel[], multiplier: number): MoveModel | undefined {
  return moves.find((m) => m.multiplier === multiplier);
}

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

/** One button per legal move, carrying its coordinates as data attributes. */
export function renderMoveButtons(moves: MoveModel[]): string {
  return moves
    .map(
      (m) =>
        `<button class="move" data-target="${m.target_entry}" ` +
        `data-multiplier="${m.multiplier}">${escapeHtml(formatMove(m))}</button>`,
    )
    .join("");
}

export function renderHistory(history: HistoryEntry[]): string {
  return history
    .map(
      (entry) =>
        `<li><span class="mover ${entry.mover}">${entry.mover}</span> ` +
        `${escapeHtml(formatMove(entry.move))}</li>`,
    )
    .join("");
}

export function renderHint(moves: MoveModel[]): string {
  if (moves.length === 0) return "no winning move exists";
  return `recommended: ${formatMove(moves[0])}`;
}

function dash(value: number | null): string {
  return value === null ? "-" : String(value);
}

export function renderAnalysis(info: AnalyzeResponse): string {
  const cf = info.cf === null ? "-" : `[${info.cf.join(",")}]`;
  const lines = [
    `position ${formatPair(info.position)}`,
    `grundy value ${info.value}`,
    `cf ${cf}`,
    `quotient ${dash(info.quotient)}`,
    `I ${dash(info.index_i)}`,
    `J ${dash(info.index_j)}`,
  ];
  if (info.terminal) lines.splice(1, 0, "terminal");
  if (info.oracle_value !== null) lines.push(`oracle value ${info.oracle_value}`);
  return lines.map((line) => `<div>${escapeHtml(line)}</div>`).join("");
}

/** Detail payloads from 400s are either strings or validation record lists. */
export function describeError(detail: unknown): string {
  if (typeof detail === "string") return detail;
  if (Array.isArray(detail)) {
    const first = detail[0];
    if (first && typeof first === "object" && "msg" in first) {
      return String((first as { msg: unknown }).msg);
    }
  }
  return "request rejected";
}
