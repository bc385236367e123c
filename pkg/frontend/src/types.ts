// Wire types, field for field as the service serializes them.

export type Variant = "euclid" | "grossman" | "m-euclid";
export type PositionPair = [number, number];
export type Mover = "human" | "engine";
export type Status = "in_progress" | "human_won" | "engine_won";

export interface MoveModel {
  target_entry: "smaller" | "larger";
  multiplier: number;
  result: PositionPair;
}

export interface HistoryEntry {
  mover: Mover;
  move: MoveModel;
}

export interface AnalysisSummary {
  grundy_value: number;
  winning_move_exists: boolean;
}

export interface SessionResponse {
  id: string;
  variant: Variant;
  position: PositionPair;
  turn: Mover;
  status: Status;
  history: HistoryEntry[];
  legal_moves: MoveModel[];
  analysis: AnalysisSummary;
}

export interface CreateSessionRequest {
  variant: string;
  a: number;
  b: number;
  human_first: boolean;
}

export interface MoveRequest {
  target_entry: "smaller" | "larger";
  multiplier: number;
}

export interface AnalyzeResponse {
  variant: Variant;
  position: PositionPair;
  terminal: boolean;
  value: number;
  method: "closed_form" | "oracle";
  quotient: number | null;
  index_i: number | null;
  index_j: number | null;
  cf: number[] | null;
  winning_moves: MoveModel[];
  oracle_value: number | null;
}
