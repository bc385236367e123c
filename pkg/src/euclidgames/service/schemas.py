"""Pydantic models for the wire format.

Positions travel as two nonnegative decimal integers ``[a, b]`` in
canonical order; all other field names mirror the domain types.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..cf import ContinuedFraction
from ..rules import GrundyReport, Move, Position

PositionPair = tuple[int, int]


class MoveModel(BaseModel):
    target_entry: Literal["smaller", "larger"]
    multiplier: int = Field(ge=1)
    result: PositionPair

    @classmethod
    def from_move(cls, move: Move) -> "MoveModel":
        return cls(
            target_entry=move.target_entry.value,
            multiplier=move.multiplier,
            result=(move.result.a, move.result.b),
        )


class HistoryEntry(BaseModel):
    mover: Literal["human", "engine"]
    move: MoveModel


class AnalysisSummary(BaseModel):
    grundy_value: int
    winning_move_exists: bool


class SessionResponse(BaseModel):
    id: str
    variant: Literal["euclid", "grossman", "m-euclid"]
    position: PositionPair
    turn: Literal["human", "engine"]
    status: Literal["in_progress", "human_won", "engine_won"]
    history: list[HistoryEntry]
    legal_moves: list[MoveModel]
    analysis: AnalysisSummary


class CreateSessionRequest(BaseModel):
    variant: str
    a: int = Field(ge=0)
    b: int = Field(ge=0)
    human_first: bool = True


class MoveRequest(BaseModel):
    target_entry: Literal["smaller", "larger"]
    multiplier: int


class AnalyzeResponse(BaseModel):
    variant: Literal["euclid", "grossman", "m-euclid"]
    position: PositionPair
    terminal: bool
    value: int
    method: Literal["closed_form", "oracle"]
    quotient: int | None
    index_i: int | None
    index_j: int | None
    cf: list[int] | None
    winning_moves: list[MoveModel]
    oracle_value: int | None = None

    @classmethod
    def from_report(
        cls,
        variant: str,
        position: Position,
        terminal: bool,
        report: GrundyReport,
        cf: ContinuedFraction | None,
        winning_moves: list[Move],
        oracle_value: int | None = None,
    ) -> "AnalyzeResponse":
        return cls(
            variant=variant,
            position=(position.a, position.b),
            terminal=terminal,
            value=report.value,
            method=report.method.value,
            quotient=report.quotient,
            index_i=report.index_i,
            index_j=report.index_j,
            cf=list(cf.quotients) if cf is not None else None,
            winning_moves=[MoveModel.from_move(m) for m in winning_moves],
            oracle_value=oracle_value,
        )
