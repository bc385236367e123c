"""Desk-scale exhaustive validation of the closed forms.

Everything here sweeps rectangles of small positions and compares routes
that must agree: closed form against brute-force oracle, the cross-variant
value relations against oracle truth, and the two defining properties of a
Grundy function against the closed form. Check functions return violation
lists (empty on success) with full context per entry rather than aborting at
the first failure. All sweeps are single-threaded and deterministic, ordered
by canonical position.
"""

from __future__ import annotations

import io
import csv as _csv
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cf import ContinuedFraction, cf_expand, grundy_formula, index_i
from .errors import OracleBoundError
from .rules import (
    Method,
    Position,
    Variant,
    default_oracle_bound,
    is_terminal,
    legal_moves,
    oracle_grundy,
)


@dataclass(frozen=True)
class Discrepancy:
    """Position where the closed form and the oracle disagree."""

    variant: Variant
    position: Position
    formula_value: int
    oracle_value: int

    def to_record(self) -> dict:
        return {
            "variant": self.variant.value,
            "position": [self.position.a, self.position.b],
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
        }


@dataclass(frozen=True)
class RelationViolation:
    """Pair where a cross-variant value relation fails against the oracle."""

    position: Position
    quotients: tuple[int, ...]
    relation: str  # "m_vs_euclid" or "m_vs_grossman"
    expected: int
    actual: int

    def to_record(self) -> dict:
        return {
            "position": [self.position.a, self.position.b],
            "cf": list(self.quotients),
            "relation": self.relation,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class PropertyViolation:
    """Nonterminal position violating a defining property of the Grundy
    function: either some move preserves the value, or some value below it
    is not reachable in one move."""

    variant: Variant
    position: Position
    kind: str  # "value_preserved" or "value_unreachable"
    detail: str

    def to_record(self) -> dict:
        return {
            "variant": self.variant.value,
            "position": [self.position.a, self.position.b],
            "kind": self.kind,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CensusRow:
    """One pair whose three Grundy values are not all equal, with the
    continued-fraction conditions that characterize each difference.

    The flags are recomputed from the stored expansion on every access, so
    they can never drift from it.
    """

    position: Position
    cf: ContinuedFraction
    g_e: int
    g_g: int
    g_m: int

    @property
    def grossman_exception(self) -> bool:
        """All quotients equal: the Grossman value differs from Euclid's."""
        return len(set(self.cf.quotients)) == 1

    @property
    def m_euclid_exception(self) -> bool:
        """Leading quotients equal and <= the last: M-Euclid differs from Euclid."""
        qs = self.cf.quotients
        return len(set(qs[:-1])) == 1 and qs[0] <= qs[-1]

    @property
    def m_grossman_exception(self) -> bool:
        """Leading quotients equal and < the last: M-Euclid differs from Grossman."""
        qs = self.cf.quotients
        return len(set(qs[:-1])) == 1 and qs[0] < qs[-1]

    def to_record(self) -> dict:
        return {
            "a": self.position.a,
            "b": self.position.b,
            "cf": list(self.cf.quotients),
            "g_e": self.g_e,
            "g_g": self.g_g,
            "g_m": self.g_m,
            "grossman_exception": self.grossman_exception,
            "m_euclid_exception": self.m_euclid_exception,
            "m_grossman_exception": self.m_grossman_exception,
        }


def _check_bound(max_entry: int, bound: int | None) -> int:
    limit = default_oracle_bound() if bound is None else bound
    if max_entry < 1:
        raise ValueError(f"max_entry must be positive, got {max_entry}")
    if max_entry > limit:
        raise OracleBoundError(f"max_entry {max_entry} exceeds the oracle bound {limit}")
    return limit


def sweep_positions(variant: Variant, max_entry: int) -> Iterator[Position]:
    """Canonical positions with both entries <= ``max_entry``, in order.

    Euclid includes its zero-entry end states; the other variants range over
    positive pairs only.
    """
    low = 0 if variant is Variant.EUCLID else 1
    for a in range(low, max_entry + 1):
        for b in range(max(a, 1), max_entry + 1):
            yield Position(a, b)


def verify_range(
    variant: Variant, max_entry: int, *, bound: int | None = None
) -> list[Discrepancy]:
    """Compare closed form and oracle on every position within ``max_entry``."""
    _check_bound(max_entry, bound)
    memo: dict[tuple[int, int], int] = {}
    out = []
    for p in sweep_positions(variant, max_entry):
        formula = grundy_formula(variant, p).value
        oracle = oracle_grundy(variant, p, bound=max_entry, memo=memo).value
        if formula != oracle:
            out.append(Discrepancy(variant, p, formula, oracle))
    return out


def _nondivisible_pairs(max_entry: int) -> Iterator[tuple[int, int]]:
    for a in range(1, max_entry + 1):
        for b in range(a + 1, max_entry + 1):
            if b % a:
                yield a, b


def check_corollary(max_entry: int, *, bound: int | None = None) -> list[RelationViolation]:
    """Validate the cross-variant value relations against oracle truth.

    For every ``0 < a < b <= max_entry`` with ``b`` not a multiple of ``a``:
    the M-Euclid value equals the Euclid value except when the leading
    quotients are all equal and <= the last, where it differs by
    ``(-1) ** index_i``; and likewise against the Grossman value with the
    strict form of the condition. All three values come from the oracle, so
    the relations are checked independently of the closed forms.
    """
    _check_bound(max_entry, bound)
    memos: dict[Variant, dict[tuple[int, int], int]] = {v: {} for v in Variant}
    out = []
    for a, b in _nondivisible_pairs(max_entry):
        p = Position(a, b)
        cf = cf_expand(a, b)
        qs = cf.quotients
        sign = (-1) ** index_i(cf)
        values = {
            v: oracle_grundy(v, p, bound=max_entry, memo=memos[v]).value for v in Variant
        }
        prefix_constant = len(set(qs[:-1])) == 1
        expected_e = values[Variant.EUCLID]
        if prefix_constant and qs[0] <= qs[-1]:
            expected_e -= sign
        if values[Variant.MEUCLID] != expected_e:
            out.append(
                RelationViolation(p, qs, "m_vs_euclid", expected_e, values[Variant.MEUCLID])
            )
        expected_g = values[Variant.GROSSMAN]
        if prefix_constant and qs[0] < qs[-1]:
            expected_g -= sign
        if values[Variant.MEUCLID] != expected_g:
            out.append(
                RelationViolation(p, qs, "m_vs_grossman", expected_g, values[Variant.MEUCLID])
            )
    return out


def check_proof_properties(
    max_entry: int, variants: Sequence[Variant] | None = None
) -> list[PropertyViolation]:
    """Check the two defining Grundy-function properties on the closed form.

    For every nonterminal position within ``max_entry``: (1) no move
    preserves the closed-form value, and (2) every value below it is taken
    by some option. Together with value 0 at terminals these characterize
    the Grundy function, so passing sweeps certify the formulas without
    consulting the oracle. M-Euclid carries the guarantee; Euclid and
    Grossman are checked empirically and reported separately.
    """
    if max_entry < 1:
        raise ValueError(f"max_entry must be positive, got {max_entry}")
    selected = tuple(Variant) if variants is None else tuple(variants)
    out = []
    for variant in selected:
        for p in sweep_positions(variant, max_entry):
            options = legal_moves(variant, p)
            if not options:
                continue
            value = grundy_formula(variant, p).value
            reached = set()
            for move in options:
                got = grundy_formula(variant, move.result).value
                reached.add(got)
                if got == value:
                    out.append(
                        PropertyViolation(
                            variant,
                            p,
                            "value_preserved",
                            f"move {move} keeps value {value}",
                        )
                    )
            for k in range(value):
                if k not in reached:
                    out.append(
                        PropertyViolation(
                            variant,
                            p,
                            "value_unreachable",
                            f"no move reaches value {k} from value {value}",
                        )
                    )
    return out


def grundy_table(
    variant: Variant,
    max_a: int,
    max_b: int,
    method: Method = Method.CLOSED_FORM,
    *,
    bound: int | None = None,
) -> list[list[int | None]]:
    """Grundy values for ``1 <= a <= max_a, 1 <= b <= max_b``.

    ``None`` marks the variant's terminal cells. Row index 0 holds a = 1.
    """
    if max_a < 1 or max_b < 1:
        raise ValueError("table dimensions must be positive")
    memo: dict[tuple[int, int], int] = {}
    if method is Method.ORACLE:
        _check_bound(max(max_a, max_b), bound)
    rows = []
    for a in range(1, max_a + 1):
        row: list[int | None] = []
        for b in range(1, max_b + 1):
            p = Position(a, b)
            if is_terminal(variant, p):
                row.append(None)
            elif method is Method.ORACLE:
                row.append(oracle_grundy(variant, p, bound=max(max_a, max_b), memo=memo).value)
            else:
                row.append(grundy_formula(variant, p).value)
        rows.append(row)
    return rows


def exception_census(max_entry: int) -> list[CensusRow]:
    """Rows for every nondivisible pair whose three closed-form values are
    not all equal, ordered by canonical position."""
    if max_entry < 1:
        raise ValueError(f"max_entry must be positive, got {max_entry}")
    rows = []
    for a, b in _nondivisible_pairs(max_entry):
        row = census_row(a, b)
        if not (row.g_e == row.g_g == row.g_m):
            rows.append(row)
    return rows


def census_row(a: int, b: int) -> CensusRow:
    """Closed-form values and exception flags for one nondivisible pair."""
    p = Position(a, b)
    return CensusRow(
        position=p,
        cf=cf_expand(a, b),
        g_e=grundy_formula(Variant.EUCLID, p).value,
        g_g=grundy_formula(Variant.GROSSMAN, p).value,
        g_m=grundy_formula(Variant.MEUCLID, p).value,
    )


TERMINAL_MARK = "T"


def table_csv(matrix: list[list[int | None]]) -> str:
    """Render a Grundy table as CSV: header row of b labels, one row per a,
    terminal cells as the literal ``T``."""
    out = io.StringIO()
    writer = _csv.writer(out, lineterminator="\n")
    width = len(matrix[0]) if matrix else 0
    writer.writerow(["a\\b"] + [str(b) for b in range(1, width + 1)])
    for a, row in enumerate(matrix, start=1):
        writer.writerow([str(a)] + [TERMINAL_MARK if v is None else str(v) for v in row])
    return out.getvalue()


CENSUS_FIELDS = (
    "a",
    "b",
    "cf",
    "g_e",
    "g_g",
    "g_m",
    "grossman_exception",
    "m_euclid_exception",
    "m_grossman_exception",
)


def census_csv(rows: Sequence[CensusRow]) -> str:
    """Render census rows as CSV; flags as 0/1, quotients space-separated."""
    out = io.StringIO()
    writer = _csv.writer(out, lineterminator="\n")
    writer.writerow(CENSUS_FIELDS)
    for row in rows:
        writer.writerow(
            [
                row.position.a,
                row.position.b,
                " ".join(str(q) for q in row.cf.quotients),
                row.g_e,
                row.g_g,
                row.g_m,
                int(row.grossman_exception),
                int(row.m_euclid_exception),
                int(row.m_grossman_exception),
            ]
        )
    return out.getvalue()
