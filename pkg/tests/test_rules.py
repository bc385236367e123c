"""Rules engine: positions, move generation, terminal tests, and the oracle."""

from __future__ import annotations

import pytest

from euclidgames import (
    IllegalMoveError,
    InvalidPositionError,
    Method,
    Move,
    OracleBoundError,
    Position,
    TargetEntry,
    Variant,
    apply_move,
    default_oracle_bound,
    is_terminal,
    legal_moves,
    mex,
    oracle_grundy,
    resolve_move,
)
from euclidgames.rules import ORACLE_BOUND_ENV

E, G, M = Variant.EUCLID, Variant.GROSSMAN, Variant.MEUCLID


class TestPosition:
    def test_canonical_order(self):
        p = Position(7, 3)
        assert (p.a, p.b) == (3, 7)
        assert Position(3, 7) == p

    def test_rejects_negative_entries(self):
        with pytest.raises(InvalidPositionError):
            Position(-1, 5)
        with pytest.raises(InvalidPositionError):
            Position(5, -2)

    def test_rejects_double_zero(self):
        with pytest.raises(InvalidPositionError):
            Position(0, 0)

    def test_zero_entry_is_euclid_only(self):
        p = Position(0, 5)
        assert p.validate_for(E) is p
        for variant in (G, M):
            with pytest.raises(InvalidPositionError):
                p.validate_for(variant)

    def test_str(self):
        assert str(Position(12, 5)) == "(5,12)"


class TestVariantParse:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("e", E),
            ("euclid", E),
            ("g", G),
            ("grossman", G),
            ("m", M),
            ("meuclid", M),
            ("m-euclid", M),
            ("  EUCLID ", E),
        ],
    )
    def test_aliases(self, text, expected):
        assert Variant.parse(text) is expected

    def test_unknown(self):
        with pytest.raises(ValueError):
            Variant.parse("nim")


class TestTerminal:
    def test_euclid_stops_at_zero(self):
        assert is_terminal(E, Position(0, 5))
        assert not is_terminal(E, Position(4, 4))
        assert not is_terminal(E, Position(3, 6))

    def test_grossman_stops_at_equal(self):
        assert is_terminal(G, Position(4, 4))
        assert not is_terminal(G, Position(3, 6))
        assert not is_terminal(G, Position(1, 2))

    def test_m_euclid_stops_at_divisibility(self):
        assert is_terminal(M, Position(3, 6))
        assert is_terminal(M, Position(4, 4))
        assert is_terminal(M, Position(1, 5))
        assert not is_terminal(M, Position(3, 7))


class TestLegalMoves:
    def test_euclid_allows_zero_result(self):
        moves = legal_moves(E, Position(3, 7))
        assert [(m.multiplier, m.result.a, m.result.b) for m in moves] == [
            (1, 3, 4),
            (2, 1, 3),
        ]
        # equal entries are nonterminal under Euclid: one move, to a zero entry
        moves = legal_moves(E, Position(4, 4))
        assert [(m.multiplier, m.result.a, m.result.b) for m in moves] == [(1, 0, 4)]

    def test_grossman_keeps_entries_positive(self):
        moves = legal_moves(G, Position(3, 7))
        assert [(m.multiplier, m.result.a, m.result.b) for m in moves] == [
            (1, 3, 4),
            (2, 1, 3),
        ]
        # 8 - 2*4 = 0 is not available, only 8 - 4 = 4
        moves = legal_moves(G, Position(4, 8))
        assert [(m.multiplier, m.result.a, m.result.b) for m in moves] == [(1, 4, 4)]

    def test_terminal_has_no_moves(self):
        assert legal_moves(E, Position(0, 9)) == []
        assert legal_moves(G, Position(5, 5)) == []
        assert legal_moves(M, Position(5, 10)) == []

    def test_moves_target_larger_ascending(self):
        for variant in Variant:
            for a in range(1, 12):
                for b in range(a, 12):
                    moves = legal_moves(variant, Position(a, b))
                    assert [m.multiplier for m in moves] == list(
                        range(1, len(moves) + 1)
                    )
                    assert all(m.target_entry is TargetEntry.LARGER for m in moves)

    def test_m_euclid_nonterminal_move_count_is_quotient(self):
        for a in range(1, 25):
            for b in range(a + 1, 60):
                p = Position(a, b)
                if not is_terminal(M, p):
                    assert len(legal_moves(M, p)) == b // a


class TestApplyResolve:
    def test_apply_legal_move(self):
        p = Position(3, 7)
        move = legal_moves(M, p)[1]
        assert apply_move(M, p, move) == Position(1, 3)

    def test_apply_rejects_foreign_move(self):
        stale = Move(TargetEntry.LARGER, 3, Position(1, 2))
        with pytest.raises(IllegalMoveError):
            apply_move(M, Position(3, 7), stale)

    def test_resolve_move(self):
        move = resolve_move(M, Position(3, 7), TargetEntry.LARGER, 2)
        assert move.result == Position(1, 3)

    def test_resolve_rejects_out_of_range_multiplier(self):
        with pytest.raises(IllegalMoveError):
            resolve_move(M, Position(3, 7), TargetEntry.LARGER, 3)

    def test_resolve_rejects_smaller_target(self):
        with pytest.raises(IllegalMoveError):
            resolve_move(M, Position(3, 7), TargetEntry.SMALLER, 1)


def test_mex():
    assert mex([]) == 0
    assert mex([0, 1, 2]) == 3
    assert mex([1, 2, 5]) == 0
    assert mex([0, 2, 2, 3]) == 1


class TestOracle:
    # small values checkable by hand: e.g. Euclid (1,2) has options (1,1) and
    # (0,1) with values 1 and 0, so mex gives 2
    CASES = {
        E: {(1, 1): 1, (1, 2): 2, (1, 5): 5, (2, 5): 1, (4, 4): 1, (5, 12): 2, (6, 9): 0},
        G: {(1, 1): 0, (1, 2): 1, (1, 5): 4, (2, 4): 1, (2, 5): 2, (5, 7): 0, (5, 12): 1},
        M: {(1, 5): 0, (2, 3): 1, (2, 5): 2, (3, 5): 0, (3, 7): 2, (5, 12): 1, (6, 9): 1},
    }

    @pytest.mark.parametrize(
        "variant,pair,expected",
        [(v, pair, value) for v, table in CASES.items() for pair, value in table.items()],
    )
    def test_known_values(self, variant, pair, expected):
        report = oracle_grundy(variant, Position(*pair))
        assert report.value == expected
        assert report.method is Method.ORACLE
        assert report.index_i is None and report.index_j is None

    def test_terminal_values_are_zero(self):
        assert oracle_grundy(E, Position(0, 7)).value == 0
        assert oracle_grundy(G, Position(7, 7)).value == 0
        assert oracle_grundy(M, Position(7, 21)).value == 0

    def test_memo_is_shared_across_calls(self):
        memo = {}
        oracle_grundy(M, Position(3, 7), memo=memo)
        before = dict(memo)
        oracle_grundy(M, Position(3, 7), memo=memo)
        assert memo == before
        assert memo[(3, 7)] == 2

    def test_deep_chain_does_not_recurse(self):
        # the option chain of (1, n) under Euclid is n levels deep, far past
        # the default recursion limit
        n = 2000
        assert oracle_grundy(E, Position(1, n), bound=n).value == n

    def test_bound_refusal(self):
        with pytest.raises(OracleBoundError):
            oracle_grundy(M, Position(3, 7), bound=5)

    def test_env_bound_override(self, monkeypatch):
        monkeypatch.setenv(ORACLE_BOUND_ENV, "6")
        assert default_oracle_bound() == 6
        with pytest.raises(OracleBoundError):
            oracle_grundy(M, Position(3, 7))
        monkeypatch.setenv(ORACLE_BOUND_ENV, "7")
        assert oracle_grundy(M, Position(3, 7)).value == 2

    def test_env_bound_rejects_garbage(self, monkeypatch):
        monkeypatch.setenv(ORACLE_BOUND_ENV, "many")
        with pytest.raises(OracleBoundError):
            default_oracle_bound()
        monkeypatch.setenv(ORACLE_BOUND_ENV, "0")
        with pytest.raises(OracleBoundError):
            default_oracle_bound()

    def test_symmetry(self):
        for variant in Variant:
            assert (
                oracle_grundy(variant, Position(9, 31)).value
                == oracle_grundy(variant, Position(31, 9)).value
            )
