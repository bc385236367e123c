"""Rules engine for three subtraction games on integer pairs.

All three games are played on a pair of integers. A move subtracts a
positive integer multiple of one entry from the other; the player who makes
the last move wins. The variants differ only in when play stops:

* ``EUCLID``   -- play stops when an entry reaches zero,
* ``GROSSMAN`` -- play stops when the two entries are equal,
* ``MEUCLID``  -- play stops when one entry divides the other.

Positions are unordered pairs and are stored in canonical form with
``a <= b``. Under Grossman and M-Euclid rules both entries must stay
positive; a zero entry is only ever legal as a Euclid end state.

``oracle_grundy`` computes Sprague-Grundy values by memoized mex recursion
over the full game tree. It is the ground truth the closed forms in
:mod:`euclidgames.cf` are validated against, and it refuses entries above a
configurable bound instead of running unboundedly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import (
    IllegalMoveError,
    InvalidPositionError,
    OracleBoundError,
)

DEFAULT_ORACLE_BOUND = 10_000
ORACLE_BOUND_ENV = "EUCLIDGAMES_ORACLE_BOUND"


class Variant(str, Enum):
    """Which terminal rule is in force."""

    EUCLID = "euclid"
    GROSSMAN = "grossman"
    MEUCLID = "m-euclid"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        """Parse a variant name, accepting single-letter aliases."""
        key = text.strip().lower()
        aliases = {
            "e": cls.EUCLID,
            "euclid": cls.EUCLID,
            "g": cls.GROSSMAN,
            "grossman": cls.GROSSMAN,
            "m": cls.MEUCLID,
            "meuclid": cls.MEUCLID,
            "m-euclid": cls.MEUCLID,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown variant {text!r}") from None


class TargetEntry(str, Enum):
    """Which canonical entry a move reduces.

    With ``a <= b`` only the larger entry can ever be reduced without going
    negative, so generated moves always target ``LARGER``; ``SMALLER`` exists
    to give submitted moves a total vocabulary.
    """

    SMALLER = "smaller"
    LARGER = "larger"


class Method(str, Enum):
    """Provenance of a Grundy value."""

    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


@dataclass(frozen=True, order=True)
class Position:
    """Unordered pair of nonnegative integers, stored with ``a <= b``.

    At least one entry must be positive. Zero entries are accepted at
    construction (they are Euclid end states) but rejected by
    :meth:`validate_for` under Grossman and M-Euclid rules.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise InvalidPositionError(f"negative entry in ({self.a},{self.b})")
        if self.a == 0 and self.b == 0:
            raise InvalidPositionError("both entries are zero")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def validate_for(self, variant: Variant) -> "Position":
        """Return self if valid under ``variant``, else raise."""
        if self.a == 0 and variant is not Variant.EUCLID:
            raise InvalidPositionError(
                f"zero entry in {self} is only valid under Euclid rules"
            )
        return self

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Move:
    """One legal subtraction: ``multiplier`` times the other entry is taken
    from ``target_entry``, giving ``result`` in canonical form."""

    target_entry: TargetEntry
    multiplier: int
    result: Position

    def __str__(self) -> str:
        return f"k={self.multiplier} on {self.target_entry.value} -> {self.result}"


@dataclass(frozen=True)
class GrundyReport:
    """Grundy value together with its provenance and the quantities the
    closed forms are built from.

    ``quotient`` is ``b // a`` on the canonical form (absent when the smaller
    entry is zero). ``index_i`` and ``index_j`` are the continued-fraction
    prefix indices; oracle-produced reports leave them unset, and ``index_j``
    is absent whenever the expansion has degree zero.
    """

    value: int
    method: Method
    quotient: int | None = None
    index_i: int | None = None
    index_j: int | None = None


def default_oracle_bound() -> int:
    """Oracle entry bound: the ``EUCLIDGAMES_ORACLE_BOUND`` env var, or 10000."""
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise OracleBoundError(f"{ORACLE_BOUND_ENV} must be an integer, got {raw!r}") from None
    if bound < 1:
        raise OracleBoundError(f"{ORACLE_BOUND_ENV} must be positive, got {bound}")
    return bound


def is_terminal(variant: Variant, p: Position) -> bool:
    """True when play has stopped under ``variant``'s terminal rule."""
    p.validate_for(variant)
    if variant is Variant.EUCLID:
        return p.a == 0
    if variant is Variant.GROSSMAN:
        return p.a == p.b
    return p.b % p.a == 0


def _max_multiplier(variant: Variant, a: int, b: int) -> int:
    # Euclid permits a zero result; Grossman and M-Euclid require the reduced
    # entry to stay positive.
    if variant is Variant.EUCLID:
        return b // a
    return (b - 1) // a


def legal_moves(variant: Variant, p: Position) -> list[Move]:
    """All legal moves from ``p``, multipliers ascending.

    Only the larger canonical entry can be reduced (any multiple of the
    larger entry exceeds the smaller), so the canonical enumeration order is
    simply ascending multiplier. Empty exactly when ``p`` is terminal.
    """
    if is_terminal(variant, p):
        return []
    a, b = p.a, p.b
    return [
        Move(TargetEntry.LARGER, k, Position(a, b - k * a))
        for k in range(1, _max_multiplier(variant, a, b) + 1)
    ]


def apply_move(variant: Variant, p: Position, move: Move) -> Position:
    """Result of playing ``move`` from ``p``; the move must be legal."""
    if move not in legal_moves(variant, p):
        raise IllegalMoveError(f"{move} is not legal from {p} under {variant.value}")
    return move.result


def resolve_move(variant: Variant, p: Position, target_entry: TargetEntry, multiplier: int) -> Move:
    """Find the legal move with the given coordinates, or raise."""
    for move in legal_moves(variant, p):
        if move.target_entry is target_entry and move.multiplier == multiplier:
            return move
    raise IllegalMoveError(
        f"k={multiplier} on {target_entry.value} is not legal from {p} under {variant.value}"
    )


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in ``values``."""
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


def _terminal_pair(variant: Variant, a: int, b: int) -> bool:
    if variant is Variant.EUCLID:
        return a == 0
    if variant is Variant.GROSSMAN:
        return a == b
    return b % a == 0


def _option_pairs(variant: Variant, a: int, b: int) -> list[tuple[int, int]]:
    # a <= b and the pair is nonterminal, hence a >= 1.
    options = []
    for k in range(1, _max_multiplier(variant, a, b) + 1):
        r = b - k * a
        options.append((r, a) if r < a else (a, r))
    return options


def _oracle_value(
    variant: Variant, a: int, b: int, memo: dict[tuple[int, int], int]
) -> int:
    # Iterative post-order walk of the option DAG. An explicit frame stack
    # keeps the depth at the subtraction-chain length instead of the Python
    # recursion limit: the chain from (1, b) alone is ~b positions deep.
    root = (a, b)
    frames: list[list] = [[root, None, 0]]
    while frames:
        frame = frames[-1]
        pair = frame[0]
        if pair in memo:
            frames.pop()
            continue
        if frame[1] is None:
            if _terminal_pair(variant, *pair):
                memo[pair] = 0
                frames.pop()
                continue
            frame[1] = _option_pairs(variant, *pair)
        options = frame[1]
        i = frame[2]
        n = len(options)
        while i < n and options[i] in memo:
            i += 1
        frame[2] = i
        if i < n:
            frames.append([options[i], None, 0])
        else:
            memo[pair] = mex(memo[o] for o in options)
            frames.pop()
    return memo[root]


def oracle_grundy(
    variant: Variant,
    p: Position,
    *,
    bound: int | None = None,
    memo: dict[tuple[int, int], int] | None = None,
) -> GrundyReport:
    """Brute-force Sprague-Grundy value of ``p``: 0 at terminal positions,
    otherwise the mex over the oracle values of all options.

    ``memo`` maps canonical ``(a, b)`` pairs to values and must be used for a
    single variant only; passing one in shares work across a sweep. Entries
    above ``bound`` (default :func:`default_oracle_bound`) are refused so
    callers fall back to the closed form.
    """
    p.validate_for(variant)
    limit = default_oracle_bound() if bound is None else bound
    if p.b > limit:
        raise OracleBoundError(f"entries of {p} exceed the oracle bound {limit}")
    table = {} if memo is None else memo
    value = _oracle_value(variant, p.a, p.b, table)
    return GrundyReport(
        value=value,
        method=Method.ORACLE,
        quotient=p.b // p.a if p.a else None,
    )
