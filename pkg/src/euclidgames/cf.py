"""Continued fractions and the closed-form Grundy values built on them.

For a position ``(a, b)`` with ``0 < a <= b``, the quotient sequence
``[a0, a1, ..., an]`` of ``b/a`` under the division algorithm determines the
Grundy value of all three variants in closed form. The canonical convention
``an >= 2 for n >= 1`` holds automatically for expansions produced by
:func:`cf_expand` and is enforced on constructed sequences.

Two prefix indices drive the formulas. ``index_i`` is the largest ``i`` such
that ``a0 = ... = a(i-1)`` and (``i = 0`` or ``a0 <= ai``); ``index_j`` is
the same with the extra constraint ``j < n``, which collapses to
``min(index_i, n - 1)``. The value of every nonterminal position is then
``b // a`` minus a parity bit:

* Euclid:   ``b // a - (index_i odd)``,
* Grossman: the Euclid value, corrected by ``-(-1) ** index_i`` when all
  quotients are equal,
* M-Euclid: ``b // a - (index_j odd)``.

Terminal positions of each variant take value 0, and values extend to
unordered pairs by symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContinuedFractionError, TerminalPositionError
from .rules import (
    GrundyReport,
    Method,
    Move,
    Position,
    Variant,
    is_terminal,
    legal_moves,
)


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical quotient sequence ``[a0, ..., an]`` of a ratio ``>= 1``.

    Every quotient is at least 1 and the last quotient is at least 2 unless
    the sequence has length one.
    """

    quotients: tuple[int, ...]

    def __post_init__(self) -> None:
        qs = self.quotients
        if not isinstance(qs, tuple):
            object.__setattr__(self, "quotients", tuple(qs))
            qs = self.quotients
        if not qs:
            raise ContinuedFractionError("empty quotient sequence")
        if any(q < 1 for q in qs):
            raise ContinuedFractionError(f"quotients must be positive: {list(qs)}")
        if len(qs) > 1 and qs[-1] < 2:
            raise ContinuedFractionError(
                f"final quotient must be >= 2 when the degree is >= 1: {list(qs)}"
            )

    @property
    def degree(self) -> int:
        return len(self.quotients) - 1

    def __str__(self) -> str:
        return "[" + ",".join(str(q) for q in self.quotients) + "]"


def cf_expand(a: int, b: int) -> ContinuedFraction:
    """Quotient sequence of ``max(a,b) / min(a,b)`` by the division algorithm.

    The final step of the algorithm divides exactly with the remainders
    strictly decreasing, so the last quotient is >= 2 whenever the degree is
    >= 1 and the canonical convention holds by construction.
    """
    if a < 1 or b < 1:
        raise ContinuedFractionError(f"entries must be positive, got ({a},{b})")
    x, y = (b, a) if b >= a else (a, b)
    quotients = []
    while y:
        q, r = divmod(x, y)
        quotients.append(q)
        x, y = y, r
    return ContinuedFraction(tuple(quotients))


def cf_value(cf: ContinuedFraction) -> tuple[int, int]:
    """The unique coprime pair ``(a, b)`` with ``b / a`` equal to ``cf``.

    Inverse of :func:`cf_expand` up to reduction to lowest terms.
    """
    qs = cf.quotients
    num, den = qs[-1], 1
    for q in reversed(qs[:-1]):
        num, den = q * num + den, num
    return den, num


def index_i(cf: ContinuedFraction) -> int:
    """Largest ``i`` with ``a0 = ... = a(i-1)`` and (``i = 0`` or ``a0 <= ai``).

    Computed from the maximal constant prefix: with ``r`` its length, the
    index is ``r`` when ``a(r)`` exists and exceeds ``a0``, else ``r - 1``.
    """
    qs = cf.quotients
    a0 = qs[0]
    r = 1
    while r < len(qs) and qs[r] == a0:
        r += 1
    if r < len(qs) and qs[r] > a0:
        return r
    return r - 1


def index_j(cf: ContinuedFraction) -> int:
    """The same prefix index restricted to ``j < n``: ``min(index_i, n - 1)``.

    Undefined for degree-0 expansions, where the ratio is an integer and the
    M-Euclid position is terminal.
    """
    n = cf.degree
    if n < 1:
        raise TerminalPositionError(
            f"index undefined for the degree-0 expansion {cf}"
        )
    return min(index_i(cf), n - 1)


def _report(p: Position, value: int) -> GrundyReport:
    if p.a == 0:
        return GrundyReport(value=value, method=Method.CLOSED_FORM)
    cf = cf_expand(p.a, p.b)
    return GrundyReport(
        value=value,
        method=Method.CLOSED_FORM,
        quotient=p.b // p.a,
        index_i=index_i(cf),
        index_j=index_j(cf) if cf.degree >= 1 else None,
    )


def grundy_formula(variant: Variant, p: Position) -> GrundyReport:
    """Closed-form Grundy value of ``p`` under ``variant``.

    Terminal positions take value 0. Nonterminal values are ``b // a`` minus
    a parity bit of the matching prefix index, with the Grossman correction
    when all quotients are equal (the degree-0 expansion counts as
    all-equal). Divisible Euclid pairs are covered by their degree-0
    expansion.
    """
    p.validate_for(variant)
    if is_terminal(variant, p):
        return _report(p, 0)
    quotient = p.b // p.a
    cf = cf_expand(p.a, p.b)
    i = index_i(cf)
    if variant is Variant.EUCLID:
        value = quotient - (i % 2)
    elif variant is Variant.GROSSMAN:
        value = quotient - (i % 2)
        if len(set(cf.quotients)) == 1:
            value -= (-1) ** i
    else:
        # Nonterminal under M-Euclid rules means b is not a multiple of a,
        # so the expansion has degree >= 1 and index_j is defined.
        value = quotient - (index_j(cf) % 2)
    return _report(p, value)


def winning_move(variant: Variant, p: Position) -> Move | None:
    """A move to a Grundy-0 position, when one exists.

    Returns the one with the smallest multiplier; ``None`` when ``p`` itself
    has Grundy value 0 (every move then hands the win to the opponent).
    """
    options = legal_moves(variant, p)
    if not options:
        raise TerminalPositionError(f"{p} is terminal under {variant.value}")
    if grundy_formula(variant, p).value == 0:
        return None
    for move in options:
        if grundy_formula(variant, move.result).value == 0:
            return move
    raise AssertionError(f"no zero-value option from {p} despite positive value")


def move_to_value(variant: Variant, p: Position, k: int) -> Move | None:
    """A legal move whose result has Grundy value exactly ``k``, if any.

    Guaranteed to exist for M-Euclid whenever ``k`` is below the value of
    ``p``; never exists when ``k`` equals it.
    """
    options = legal_moves(variant, p)
    if not options:
        raise TerminalPositionError(f"{p} is terminal under {variant.value}")
    for move in options:
        if grundy_formula(variant, move.result).value == k:
            return move
    return None
