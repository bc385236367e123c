"""Acceptance suite: every promised property at its promised scale.

Each test prints a single PASS/FAIL verdict line (collected again in the
terminal summary). The sweeps are exact comparisons with zero tolerance; the
timed ones must also finish within their budget.
"""

from __future__ import annotations

import math
import random
import time

import pytest

from euclidgames import (
    Position,
    Variant,
    cf_expand,
    cf_value,
    check_corollary,
    check_proof_properties,
    grundy_formula,
    index_i,
    index_j,
    is_terminal,
    legal_moves,
    oracle_grundy,
    sweep_positions,
    verify_range,
)
from euclidgames.service.sessions import ENGINE_WON, IN_PROGRESS, SessionStore
from euclidgames.verify import census_row

E, G, M = Variant.EUCLID, Variant.GROSSMAN, Variant.MEUCLID

SWEEP_MAX = 300
SWEEP_BUDGET_SECONDS = 10.0


@pytest.mark.parametrize("variant", list(Variant), ids=lambda v: v.value)
def test_closed_form_equals_oracle_to_300(variant, record_verdict):
    start = time.perf_counter()
    discrepancies = verify_range(variant, SWEEP_MAX)
    elapsed = time.perf_counter() - start
    positions = sum(1 for _ in sweep_positions(variant, SWEEP_MAX))
    record_verdict(
        f"{variant.value}: closed form equals oracle on all pairs with entries <= {SWEEP_MAX}",
        not discrepancies and elapsed <= SWEEP_BUDGET_SECONDS,
        f"{positions} positions, {len(discrepancies)} discrepancies, {elapsed:.2f}s",
    )


def test_cross_variant_relations_and_census_flags_to_300(record_verdict):
    violations = check_corollary(SWEEP_MAX)

    flag_mismatches = 0
    pairs = 0
    for a in range(1, SWEEP_MAX + 1):
        for b in range(a + 1, SWEEP_MAX + 1):
            if b % a == 0:
                continue
            pairs += 1
            row = census_row(a, b)
            ok = (
                row.grossman_exception == (row.g_g != row.g_e)
                and row.m_euclid_exception == (row.g_m != row.g_e)
                and row.m_grossman_exception == (row.g_m != row.g_g)
            )
            flag_mismatches += not ok

    named = {
        (2, 5): {E: 1, G: 2, M: 2},
        (5, 12): {E: 2, G: 1, M: 1},
    }
    named_ok = all(
        oracle_grundy(v, Position(*pair)).value == value
        for pair, expected in named.items()
        for v, value in expected.items()
    )

    record_verdict(
        f"cross-variant value relations and census flags on entries <= {SWEEP_MAX}",
        not violations and flag_mismatches == 0 and named_ok,
        f"{len(violations)} relation violations, {flag_mismatches} flag mismatches "
        f"over {pairs} pairs, named pairs {'ok' if named_ok else 'wrong'}",
    )


def test_m_euclid_grundy_properties_to_200(record_verdict):
    violations = check_proof_properties(200, [M])
    positions = sum(1 for _ in sweep_positions(M, 200))
    record_verdict(
        "m-euclid: no move preserves the value and every smaller value is "
        "reachable, entries <= 200",
        not violations,
        f"{positions} positions, {len(violations)} violations",
    )


def test_base_case_value_one_to_10000(record_verdict):
    bad = [
        a for a in range(2, 10_001) if grundy_formula(M, Position(a, a + 1)).value != 1
    ]
    record_verdict(
        "m-euclid: value of (a, a+1) is 1 for all 2 <= a <= 10000",
        not bad,
        f"9999 pairs, {len(bad)} failures",
    )


def _index_j_by_definition(quotients: tuple[int, ...]) -> int:
    best = 0
    for j in range(len(quotients) - 1):
        prefix = quotients[:j]
        if len(set(prefix)) <= 1 and (j == 0 or quotients[0] <= quotients[j]):
            best = j
    return best


def test_second_index_identity_to_300(record_verdict):
    mismatches = 0
    checked = 0
    for a in range(1, SWEEP_MAX + 1):
        for b in range(a + 1, SWEEP_MAX + 1):
            if b % a == 0:
                continue
            cf = cf_expand(a, b)
            checked += 1
            direct = _index_j_by_definition(cf.quotients)
            if not (direct == index_j(cf) == min(index_i(cf), cf.degree - 1)):
                mismatches += 1
    record_verdict(
        f"second prefix index equals min(first index, degree - 1) on entries <= {SWEEP_MAX}",
        mismatches == 0,
        f"{checked} expansions, {mismatches} mismatches",
    )


def test_cf_round_trip_and_convention_to_1000(record_verdict):
    start = time.perf_counter()
    failures = 0
    pairs = 0
    for a in range(1, 1001):
        for b in range(a, 1001):
            pairs += 1
            cf = cf_expand(a, b)
            g = math.gcd(a, b)
            if cf_value(cf) != (a // g, b // g):
                failures += 1
            elif cf.degree >= 1 and cf.quotients[-1] < 2:
                failures += 1
            elif any(q < 1 for q in cf.quotients):
                failures += 1
    elapsed = time.perf_counter() - start
    record_verdict(
        "continued fractions round-trip and keep the final quotient >= 2, entries <= 1000",
        failures == 0,
        f"{pairs} pairs, {failures} failures, {elapsed:.2f}s",
    )


def test_engine_wins_1000_seeded_sessions(record_verdict):
    rng = random.Random(20260817)
    store = SessionStore(capacity=1200)
    games = 0
    losses = 0
    longest = 0
    while games < 1000:
        a = rng.randint(2, 60)
        b = rng.randint(a + 1, 300)
        position = Position(a, b)
        if is_terminal(M, position) or grundy_formula(M, position).value == 0:
            continue
        games += 1
        session = store.create(M, a, b, human_first=False)
        while session.status == IN_PROGRESS:
            choice = rng.choice(legal_moves(M, session.position))
            store.play_human_move(session.id, choice.target_entry, choice.multiplier)
        longest = max(longest, len(session.history))
        if session.status != ENGINE_WON or len(session.history) > 200:
            losses += 1
    record_verdict(
        "engine wins 1000 seeded random m-euclid sessions within 200 plies",
        losses == 0,
        f"1000 sessions, {losses} not won as required, longest {longest} plies",
    )
