"""Command-line front door: analysis, verification, tables, hints, serving.

Commands print deterministic output: identical invocations produce
byte-identical bytes. ``--format structured`` emits line-delimited JSON
records with the same field names the HTTP service uses; ``--format csv``
(tables and census) uses a header row, decimal integer cells, and the
literal ``T`` for terminal cells. ``verify`` exits nonzero exactly when a
check finds violations; bad arguments are usage errors instead.
"""

from __future__ import annotations

import json
import sys

import click

from . import __version__
from .cf import cf_expand, grundy_formula, index_i, index_j, winning_move
from .errors import GameError, OracleBoundError
from .rules import (
    Position,
    Variant,
    is_terminal,
    legal_moves,
    oracle_grundy,
)
from .verify import (
    TERMINAL_MARK,
    census_csv,
    check_corollary,
    check_proof_properties,
    exception_census,
    grundy_table,
    table_csv,
    verify_range,
)

VARIANTS = (Variant.EUCLID, Variant.GROSSMAN, Variant.MEUCLID)


def _parse_pair(ctx, param, value):
    """Parse ``a,b`` into a Position; both entries must be positive."""
    if value is None:
        return None
    parts = value.split(",")
    if len(parts) != 2:
        raise click.BadParameter(f"expected a,b got {value!r}")
    try:
        a, b = (int(part) for part in parts)
    except ValueError:
        raise click.BadParameter(f"expected two integers, got {value!r}") from None
    if a < 1 or b < 1:
        raise click.BadParameter(f"entries must be positive, got {value!r}")
    return Position(a, b)


def _parse_variant(ctx, param, value):
    if value is None:
        return None
    try:
        return Variant.parse(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _parse_variant_or_all(ctx, param, value):
    if value.strip().lower() == "all":
        return None
    return _parse_variant(ctx, param, value)


def _dash(value) -> str:
    return "-" if value is None else str(value)


def _move_record(move) -> dict:
    return {
        "target_entry": move.target_entry.value,
        "multiplier": move.multiplier,
        "result": [move.result.a, move.result.b],
    }


variant_option = click.option(
    "--variant",
    required=True,
    callback=_parse_variant,
    help="Game variant: euclid, grossman, or m-euclid (e/g/m for short).",
)
pos_option = click.option(
    "--pos",
    required=True,
    callback=_parse_pair,
    help="Position as a,b with positive integers.",
)
oracle_bound_option = click.option(
    "--oracle-bound",
    type=click.IntRange(min=1),
    default=None,
    help="Cap on oracle entries for this invocation (default: env or 10000).",
)


@click.group()
@click.version_option(version=__version__, prog_name="euclid-games")
def main() -> None:
    """Grundy values of Euclid, Grossman, and M-Euclid subtraction games."""


@main.command()
@variant_option
@pos_option
@click.option("--oracle", is_flag=True, help="Also compute the brute-force value.")
@oracle_bound_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "structured"]),
    default="text",
    help="Output format.",
)
def analyze(variant: Variant, pos: Position, oracle: bool, oracle_bound, fmt: str) -> None:
    """Closed-form analysis of one position."""
    report = grundy_formula(variant, pos)
    terminal = is_terminal(variant, pos)
    cf = cf_expand(pos.a, pos.b)
    winners = []
    if not terminal and report.value > 0:
        winners = [
            m
            for m in legal_moves(variant, pos)
            if grundy_formula(variant, m.result).value == 0
        ]
    oracle_value = None
    if oracle:
        try:
            oracle_value = oracle_grundy(variant, pos, bound=oracle_bound).value
        except OracleBoundError as exc:
            raise click.ClickException(str(exc)) from None
    if fmt == "structured":
        record = {
            "variant": variant.value,
            "position": [pos.a, pos.b],
            "terminal": terminal,
            "value": report.value,
            "method": report.method.value,
            "quotient": report.quotient,
            "index_i": report.index_i,
            "index_j": report.index_j,
            "cf": list(cf.quotients),
            "winning_moves": [_move_record(m) for m in winners],
        }
        if oracle:
            record["oracle_value"] = oracle_value
            record["agreement"] = oracle_value == report.value
        click.echo(json.dumps(record))
        return
    click.echo(f"variant: {variant.value}")
    click.echo(f"position: {pos}")
    click.echo(f"terminal: {'yes' if terminal else 'no'}")
    click.echo(f"value: {report.value}")
    click.echo(f"method: {report.method.value}")
    click.echo(f"quotient: {_dash(report.quotient)}")
    click.echo(f"cf: {cf}")
    click.echo(f"I: {_dash(report.index_i)}")
    click.echo(f"J: {_dash(report.index_j)}")
    if not terminal:
        click.echo(f"winning move: {winners[0] if winners else 'none'}")
    if oracle:
        click.echo(f"oracle value: {oracle_value}")
        click.echo(f"agreement: {'yes' if oracle_value == report.value else 'no'}")


@main.command()
@click.option(
    "--variant",
    default="all",
    callback=_parse_variant_or_all,
    help="Variant to check, or all (default).",
)
@click.option("--max", "max_entry", type=click.IntRange(min=1), required=True)
@click.option(
    "--properties",
    is_flag=True,
    help="Also check that no move preserves the value and every smaller value is reachable.",
)
@oracle_bound_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "structured"]),
    default="text",
    help="Output format.",
)
def verify(variant, max_entry: int, properties: bool, oracle_bound, fmt: str) -> None:
    """Check the closed forms against the oracle on all pairs up to --max.

    With --variant all the cross-variant value relations are checked too.
    Exits nonzero exactly when some check reports violations.
    """
    selected = VARIANTS if variant is None else (variant,)
    failures = 0
    try:
        for v in selected:
            found = verify_range(v, max_entry, bound=oracle_bound)
            failures += len(found)
            if fmt == "structured":
                click.echo(
                    json.dumps(
                        {
                            "check": "formula_vs_oracle",
                            "variant": v.value,
                            "max_entry": max_entry,
                            "violations": len(found),
                        }
                    )
                )
                for d in found:
                    click.echo(json.dumps({"discrepancy": d.to_record()}))
            else:
                click.echo(
                    f"formula vs oracle [{v.value}] max={max_entry}: "
                    f"{'ok' if not found else f'{len(found)} discrepancies'}"
                )
                for d in found:
                    r = d.to_record()
                    click.echo(
                        f"  discrepancy: {d.position} formula={r['formula_value']} "
                        f"oracle={r['oracle_value']}"
                    )
        if variant is None:
            found = check_corollary(max_entry, bound=oracle_bound)
            failures += len(found)
            if fmt == "structured":
                click.echo(
                    json.dumps(
                        {
                            "check": "value_relations",
                            "max_entry": max_entry,
                            "violations": len(found),
                        }
                    )
                )
                for viol in found:
                    click.echo(json.dumps({"relation_violation": viol.to_record()}))
            else:
                click.echo(
                    f"value relations max={max_entry}: "
                    f"{'ok' if not found else f'{len(found)} violations'}"
                )
                for viol in found:
                    r = viol.to_record()
                    click.echo(
                        f"  relation violation: {viol.position} cf={viol.quotients} "
                        f"{r['relation']} expected={r['expected']} actual={r['actual']}"
                    )
        if properties:
            found = check_proof_properties(max_entry, selected)
            failures += len(found)
            if fmt == "structured":
                click.echo(
                    json.dumps(
                        {
                            "check": "grundy_properties",
                            "variants": [v.value for v in selected],
                            "max_entry": max_entry,
                            "violations": len(found),
                        }
                    )
                )
                for viol in found:
                    click.echo(json.dumps({"property_violation": viol.to_record()}))
            else:
                click.echo(
                    f"grundy properties max={max_entry}: "
                    f"{'ok' if not found else f'{len(found)} violations'}"
                )
                for viol in found:
                    click.echo(
                        f"  property violation: [{viol.variant.value}] {viol.position} "
                        f"{viol.kind}: {viol.detail}"
                    )
    except OracleBoundError as exc:
        raise click.UsageError(str(exc)) from None
    if fmt == "text":
        click.echo("all checks passed" if not failures else f"{failures} violations")
    if failures:
        sys.exit(1)


def _render_table_text(matrix: list[list[int | None]]) -> str:
    header = ["a\\b"] + [str(b) for b in range(1, len(matrix[0]) + 1)]
    body = [
        [str(a)] + [TERMINAL_MARK if v is None else str(v) for v in row]
        for a, row in enumerate(matrix, start=1)
    ]
    rows = [header] + body
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in rows
    )


@main.command()
@variant_option
@click.option("--max-a", type=click.IntRange(min=1), required=True)
@click.option("--max-b", type=click.IntRange(min=1), required=True)
@click.option(
    "--method",
    type=click.Choice(["closed_form", "oracle"]),
    default="closed_form",
    help="How to compute each value.",
)
@oracle_bound_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "structured"]),
    default="text",
    help="Output format.",
)
def table(variant: Variant, max_a: int, max_b: int, method: str, oracle_bound, fmt: str) -> None:
    """Grundy values on the rectangle 1..max-a by 1..max-b."""
    from .rules import Method

    try:
        matrix = grundy_table(
            variant, max_a, max_b, Method(method), bound=oracle_bound
        )
    except OracleBoundError as exc:
        raise click.UsageError(str(exc)) from None
    if fmt == "csv":
        click.echo(table_csv(matrix), nl=False)
    elif fmt == "structured":
        for a, row in enumerate(matrix, start=1):
            click.echo(json.dumps({"a": a, "values": row}))
    else:
        click.echo(_render_table_text(matrix))


@main.command()
@click.argument("pair", callback=_parse_pair)
def cf(pair: Position) -> None:
    """Continued-fraction expansion and prefix indices of PAIR (as a,b)."""
    expansion = cf_expand(pair.a, pair.b)
    i = index_i(expansion)
    j = index_j(expansion) if expansion.degree >= 1 else None
    click.echo(f"{expansion}  I={i} J={_dash(j)}")


@main.command()
@variant_option
@pos_option
@click.option(
    "--any",
    "any_move",
    is_flag=True,
    help="On a losing position, fall back to the first legal move.",
)
def hint(variant: Variant, pos: Position, any_move: bool) -> None:
    """Print a winning move from the position, if one exists."""
    try:
        move = winning_move(variant, pos)
    except GameError as exc:
        raise click.ClickException(str(exc)) from None
    if move is None and any_move:
        move = legal_moves(variant, pos)[0]
    click.echo(str(move) if move is not None else "no winning move")


@main.command()
@click.option("--max", "max_entry", type=click.IntRange(min=1), required=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "structured"]),
    default="csv",
    help="Output format.",
)
def census(max_entry: int, fmt: str) -> None:
    """List pairs up to --max whose three variant values are not all equal."""
    rows = exception_census(max_entry)
    if fmt == "structured":
        for row in rows:
            click.echo(json.dumps(row.to_record()))
    else:
        click.echo(census_csv(rows), nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", help="Bind address.")
@click.option("--port", type=click.IntRange(1, 65535), default=8000, help="Bind port.")
@click.option(
    "--static-dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Directory of web UI assets to serve at the root.",
)
def serve(host: str, port: int, static_dir) -> None:
    """Host the HTTP play and analysis API."""
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
