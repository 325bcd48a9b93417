"""
Helper functions for the levelgame compute and example commands
Builds result tables for allocations, breakdowns, union totals and fees, and
prints them as aligned text or JSON.
"""

import json
from dataclasses import dataclass, field

from .cli_utils import format_number, json_number
from .fee_model import FeeRow
from .game import LevelGame
from .values import Allocation, ValueId, compute, lesd2_breakdown, union_totals


@dataclass
class ResultTable:
    """Rows of labelled numbers under a header; the first column holds the row label"""

    title: str
    header: list[str]
    rows: list[tuple[str, list]] = field(default_factory=list)

    def add_row(self, label: str, cells: list) -> None:
        self.rows.append((label, list(cells)))

    def text_rows(self) -> list[list[str]]:
        return [[label, *(c if isinstance(c, str) else format_number(c) for c in cells)] for label, cells in self.rows]


def allocation_table(game: LevelGame, allocations: dict[ValueId, Allocation]) -> ResultTable:
    """One row per value, one column per player in file order, then the total"""
    table = ResultTable("Allocations", ["Value", *game.labels, "Total"])
    for value, allocation in allocations.items():
        table.add_row(value.value, [*allocation.payoffs, allocation.total()])
    return table


def breakdown_table(game: LevelGame, exact: bool = False) -> ResultTable:
    """LESD2 terms per player: individual worth, one remainder share per level, total"""
    levels = game.structure.top
    table = ResultTable("LESD2 breakdown", ["Player", "v(i)", *(f"Level {l}" for l in range(1, levels + 1)), "Total"])
    for part in lesd2_breakdown(game, exact):
        table.add_row(game.labels[part.player], [part.individual, *part.shares, part.total()])
    return table


def union_table(game: LevelGame, allocations: dict[ValueId, Allocation], level: int) -> ResultTable:
    """Total paid by each union of a level under each value"""
    game.structure.check_level(level)
    blocks = game.structure.levels[level].blocks
    table = ResultTable(f"Union totals at level {level}", ["Value", *(game.describe(b) for b in blocks)])
    for value, allocation in allocations.items():
        table.add_row(value.value, [total for _, total in union_totals(allocation, game, level)])
    return table


def fee_rows_table(game: LevelGame, rows: list[FeeRow]) -> ResultTable:
    table = ResultTable("Stand-alone fees", ["Kind", "Name", "Owners", "Fee"])
    for row in rows:
        table.add_row(row.kind, [row.name, game.describe(row.coalition), row.fee])
    return table


def compute_allocations(game: LevelGame, values: list[ValueId], exact: bool = False) -> dict[ValueId, Allocation]:
    return {value: compute(value, game, exact) for value in values}


def compute_document(
    game: LevelGame,
    allocations: dict[ValueId, Allocation],
    explain: bool = False,
    level: int | None = None,
    exact: bool = False,
) -> dict:
    """Machine-readable form of the compute output"""
    document = {
        "players": list(game.labels),
        "k": game.k,
        "values": {
            value.value: {
                "payoffs": [json_number(p) for p in allocation],
                "total": json_number(allocation.total()),
            }
            for value, allocation in allocations.items()
        },
    }
    if explain:
        document["lesd2_breakdown"] = [
            {
                "player": game.labels[part.player],
                "individual": json_number(part.individual),
                "level_shares": [json_number(s) for s in part.shares],
                "total": json_number(part.total()),
            }
            for part in lesd2_breakdown(game, exact)
        ]
    if level is not None:
        document["union_totals"] = {
            "level": level,
            "values": {
                value.value: [
                    {"union": game.describe(block), "total": json_number(total)}
                    for block, total in union_totals(allocation, game, level)
                ]
                for value, allocation in allocations.items()
            },
        }
    return document


def format_plain(table: ResultTable) -> str:
    """Aligned text: first column left-aligned, numbers right-aligned"""
    rows = [table.header, *table.text_rows()]
    widths = [max(len(row[c]) for row in rows) for c in range(len(table.header))]
    lines = [table.title]
    for r, row in enumerate(rows):
        cells = [row[0].ljust(widths[0])] + [cell.rjust(widths[c]) for c, cell in enumerate(row) if c > 0]
        lines.append("  ".join(cells).rstrip())
        if r == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def show_table(table: ResultTable, plain: bool = False) -> None:
    """Print a table with rich when it is installed, as aligned text otherwise"""
    if not plain:
        try:
            from rich.console import Console
            from rich.table import Table
        except ImportError:
            plain = True
    if plain:
        print(format_plain(table))
        print()
        return

    rich_table = Table(title=table.title)
    for c, name in enumerate(table.header):
        rich_table.add_column(name, justify="left" if c == 0 else "right")
    for row in table.text_rows():
        rich_table.add_row(*row)
    Console().print(rich_table)


def show_compute(
    game: LevelGame,
    values: list[ValueId],
    output_format: str = "text",
    exact: bool = False,
    explain: bool = False,
    level: int | None = None,
    verbose: bool = False,
) -> None:
    """Compute the requested values and print them"""
    if verbose:
        print(f"Game {game.digest()}: {game.n} players, k = {game.k}, "
              f"{'complete' if game.v.is_complete else 'partial'} characteristic function")
    if level is not None:
        game.structure.check_level(level)
    allocations = compute_allocations(game, values, exact)

    if output_format == "json":
        print(json.dumps(compute_document(game, allocations, explain, level, exact), indent=2))
        return

    show_table(allocation_table(game, allocations))
    if explain:
        show_table(breakdown_table(game, exact))
    if level is not None:
        show_table(union_table(game, allocations, level))


def show_fees(game: LevelGame, rows: list[FeeRow], output_format: str = "text") -> None:
    if output_format == "json":
        print(json.dumps([
            {"kind": row.kind, "name": row.name, "owners": [game.labels[i] for i in range(game.n) if row.coalition >> i & 1],
             "fee": json_number(row.fee)}
            for row in rows
        ], indent=2))
        return
    show_table(fee_rows_table(game, rows))
