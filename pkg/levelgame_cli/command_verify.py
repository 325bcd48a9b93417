"""
Helper functions for the levelgame verify command
Runs axiom checks on a game file, over a seeded random campaign, or as bounded
counterexample searches, and prints the reports.
"""

import json

from .axioms import (
    AXIOM_NAMES,
    CHARACTERIZATIONS,
    EXPECTED_FAILURES,
    AxiomId,
    AxiomReport,
    is_expected_pass,
)
from .cli_utils import format_number, json_number
from .command_compute import ResultTable, show_table
from .game import LevelGame
from .game_file import game_document
from .generator import SEARCH_ZERO_BIAS, random_companion, run_campaign, run_checks, search_counterexample
from .values import LEVEL_VALUES, ValueId

# Exit statuses
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_AXIOM_FAILURE = 2

WITNESSES_SHOWN = 3


def select_pairs(
    values: list[ValueId] | None, axioms: list[AxiomId] | None, search: bool = False
) -> list[tuple[ValueId, AxiomId]]:
    """Pairs to check: explicit values x axioms, else each value's characterization
    (or the known failures when searching)"""
    if axioms is not None:
        return [(value, axiom) for value in (values or list(LEVEL_VALUES)) for axiom in axioms]
    if search:
        return [pair for pair in EXPECTED_FAILURES if values is None or pair[0] in values]
    return [(value, axiom) for value in (values or list(LEVEL_VALUES)) for axiom in CHARACTERIZATIONS[value]]


def report_status(reports: dict[tuple[ValueId, AxiomId], AxiomReport]) -> int:
    """2 when a pair expected to pass has failed, 0 otherwise"""
    for (value, axiom), report in reports.items():
        if not report.passed and is_expected_pass(value, axiom):
            return EXIT_AXIOM_FAILURE
    return EXIT_OK


def _verdict(value: ValueId, axiom: AxiomId, report: AxiomReport) -> str:
    if report.holds_vacuously:
        return "pass (vacuous)"
    if report.passed:
        return "pass"
    return "fail" if is_expected_pass(value, axiom) else "fail (expected)"


def report_document(value: ValueId, axiom: AxiomId, report: AxiomReport) -> dict:
    return {
        "value": value.value,
        "axiom": axiom.value,
        "verdict": report.verdict,
        "expected": "pass" if is_expected_pass(value, axiom) else "fail",
        "vacuous": report.holds_vacuously,
        "instances": report.instances,
        "games": report.games,
        "max_gap": report.max_gap,
        "witnesses": [
            {
                "game": w.game_digest,
                "seed": w.seed,
                "detail": w.detail,
                "lhs": json_number(w.lhs),
                "rhs": json_number(w.rhs),
                "gap": w.gap,
            }
            for w in report.witnesses
        ],
    }


def show_reports(reports: dict[tuple[ValueId, AxiomId], AxiomReport], output_format: str = "text") -> None:
    if output_format == "json":
        print(json.dumps({
            "reports": [report_document(v, a, r) for (v, a), r in reports.items()],
            "passed": report_status(reports) == EXIT_OK,
        }, indent=2))
        return

    table = ResultTable("Axiom reports", ["Value", "Axiom", "Verdict", "Instances", "Games", "Max gap"])
    for (value, axiom), report in reports.items():
        table.add_row(value.value, [axiom.value, _verdict(value, axiom, report), report.instances, report.games,
                                    format_number(report.max_gap, 12)])
    show_table(table)

    for (value, axiom), report in reports.items():
        if report.passed:
            continue
        print(f"{value.value} / {AXIOM_NAMES[axiom]}: {len(report.witnesses)} witness(es)")
        for w in report.witnesses[:WITNESSES_SHOWN]:
            seed = f" seed {w.seed}" if w.seed is not None else ""
            print(f"  game {w.game_digest}{seed}: {w.detail}: {format_number(w.lhs)} vs {format_number(w.rhs)} "
                  f"(gap {format_number(w.gap, 12)})")


def verify_game(
    game: LevelGame,
    pairs: list[tuple[ValueId, AxiomId]],
    tol: float,
    seed: int,
    worth_range: tuple[int, int],
    verbose: bool = False,
) -> dict[tuple[ValueId, AxiomId], AxiomReport]:
    """Check every pair on one game; additivity is checked against a seeded companion game"""
    if verbose:
        print(f"Checking {len(pairs)} pairs on game {game.digest()} ({game.n} players, k = {game.k})")
    return run_checks(game, pairs, tol, random_companion(game, seed, worth_range))


def verify_campaign(
    pairs: list[tuple[ValueId, AxiomId]],
    seed: int,
    trials: int,
    n_max: int,
    k_max: int,
    worth_range: tuple[int, int],
    tol: float,
    verbose: bool = False,
    zero_bias: float = 0.0,
) -> dict[tuple[ValueId, AxiomId], AxiomReport]:
    def progress(game_seed: int, game: LevelGame) -> None:
        done = game_seed - seed + 1
        if done % 100 == 0 or done == trials:
            print(f"Checked {done}/{trials} games (last: seed {game_seed}, {game.n} players, k = {game.k})")

    if verbose:
        print(f"Running {len(pairs)} pairs over seeds {seed}..{seed + trials - 1}")
    result = run_campaign(seed, trials, pairs, n_max, k_max, worth_range, tol, progress if verbose else None,
                          zero_bias)
    if verbose and result.vacuous:
        print(f"{len(result.vacuous)} pair(s) never met their premise; try --zero-bias")
    return result.reports


def show_searches(
    pairs: list[tuple[ValueId, AxiomId]],
    seed: int,
    trials: int,
    n_max: int,
    k_max: int,
    worth_range: tuple[int, int],
    tol: float,
    output_format: str = "text",
    verbose: bool = False,
    zero_bias: float = SEARCH_ZERO_BIAS,
) -> None:
    """Search for a counterexample to each pair and print what was found"""
    results = []
    for value, axiom in pairs:
        if verbose:
            print(f"Searching {value.value} / {axiom.value} over {trials} games from seed {seed}")
        results.append((value, axiom, search_counterexample(value, axiom, seed, trials, n_max, k_max, worth_range,
                                                              zero_bias, tol)))

    if output_format == "json":
        print(json.dumps([
            {
                "value": value.value,
                "axiom": axiom.value,
                "found": result.found,
                "trials": result.trials,
                "seed": result.seed,
                "witness": report_document(value, axiom, result.report)["witnesses"][0] if result.found else None,
                "game": game_document(result.game) if result.game is not None else None,
            }
            for value, axiom, result in results
        ], indent=2))
        return

    for value, axiom, result in results:
        if not result.found:
            print(f"{value.value} / {AXIOM_NAMES[axiom]}: not found in {result.trials} trials")
            continue
        witness = result.report.witnesses[0]
        print(f"{value.value} / {AXIOM_NAMES[axiom]}: found after {result.trials} trials at seed {result.seed}")
        print(f"  game {witness.game_digest}: {witness.detail}: {format_number(witness.lhs)} vs "
              f"{format_number(witness.rhs)} (gap {format_number(witness.gap, 12)})")
