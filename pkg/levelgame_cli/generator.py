"""
Random games for levelgame
Seeded generation of complete level games, property campaigns over many seeds
and bounded searches for counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .axioms import (
    CHARACTERIZATIONS,
    DEFAULT_TOL,
    AxiomId,
    AxiomReport,
    ValueLike,
    check,
    value_name,
)
from .game import (
    CharacteristicFunction,
    LevelGame,
    LevelStructure,
    Partition,
    coalition_of,
    grand_coalition,
    members,
)
from .oracles import decompose_individual_surplus
from .values import LEVEL_VALUES, ValueId

DEFAULT_WORTH_RANGE = (-10, 10)
SEARCH_TRIALS = 10_000
SEARCH_ZERO_BIAS = 0.5


def _split(rng: np.random.Generator, block: int, max_parts: int = 4) -> list[int]:
    """Split a block into 1..max_parts nonempty random parts"""
    players = list(members(block))
    parts = int(rng.integers(1, min(max_parts, len(players)) + 1))
    order = rng.permutation(len(players))
    cuts = sorted(rng.choice(np.arange(1, len(players)), size=parts - 1, replace=False)) if parts > 1 else []
    bounds = [0, *cuts, len(players)]
    return [
        coalition_of(players[order[p]] for p in range(bounds[b], bounds[b + 1]))
        for b in range(len(bounds) - 1)
    ]


def random_structure(rng: np.random.Generator, n: int, k: int) -> LevelStructure:
    """Top-down random nesting: each level splits every block of the level above"""
    levels = [[grand_coalition(n)]]
    for _ in range(k):
        levels.insert(0, [part for block in levels[0] for part in _split(rng, block)])
    # built directly so that a level of singletons above C_0 still counts towards k
    return LevelStructure((Partition.singletons(n), *(Partition(n, tuple(blocks)) for blocks in levels)))


def random_worths(
    rng: np.random.Generator,
    n: int,
    worth_range: tuple[int, int] = DEFAULT_WORTH_RANGE,
    zero_bias: float = 0.0,
) -> CharacteristicFunction:
    """Integer worths drawn uniformly from worth_range, each forced to 0 with probability zero_bias"""
    low, high = worth_range
    count = grand_coalition(n)
    draws = rng.integers(low, high + 1, size=count)
    if zero_bias > 0:
        draws = np.where(rng.random(count) < zero_bias, 0, draws)
    return CharacteristicFunction(n, {mask: float(draws[mask - 1]) for mask in range(1, count + 1)})


def random_level_game(
    seed: int,
    n_max: int = 6,
    k_max: int = 3,
    worth_range: tuple[int, int] = DEFAULT_WORTH_RANGE,
    zero_bias: float = 0.0,
) -> LevelGame:
    """A complete level game that depends only on its arguments"""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    if not 0 <= zero_bias <= 1:
        raise ValueError(f"zero_bias must lie in [0, 1], got {zero_bias}")
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, n_max + 1))
    k = int(rng.integers(0, k_max + 1))
    structure = random_structure(rng, n, k)
    v = random_worths(rng, n, worth_range, zero_bias)
    return LevelGame(v, structure, tuple(f"p{i + 1}" for i in range(n)))


def random_companion(
    game: LevelGame, seed: int, worth_range: tuple[int, int] = DEFAULT_WORTH_RANGE
) -> LevelGame:
    """Second game on the same players and structure, for additivity checks"""
    rng = np.random.default_rng([seed, game.n, 1])
    return game.with_worths(random_worths(rng, game.n, worth_range))


@dataclass
class CampaignResult:
    """Reports per (value, axiom) pair merged over a run of seeds"""

    seed: int
    trials: int
    reports: dict[tuple[ValueId, AxiomId], AxiomReport] = field(default_factory=dict)

    @property
    def failures(self) -> list[AxiomReport]:
        return [report for report in self.reports.values() if not report.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def vacuous(self) -> list[tuple[ValueId, AxiomId]]:
        """Pairs that passed without a single premise instance"""
        return [key for key, report in self.reports.items() if report.holds_vacuously]


def run_checks(
    game: LevelGame,
    pairs: Iterable[tuple[ValueId, AxiomId]],
    tol: float = DEFAULT_TOL,
    partner: LevelGame | None = None,
) -> dict[tuple[ValueId, AxiomId], AxiomReport]:
    return {(value, axiom): check(axiom, value, game, tol, partner) for value, axiom in pairs}


def characterization_pairs(values: Sequence[ValueId] = LEVEL_VALUES) -> list[tuple[ValueId, AxiomId]]:
    return [(value, axiom) for value in values for axiom in CHARACTERIZATIONS[value]]


def run_campaign(
    seed: int = 42,
    trials: int = 1000,
    pairs: Sequence[tuple[ValueId, AxiomId]] | None = None,
    n_max: int = 6,
    k_max: int = 3,
    worth_range: tuple[int, int] = DEFAULT_WORTH_RANGE,
    tol: float = DEFAULT_TOL,
    progress: Callable[[int, LevelGame], None] | None = None,
    zero_bias: float = 0.0,
    zero_singletons: bool = False,
) -> CampaignResult:
    """Check each pair on the games generated from seeds seed .. seed + trials - 1

    zero_bias is handed to random_level_game. With zero_singletons each game
    is replaced by v - v^a, whose singletons are all worth 0.
    """
    pairs = characterization_pairs() if pairs is None else list(pairs)
    result = CampaignResult(seed, trials)
    for game_seed in range(seed, seed + trials):
        game = random_level_game(game_seed, n_max, k_max, worth_range, zero_bias)
        if zero_singletons:
            game = game.with_worths(decompose_individual_surplus(game)[1])
        partner = random_companion(game, game_seed, worth_range)
        if progress is not None:
            progress(game_seed, game)
        for key, report in run_checks(game, pairs, tol, partner).items():
            report = report.with_seed(game_seed)
            result.reports[key] = result.reports[key].merge(report) if key in result.reports else report
    return result


@dataclass(frozen=True)
class SearchResult:
    value: str
    axiom: AxiomId
    found: bool
    trials: int
    seed: int | None = None
    report: AxiomReport | None = None

    @property
    def game(self) -> LevelGame | None:
        if self.report is None or not self.report.witnesses:
            return None
        return self.report.witnesses[0].game


def search_counterexample(
    value: ValueLike,
    axiom: AxiomId,
    seed: int = 0,
    trials: int = SEARCH_TRIALS,
    n_max: int = 5,
    k_max: int = 2,
    worth_range: tuple[int, int] = DEFAULT_WORTH_RANGE,
    zero_bias: float = SEARCH_ZERO_BIAS,
    tol: float = DEFAULT_TOL,
) -> SearchResult:
    """Try seeds seed, seed + 1, ... until the check fails or trials run out

    Worths are forced to 0 with probability zero_bias so that nullifying and
    dummifying premises actually occur.
    """
    for offset in range(trials):
        game_seed = seed + offset
        game = random_level_game(game_seed, n_max, k_max, worth_range, zero_bias)
        report = check(axiom, value, game, tol, random_companion(game, game_seed, worth_range))
        if not report.passed:
            return SearchResult(value_name(value), axiom, True, offset + 1, game_seed, report.with_seed(game_seed))
    return SearchResult(value_name(value), axiom, False, trials)


def replay(
    value: ValueLike,
    axiom: AxiomId,
    seed: int,
    n_max: int = 5,
    k_max: int = 2,
    worth_range: tuple[int, int] = DEFAULT_WORTH_RANGE,
    zero_bias: float = SEARCH_ZERO_BIAS,
    tol: float = DEFAULT_TOL,
) -> AxiomReport:
    """Re-run the check on the game a search generated for seed"""
    game = random_level_game(seed, n_max, k_max, worth_range, zero_bias)
    return check(axiom, value, game, tol, random_companion(game, seed, worth_range)).with_seed(seed)
