"""
Oracle games for levelgame
Basis games, union-carrier games and the additive decompositions that split a
game into parts whose values are known in closed form. They are used to
cross-check the values, never to compute them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructureError
from .game import CharacteristicFunction, Coalition, LevelGame, grand_coalition


@dataclass(frozen=True)
class BasisGameSpec:
    """e_T^alpha: worth alpha on exactly T, 0 elsewhere"""

    T: Coalition
    alpha: float

    def __post_init__(self):
        if self.T == 0:
            raise StructureError("a basis game needs a nonempty carrier coalition")


def basis_game(n: int, spec: BasisGameSpec) -> CharacteristicFunction:
    if spec.T & ~grand_coalition(n):
        raise StructureError(f"carrier coalition has players outside a {n}-player game")
    return CharacteristicFunction.from_function(n, lambda s: spec.alpha if s == spec.T else 0.0)


def union_carrier_game(n: int, block: Coalition, alpha: float) -> CharacteristicFunction:
    """alpha on every coalition containing block, 0 elsewhere"""
    if block == 0:
        raise StructureError("a carrier game needs a nonempty block")
    return CharacteristicFunction.from_function(n, lambda s: alpha if block & ~s == 0 else 0.0)


def additive_game(v: CharacteristicFunction) -> CharacteristicFunction:
    """v^a(S) = sum of v({i}) over i in S"""
    return CharacteristicFunction.from_function(v.n, v.individual_sum)


def top_union_game(game: LevelGame) -> CharacteristicFunction:
    """v*(S) = sum of v(C) over the blocks C of C_k contained in S"""
    v = game.v
    blocks = game.structure.levels[game.k].blocks
    return CharacteristicFunction.from_function(
        v.n, lambda s: sum((v.worth(c) for c in blocks if c & ~s == 0), 0.0)
    )


def level_surplus_game(game: LevelGame, level: int) -> CharacteristicFunction:
    """v*_l(S) = sum over blocks C of C_l inside S of v(C) minus the worths of C's subordinates"""
    if level < 1 or level > game.k:
        raise StructureError(f"level {level} out of range [1, {game.k}]")
    v = game.v
    structure = game.structure
    surpluses = [
        (block, v.worth(block) - sum((v.worth(c) for c in structure.direct_subordinates(level, block)), 0.0))
        for block in structure.levels[level]
    ]
    return CharacteristicFunction.from_function(
        v.n, lambda s: sum((surplus for block, surplus in surpluses if block & ~s == 0), 0.0)
    )


def decompose_top_unions(game: LevelGame) -> tuple[CharacteristicFunction, CharacteristicFunction]:
    """Split v into v* (worths of the last nontrivial unions) and v** = v - v*"""
    game.v.require_complete("the top-union decomposition")
    v_star = top_union_game(game)
    return v_star, game.v - v_star


def decompose_level_surpluses(
    game: LevelGame,
) -> tuple[CharacteristicFunction, CharacteristicFunction, list[CharacteristicFunction]]:
    """Split v into v^a, a residual v~ and one surplus game v*_l per level l = 1..k

    The residual is v - v^a - sum of v*_l, which is worth 0 on every block of
    every level. With a single intermediate level it coincides with
    (v - v^a)(S) minus (v - v^a) summed over the unions inside S.
    """
    game.v.require_complete("the level-surplus decomposition")
    v_a = additive_game(game.v)
    surplus_games = [level_surplus_game(game, l) for l in range(1, game.k + 1)]
    explained = v_a
    for part in surplus_games:
        explained = explained + part
    return v_a, game.v - explained, surplus_games


def decompose_individual_surplus(game: LevelGame) -> tuple[CharacteristicFunction, CharacteristicFunction]:
    """Split v into the additive game v^a and v^0 = v - v^a"""
    game.v.require_complete("the individual-surplus decomposition")
    v_a = additive_game(game.v)
    return v_a, game.v - v_a
