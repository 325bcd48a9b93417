"""
Fee model for levelgame
Turns a maintenance-fee schedule and a building topology (lifts, floors,
owners) into a complete level game whose worths are the fees each coalition of
owners would pay on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import StructureError
from .game import (
    MAX_PLAYERS,
    CharacteristicFunction,
    Coalition,
    LevelGame,
    LevelStructure,
    Partition,
    coalition_of,
    members,
)


@dataclass(frozen=True)
class FeeSchedule:
    fixed: float = 50.0
    per_lift: float = 50.0
    per_floor_coeff: float = 4.0
    per_place: float = 10.0

    def __post_init__(self):
        for name in ("fixed", "per_lift", "per_floor_coeff", "per_place"):
            if not math.isfinite(getattr(self, name)):
                raise StructureError(f"fee schedule component '{name}' must be finite")

    def to_dict(self) -> dict:
        return {
            "fixed": self.fixed,
            "per_lift": self.per_lift,
            "per_floor_coeff": self.per_floor_coeff,
            "per_place": self.per_place,
        }


@dataclass(frozen=True)
class BuildingTopology:
    """lifts[l][f] lists the owners on floor f + 1 served by lift l + 1

    Floors are numbered by their position in the lift's list, so an empty
    floor still counts when it sits below an occupied one.
    """

    lifts: tuple[tuple[tuple[str, ...], ...], ...]

    def __post_init__(self):
        lifts = tuple(tuple(tuple(floor) for floor in lift) for lift in self.lifts)
        object.__setattr__(self, "lifts", lifts)
        if not lifts:
            raise StructureError("a building needs at least one lift")
        for number, lift in enumerate(lifts, start=1):
            if not any(lift):
                raise StructureError(f"lift {number} serves no owners")
        owners = self.owners
        if len(set(owners)) != len(owners):
            duplicates = sorted({o for o in owners if owners.count(o) > 1})
            raise StructureError(f"owner labels must be unique, repeated: {', '.join(duplicates)}")

    @classmethod
    def from_lists(cls, lifts: Sequence[Sequence[Sequence[str]]]) -> "BuildingTopology":
        return cls(tuple(tuple(tuple(str(o) for o in floor) for floor in lift) for lift in lifts))

    @property
    def owners(self) -> tuple[str, ...]:
        """Owners in lift, floor, listing order; this is the player order"""
        return tuple(owner for lift in self.lifts for floor in lift for owner in floor)

    def placements(self) -> list[tuple[int, int]]:
        """(lift index, 1-based floor) of each owner in player order"""
        return [
            (l, f)
            for l, lift in enumerate(self.lifts)
            for f, floor in enumerate(lift, start=1)
            for _ in floor
        ]

    def to_dict(self) -> dict:
        return {"lifts": [[list(floor) for floor in lift] for lift in self.lifts]}


def parking_topology() -> BuildingTopology:
    """Two lifts: owners 1 and 2 on floors 1 and 2 of the first, owner 3 and owners 4, 5 on the second"""
    return BuildingTopology.from_lists([[["1"], ["2"]], [["3"], ["4", "5"]]])


def _fee_for_placements(schedule: FeeSchedule, placements: Iterable[tuple[int, int]]) -> float:
    highest: dict[int, int] = {}
    places = 0
    for lift, floor in placements:
        highest[lift] = max(highest.get(lift, 0), floor)
        places += 1
    if places == 0:
        return 0.0
    return (
        schedule.fixed
        + schedule.per_lift * len(highest)
        + schedule.per_floor_coeff * sum(highest.values())
        + schedule.per_place * places
    )


def fee(schedule: FeeSchedule, topology: BuildingTopology, owners: Iterable[str]) -> float:
    """Monthly fee charged to a coalition of owners maintaining the parking alone"""
    where = dict(zip(topology.owners, topology.placements()))
    placements = []
    for owner in set(owners):
        if owner not in where:
            raise StructureError(f"owner '{owner}' is not in the building")
        placements.append(where[owner])
    return _fee_for_placements(schedule, placements)


def _structure(topology: BuildingTopology) -> LevelStructure:
    n = len(topology.owners)
    index = {owner: i for i, owner in enumerate(topology.owners)}
    floors = [
        coalition_of(index[o] for o in floor)
        for lift in topology.lifts
        for floor in lift
        if floor
    ]
    lifts = [coalition_of(index[o] for lift_floor in lift for o in lift_floor) for lift in topology.lifts]
    # k is always 2, even with one owner per floor or a single lift
    return LevelStructure((
        Partition.singletons(n),
        Partition(n, tuple(floors)),
        Partition(n, tuple(lifts)),
        Partition.trivial(n),
    ))


def build_level_game(schedule: FeeSchedule, topology: BuildingTopology) -> LevelGame:
    """Owners as players, floors then lifts as levels, fees as worths"""
    n = len(topology.owners)
    if n > MAX_PLAYERS:
        raise StructureError(f"a building with {n} owners exceeds the {MAX_PLAYERS}-player limit")
    placements = topology.placements()
    v = CharacteristicFunction.from_function(
        n, lambda s: _fee_for_placements(schedule, (placements[i] for i in members(s)))
    )
    return LevelGame(v, _structure(topology), topology.owners)


@dataclass(frozen=True)
class FeeRow:
    kind: str
    name: str
    coalition: Coalition
    fee: float


def fee_table(schedule: FeeSchedule, topology: BuildingTopology) -> list[FeeRow]:
    """Stand-alone fee of every owner, every occupied floor, every lift and the whole building"""
    game = build_level_game(schedule, topology)
    rows = [FeeRow("owner", owner, 1 << i, game.v.worth(1 << i)) for i, owner in enumerate(topology.owners)]
    index = {owner: i for i, owner in enumerate(topology.owners)}
    for l, lift in enumerate(topology.lifts, start=1):
        for f, floor in enumerate(lift, start=1):
            if floor:
                block = coalition_of(index[o] for o in floor)
                rows.append(FeeRow("floor", f"Floor {f}, Lift {l}", block, game.v.worth(block)))
    for l, lift in enumerate(topology.lifts, start=1):
        block = coalition_of(index[o] for floor in lift for o in floor)
        rows.append(FeeRow("lift", f"Lift {l}", block, game.v.worth(block)))
    rows.append(FeeRow("total", "All owners", game.grand, game.v.worth(game.grand)))
    return rows
