"""
Values module for levelgame
Equal division (ED), equal surplus division (ESD) and their level-structured
extensions LED, LESD1, LESD2 and LESD3, evaluated from their closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from .errors import MissingCoalitionError
from .game import Coalition, LevelGame, members

Number = Union[float, Fraction]


class ValueId(str, Enum):
    ED = "ED"
    ESD = "ESD"
    LED = "LED"
    LESD1 = "LESD1"
    LESD2 = "LESD2"
    LESD3 = "LESD3"


LEVEL_VALUES = (ValueId.LED, ValueId.LESD1, ValueId.LESD2, ValueId.LESD3)


def parse_value_ids(text: str | Sequence[str]) -> list[ValueId]:
    """Parse "all" or a comma separated list such as "led,lesd2" """
    names = text.split(",") if isinstance(text, str) else list(text)
    names = [name.strip() for name in names if name.strip()]
    if not names or any(name.lower() == "all" for name in names):
        return list(ValueId)
    result = []
    for name in names:
        try:
            value = ValueId(name.upper())
        except ValueError:
            choices = ", ".join(v.value.lower() for v in ValueId)
            raise ValueError(f"unknown value '{name}' (choose from {choices} or all)") from None
        if value not in result:
            result.append(value)
    return result


@dataclass(frozen=True)
class Allocation:
    """Payoff vector, one entry per player in index order"""

    payoffs: tuple[Number, ...]

    @property
    def exact(self) -> bool:
        return any(isinstance(p, Fraction) for p in self.payoffs)

    def total(self) -> Number:
        if self.exact:
            return sum(self.payoffs, Fraction(0))
        return math.fsum(self.payoffs)

    def to_array(self) -> np.ndarray:
        return np.array([float(p) for p in self.payoffs], dtype=float)

    def __len__(self) -> int:
        return len(self.payoffs)

    def __getitem__(self, player: int) -> Number:
        return self.payoffs[player]

    def __iter__(self):
        return iter(self.payoffs)

    def __add__(self, other: "Allocation") -> "Allocation":
        if len(other) != len(self):
            raise ValueError("allocations have different lengths")
        return Allocation(tuple(a + b for a, b in zip(self.payoffs, other.payoffs)))

    def __sub__(self, other: "Allocation") -> "Allocation":
        if len(other) != len(self):
            raise ValueError("allocations have different lengths")
        return Allocation(tuple(a - b for a, b in zip(self.payoffs, other.payoffs)))

    def scale(self, factor: Number) -> "Allocation":
        return Allocation(tuple(factor * p for p in self.payoffs))

    def max_gap(self, other: "Allocation") -> float:
        """Largest componentwise absolute difference"""
        return float(np.max(np.abs(self.to_array() - other.to_array()))) if self.payoffs else 0.0

    @classmethod
    def zeros(cls, n: int) -> "Allocation":
        return cls(tuple(0.0 for _ in range(n)))


def _reader(game: LevelGame, exact: bool) -> Callable[[Coalition], Number]:
    """Worth lookup returning floats, or Fractions read from the shortest decimal form"""
    if not exact:
        return game.v.worth
    return lambda coalition: Fraction(repr(float(game.v.worth(coalition))))


def _individual_total(worth: Callable[[Coalition], Number], coalition: Coalition, exact: bool) -> Number:
    parts = [worth(1 << j) for j in members(coalition)]
    return sum(parts, Fraction(0)) if exact else math.fsum(parts)


def _blocks_total(worth: Callable[[Coalition], Number], blocks: Iterable[Coalition], exact: bool) -> Number:
    parts = [worth(block) for block in blocks]
    return sum(parts, Fraction(0)) if exact else math.fsum(parts)


def _divide(numerator: Number, denominator: int, exact: bool) -> Number:
    return Fraction(numerator) / denominator if exact else numerator / denominator


def required_coalitions(value: ValueId, game: LevelGame) -> list[Coalition]:
    """Coalitions whose worth the value reads, in increasing bitmask order"""
    structure = game.structure
    needed = {game.grand}
    if value in (ValueId.ESD, ValueId.LESD3):
        needed.update(1 << i for i in range(game.n))
    elif value == ValueId.LESD1:
        needed.update(structure.levels[structure.k].blocks)
    elif value == ValueId.LESD2:
        for level in structure.levels:
            needed.update(level.blocks)
    return sorted(needed)


def ed_value(game: LevelGame, exact: bool = False) -> Allocation:
    """v(N) / n for every player; the level structure is ignored"""
    worth = _reader(game, exact)
    total = worth(game.grand)
    return Allocation(tuple(_divide(total, game.n, exact) for _ in range(game.n)))


def esd_value(game: LevelGame, exact: bool = False) -> Allocation:
    """Individual worth plus an equal share of the surplus over the individual worths"""
    worth = _reader(game, exact)
    surplus = worth(game.grand) - _individual_total(worth, game.grand, exact)
    share = _divide(surplus, game.n, exact)
    return Allocation(tuple(worth(1 << i) + share for i in range(game.n)))


def led_value(game: LevelGame, exact: bool = False) -> Allocation:
    worth = _reader(game, exact)
    total = worth(game.grand)
    structure = game.structure
    return Allocation(tuple(
        _divide(total, math.prod(structure.subordinate_counts(i)), exact) for i in range(game.n)
    ))


def lesd1_value(game: LevelGame, exact: bool = False) -> Allocation:
    worth = _reader(game, exact)
    structure = game.structure
    k = structure.k
    top_blocks = structure.levels[k].blocks
    remainder = worth(game.grand) - _blocks_total(worth, top_blocks, exact)
    payoffs = []
    for i in range(game.n):
        counts = structure.subordinate_counts(i)
        own = _divide(worth(structure.union_containing(k, i)), math.prod(counts[:k]), exact)
        payoffs.append(own + _divide(remainder, math.prod(counts), exact))
    return Allocation(tuple(payoffs))


@dataclass(frozen=True)
class PlayerBreakdown:
    """Individual worth and the share of each level's remainder (levels 1..k+1)"""

    player: int
    individual: Number
    shares: tuple[Number, ...]

    def total(self) -> Number:
        return self.individual + sum(self.shares)


def lesd2_breakdown(game: LevelGame, exact: bool = False) -> list[PlayerBreakdown]:
    """Per-player terms of LESD2: v({i}) then one remainder share per level"""
    worth = _reader(game, exact)
    structure = game.structure
    remainders = {}
    for l in range(1, structure.top + 1):
        for block in structure.levels[l]:
            subordinates = structure.direct_subordinates(l, block)
            remainders[l, block] = worth(block) - _blocks_total(worth, subordinates, exact)
    result = []
    for i in range(game.n):
        counts = structure.subordinate_counts(i)
        shares = tuple(
            _divide(remainders[l, structure.union_containing(l, i)], math.prod(counts[:l]), exact)
            for l in range(1, structure.top + 1)
        )
        result.append(PlayerBreakdown(i, worth(1 << i), shares))
    return result


def lesd2_value(game: LevelGame, exact: bool = False) -> Allocation:
    breakdown = lesd2_breakdown(game, exact)
    if exact:
        return Allocation(tuple(b.total() for b in breakdown))
    return Allocation(tuple(math.fsum((b.individual, *b.shares)) for b in breakdown))


def lesd3_value(game: LevelGame, exact: bool = False) -> Allocation:
    worth = _reader(game, exact)
    structure = game.structure
    surplus = worth(game.grand) - _individual_total(worth, game.grand, exact)
    return Allocation(tuple(
        worth(1 << i) + _divide(surplus, math.prod(structure.subordinate_counts(i)), exact)
        for i in range(game.n)
    ))


VALUE_FUNCTIONS: dict[ValueId, Callable[..., Allocation]] = {
    ValueId.ED: ed_value,
    ValueId.ESD: esd_value,
    ValueId.LED: led_value,
    ValueId.LESD1: lesd1_value,
    ValueId.LESD2: lesd2_value,
    ValueId.LESD3: lesd3_value,
}


def compute(value: ValueId, game: LevelGame, exact: bool = False) -> Allocation:
    """Evaluate a value after checking every coalition it needs is defined"""
    value = ValueId(value)
    for coalition in required_coalitions(value, game):
        if not game.v.has(coalition):
            raise MissingCoalitionError(coalition, game.labels, context=value.value)
    return VALUE_FUNCTIONS[value](game, exact)


def union_totals(allocation: Allocation, game: LevelGame, level: int) -> list[tuple[Coalition, Number]]:
    """Total payoff of each block of a level, blocks in structure order"""
    blocks = game.structure.levels[level].blocks
    totals = []
    for block in blocks:
        parts = [allocation[i] for i in members(block)]
        totals.append((block, sum(parts, Fraction(0)) if allocation.exact else math.fsum(parts)))
    return totals
