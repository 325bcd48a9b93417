"""
Game module for levelgame
Coalitions, characteristic functions, level structures and the constructions
built on them (quotient games, truncations, restrictions, player predicates).

Players are 0-based indices and coalitions are integer bitmasks: bit i is set
when player i belongs to the coalition. Labels only matter at the I/O boundary.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import MissingCoalitionError, StructureError

MAX_PLAYERS = 64

# A coalition is a bitmask over player indices
Coalition = int


def coalition_of(players: Iterable[int]) -> Coalition:
    """Build a coalition bitmask from player indices"""
    mask = 0
    for player in players:
        if player < 0 or player >= MAX_PLAYERS:
            raise StructureError(f"player index {player} outside [0, {MAX_PLAYERS})")
        mask |= 1 << player
    return mask


def members(coalition: Coalition) -> tuple[int, ...]:
    """Player indices of a coalition in increasing order"""
    result = []
    while coalition:
        low = coalition & -coalition
        result.append(low.bit_length() - 1)
        coalition ^= low
    return tuple(result)


def size(coalition: Coalition) -> int:
    return bin(coalition).count("1")


def lowest_member(coalition: Coalition) -> int:
    return (coalition & -coalition).bit_length() - 1


def grand_coalition(n: int) -> Coalition:
    return (1 << n) - 1


def submasks(mask: Coalition) -> Iterator[Coalition]:
    """Every subset of mask, the empty set included, in decreasing numeric order"""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def format_coalition(coalition: Coalition, labels: Sequence[str] | None = None) -> str:
    """Render a coalition as {a, b, c} using labels (or 1-based indices)"""
    names = [labels[i] if labels else str(i + 1) for i in members(coalition)]
    return "{" + ", ".join(names) + "}"


class CharacteristicFunction:
    """Worth of each coalition, with v(empty) = 0

    A characteristic function is complete when all 2^n - 1 nonempty coalitions
    have a worth, partial otherwise. Looking up an undefined coalition raises
    MissingCoalitionError; it never falls back to 0.
    """

    __slots__ = ("_n", "_worths", "_complete")

    def __init__(self, n: int, worths: Mapping[Coalition, float]):
        if n < 1 or n > MAX_PLAYERS:
            raise StructureError(f"player count must be in [1, {MAX_PLAYERS}], got {n}")
        full = grand_coalition(n)
        table: dict[Coalition, float] = {}
        for coalition, worth in worths.items():
            if coalition == 0:
                if worth != 0:
                    raise StructureError("the empty coalition must have worth 0")
                continue
            if coalition & ~full:
                raise StructureError(f"coalition {format_coalition(coalition)} has players outside a {n}-player game")
            if isinstance(worth, float) and not math.isfinite(worth):
                raise StructureError(f"worth of {format_coalition(coalition)} is not finite")
            table[coalition] = worth
        self._n = n
        self._worths = MappingProxyType(dict(sorted(table.items())))
        self._complete = len(table) == full

    @classmethod
    def from_function(cls, n: int, worth: Callable[[Coalition], float]) -> "CharacteristicFunction":
        """Tabulate worth(S) for every nonempty coalition S"""
        return cls(n, {mask: worth(mask) for mask in range(1, grand_coalition(n) + 1)})

    @classmethod
    def zero(cls, n: int) -> "CharacteristicFunction":
        return cls.from_function(n, lambda _: 0.0)

    @property
    def n(self) -> int:
        return self._n

    @property
    def is_complete(self) -> bool:
        return self._complete

    @property
    def grand(self) -> Coalition:
        return grand_coalition(self._n)

    def has(self, coalition: Coalition) -> bool:
        return coalition == 0 or coalition in self._worths

    def worth(self, coalition: Coalition) -> float:
        if coalition == 0:
            return 0.0
        try:
            return self._worths[coalition]
        except KeyError:
            raise MissingCoalitionError(coalition) from None

    __call__ = worth

    def items(self) -> Iterable[tuple[Coalition, float]]:
        """Defined (coalition, worth) pairs in increasing bitmask order"""
        return self._worths.items()

    def first_missing(self) -> Coalition | None:
        """Smallest nonempty coalition without a worth, None when complete"""
        if self._complete:
            return None
        for mask in range(1, self.grand + 1):
            if mask not in self._worths:
                return mask
        return None

    def require_complete(self, context: str | None = None) -> None:
        missing = self.first_missing()
        if missing is not None:
            raise MissingCoalitionError(missing, context=context)

    def individual_sum(self, coalition: Coalition) -> float:
        """Sum of v({j}) over j in coalition, correctly rounded"""
        return math.fsum(self.worth(1 << j) for j in members(coalition))

    def _combine(self, other: "CharacteristicFunction", op: Callable[[float, float], float]) -> "CharacteristicFunction":
        if other.n != self._n:
            raise StructureError(f"cannot combine a {self._n}-player game with a {other.n}-player game")
        keys = self._worths.keys() & other._worths.keys()
        return CharacteristicFunction(self._n, {s: op(self._worths[s], other._worths[s]) for s in keys})

    def __add__(self, other: "CharacteristicFunction") -> "CharacteristicFunction":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "CharacteristicFunction") -> "CharacteristicFunction":
        return self._combine(other, lambda a, b: a - b)

    def scale(self, factor: float) -> "CharacteristicFunction":
        return CharacteristicFunction(self._n, {s: factor * w for s, w in self._worths.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacteristicFunction):
            return NotImplemented
        return self._n == other._n and dict(self._worths) == dict(other._worths)

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._worths.items())))

    def __repr__(self) -> str:
        kind = "complete" if self._complete else "partial"
        return f"CharacteristicFunction(n={self._n}, {kind}, {len(self._worths)} worths)"


@dataclass(frozen=True)
class Partition:
    """Blocks of a partition of the n players, sorted by smallest member"""

    n: int
    blocks: tuple[Coalition, ...]

    def __post_init__(self):
        if any(block == 0 for block in self.blocks):
            raise StructureError("partition blocks must be nonempty")
        seen = 0
        for block in self.blocks:
            if block & seen:
                raise StructureError(f"block {format_coalition(block)} overlaps another block")
            seen |= block
        if seen != grand_coalition(self.n):
            raise StructureError(f"blocks cover {format_coalition(seen)}, not all {self.n} players")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=lowest_member)))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls(n, (grand_coalition(n),))

    def block_of(self, player: int) -> Coalition:
        for block in self.blocks:
            if block >> player & 1:
                return block
        raise StructureError(f"player {player} not in partition")

    def index_of(self, block: Coalition) -> int:
        try:
            return self.blocks.index(block)
        except ValueError:
            raise StructureError(f"{format_coalition(block)} is not a block of this partition") from None

    def is_singletons(self) -> bool:
        return len(self.blocks) == self.n

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Coalition]:
        return iter(self.blocks)


@dataclass(frozen=True)
class LevelStructure:
    """Nested partitions C_0 (singletons), C_1, ..., C_{k+1} = {N}"""

    levels: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.levels) < 2:
            raise StructureError("a level structure needs at least the singleton and grand-coalition levels")
        n = self.levels[0].n
        if any(level.n != n for level in self.levels):
            raise StructureError("all levels must partition the same player set")
        if not self.levels[0].is_singletons():
            raise StructureError("level 0 must consist of singletons")
        if self.levels[-1].blocks != (grand_coalition(n),):
            raise StructureError(f"level {len(self.levels) - 1} must be the grand coalition")
        for l in range(1, len(self.levels)):
            upper = self.levels[l]
            for lower_block in self.levels[l - 1]:
                container = upper.block_of(lowest_member(lower_block))
                if lower_block & ~container:
                    splitter = next(b for b in upper if b & lower_block and b != container)
                    raise StructureError(
                        f"level {l} block {format_coalition(container)} splits level {l - 1} block "
                        f"{format_coalition(lower_block)} (also met by {format_coalition(splitter)})"
                    )

    @classmethod
    def build(cls, n: int, partitions: Sequence[Sequence[Coalition]]) -> "LevelStructure":
        """Build a structure, adding C_0 and C_{k+1} when they are not listed

        The first partition is taken as C_0 when it is all singletons and the
        last as C_{k+1} when it is the grand coalition.
        """
        levels = [Partition(n, tuple(blocks)) for blocks in partitions]
        if not levels or not levels[0].is_singletons():
            levels.insert(0, Partition.singletons(n))
        if len(levels) < 2 or levels[-1].blocks != (grand_coalition(n),):
            levels.append(Partition.trivial(n))
        return cls(tuple(levels))

    @classmethod
    def trivial(cls, n: int) -> "LevelStructure":
        """The k = 0 structure {C_0, {N}}"""
        return cls((Partition.singletons(n), Partition.trivial(n)))

    @property
    def n(self) -> int:
        return self.levels[0].n

    @property
    def k(self) -> int:
        """Number of intermediate levels"""
        return len(self.levels) - 2

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def check_level(self, level: int, low: int = 0, high: int | None = None) -> None:
        high = self.top if high is None else high
        if level < low or level > high:
            raise StructureError(f"level {level} out of range [{low}, {high}]")

    def union_containing(self, level: int, player: int) -> Coalition:
        self.check_level(level)
        if player < 0 or player >= self.n:
            raise StructureError(f"player {player} out of range [0, {self.n})")
        return self.levels[level].block_of(player)

    def direct_subordinates(self, level: int, block: Coalition) -> list[Coalition]:
        self.check_level(level, low=1)
        if block not in self.levels[level].blocks:
            raise StructureError(f"{format_coalition(block)} is not a block of level {level}")
        return [sub for sub in self.levels[level - 1] if sub & ~block == 0]

    def subordinate_counts(self, player: int) -> tuple[int, ...]:
        """|floor(C_l(player))| for l = 1..k+1"""
        return tuple(
            len(self.direct_subordinates(l, self.union_containing(l, player)))
            for l in range(1, self.top + 1)
        )

    def egalitarian_denominator(self, player: int, from_level: int, to_level: int) -> int:
        self.check_level(from_level, low=1)
        self.check_level(to_level, low=1)
        if from_level > to_level:
            raise StructureError(f"empty level range [{from_level}, {to_level}]")
        counts = self.subordinate_counts(player)
        return math.prod(counts[from_level - 1:to_level])

    def truncation(self, level: int) -> "LevelStructure":
        """Structure induced on the blocks of C_level, which become the players"""
        self.check_level(level, high=self.k)
        metas = self.levels[level].blocks
        truncated = []
        for upper in self.levels[level:]:
            truncated.append(Partition(
                len(metas),
                tuple(coalition_of(m for m, meta in enumerate(metas) if meta & ~q == 0) for q in upper),
            ))
        return LevelStructure(tuple(truncated))


@dataclass(frozen=True)
class QuotientGame:
    """Game played by the blocks of one level, v^l(S) = v(union of S)"""

    level: int
    meta_players: tuple[Coalition, ...]
    v: CharacteristicFunction

    def flatten(self, meta_coalition: Coalition) -> Coalition:
        result = 0
        for m in members(meta_coalition):
            result |= self.meta_players[m]
        return result

    def index_of(self, block: Coalition) -> int:
        return self.meta_players.index(block)


@dataclass(frozen=True)
class Restriction:
    """A game restricted to a subset of players, with the index mapping"""

    players: tuple[int, ...]
    v: CharacteristicFunction

    def local_index(self, player: int) -> int:
        return self.players.index(player)


@dataclass(frozen=True)
class LevelGame:
    """A (N, v, L) triple with player labels for display"""

    v: CharacteristicFunction
    structure: LevelStructure
    labels: tuple[str, ...] = ()
    _quotients: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.structure.n != self.v.n:
            raise StructureError(
                f"level structure covers {self.structure.n} players but the game has {self.v.n}"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(self.v.n)))
        elif len(self.labels) != self.v.n:
            raise StructureError(f"{len(self.labels)} labels for {self.v.n} players")
        elif len(set(self.labels)) != len(self.labels):
            raise StructureError("player labels must be unique")

    @property
    def n(self) -> int:
        return self.v.n

    @property
    def k(self) -> int:
        return self.structure.k

    @property
    def grand(self) -> Coalition:
        return self.v.grand

    def with_worths(self, v: CharacteristicFunction) -> "LevelGame":
        """Same players and structure, different characteristic function"""
        return LevelGame(v, self.structure, self.labels)

    def quotient(self, level: int) -> QuotientGame:
        if level not in self._quotients:
            self._quotients[level] = quotient_game(self, level)
        return self._quotients[level]

    def describe(self, coalition: Coalition) -> str:
        return format_coalition(coalition, self.labels)

    def digest(self) -> str:
        """Short stable fingerprint of players, structure and worths"""
        h = hashlib.sha256()
        h.update(repr(self.labels).encode())
        h.update(repr([level.blocks for level in self.structure.levels]).encode())
        h.update(repr(list(self.v.items())).encode())
        return h.hexdigest()[:12]


def union_containing(game: LevelGame, level: int, player: int) -> Coalition:
    return game.structure.union_containing(level, player)


def direct_subordinates(game: LevelGame, level: int, block: Coalition) -> list[Coalition]:
    return game.structure.direct_subordinates(level, block)


def egalitarian_denominator(game: LevelGame, player: int, from_level: int, to_level: int) -> int:
    return game.structure.egalitarian_denominator(player, from_level, to_level)


def quotient_game(game: LevelGame, level: int) -> QuotientGame:
    """The level-l quotient game (C_l, v^l) for l in 0..k

    Meta-coalitions whose union v does not define are left undefined, so a
    lookup on them raises MissingCoalitionError.
    """
    structure = game.structure
    structure.check_level(level, high=structure.k)
    metas = structure.levels[level].blocks
    worths = {}
    for meta_coalition in range(1, 1 << len(metas)):
        union = 0
        for m in members(meta_coalition):
            union |= metas[m]
        if game.v.has(union):
            worths[meta_coalition] = game.v.worth(union)
    return QuotientGame(level, metas, CharacteristicFunction(len(metas), worths))


def truncation(structure: LevelStructure, level: int) -> LevelStructure:
    return structure.truncation(level)


def truncated_game(game: LevelGame, level: int) -> LevelGame:
    """The level-l truncated game (C_l, v^l, L^l) with blocks as players"""
    quotient = game.quotient(level)
    labels = tuple(game.describe(block) for block in quotient.meta_players)
    return LevelGame(quotient.v, game.structure.truncation(level), labels)


def is_indistinguishable(v: CharacteristicFunction, i: int, j: int) -> bool:
    """v(S + i) == v(S + j) for every S excluding both players"""
    if i == j:
        raise StructureError("indistinguishability needs two different players")
    v.require_complete("the indistinguishability test")
    rest = v.grand & ~(1 << i) & ~(1 << j)
    return all(v.worth(s | 1 << i) == v.worth(s | 1 << j) for s in submasks(rest))


def is_nullifying(v: CharacteristicFunction, i: int) -> bool:
    """Every coalition containing i is worth 0"""
    v.require_complete("the nullifying player test")
    rest = v.grand & ~(1 << i)
    return all(v.worth(s | 1 << i) == 0 for s in submasks(rest))


def is_dummifying(v: CharacteristicFunction, i: int) -> bool:
    """Every coalition containing i is worth the sum of its members' individual worths"""
    v.require_complete("the dummifying player test")
    rest = v.grand & ~(1 << i)
    return all(v.worth(s | 1 << i) == v.individual_sum(s | 1 << i) for s in submasks(rest))


def restrict(v: CharacteristicFunction, coalition: Coalition) -> Restriction:
    """The game (S, v) on the members of S, re-indexed from 0"""
    if coalition == 0:
        raise StructureError("cannot restrict a game to the empty coalition")
    players = members(coalition)
    worths = {}
    for local in range(1, 1 << len(players)):
        original = coalition_of(players[m] for m in members(local))
        worths[local] = v.worth(original)
    return Restriction(players, CharacteristicFunction(len(players), worths))


def sibling_pairs(structure: LevelStructure, level: int) -> Iterator[tuple[Coalition, Coalition]]:
    """Pairs of level-l blocks sharing a parent in level l+1"""
    for parent in structure.levels[level + 1]:
        yield from combinations(structure.direct_subordinates(level + 1, parent), 2)
