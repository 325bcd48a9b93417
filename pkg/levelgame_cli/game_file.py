"""
Game file module for levelgame
Reads and writes level games as JSON documents.

A game file holds, in this order:
    players   list of unique labels (player order)
    levels    list of partitions, each a list of blocks, each a list of labels;
              C_0 and the grand coalition may be left out
    worths    either a list of {"coalition": [labels], "worth": number} records
              or a generator stanza {"kind": "fee_model", "schedule", "topology"}
    metadata  optional free-form object
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import GameFileError, LevelGameError, UnknownExampleError
from .fee_model import BuildingTopology, FeeSchedule, build_level_game
from .game import CharacteristicFunction, LevelGame, LevelStructure, Partition, coalition_of, members

EXAMPLES = {"parking": "parking.game"}


@dataclass(frozen=True)
class GameFile:
    game: LevelGame
    metadata: dict = field(default_factory=dict)
    source: str | None = None


def _fail(message: str, source: str | None, where: str | None = None) -> GameFileError:
    return GameFileError(message, source, where)


def _labels(document: dict, source: str | None) -> list[str]:
    players = document.get("players")
    if not isinstance(players, list) or not players:
        raise _fail("'players' must be a nonempty list of labels", source, "players")
    labels = []
    for position, label in enumerate(players):
        if not isinstance(label, (str, int)) or isinstance(label, bool):
            raise _fail(f"player {position + 1} must be a string label", source, "players")
        label = str(label)
        if label in labels:
            raise _fail(f"duplicate player label '{label}'", source, "players")
        labels.append(label)
    return labels


def _coalition(block: Any, index: dict[str, int], source: str | None, where: str) -> int:
    if not isinstance(block, list):
        raise _fail("a coalition must be a list of player labels", source, where)
    seen = set()
    for label in block:
        label = str(label)
        if label not in index:
            raise _fail(f"unknown player label '{label}'", source, where)
        if label in seen:
            raise _fail(f"player '{label}' listed twice", source, where)
        seen.add(label)
    return coalition_of(index[str(label)] for label in block)


def _partitions(document: dict, index: dict[str, int], source: str | None) -> list[Partition]:
    levels = document.get("levels", [])
    if not isinstance(levels, list):
        raise _fail("'levels' must be a list of partitions", source, "levels")
    partitions = []
    for l, partition in enumerate(levels):
        if not isinstance(partition, list):
            raise _fail("a partition must be a list of blocks", source, f"levels[{l}]")
        blocks = tuple(_coalition(block, index, source, f"levels[{l}][{b}]") for b, block in enumerate(partition))
        try:
            partitions.append(Partition(len(index), blocks))
        except LevelGameError as e:
            raise _fail(str(e), source, f"levels[{l}]") from None
    return partitions


def _structure(document: dict, index: dict[str, int], source: str | None) -> LevelStructure:
    partitions = _partitions(document, index, source)
    try:
        return LevelStructure.build(len(index), [p.blocks for p in partitions])
    except LevelGameError as e:
        raise _fail(str(e), source, "levels") from None


def _worth_value(raw: Any, source: str | None, where: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise _fail("worth must be a number", source, where)
    worth = float(raw)
    if not math.isfinite(worth):
        raise _fail("worth must be finite", source, where)
    return worth


def _explicit_worths(records: list, index: dict[str, int], source: str | None) -> CharacteristicFunction:
    worths: dict[int, float] = {}
    for r, record in enumerate(records):
        where = f"worths[{r}]"
        if not isinstance(record, dict) or "coalition" not in record or "worth" not in record:
            raise _fail("a worth record needs 'coalition' and 'worth'", source, where)
        coalition = _coalition(record["coalition"], index, source, where)
        if coalition == 0:
            raise _fail("the empty coalition must not be listed", source, where)
        if coalition in worths:
            raise _fail(f"duplicate record for coalition {record['coalition']}", source, where)
        worths[coalition] = _worth_value(record["worth"], source, where)
    return CharacteristicFunction(len(index), worths)


def _fee_model_game(stanza: dict, document: dict, source: str | None) -> LevelGame:
    try:
        schedule = FeeSchedule(**{
            key: _worth_value(value, source, f"worths.schedule.{key}")
            for key, value in stanza.get("schedule", {}).items()
        })
        topology = BuildingTopology.from_lists(stanza["topology"]["lifts"])
        game = build_level_game(schedule, topology)
    except (KeyError, TypeError, AttributeError) as e:
        raise _fail(f"malformed fee_model stanza ({e})", source, "worths") from None
    except GameFileError:
        raise
    except LevelGameError as e:
        raise _fail(str(e), source, "worths") from None

    if "players" in document and [str(p) for p in document["players"]] != list(game.labels):
        raise _fail("players do not match the owners of the topology", source, "players")
    if document.get("levels"):
        index = {label: i for i, label in enumerate(game.labels)}
        listed = tuple(_partitions(document, index, source))
        levels = game.structure.levels
        # floors and lifts are C_1 and C_2 even when either is all singletons
        if listed not in (levels[1:-1], levels[:-1], levels[1:], levels):
            raise _fail("levels do not match the floors and lifts of the topology", source, "levels")
    return game


def parse_game_document(document: Any, source: str | None = None) -> GameFile:
    """Validate a decoded JSON document and build its game"""
    if not isinstance(document, dict):
        raise _fail("a game file must hold a JSON object", source)
    metadata = document.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise _fail("'metadata' must be an object", source, "metadata")

    worths = document.get("worths")
    if isinstance(worths, dict):
        if worths.get("kind") != "fee_model":
            raise _fail(f"unknown generator kind '{worths.get('kind')}'", source, "worths.kind")
        return GameFile(_fee_model_game(worths, document, source), metadata, source)
    if not isinstance(worths, list):
        raise _fail("'worths' must be a list of records or a generator stanza", source, "worths")

    labels = _labels(document, source)
    index = {label: i for i, label in enumerate(labels)}
    structure = _structure(document, index, source)
    v = _explicit_worths(worths, index, source)
    return GameFile(LevelGame(v, structure, tuple(labels)), metadata, source)


def loads_game_file(text: str, source: str | None = None) -> GameFile:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise _fail(f"invalid JSON: {e.msg}", source, f"line {e.lineno}, column {e.colno}") from None
    return parse_game_document(document, source)


def loads_game(text: str, source: str | None = None) -> LevelGame:
    return loads_game_file(text, source).game


def load_game_file(path: str | Path) -> GameFile:
    """Read a game file; "-" reads standard input"""
    if str(path) == "-":
        return loads_game_file(sys.stdin.read(), "<stdin>")
    with open(path, "r", encoding="utf-8") as f:
        return loads_game_file(f.read(), str(path))


def load_game(path: str | Path) -> LevelGame:
    return load_game_file(path).game


def _number(worth: float) -> int | float:
    return int(worth) if float(worth).is_integer() and abs(worth) < 2**53 else worth


def game_document(game: LevelGame, metadata: dict | None = None) -> dict:
    """Canonical JSON document: every level, C_0 and the top included, and explicit worths"""
    def names(coalition: int) -> list[str]:
        return [game.labels[i] for i in members(coalition)]

    document: dict[str, Any] = {
        "players": list(game.labels),
        "levels": [[names(block) for block in level] for level in game.structure.levels],
        "worths": [{"coalition": names(s), "worth": _number(w)} for s, w in game.v.items()],
    }
    if metadata:
        document["metadata"] = metadata
    return document


def dumps_game(game: LevelGame, metadata: dict | None = None) -> str:
    return json.dumps(game_document(game, metadata), indent=2) + "\n"


def save_game(game: LevelGame, path: str | Path, metadata: dict | None = None) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_game(game, metadata))


def example_text(name: str) -> str:
    """Contents of a bundled example game file"""
    if name not in EXAMPLES:
        raise UnknownExampleError(f"unknown example '{name}' (available: {', '.join(sorted(EXAMPLES))})")
    return (resources.files("levelgame_cli") / "data" / EXAMPLES[name]).read_text(encoding="utf-8")


def load_example(name: str) -> LevelGame:
    return loads_game(example_text(name), f"<example {name}>")
