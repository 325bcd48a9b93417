# levelgame CLI package
"""Egalitarian values for cooperative games with level structures"""

from .errors import GameFileError, LevelGameError, MissingCoalitionError, StructureError, UnknownExampleError
from .game import CharacteristicFunction, LevelGame, LevelStructure, Partition
from .values import Allocation, ValueId, compute
