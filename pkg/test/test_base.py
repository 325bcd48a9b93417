"""
Base test module for levelgame tests
Provides common fixtures (the parking game, trivial structures, additive games)
and isolates every test from the user's configuration files.
"""

import shutil
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import numpy as np
from numpy.testing import assert_allclose

from levelgame_cli.game import CharacteristicFunction, LevelGame, LevelStructure, coalition_of, members
from levelgame_cli.game_file import load_example
from levelgame_cli.values import ValueId

TOL = 1e-9

# The six allocations of the parking game, players 1..5
PARKING_TABLE = {
    ValueId.ED: (43.2, 43.2, 43.2, 43.2, 43.2),
    ValueId.ESD: (40.8, 44.8, 40.8, 44.8, 44.8),
    ValueId.LED: (54, 54, 54, 27, 27),
    ValueId.LESD1: (51.5, 51.5, 56.5, 28.25, 28.25),
    ValueId.LESD2: (49.5, 53.5, 49.5, 31.75, 31.75),
    ValueId.LESD3: (22.5, 26.5, 22.5, 72.25, 72.25),
}

PARKING_INDIVIDUAL_FEES = (114, 118, 114, 118, 118)


def parking_coalition(*labels: int) -> int:
    """Coalition of parking owners given by their 1-based numbers"""
    return coalition_of(label - 1 for label in labels)


def additive_worths(singles) -> CharacteristicFunction:
    """The additive game whose singleton worths are `singles`"""
    n = len(singles)
    return CharacteristicFunction.from_function(n, lambda s: float(sum(singles[i] for i in members(s))))


class LevelGameTestCase(unittest.TestCase):
    """Base test case for levelgame tests"""

    def setUp(self):
        """Set up test environment"""
        # Keep the user's global and local configuration out of every test
        self.config_dir = tempfile.mkdtemp()
        self.global_path_patcher = patch(
            "levelgame_cli.config.USER_CONFIG_PATH", Path(self.config_dir) / "global" / "config.json"
        )
        self.global_path_patcher.start()
        self.cwd_patcher = patch("levelgame_cli.config.Path.cwd", return_value=Path(self.config_dir))
        self.cwd_patcher.start()

        self.parking = load_example("parking")
        self.parking_structure = self.parking.structure
        self.trivial3 = LevelStructure.trivial(3)

    def tearDown(self):
        """Clean up test environment"""
        self.cwd_patcher.stop()
        self.global_path_patcher.stop()
        shutil.rmtree(self.config_dir, ignore_errors=True)

    def additive_game(self, singles, structure: LevelStructure | None = None) -> LevelGame:
        structure = structure or LevelStructure.trivial(len(singles))
        return LevelGame(additive_worths(singles), structure)

    def assertAllocationClose(self, allocation, expected, atol=TOL):
        assert_allclose(np.array([float(p) for p in allocation]), np.array(expected, dtype=float), rtol=0, atol=atol)

    def assertAllocationExact(self, allocation, expected):
        self.assertEqual(list(allocation), [Fraction(str(e)) for e in expected])
