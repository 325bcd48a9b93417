"""
Tests for the values module
"""

from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from levelgame_cli.errors import MissingCoalitionError
from levelgame_cli.game import CharacteristicFunction, LevelGame, LevelStructure, members
from levelgame_cli.generator import random_level_game, random_structure, random_worths
from levelgame_cli.oracles import BasisGameSpec, basis_game
from levelgame_cli.values import (
    LEVEL_VALUES,
    Allocation,
    ValueId,
    compute,
    ed_value,
    esd_value,
    led_value,
    lesd1_value,
    lesd2_breakdown,
    lesd2_value,
    lesd3_value,
    parse_value_ids,
    required_coalitions,
    union_totals,
)
from test_base import PARKING_TABLE, LevelGameTestCase, parking_coalition


def a_priori_union_values(game: LevelGame) -> dict[ValueId, list[float]]:
    """The four level values written out directly for a single partition into unions"""
    v = game.v
    n = game.n
    unions = [set(members(block)) for block in game.structure.levels[1]]
    m = len(unions)

    def worth(players):
        mask = 0
        for p in players:
            mask |= 1 << p
        return v.worth(mask)

    union_sum = sum(worth(u) for u in unions)
    singles_sum = sum(worth({j}) for j in range(n))
    result = {value: [] for value in LEVEL_VALUES}
    for i in range(n):
        own = next(u for u in unions if i in u)
        size = len(own)
        result[ValueId.LED].append(worth(range(n)) / (m * size))
        result[ValueId.LESD1].append(worth(own) / size + (worth(range(n)) - union_sum) / (m * size))
        result[ValueId.LESD2].append(
            worth({i})
            + (worth(own) - sum(worth({j}) for j in own)) / size
            + (worth(range(n)) - union_sum) / (m * size)
        )
        result[ValueId.LESD3].append(worth({i}) + (worth(range(n)) - singles_sum) / (m * size))
    return result


class ParkingTableTests(LevelGameTestCase):
    """The six allocations of the parking game"""

    def test_float_values(self):
        for value, expected in PARKING_TABLE.items():
            with self.subTest(value=value):
                self.assertAllocationClose(compute(value, self.parking), expected)

    def test_exact_values(self):
        for value, expected in PARKING_TABLE.items():
            with self.subTest(value=value):
                allocation = compute(value, self.parking, exact=True)
                self.assertTrue(allocation.exact)
                self.assertAllocationExact(allocation, expected)
                self.assertEqual(allocation.total(), Fraction(216))

    def test_lesd2_breakdown_of_owner_four(self):
        part = lesd2_breakdown(self.parking)[3]
        self.assertEqual(part.individual, 118)
        self.assertEqual(part.shares, (-54, -26, -6.25))
        self.assertEqual(part.total(), 31.75)

    def test_union_totals(self):
        led = led_value(self.parking)
        self.assertEqual(union_totals(led, self.parking, 2), [
            (parking_coalition(1, 2), 108.0),
            (parking_coalition(3, 4, 5), 108.0),
        ])
        lesd3 = union_totals(lesd3_value(self.parking, exact=True), self.parking, 1)
        self.assertEqual(lesd3[-1], (parking_coalition(4, 5), Fraction(289, 2)))


class DirectValueTests(LevelGameTestCase):
    """Edge cases of the individual value functions"""

    def test_single_player(self):
        game = LevelGame(CharacteristicFunction(1, {1: 7.0}), LevelStructure.trivial(1))
        for value in ValueId:
            self.assertAllocationClose(compute(value, game), [7.0])

    def test_zero_game(self):
        game = self.parking.with_worths(CharacteristicFunction.zero(5))
        for value in ValueId:
            self.assertAllocationClose(compute(value, game), [0.0] * 5)

    def test_additive_game_pays_individual_worths(self):
        singles = [3, -2, 5, 1, 0]
        game = self.additive_game(singles, self.parking_structure)
        self.assertEqual(list(esd_value(game)), singles)
        self.assertEqual(list(lesd2_value(game)), singles)
        self.assertEqual(list(lesd3_value(game)), singles)

    def test_led_only_reads_the_grand_coalition(self):
        game = self.parking.with_worths(CharacteristicFunction(5, {0b11111: 216.0}))
        self.assertAllocationClose(compute(ValueId.LED, game), PARKING_TABLE[ValueId.LED])
        self.assertAllocationClose(compute(ValueId.ED, game), PARKING_TABLE[ValueId.ED])

    def test_missing_block_is_named(self):
        game = self.parking.with_worths(CharacteristicFunction(5, {0b11111: 216.0}))
        with self.assertRaises(MissingCoalitionError) as ctx:
            compute(ValueId.LESD1, game)
        self.assertEqual(ctx.exception.coalition, parking_coalition(1, 2))
        self.assertIn("{1, 2}", str(ctx.exception))
        self.assertIn("LESD1", str(ctx.exception))

    def test_required_coalitions(self):
        grand = self.parking.grand
        self.assertEqual(required_coalitions(ValueId.LED, self.parking), [grand])
        self.assertEqual(required_coalitions(ValueId.LESD1, self.parking),
                         sorted([grand, parking_coalition(1, 2), parking_coalition(3, 4, 5)]))
        self.assertEqual(len(required_coalitions(ValueId.LESD3, self.parking)), 6)
        # singletons, four floors (three of them singletons), two lifts, N
        self.assertEqual(len(required_coalitions(ValueId.LESD2, self.parking)), 9)

    def test_parse_value_ids(self):
        self.assertEqual(parse_value_ids("all"), list(ValueId))
        self.assertEqual(parse_value_ids("led, LESD2,led"), [ValueId.LED, ValueId.LESD2])
        with self.assertRaises(ValueError):
            parse_value_ids("shapley")

    def test_allocation_arithmetic(self):
        a = Allocation((1.0, 2.0))
        b = Allocation((0.5, 0.5))
        self.assertEqual(list(a + b), [1.5, 2.5])
        self.assertEqual(list(a - b), [0.5, 1.5])
        self.assertEqual(list(a.scale(2)), [2.0, 4.0])
        self.assertEqual(a.max_gap(b), 1.5)
        with self.assertRaises(ValueError):
            a + Allocation((1.0,))


class ReductionTests(LevelGameTestCase):
    """Level values on one- and two-level structures"""

    def test_trivial_structure_reduces_to_flat_values(self):
        for seed in range(200):
            generated = random_level_game(seed)
            game = LevelGame(generated.v, LevelStructure.trivial(generated.n))
            ed = ed_value(game).to_array()
            esd = esd_value(game).to_array()
            np.testing.assert_allclose(led_value(game).to_array(), ed, atol=1e-9)
            for value in (lesd1_value, lesd2_value, lesd3_value):
                np.testing.assert_allclose(value(game).to_array(), esd, atol=1e-9)

    def test_a_priori_unions(self):
        for seed in range(200):
            rng = np.random.default_rng(seed)
            n = int(rng.integers(2, 7))
            game = LevelGame(random_worths(rng, n), random_structure(rng, n, 1))
            expected = a_priori_union_values(game)
            for value in LEVEL_VALUES:
                np.testing.assert_allclose(compute(value, game).to_array(), expected[value], atol=1e-9)


class AlgebraicPropertyTests(LevelGameTestCase):
    """Efficiency, additivity and scaling over generated games"""

    def test_efficiency_on_generated_games(self):
        for seed in range(300):
            game = random_level_game(seed)
            for value in ValueId:
                self.assertAlmostEqual(compute(value, game).total(), game.v.worth(game.grand), delta=1e-9)

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 10**6), other=st.integers(0, 10**6))
    def test_additivity(self, seed, other):
        game = random_level_game(seed)
        partner = game.with_worths(random_worths(np.random.default_rng(other), game.n))
        combined = game.with_worths(game.v + partner.v)
        for value in LEVEL_VALUES:
            np.testing.assert_allclose(
                compute(value, combined).to_array(),
                (compute(value, game) + compute(value, partner)).to_array(),
                atol=1e-9,
            )

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 10**6), factor=st.floats(-50, 50, allow_nan=False, allow_infinity=False))
    def test_scale_covariance(self, seed, factor):
        game = random_level_game(seed)
        scaled = game.with_worths(game.v.scale(factor))
        for value in ValueId:
            np.testing.assert_allclose(
                compute(value, scaled).to_array(), compute(value, game).scale(factor).to_array(), atol=1e-9
            )

    def test_led_matches_grand_coalition_basis_game(self):
        for seed in range(100):
            game = random_level_game(seed)
            basis = game.with_worths(basis_game(game.n, BasisGameSpec(game.grand, game.v.worth(game.grand))))
            self.assertEqual(list(led_value(basis)), list(led_value(game)))
