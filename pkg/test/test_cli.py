"""
Tests for the CLI module
"""

import io
import json
import os
from unittest.mock import MagicMock, patch

from levelgame_cli.args import create_parser
from levelgame_cli.cli import (
    compute_command,
    config_command,
    example_command,
    main,
    random_command,
    verify_command,
)
from levelgame_cli.config import Config
from levelgame_cli.game_file import dumps_game, example_text, loads_game, loads_game_file
from levelgame_cli.generator import random_level_game
from test_base import LevelGameTestCase

HANDLERS = {
    "config": config_command,
    "compute": compute_command,
    "verify": verify_command,
    "example": example_command,
    "random": random_command,
}

PARTIAL_PARKING = {
    "players": ["1", "2", "3", "4", "5"],
    "levels": [[["1"], ["2"], ["3"], ["4", "5"]], [["1", "2"], ["3", "4", "5"]]],
    "worths": [{"coalition": ["1", "2", "3", "4", "5"], "worth": 216}],
}


class CLITestCase(LevelGameTestCase):
    """Runs commands through the real parser with stdout captured"""

    def setUp(self):
        super().setUp()
        self.stdout_patcher = patch('sys.stdout', new_callable=io.StringIO)
        self.mock_stdout = self.stdout_patcher.start()
        self.parking_path = self.write_file("parking.game", example_text("parking"))

    def tearDown(self):
        self.stdout_patcher.stop()
        super().tearDown()

    def write_file(self, name, text):
        path = os.path.join(self.config_dir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def run_command(self, *argv):
        args = create_parser().parse_args(list(argv))
        return HANDLERS[args.command](args)

    def output(self):
        return self.mock_stdout.getvalue()

    def json_output(self):
        return json.loads(self.output())


class ConfigCommandTests(CLITestCase):
    """Tests for the config command"""

    def test_set_get_list_unset(self):
        self.assertEqual(self.run_command("config", "set", "tol", "1e-6"), 0)
        self.assertIn("Set tol to 1e-6 in global configuration.", self.output())
        self.run_command("config", "get", "tol")
        self.assertIn("tol: 1e-06", self.output())
        self.run_command("config", "list", "--name-only")
        self.assertIn("tol\n", self.output())
        self.run_command("config", "unset", "tol")
        self.assertIn("Unset tol from global configuration.", self.output())

    def test_unknown_key(self):
        self.assertEqual(self.run_command("config", "set", "token", "abc"), 1)
        self.assertIn("Error: Unknown configuration key 'token'", self.output())

    def test_list_without_configuration(self):
        self.run_command("config", "list", "--local")
        self.assertIn("No local configuration found.", self.output())

    @patch('levelgame_cli.cli.Config')
    def test_get_missing_key(self, mock_config):
        mock_config.get_value.return_value = None
        args = MagicMock(config_command="get", scope=None, name_only=False)
        args.name = "seed"
        self.assertEqual(config_command(args), 0)
        mock_config.get_value.assert_called_once_with("seed", "global")
        self.assertIn("Key 'seed' not found in global configuration.", self.output())

    def test_no_action(self):
        args = MagicMock(config_command=None)
        self.assertEqual(config_command(args), 1)
        self.assertIn("Error: no action specified", self.output())


class ComputeCommandTests(CLITestCase):
    """Tests for the compute command"""

    def test_compute_all_values_as_json(self):
        status = self.run_command("compute", "-g", self.parking_path, "--format", "json")
        self.assertEqual(status, 0)
        document = self.json_output()
        self.assertEqual(document["k"], 2)
        self.assertEqual(document["values"]["LED"]["payoffs"], [54, 54, 54, 27, 27])
        self.assertEqual(document["values"]["LESD3"]["payoffs"], [22.5, 26.5, 22.5, 72.25, 72.25])
        self.assertEqual(document["values"]["LED"]["total"], 216)

    def test_compute_exact(self):
        self.run_command("compute", "-g", self.parking_path, "--values", "lesd1", "--exact", "--format", "json")
        document = self.json_output()
        self.assertEqual(document["values"]["LESD1"]["payoffs"], ["103/2", "103/2", "113/2", "113/4", "113/4"])
        self.assertEqual(list(document["values"]), ["LESD1"])

    def test_compute_explain_and_level(self):
        self.run_command("compute", "-g", self.parking_path, "--values", "lesd2", "--explain", "--level", "2",
                         "--format", "json")
        document = self.json_output()
        owner_four = document["lesd2_breakdown"][3]
        self.assertEqual(owner_four["level_shares"], [-54, -26, -6.25])
        self.assertEqual(owner_four["total"], 31.75)
        self.assertEqual(document["union_totals"]["values"]["LESD2"][1], {"union": "{3, 4, 5}", "total": 113})

    def test_compute_text(self):
        self.assertEqual(self.run_command("compute", "-g", self.parking_path, "--values", "led"), 0)
        self.assertIn("Allocations", self.output())
        self.assertIn("LED", self.output())

    def test_partial_game(self):
        path = self.write_file("partial.game", json.dumps(PARTIAL_PARKING))
        self.assertEqual(self.run_command("compute", "-g", path, "--values", "led", "--format", "json"), 0)
        self.assertEqual(self.json_output()["values"]["LED"]["payoffs"], [54, 54, 54, 27, 27])

        self.mock_stdout.truncate(0)
        self.mock_stdout.seek(0)
        self.assertEqual(self.run_command("compute", "-g", path, "--values", "lesd2"), 1)
        self.assertIn("Error: missing worth for coalition {1} (required by LESD2)", self.output())

    def test_game_from_local_configuration(self):
        Config.set_value("game", self.parking_path, "local")
        Config.set_value("format", "json", "global")
        self.assertEqual(self.run_command("compute", "--values", "ed"), 0)
        self.assertEqual(self.json_output()["values"]["ED"]["payoffs"], [43.2] * 5)

    def test_missing_game(self):
        self.assertEqual(self.run_command("compute"), 1)
        self.assertIn("Error: Missing --game.", self.output())

    def test_invalid_inputs(self):
        self.assertEqual(self.run_command("compute", "-g", self.parking_path, "--values", "shapley"), 1)
        self.assertIn("unknown value", self.output().lower())
        self.assertEqual(self.run_command("compute", "-g", self.parking_path, "--level", "7"), 1)
        self.assertEqual(self.run_command("compute", "-g", os.path.join(self.config_dir, "none.game")), 1)


class VerifyCommandTests(CLITestCase):
    """Tests for the verify command"""

    def test_verify_parking(self):
        self.assertEqual(self.run_command("verify", "-g", self.parking_path, "--format", "json"), 0)
        document = self.json_output()
        self.assertTrue(document["passed"])
        self.assertEqual(len(document["reports"]), 16)
        weak = [r for r in document["reports"] if r["axiom"] == "WEAK_SYM_UNIONS"][0]
        self.assertTrue(weak["vacuous"])

    def test_verify_text(self):
        self.assertEqual(self.run_command("verify", "-g", self.parking_path, "--values", "led"), 0)
        self.assertIn("Axiom reports", self.output())

    def additive_path(self):
        return self.write_file("additive.game", dumps_game(self.additive_game([1, 3])))

    def test_expected_failure_keeps_exit_status(self):
        status = self.run_command("verify", "-g", self.additive_path(), "--values", "led",
                                  "--axioms", "dummifying_player")
        self.assertEqual(status, 0)
        self.assertIn("dummifying player 1: 2 vs 1", self.output())

    @patch('levelgame_cli.command_verify.is_expected_pass', return_value=True)
    def test_unexpected_failure_exits_two(self, _):
        status = self.run_command("verify", "-g", self.additive_path(), "--values", "led",
                                  "--axioms", "dummifying_player", "--format", "json")
        self.assertEqual(status, 2)
        self.assertFalse(self.json_output()["passed"])

    def test_verify_random_campaign(self):
        status = self.run_command("verify", "--random", "--trials", "20", "--seed", "1", "--format", "json")
        self.assertEqual(status, 0)
        self.assertTrue(all(r["games"] == 20 for r in self.json_output()["reports"]))

    def test_pass_without_premise_is_reported_vacuous(self):
        status = self.run_command("verify", "-g", self.parking_path, "--values", "led", "--axioms", "nullifying",
                                  "--format", "json")
        self.assertEqual(status, 0)
        report = self.json_output()["reports"][0]
        self.assertEqual(report["instances"], 0)
        self.assertTrue(report["vacuous"])

    def test_zero_biased_campaign(self):
        status = self.run_command("verify", "--random", "--trials", "40", "--seed", "0", "--n-max", "5",
                                  "--k-max", "2", "--zero-bias", "0.5", "--values", "lesd3", "--axioms",
                                  "nullifying", "--format", "json")
        self.assertEqual(status, 0)
        report = self.json_output()["reports"][0]
        self.assertEqual(report["verdict"], "fail")
        self.assertEqual(report["expected"], "fail")
        self.assertFalse(report["vacuous"])

    def test_verify_search(self):
        status = self.run_command("verify", "--search", "--values", "led", "--axioms", "dummifying_player",
                                  "--format", "json")
        self.assertEqual(status, 0)
        found = self.json_output()[0]
        self.assertTrue(found["found"])
        game = loads_game(json.dumps(found["game"]))
        self.assertEqual(game.digest(), found["witness"]["game"])

    def test_verify_search_defaults_to_known_failures(self):
        self.run_command("verify", "--search", "--trials", "1")
        self.assertEqual(self.output().count("trial"), 5)

    def test_verify_needs_a_game(self):
        self.assertEqual(self.run_command("verify"), 1)
        self.assertIn("Error: Missing --game (or --random).", self.output())

    def test_empty_worth_range(self):
        status = self.run_command("verify", "--random", "--worth-min", "5", "--worth-max", "1")
        self.assertEqual(status, 1)
        self.assertIn("worth range is empty", self.output())


class ExampleAndRandomCommandTests(CLITestCase):
    """Tests for the example and random commands"""

    def test_example_prints_game_file(self):
        self.assertEqual(self.run_command("example", "parking"), 0)
        self.assertEqual(loads_game(self.output()), self.parking)

    def test_example_to_file(self):
        path = os.path.join(self.config_dir, "copy.game")
        self.assertEqual(self.run_command("example", "parking", "-o", path), 0)
        self.assertIn(f"Wrote {path}", self.output())
        with open(path, encoding="utf-8") as f:
            self.assertEqual(loads_game(f.read()), self.parking)

    def test_example_fees(self):
        self.assertEqual(self.run_command("example", "parking", "--fees", "--format", "json"), 0)
        rows = self.json_output()
        self.assertEqual(len(rows), 12)
        self.assertEqual(rows[-1], {"kind": "total", "name": "All owners", "owners": ["1", "2", "3", "4", "5"],
                                    "fee": 216})

    def test_unknown_example(self):
        self.assertEqual(self.run_command("example", "airport"), 1)
        self.assertIn("Error: unknown example 'airport'", self.output())

    def test_random_game(self):
        self.assertEqual(self.run_command("random", "--seed", "5"), 0)
        parsed = loads_game_file(self.output())
        self.assertEqual(parsed.game, random_level_game(5))
        self.assertEqual(parsed.metadata["seed"], 5)

    def test_random_rejects_bad_bounds(self):
        self.assertEqual(self.run_command("random", "--n-max", "1"), 1)
        self.assertIn("Error: n_max must be at least 2", self.output())
        self.assertEqual(self.run_command("random", "--zero-bias", "1.5"), 1)
        self.assertIn("zero_bias must lie in [0, 1]", self.output())

    def test_main_exits_with_handler_status(self):
        with self.assertRaises(SystemExit) as ctx:
            main(["example", "parking"])
        self.assertEqual(ctx.exception.code, 0)
        with self.assertRaises(SystemExit) as ctx:
            main(["example", "airport"])
        self.assertEqual(ctx.exception.code, 1)


if __name__ == "__main__":
    import unittest
    unittest.main()
