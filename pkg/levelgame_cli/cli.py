"""
CLI Manager Module for levelgame
Handles the command line interface and its subcommands.
"""

import sys

from .args import parse_args_and_dispatch
from .axioms import parse_axiom_ids
from .cli_utils import get_needed_args, need_argument_output, write_output
from .command_compute import show_compute, show_fees
from .command_verify import (
    EXIT_INVALID,
    EXIT_OK,
    report_status,
    select_pairs,
    show_reports,
    show_searches,
    verify_campaign,
    verify_game,
)
from .config import Config
from .errors import LevelGameError
from .fee_model import FeeSchedule, fee_table, parking_topology
from .game_file import dumps_game, example_text, load_example, load_game
from .generator import SEARCH_TRIALS, SEARCH_ZERO_BIAS, random_level_game
from .values import parse_value_ids

SEARCH_N_MAX = 5
SEARCH_K_MAX = 2

def config_command(args):
    """Handle command line arguments for configuration"""

    # Check if there is no subcommand
    if args.config_command is None:
        print("Error: no action specified")
        print("See 'levelgame config --help' for available actions")
        return EXIT_INVALID

    # Default scope to 'global' if not provided
    args.scope = "global" if args.scope is None else args.scope

    try:
        if args.config_command == "list":
            config = Config.load_global() if args.scope == "global" else Config.load_project_config()
            if not config:
                print(f"No {args.scope} configuration found.")
                return EXIT_OK
            for key, value in config.items():
                print(f"{key}{'' if args.name_only else ': ' + str(value)}")
        elif args.config_command == "get":
            value = Config.get_value(args.name, args.scope)
            if value is not None:
                print(f"{args.name}{'' if args.name_only else ': ' + str(value)}")
            else:
                print(f"Key '{args.name}' not found in {args.scope} configuration.")
        elif args.config_command == "set":
            Config.set_value(args.name, args.value, args.scope)
            print(f"Set {args.name} to {args.value} in {args.scope} configuration.")
        elif args.config_command == "unset":
            if Config.unset_value(args.name, args.scope):
                print(f"Unset {args.name} from {args.scope} configuration.")
            else:
                print(f"Key '{args.name}' not found in {args.scope} configuration.")
    except (ValueError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_INVALID
    return EXIT_OK

def _worth_range(args) -> tuple[int, int]:
    if args.worth_min > args.worth_max:
        raise ValueError(f"worth range is empty: [{args.worth_min}, {args.worth_max}]")
    return args.worth_min, args.worth_max

def compute_command(args):
    """Handle the compute command to print allocation values of a game"""
    try:
        missing_args = get_needed_args(args, ["game", "format"], args.verbose)
    except ValueError as e:
        print(f"Error: {e}")
        return EXIT_INVALID

    if missing_args:
        need_argument_output("compute", ["--game" if arg == "game" else arg for arg in missing_args])
        return EXIT_INVALID

    try:
        game = load_game(args.game)
        values = parse_value_ids(args.values)
        show_compute(game, values, args.format, args.exact, args.explain, args.level, args.verbose)
    except (ValueError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_INVALID
    return EXIT_OK

def verify_command(args):
    """Handle the verify command to check axioms on a game, a random campaign or a search"""
    needed = ["tol", "format", "seed", "worth_min", "worth_max", "zero_bias"]
    if args.random:
        needed += ["trials", "n_max", "k_max"]
    elif args.search:
        # searches have their own, smaller defaults
        args.trials = SEARCH_TRIALS if args.trials is None else args.trials
        args.n_max = SEARCH_N_MAX if args.n_max is None else args.n_max
        args.k_max = SEARCH_K_MAX if args.k_max is None else args.k_max
        args.zero_bias = SEARCH_ZERO_BIAS if args.zero_bias is None else args.zero_bias
    else:
        needed.append("game")

    try:
        missing_args = get_needed_args(args, needed, args.verbose)
        values = parse_value_ids(args.values) if args.values else None
        axioms = parse_axiom_ids(args.axioms) if args.axioms else None
        pairs = select_pairs(values, axioms, args.search)
        worth_range = _worth_range(args)
    except ValueError as e:
        print(f"Error: {e}")
        return EXIT_INVALID

    if missing_args:
        need_argument_output("verify", ["--game (or --random)" if arg == "game" else arg for arg in missing_args])
        return EXIT_INVALID

    tol = args.tol
    try:
        if args.search:
            show_searches(pairs, args.seed, args.trials, args.n_max, args.k_max, worth_range, tol,
                          args.format, args.verbose, args.zero_bias)
            return EXIT_OK
        if args.random:
            reports = verify_campaign(pairs, args.seed, args.trials, args.n_max, args.k_max, worth_range, tol,
                                      args.verbose, args.zero_bias)
        else:
            reports = verify_game(load_game(args.game), pairs, tol, args.seed, worth_range, args.verbose)
    except (ValueError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_INVALID

    show_reports(reports, args.format)
    return report_status(reports)

def example_command(args):
    """Handle the example command to print a bundled game file"""
    try:
        get_needed_args(args, ["format"])
        if args.fees:
            if args.name != "parking":
                raise LevelGameError(f"fee tables are only available for the parking example, not '{args.name}'")
            schedule, topology = FeeSchedule(), parking_topology()
            show_fees(load_example(args.name), fee_table(schedule, topology), args.format)
            return EXIT_OK
        write_output(example_text(args.name), args.output)
    except (ValueError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_INVALID
    return EXIT_OK

def random_command(args):
    """Handle the random command to write a generated game file"""
    try:
        get_needed_args(args, ["seed", "n_max", "k_max", "worth_min", "worth_max", "zero_bias"], args.verbose)
        game = random_level_game(args.seed, args.n_max, args.k_max, _worth_range(args), args.zero_bias)
        if args.verbose:
            print(f"Generated game {game.digest()}: {game.n} players, k = {game.k}")
        metadata = {"generator": "random_level_game", "seed": args.seed, "n_max": args.n_max, "k_max": args.k_max,
                    "worth_range": [args.worth_min, args.worth_max], "zero_bias": args.zero_bias}
        write_output(dumps_game(game, metadata), args.output)
    except (ValueError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_INVALID
    return EXIT_OK

def main(argv=None):
    """Main CLI entry point"""
    # Define command handlers
    command_handlers = {
        "config": config_command,
        "compute": compute_command,
        "verify": verify_command,
        "example": example_command,
        "random": random_command,
    }

    # Parse arguments and dispatch to the appropriate handler
    sys.exit(parse_args_and_dispatch(command_handlers, argv))

if __name__ == "__main__":
    main()
