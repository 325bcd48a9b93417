"""
Args module for levelgame
Contains argument parser configuration for the command-line interface
"""

import argparse
from typing import Callable, Dict
from .__version__ import __version__

def create_parser() -> argparse.ArgumentParser:
    """Create the main argument parser for levelgame"""

    # Create the main parser
    parser = argparse.ArgumentParser(description="Egalitarian values for cooperative games with level structures")
    # Add version argument
    parser.add_argument('--version', action='version', version=f'levelgame (levelgame-cmd) version {__version__}', help='Show version information')
    # Subparsers for different commands
    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    subparsers.required = True

    # Config command
    setup_config_parser(subparsers)

    # Compute command
    setup_compute_parser(subparsers)

    # Verify command
    setup_verify_parser(subparsers)

    # Example command
    setup_example_parser(subparsers)

    # Random command
    setup_random_parser(subparsers)

    return parser

def setup_config_parser(subparsers) -> None:
    """Set up the config command parser"""
    # Config command parser (matches git config style)
    config_parser = subparsers.add_parser("config", help="Manage default settings")

    # Helper function to accept --global or --local as mutually exclusive options
    def add_file_options_group(parser):
        group = parser.add_mutually_exclusive_group()
        group.add_argument('--global', dest='scope', action='store_const', const='global', help='Use global config')
        group.add_argument('--local', dest='scope', action='store_const', const='local', help='Use local config (levelgame.json)')

    # Add subparsers for the config command
    config_subparsers = config_parser.add_subparsers(dest="config_command", help="Configuration subcommand")

    # 'list' subcommand
    list_parser = config_subparsers.add_parser("list", help="List all settings")
    add_file_options_group(list_parser)
    list_parser.add_argument('--name-only', action='store_true', help='Show only the names/keys of the settings')

    # 'get' subcommand
    get_parser = config_subparsers.add_parser("get", help="Get a setting value")
    add_file_options_group(get_parser)
    get_parser.add_argument('--name-only', action='store_true', help='Show only the name of the setting')
    get_parser.add_argument("name", help="Setting key to get")

    # 'set' subcommand
    set_parser = config_subparsers.add_parser("set", help="Set a setting value")
    add_file_options_group(set_parser)
    set_parser.add_argument('name', help="Setting key to set")
    set_parser.add_argument('value', help="Value to set for the key")

    # 'unset' subcommand
    unset_parser = config_subparsers.add_parser("unset", help="Unset a setting value")
    add_file_options_group(unset_parser)
    unset_parser.add_argument('name', help="Setting key to unset")

def add_game_argument(parser) -> None:
    parser.add_argument("-g", "--game", metavar="PATH", help="Game file to read ('-' for stdin)")

def add_output_options(parser) -> None:
    output_group = parser.add_argument_group("Output Options")
    output_group.add_argument("--format", dest="format", choices=["text", "json"], help="Output format (default: text)")
    output_group.add_argument("-v", "--verbose", action="store_true", help="Print progress details")

def add_generator_options(parser) -> None:
    generator_group = parser.add_argument_group("Random Game Options")
    generator_group.add_argument("--seed", type=int, metavar="INT", help="Seed of the first random game (default: 42)")
    generator_group.add_argument("--n-max", dest="n_max", type=int, metavar="INT", help="Largest number of players (default: 6)")
    generator_group.add_argument("--k-max", dest="k_max", type=int, metavar="INT", help="Largest number of intermediate levels (default: 3)")
    generator_group.add_argument("--worth-min", dest="worth_min", type=int, metavar="INT", help="Smallest random worth (default: -10)")
    generator_group.add_argument("--worth-max", dest="worth_max", type=int, metavar="INT", help="Largest random worth (default: 10)")
    generator_group.add_argument("--zero-bias", dest="zero_bias", type=float, metavar="REAL", help="Chance that a random worth is forced to 0 (default: 0; searches: 0.5)")

def setup_compute_parser(subparsers) -> None:
    """Set up the compute command parser"""
    compute_parser = subparsers.add_parser("compute", help="Compute allocation values of a game")
    add_game_argument(compute_parser)
    compute_parser.add_argument("--values", "--value", dest="values", metavar="CSV", default="all", help="Values to compute, e.g. led,lesd2 (default: all)")
    compute_parser.add_argument("--exact", action="store_true", help="Compute with exact rationals and print p/q")
    compute_parser.add_argument("--explain", action="store_true", help="Show the per-level breakdown of LESD2")
    compute_parser.add_argument("--level", type=int, metavar="L", help="Also show the total paid by each union of level L")
    add_output_options(compute_parser)

def setup_verify_parser(subparsers) -> None:
    """Set up the verify command parser"""
    verify_parser = subparsers.add_parser("verify", help="Check the axioms that characterize each value")
    add_game_argument(verify_parser)
    verify_parser.add_argument("--values", "--value", dest="values", metavar="CSV", default=None, help="Values to check (default: the four level values)")
    verify_parser.add_argument("--axioms", "--axiom", dest="axioms", metavar="CSV", default=None, help="Axioms to check (default: each value's characterization)")
    verify_parser.add_argument("--tol", type=float, metavar="REAL", help="Tolerance for payoff comparisons (default: 1e-9)")

    mode_group = verify_parser.add_mutually_exclusive_group()
    mode_group.add_argument("--random", action="store_true", help="Run a campaign over seeded random games instead of a file")
    mode_group.add_argument("--search", action="store_true", help="Search random games for a counterexample to each pair")

    verify_parser.add_argument("--trials", type=int, metavar="INT", help="Number of random games (default: 1000)")
    add_generator_options(verify_parser)
    add_output_options(verify_parser)

def setup_example_parser(subparsers) -> None:
    """Set up the example command parser"""
    example_parser = subparsers.add_parser("example", help="Print a bundled example game file")
    example_parser.add_argument("name", help="Example name (parking)")
    example_parser.add_argument("-o", "--output", metavar="PATH", help="Write the game file to PATH instead of stdout")
    example_parser.add_argument("--fees", action="store_true", help="Show the fee of every owner, floor and lift instead")
    add_output_options(example_parser)

def setup_random_parser(subparsers) -> None:
    """Set up the random command parser"""
    random_parser = subparsers.add_parser("random", help="Write a seeded random game file")
    random_parser.add_argument("-o", "--output", metavar="PATH", help="Write the game file to PATH instead of stdout")
    add_generator_options(random_parser)
    random_parser.add_argument("-v", "--verbose", action="store_true", help="Print progress details")

def parse_args_and_dispatch(command_handlers: Dict[str, Callable], argv: list[str] | None = None) -> int:
    """
    Parse command line arguments and dispatch to the appropriate handler

    Args:
        command_handlers: Dictionary mapping command names to handler functions
        argv: Arguments to parse instead of sys.argv

    Returns:
        The exit status returned by the handler
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    # Get the appropriate handler for the command
    command = args.command
    if command in command_handlers:
        return command_handlers[command](args) or 0
    parser.print_help()
    return 1
