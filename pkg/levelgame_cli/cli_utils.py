"""
Helper functions for the CLI
"""

from fractions import Fraction
from pathlib import Path

from .config import Config

def get_needed_args(args, required_args, verbose=False) -> list[str]:
    """
    Fills unset arguments from the local config, the global config and the built-in defaults.

    Args:
        args: The arguments passed to the command.
        required_args: The arguments the command needs.
        verbose: Whether to print where each value came from.

    Returns:
        still_missing: A list of arguments that are still missing after checking the config.
    """

    for arg in required_args:
        given = getattr(args, arg, None)
        value = Config.resolve(arg, given)
        setattr(args, arg, value)
        if verbose and given is None and value is not None:
            print(f"Using {arg} = {value}")

    still_missing = [
        arg for arg in required_args if getattr(args, arg, None) is None
    ]

    return still_missing

def need_argument_output(command: str, missing_args: list[str]) -> None:
    """
    Prints the missing arguments for a command.

    Args:
        command: The command that is missing arguments.
        missing_args: The list of missing arguments.
    """

    # If missing any required arguments, show error and exit
    if missing_args:
        print(f"Error: Missing {', '.join(missing_args)}.")
        print("Please provide all requirements as arguments or set them in the local configuration.")
        print(f"Use 'levelgame config list' to see the current configuration or 'levelgame {command} -h' for help.")

def format_number(value, digits: int = 6) -> str:
    """
    Shortest decimal form with at most `digits` fraction digits; fractions print as p/q.

    Args:
        value: A float, int or Fraction.
        digits: Maximum number of fraction digits for floats.
    """
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    text = f"{float(value):.{digits}f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text

def json_number(value):
    """JSON-friendly number: exact values become "p/q" strings"""
    if isinstance(value, Fraction):
        return format_number(value)
    value = float(value)
    return int(value) if value.is_integer() and abs(value) < 2**53 else value

def write_output(text: str, output: str | None) -> None:
    """Print text, or write it to the output file when one is given"""
    if output is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    print(f"Wrote {path}")
