"""Shared argparse helpers for the command modules."""

import argparse

from ..config import OutputFormat


def parse_coords(text: str) -> tuple[int, ...]:
    """'1,0' -> (1, 0); a bare integer gives a one-tuple."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """--format and --verbose, accepted after every command name."""
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="output format (default: text)",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")


def output_format(args: argparse.Namespace) -> OutputFormat:
    return OutputFormat(getattr(args, "format", OutputFormat.TEXT.value))
