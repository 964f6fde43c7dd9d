"""Command-line parser assembly."""

import argparse

from . import __version__
from .commands import classify, construct, feasible, sequence, verify, weighing

COMMANDS = (construct, verify, classify, sequence, weighing, feasible)


def create_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per command module."""
    parser = argparse.ArgumentParser(
        prog="sds",
        description="Construct and verify signed difference sets over finite abelian groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for module in COMMANDS:
        module.setup(subparsers)
    return parser
