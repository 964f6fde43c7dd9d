"""sequence: ternary sequence of a cyclic signed set."""

import argparse
from pathlib import Path

from ..core.sequences import sequence_from_sds
from ..services.document_service import DocumentService
from ..services.export_service import ExportService
from ..utils.arguments import add_common_arguments
from ..utils.errors import SequenceError


def run(args: argparse.Namespace) -> int:
    document = DocumentService.read(args.file)
    D = DocumentService.signed_set(document)
    if D is None:
        raise SequenceError("sequences need coefficients in {-1, 0, 1}")
    print(ExportService.sequence(sequence_from_sds(D), acf=args.acf))
    return 0


def setup(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    """Register the sequence command."""
    parser = subparsers.add_parser("sequence", help="export the ternary sequence of a cyclic signed set")
    parser.add_argument("file", type=Path)
    parser.add_argument("--acf", action="store_true", help="also print the periodic autocorrelation table")
    add_common_arguments(parser)
    parser.set_defaults(handler=run)
