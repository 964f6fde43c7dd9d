"""weighing: G-invariant weighing matrix of a lambda = 0 signed set."""

import argparse
from pathlib import Path

from ..core.sequences import weighing_from_sds
from ..services.document_service import DocumentService
from ..services.export_service import ExportService
from ..utils.arguments import add_common_arguments
from ..utils.errors import SequenceError


def run(args: argparse.Namespace) -> int:
    document = DocumentService.read(args.file)
    D = DocumentService.signed_set(document)
    if D is None:
        raise SequenceError("weighing matrices need coefficients in {-1, 0, 1}")
    W = weighing_from_sds(D, seed=args.seed)
    print(ExportService.weighing(W, dense=args.dense))
    return 0


def setup(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    """Register the weighing command."""
    parser = subparsers.add_parser("weighing", help="export the weighing matrix of a (v,k,0) SDS")
    parser.add_argument("file", type=Path)
    parser.add_argument("--dense", action="store_true", help="also print the full matrix")
    parser.add_argument("--seed", type=int, help="seed for the sampled row check (default: SDS_SEED)")
    add_common_arguments(parser)
    parser.set_defaults(handler=run)
