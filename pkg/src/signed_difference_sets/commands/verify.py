"""verify: check a document's element as an SDS."""

import argparse
from pathlib import Path

from ..core.designs import SdsParams
from ..services.document_service import DocumentService
from ..services.export_service import ExportService
from ..services.verification_service import VerificationService
from ..utils.arguments import add_common_arguments, output_format


def run(args: argparse.Namespace) -> int:
    document = DocumentService.read(args.file)
    DocumentService.field_of(document)
    element = DocumentService.element(document)
    declared = document.params
    claimed = SdsParams(declared.v, declared.k, declared.lam) if declared is not None else None
    report = VerificationService.verify(element, claimed)
    print(ExportService.verification(report, output_format(args)))
    return 0


def setup(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    """Register the verify command."""
    parser = subparsers.add_parser("verify", help="verify a signed-set document")
    parser.add_argument("file", type=Path)
    add_common_arguments(parser)
    parser.set_defaults(handler=run)
