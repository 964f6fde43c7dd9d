"""classify: fourth-order cyclotomic classification for one q or a range."""

import argparse

from ..logging_config import StructuredLogger
from ..services.classification_service import ClassificationService
from ..services.export_service import ExportService
from ..utils.arguments import add_common_arguments, output_format, parse_coords
from ..utils.errors import ClassificationDisagreement, DocumentError

logger = StructuredLogger("commands.classify")


def run(args: argparse.Namespace) -> int:
    """Print the reports; exit 5 when any prediction disagrees with verification."""
    service = ClassificationService(threads=args.threads)
    if args.q is not None:
        w = args.w[0] if args.w is not None and len(args.w) == 1 else args.w
        reports = [service.classify(args.q, w=w)]
    else:
        if args.w is not None:
            raise DocumentError("--w applies to a single --q, not to --max-q")
        reports = service.scan(args.max_q)

    fmt = output_format(args)
    for report in reports:
        print(ExportService.classification(report, fmt))

    inconsistent = [r.q for r in reports if not r.consistent]
    if inconsistent:
        logger.error("Classification disagreements", orders=inconsistent)
        return ClassificationDisagreement.exit_code
    return 0


def setup(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    """Register the classify command."""
    parser = subparsers.add_parser("classify", help="classify the cyclotomic SDS cases")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--q", type=int, help="a single prime power q = 1 mod 4")
    target.add_argument("--max-q", type=int, help="every admissible q up to this bound")
    parser.add_argument("--w", type=parse_coords, help="primitive element override, only with --q")
    parser.add_argument("--threads", type=int, help="worker threads (default: SDS_THREADS)")
    add_common_arguments(parser)
    parser.set_defaults(handler=run)
