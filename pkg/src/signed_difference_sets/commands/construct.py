"""construct: build a signed difference set and print its document."""

import argparse
from pathlib import Path

from ..config import Family
from ..core.cyclotomy import CyclotomicCase
from ..logging_config import StructuredLogger
from ..services.construction_service import ConstructionResult, ConstructionService
from ..services.document_service import DocumentService
from ..utils.arguments import add_common_arguments, parse_coords
from ..utils.errors import DocumentError

logger = StructuredLogger("commands.construct")


def _build(args: argparse.Namespace) -> ConstructionResult:
    service = ConstructionService()
    family = Family(args.family)
    w = args.w[0] if args.w is not None and len(args.w) == 1 else args.w
    if family is Family.PALEY:
        if args.q is None:
            raise DocumentError("paley needs --q")
        return service.paley(args.q, w=w)
    if family is Family.GOLAY:
        return service.golay()
    if family is Family.PRODUCT3:
        return service.product3(args.m, x0=args.x0, x1=args.x1, example=args.example, allow_large=args.allow_large)
    if args.q is None or args.case is None:
        raise DocumentError("cyclotomic needs --q and --case")
    return service.cyclotomic(args.q, args.case, args.i, args.j, w=w)


def run(args: argparse.Namespace) -> int:
    """Construct, re-verify and emit the document; returns the exit code."""
    result = _build(args)
    document = DocumentService.to_document(result.element, result.params, result.field, result.family.value)
    text = DocumentService.dumps(document)
    if args.output is not None:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
        logger.info("Document written", path=str(args.output), params=str(result.params))
    else:
        print(text)
    logger.info("Construction complete", family=result.family.value, params=str(result.params), strict=result.strict)
    return 0


def setup(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    """Register the construct command."""
    parser = subparsers.add_parser("construct", help="build an SDS family member")
    parser.add_argument("family", choices=[f.value for f in Family])
    parser.add_argument("--q", type=int, help="field order (paley, cyclotomic)")
    parser.add_argument("--w", type=parse_coords, help="primitive element override, integer or coordinates")
    parser.add_argument("--m", type=int, default=2, help="product3: even m >= 2")
    parser.add_argument("--x0", type=int, default=1, help="product3: nonzero element of Z_3")
    parser.add_argument("--x1", type=parse_coords, help="product3: element of Z_3^m, e.g. 1,0")
    parser.add_argument("--example", action="store_true", help="product3: the worked m=2 example with x1=(1,0)")
    parser.add_argument("--allow-large", action="store_true", help="product3: allow m above the convolution limit")
    parser.add_argument("--case", choices=[c.value for c in CyclotomicCase], help="cyclotomic: case identifier")
    parser.add_argument("--i", type=int, help="cyclotomic: first class index")
    parser.add_argument("--j", type=int, help="cyclotomic: second class index")
    parser.add_argument("--output", type=Path, help="write the document here instead of stdout")
    add_common_arguments(parser)
    parser.set_defaults(handler=run)
