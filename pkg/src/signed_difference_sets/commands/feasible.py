"""feasible: the perfect-square test for (v, k, lambda)."""

import argparse

from ..core.designs import feasible
from ..services.export_service import ExportService
from ..utils.arguments import add_common_arguments


def run(args: argparse.Namespace) -> int:
    sizes = tuple(args.sizes) if args.sizes is not None else None
    certificate = feasible(args.v, args.k, args.lam, sizes)  # type: ignore[arg-type]
    print(ExportService.feasibility(args.v, args.k, args.lam, certificate))
    return 0 if certificate.accepted else 1


def setup(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    """Register the feasible command."""
    parser = subparsers.add_parser("feasible", help="necessary condition for a (v,k,lambda)-SDS")
    parser.add_argument("v", type=int)
    parser.add_argument("k", type=int)
    parser.add_argument("lam", type=int, metavar="lambda")
    parser.add_argument("--sizes", type=int, nargs=2, metavar=("P", "N"), help="also check |P| and |N|")
    add_common_arguments(parser)
    parser.set_defaults(handler=run)
