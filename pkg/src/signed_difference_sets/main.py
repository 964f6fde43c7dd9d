"""Main entry point for the sds command."""

import sys
from collections.abc import Sequence

from . import __version__
from .app import create_parser
from .config import get_settings
from .logging_config import StructuredLogger, setup_logging
from .utils.errors import InternalDefectError, SdsError

logger = StructuredLogger("main")


def _init_sentry() -> None:
    settings = get_settings()
    if not settings.sentry_dsn:
        return
    try:
        import sentry_sdk

        sentry_sdk.init(
            dsn=settings.sentry_dsn,
            environment=settings.environment.value,
            traces_sample_rate=1.0 if not settings.is_production else 0.1,
        )
        logger.info("Sentry initialized", environment=settings.environment.value)
    except Exception as e:
        logger.warning("Failed to initialize Sentry", error=str(e))


def run(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, dispatch to the command and map errors to exit codes.

    Returns:
        0 success, 1 not an SDS, 2 bad input, 3 precondition failed,
        4 internal defect, 5 classification disagreement.
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2

    setup_logging(verbose=getattr(args, "verbose", False))
    _init_sentry()
    logger.debug("Starting sds", version=__version__, command=args.command)

    try:
        return int(args.handler(args))
    except SdsError as e:
        logger.error("Command failed", command=args.command, error=e.message, exit_code=e.exit_code)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return 130
    except Exception as e:
        logger.critical("Unexpected failure", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return InternalDefectError.exit_code


def main() -> None:
    """Console script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
