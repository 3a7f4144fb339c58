"""qpg command-line entry point.

    qpg simulate-pm --config config/defaults.yaml --out runs/ideal
    qpg fit-profile measured.csv --seed 7 --out runs/fit
    qpg bench --only report

Exit codes: 0 success, 1 computation failure, 2 usage, config, parse or
argument-value error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

import structlog
from dotenv import load_dotenv

from qpg_toolkit import __version__
from qpg_toolkit.cli.commands import bench, efficiency, fit, modes, simulate
from qpg_toolkit.errors import ConfigError, ParseError, QpgError
from qpg_toolkit.log import configure_logging

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpg", description="Quantum pulse gate simulation and profile retrieval"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="override QPG_LOG_LEVEL")
    parser.add_argument("--log-json", action="store_true", help="JSON log lines on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (simulate, modes, fit, efficiency, bench):
        command.register(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level, True if args.log_json else None)
    try:
        return int(args.run(args))
    except (ConfigError, ParseError) as exc:
        parser.print_usage(sys.stderr)
        print(f"qpg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QpgError as exc:
        logger.error("cli.failed", command=args.command, error=str(exc))
        print(f"qpg {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        # invalid argument values rejected by a model or operation
        parser.print_usage(sys.stderr)
        print(f"qpg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
