"""
prismatic command line.

Every subcommand recomputes its verdicts from the input files and prints
either emoji status lines or, with --json, a CommandReport.
"""

import argparse
import logging
import sys
from typing import List, NoReturn, Optional

from pydantic import ValidationError

from .. import __version__
from ..config import configure_logging
from ..errors import PrismaticError
from .commands import COMMAND_MODULES
from .common import EXIT_INPUT, Outcome, emit, new_report

logger = logging.getLogger(__name__)


class CliParser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1); exit 2 means a failed verdict"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(prog="prismatic", description="Embeddings of K_n x K_2 and the complete graphs behind them")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def _failure(command: str, exc: Exception) -> Outcome:
    report = new_report(command)
    report.ok = False
    report.error = str(exc)
    return Outcome(report, [f"❌ {exc}"], EXIT_INPUT)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure_logging("INFO" if args.verbose else None)
        outcome = args.handler(args)
    except (PrismaticError, ValidationError, OSError) as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        outcome = _failure(args.command, exc)
        if not args.json:
            print(outcome.lines[0], file=sys.stderr)
            return outcome.exit_code
    emit(outcome, args.json)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
