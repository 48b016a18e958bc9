import argparse
import json
import logging
import sys
import time
from typing import List, Optional

from app.controller import (CompareController as compare,
                            DerivedController as derived,
                            HomologyController as homology,
                            SelftestController as selftest,
                            ValidateController as validate
                            )
from app.core.errors import InvalidShapeError
from app.core.logging_setup import configure_logging
from app.dto.RunReport import RunReport
from app.dto.Violation import Violation

# Exit codes: 0 success, 1 mathematical failure, 2 usage or parse error
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _parse_args(argv: List[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="cubix",
        description="Simplicial and cubical homology and derived functors over the integers")
    parser.add_argument("--timing", action="store_true", help="Add wall time to the JSON report")
    parser.add_argument("--log-level", default=None, help="Console log level (defaults to CONSOLE_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for controller in (validate, homology, compare, derived, selftest):
        controller.register(subparsers)
    return parser.parse_args(argv)


def _emit(report: RunReport) -> None:
    print(json.dumps(report.model_dump(mode="json", exclude_none=True), sort_keys=True, indent=2,
                     ensure_ascii=False))


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help
        return EXIT_OK if not e.code else EXIT_USAGE
    configure_logging(args.log_level)

    start = time.perf_counter()
    try:
        report = args.handler(args)
    except InvalidShapeError as e:
        logging.error(f"[Cubix] {e}")
        violation = e.violation or Violation(kind="invalid-shape", detail=str(e))
        report = RunReport(command=[], violation=violation, passed=False)
    except ValueError as e:
        logging.error(f"[Cubix] {e}")
        return EXIT_USAGE

    update = {"command": argv}
    if args.timing:
        update["wall_time"] = round(time.perf_counter() - start, 3)
    report = report.model_copy(update=update)
    _emit(report)
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
