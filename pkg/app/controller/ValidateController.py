import argparse
import logging

from app.dto.RunReport import RunReport
from app.services.ModelService import ModelService


def register(subparsers) -> None:
    parser = subparsers.add_parser("validate", help="Check the identities of a JSON shape or complex file")
    parser.add_argument("file", help="Shape (kind presimplicial/pseudocubical) or complex (kind complex) JSON")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> RunReport:
    """Exit 0 when every identity holds; the first violation is reported otherwise."""
    violation = ModelService.validate_file(args.file)
    if violation is not None:
        logging.warning(f"[Validate] {args.file}: {violation.describe()}")
    return RunReport(command=[], verdicts={"valid": violation is None}, violation=violation,
                     passed=violation is None)
