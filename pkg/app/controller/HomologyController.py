import argparse
import logging
from typing import Any, Dict, Optional

from app.chains.complexes import AugmentedComplex, validate_complex
from app.dto.FgAbGroup import FgAbGroup
from app.dto.HomologyReport import HomologyReport
from app.dto.RunReport import RunReport
from app.services.HomologyService import THEORIES, HomologyService
from app.services.ModelService import ModelService


def register(subparsers) -> None:
    parser = subparsers.add_parser("homology", help="Homology of a builtin model, a JSON shape or a complex file")
    parser.add_argument("target", help="Builtin model name (e.g. torus-□), or path to a shape or complex file")
    parser.add_argument("--theory", choices=THEORIES, default=None,
                        help="K for Δ-shapes; C, N (kernel form) or N-sigma for □-shapes; "
                             "defaults to K, or N (C when the shape has no degeneracies)")
    parser.add_argument("--coeff", default=None, help="Coefficient group, e.g. Z/2 or Z+Z/3")
    parser.add_argument("--truncation", type=int, default=None, help="Truncation D of builtin models")
    parser.set_defaults(handler=handle)


def _report(report: HomologyReport, verdicts: Dict[str, bool], details: Dict[str, Any]) -> RunReport:
    return RunReport(command=[], H=report.H, certified_through=report.certified_through,
                     top_upper_bound=report.top_upper_bound, verdicts=verdicts, details=details,
                     passed=all(verdicts.values()))


def handle_complex(args: argparse.Namespace, coefficients: Optional[FgAbGroup]) -> RunReport:
    if args.theory is not None:
        raise ValueError("--theory only applies to shapes, not to complex files")
    built = ModelService.load_complex(args.target)
    violation = validate_complex(built)
    if violation is not None:
        logging.warning(f"[Homology] {args.target}: {violation.describe()}")
        return RunReport(command=[], violation=violation, passed=False)
    report, verdicts = HomologyService.complex_homology(built, coefficients)
    details = {"model": args.target, "kind": "complex", "augmented": isinstance(built, AugmentedComplex)}
    if coefficients is not None:
        details["coefficients"] = str(coefficients)
    return _report(report, verdicts, details)


def handle(args: argparse.Namespace) -> RunReport:
    coefficients = FgAbGroup.parse(args.coeff) if args.coeff else None
    if ModelService.is_complex_file(args.target):
        return handle_complex(args, coefficients)
    shape, augmented = ModelService.load_shape(args.target, args.truncation)
    theory = args.theory or HomologyService.default_theory(shape)
    report, verdicts = HomologyService.homology(shape, augmented, theory, coefficients)
    details = {"model": shape.name or args.target, "kind": shape.kind, "theory": theory,
               "truncation": shape.truncation}
    if coefficients is not None:
        details["coefficients"] = str(coefficients)
    return _report(report, verdicts, details)
