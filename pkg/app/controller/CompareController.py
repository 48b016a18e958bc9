import argparse

from app.dto.FgAbGroup import FgAbGroup
from app.dto.RunReport import RunReport
from app.services.HomologyService import HomologyService
from app.services.ModelService import ModelService


def register(subparsers) -> None:
    parser = subparsers.add_parser("compare", help="K-homology of a Δ-model against N-homology of a □-model")
    parser.add_argument("delta", help="Presimplicial model or shape file")
    parser.add_argument("cube", help="Pseudocubical model or shape file")
    parser.add_argument("--coeff", default=None, help="Coefficient group, e.g. Z/2")
    parser.add_argument("--truncation", type=int, default=None, help="Truncation D of builtin models")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> RunReport:
    coefficients = FgAbGroup.parse(args.coeff) if args.coeff else None
    delta, _ = ModelService.load_shape(args.delta, args.truncation)
    cube, _ = ModelService.load_shape(args.cube, args.truncation)
    left, right, verdicts = HomologyService.compare(delta, cube, coefficients)
    details = {
        "delta": {"model": delta.name or args.delta, "H": [g.model_dump(mode="json") for g in left.H]},
        "cube": {"model": cube.name or args.cube, "H": [g.model_dump(mode="json") for g in right.H]},
    }
    if coefficients is not None:
        details["coefficients"] = str(coefficients)
    through = min(left.certified_through, right.certified_through)
    return RunReport(command=[], H=left.H[:through + 1], certified_through=through, verdicts=verdicts,
                     details=details, passed=all(verdicts.values()))
