import argparse

from app.dto.RunReport import RunReport
from app.services.DerivedFunctorService import METHODS, DerivedFunctorService


def register(subparsers) -> None:
    parser = subparsers.add_parser("derived", help="Derived functors L_n F(m) through a given degree")
    parser.add_argument("group", help="Module, e.g. Z, Z/6 or Z+Z/2")
    parser.add_argument("functor", help="Functor tag: id or tensor:<group>")
    parser.add_argument("--degree", type=int, required=True, help="Highest degree n")
    parser.add_argument("--method", choices=METHODS, default="both")
    parser.add_argument("--seed", type=int, default=None,
                        help="Resolution seed; 'both' runs every DEFAULT_SEEDS entry when omitted")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> RunReport:
    values, verdicts, details = DerivedFunctorService.run(args.group, args.functor, args.degree, args.method,
                                                          args.seed)
    return RunReport(command=[], H=values, certified_through=args.degree, verdicts=verdicts, details=details,
                     passed=all(verdicts.values()))
