import argparse

from app.dto.RunReport import RunReport
from app.services.SelftestService import SelftestService


def register(subparsers) -> None:
    parser = subparsers.add_parser("selftest", help="Run the full acceptance suite")
    parser.add_argument("--emit-golden", action="store_true", help="Rewrite the golden tables")
    parser.add_argument("--quick", action="store_true", help="Reduced grid, no golden comparison")
    parser.add_argument("--thorough", action="store_true",
                        help="Also check large cubical Čech fibers through the full depth (slow)")
    parser.add_argument("--config", default=None, help="Acceptance grid YAML (defaults to ACCEPTANCE_CONFIG)")
    parser.add_argument("--golden-dir", default=None, help="Golden table directory (defaults to GOLDEN_DIR)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> RunReport:
    config = SelftestService.load_config(args.config)
    results = SelftestService.run(config, emit_golden=args.emit_golden, quick=args.quick,
                                  golden_dir=args.golden_dir, thorough=args.thorough)
    SelftestService.render(results)
    return RunReport(command=[], verdicts={r.name: r.passed for r in results},
                     details={r.name: r.detail for r in results}, passed=all(r.passed for r in results))
