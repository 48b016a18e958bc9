import logging
from typing import Any, Dict, List, Optional, Tuple

from app.derive import FpModule, compare_theorem, derived_cubical, derived_simplicial, tor_oracle
from app.dto.FgAbGroup import FgAbGroup
from app.services.FunctorService import FunctorService

METHODS = ("simplicial", "cubical", "oracle", "both")


class DerivedFunctorService:
    """Evaluate L_n F(m) for n = 0 .. degree by one method, or compare all of them."""

    @staticmethod
    def run(group: str, functor_tag: str, degree: int, method: str = "both",
            seed: Optional[int] = None) -> Tuple[List[FgAbGroup], Dict[str, bool], Dict[str, Any]]:
        """
        Returns (values per degree, verdicts, details). Values come from the
        chosen method; with method="both" they are the simplicial values of the
        first seed and the verdict says whether every method agreed.
        """
        if method not in METHODS:
            raise ValueError(f"unknown method '{method}', expected one of {', '.join(METHODS)}")
        if degree < 0:
            raise ValueError(f"degree must be non-negative, got {degree}")
        m = FpModule.parse(group)
        functor = FunctorService.get_endofunctor(functor_tag)
        details: Dict[str, Any] = {"module": str(m.canonical()), "functor": functor.tag, "method": method}
        verdicts: Dict[str, bool] = {}

        if method == "both":
            seeds = None if seed is None else [seed]
            report = compare_theorem(m, functor, degree, seeds=seeds)
            values = [row.simplicial[0] for row in report.degrees]
            verdicts = {"agree": all(row.agree for row in report.degrees),
                        "eilenberg_moore": report.eilenberg_moore}
            details["comparison"] = report.model_dump(mode="json")
            return values, verdicts, details

        seed = 0 if seed is None else seed
        if method != "oracle":
            details["seed"] = seed
        depth = degree + 2
        if method == "simplicial":
            values = [derived_simplicial(m, functor, n, seed, depth=depth) for n in range(degree + 1)]
        elif method == "cubical":
            values = [derived_cubical(m, functor, n, seed, depth=depth) for n in range(degree + 1)]
        else:
            a = FgAbGroup.free(1) if functor.coefficients is None else functor.coefficients
            values = [tor_oracle(m, a, n) for n in range(degree + 1)]
        logging.info(f"[DerivedFunctorService] {method} L_*{functor.tag}({m}) = {[str(v) for v in values]}")
        return values, verdicts, details
