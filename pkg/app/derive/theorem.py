import logging
from typing import Optional, Sequence

from app.derive.derived import derived_cubical, derived_simplicial, eilenberg_moore_check
from app.derive.modules import FpModule
from app.derive.oracle import tor_oracle
from app.dto.ComparisonReport import ComparisonReport, DegreeComparison
from app.dto.FgAbGroup import FgAbGroup
from app.functors.concreteFunctors.TensorFunctor import TensorFunctor
from app.pydanticConfig.settings import settings


def _oracle(m: FpModule, functor: TensorFunctor, n: int) -> FgAbGroup:
    # the identity functor is - ⊗ ℤ
    a = FgAbGroup.free(1) if functor.coefficients is None else functor.coefficients
    return tor_oracle(m, a, n)


def compare_theorem(m: FpModule, functor: TensorFunctor, through: int,
                    seeds: Optional[Sequence[int]] = None, depth: Optional[int] = None) -> ComparisonReport:
    """
    Simplicial, cubical and (for ⊗A) classical values of L_n F(m) for
    n <= through and every seed. Mismatches are reported, never raised.
    """
    seeds = list(settings.DEFAULT_SEEDS if seeds is None else seeds)
    depth = through + 1 if depth is None else depth
    rows = []
    for n in range(through + 1):
        simplicial = [derived_simplicial(m, functor, n, seed, depth=depth) for seed in seeds]
        cubical = [derived_cubical(m, functor, n, seed, depth=depth) for seed in seeds]
        oracle = _oracle(m, functor, n)
        values = simplicial + cubical + [oracle]
        agree = all(v == values[0] for v in values)
        if not agree:
            logging.warning(f"[Derive] degree {n} of {functor.tag}({m}) disagrees: "
                            f"{[str(v) for v in values]}")
        rows.append(DegreeComparison(degree=n, simplicial=simplicial, cubical=cubical, oracle=oracle, agree=agree))
    em = all(eilenberg_moore_check(m, functor.coefficients, depth, seed) for seed in seeds)
    verdict = em and all(row.agree for row in rows)
    logging.info(f"[Derive] comparison for {functor.tag}({m}) through {through}: "
                 f"{'agree' if verdict else 'MISMATCH'}")
    return ComparisonReport(module=str(m), functor=functor.tag, through=through, seeds=seeds,
                            degrees=rows, eilenberg_moore=em, verdict=verdict)
