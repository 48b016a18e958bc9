import json
import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
import yaml
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from app.chains import homology, is_acyclic
from app.core.errors import CubixError, SpecParseError
from app.derive import FpModule, additivity_check, compare_theorem, karoubi_path_check
from app.dto.AcceptanceConfig import AcceptanceConfig, Mutation
from app.dto.ComparisonReport import ComparisonReport
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix, snf
from app.freecat import hom_complex, verify_normalization_naturality
from app.functors.concreteFunctors.FreeTensorFunctor import FreeTensorFunctor
from app.functors.concreteFunctors.TensorFunctor import TensorFunctor
from app.normalize import (check_normalization_agreement, degenerate_subcomplex_rank, kernel_form,
                           normalized_kernel, sigma_endomorphism, unnormalized_C, unnormalized_K)
from app.pydanticConfig.settings import settings
from app.services.HomologyService import HomologyService
from app.shapes import (MODEL_NAMES, builtin_model, cech_presimplicial, cech_pseudocubical, check_cubical_extension,
                        check_simplicial_extension, rewire_face, surjection_from_fibers, validate_augmented,
                        validate_shape)

HOMOLOGY_GOLDEN = "homology_table.json"
DERIVED_GOLDEN = "derived_table.json"


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


class SelftestService:
    """Runs the acceptance grid of app/inputconfig/config.yml criterion by criterion."""

    @staticmethod
    def load_config(path: Optional[str] = None) -> AcceptanceConfig:
        path = path or settings.ACCEPTANCE_CONFIG
        try:
            with open(path, "r", encoding="utf-8") as f:
                raw = yaml.safe_load(f)
            return AcceptanceConfig.model_validate(raw)
        except (OSError, yaml.YAMLError, ValidationError) as e:
            raise SpecParseError(f"cannot load acceptance grid {path}: {e}") from e

    @staticmethod
    def quick(config: AcceptanceConfig) -> AcceptanceConfig:
        """A reduced grid for smoke runs; goldens are not compared against it."""
        derived = config.derived.model_copy(update={
            "modules": config.derived.modules[:3],
            "degrees": [d for d in config.derived.degrees if d <= 1],
            "seeds": config.derived.seeds[:2],
            "karoubi_modules": config.derived.karoubi_modules[:1],
            "additivity_pairs": config.derived.additivity_pairs[:1],
        })
        contractibility = config.contractibility.model_copy(update={
            "fiber_sizes": [s for s in config.contractibility.fiber_sizes if sum(s) <= 3],
            "thorough_cubical_fibers": [],
            "hom_domain_sizes": [q for q in config.contractibility.hom_domain_sizes if q <= 2],
        })
        return config.model_copy(update={
            "smith": config.smith.model_copy(update={"samples": min(config.smith.samples, 100)}),
            "derived": derived,
            "contractibility": contractibility,
        })

    ###########################################################################
    # CRITERIA
    ###########################################################################
    @staticmethod
    def check_smith(config: AcceptanceConfig) -> Tuple[bool, str]:
        grid = config.smith
        rng = np.random.default_rng(grid.seed)
        failures = 0
        for _ in range(grid.samples):
            rows, cols = (int(v) for v in rng.integers(0, grid.max_dim + 1, size=2))
            entries = rng.integers(-grid.max_entry, grid.max_entry + 1, size=rows * cols)
            a = IntMatrix.from_entries(rows, cols, [int(v) for v in entries])
            if not snf(a).verify(a):
                failures += 1
                logging.error(f"[Selftest] Smith decomposition fails for {a.to_lists()}")
        return failures == 0, f"{grid.samples} random matrices, {failures} failures"

    @staticmethod
    def _mutation_source(source: str):
        if source.startswith(("cech-Δ:", "cech-□:")):
            kind, sizes = source.split(":", 1)
            f = surjection_from_fibers([int(s) for s in sizes.split(",")])
            build = cech_presimplicial if kind == "cech-Δ" else cech_pseudocubical
            return build(f, 2).shape
        return builtin_model(source)

    @staticmethod
    def _cech_depths(config: AcceptanceConfig, sizes: List[int], thorough: bool = False) -> Tuple[int, int]:
        grid = config.contractibility
        full = max(sizes) <= 2 or (thorough and sizes in grid.thorough_cubical_fibers)
        cubical = grid.cubical_through if full else grid.cubical_large_fiber_through
        return grid.simplicial_through, cubical

    @classmethod
    def check_identity_systems(cls, config: AcceptanceConfig) -> Tuple[bool, str]:
        problems = []
        for name in MODEL_NAMES:
            violation = validate_shape(builtin_model(name))
            if violation is not None:
                problems.append(f"{name}: {violation.describe()}")
        for sizes in config.contractibility.fiber_sizes:
            f = surjection_from_fibers(sizes)
            simplicial, cubical = cls._cech_depths(config, sizes)
            for a in (cech_presimplicial(f, simplicial + 1), cech_pseudocubical(f, cubical + 1)):
                violation = validate_augmented(a)
                if violation is not None:
                    problems.append(f"{a.shape.name}: {violation.describe()}")
        accepted = [m for m in config.mutations if cls._mutation_survives(m)]
        problems.extend(f"mutation of {m.source} at {m.cell} was accepted" for m in accepted)
        for p in problems:
            logging.error(f"[Selftest] {p}")
        return not problems, (f"{len(MODEL_NAMES)} models, {len(config.contractibility.fiber_sizes)} surjections, "
                              f"{len(config.mutations)} mutations; {len(problems)} problems")

    @classmethod
    def _mutation_survives(cls, m: Mutation) -> bool:
        mutated = rewire_face(cls._mutation_source(m.source), m.degree, m.cell, m.index, m.to)
        return validate_shape(mutated) is None

    @staticmethod
    def check_sigma(config: AcceptanceConfig) -> Tuple[bool, str]:
        failed = []
        for name in config.cubical_models:
            try:
                sigma = sigma_endomorphism(builtin_model(name))
            except CubixError as e:
                logging.error(f"[Selftest] σ of {name}: {e}")
                failed.append(name)
                continue
            if not sigma.components[0].is_identity():
                failed.append(name)
        return not failed, f"σ idempotent chain map with σ_0 = 1 on {len(config.cubical_models)} models" + (
            f"; failed: {', '.join(failed)}" if failed else "")

    @staticmethod
    def check_agreement(config: AcceptanceConfig) -> Tuple[bool, str]:
        failed = []
        for name in config.cubical_models:
            x = builtin_model(name)
            violation = check_normalization_agreement(x)
            ranks = kernel_form(x).complex.ranks()
            expected = [x.count(n) - degenerate_subcomplex_rank(x, n) for n in range(x.truncation + 1)]
            if violation is not None or ranks != expected:
                detail = violation.describe() if violation is not None else f"ranks {ranks} != {expected}"
                logging.error(f"[Selftest] normalization of {name}: {detail}")
                failed.append(name)
        return not failed, f"Ker(1 - σ) = ∩ Ker ∂_i^1 on {len(config.cubical_models)} models" + (
            f"; failed: {', '.join(failed)}" if failed else "")

    @staticmethod
    def check_unnormalized_witness(config: AcceptanceConfig) -> Tuple[bool, str]:
        x = builtin_model("point-□")
        c = unnormalized_C(x)
        n = normalized_kernel(x)
        unnormalized = [homology(c, k) for k in (1, 2)]
        normalized = [homology(n, k) for k in (1, 2)]
        ok = all(g == FgAbGroup.free(1) for g in unnormalized) and all(g.is_trivial() for g in normalized)
        return ok, (f"point-□: H_1,2(C) = {', '.join(map(str, unnormalized))}; "
                    f"H_1,2(N) = {', '.join(map(str, normalized))}")

    @classmethod
    def check_contractibility(cls, config: AcceptanceConfig, thorough: bool = False) -> Tuple[bool, str]:
        grid = config.contractibility
        failed = []
        hom_checks = 0
        deep = 0
        for sizes in grid.fiber_sizes:
            f = surjection_from_fibers(sizes)
            simplicial, cubical = cls._cech_depths(config, sizes, thorough)
            if max(sizes) > 2 and cubical == grid.cubical_through:
                deep += 1
            a = cech_presimplicial(f, simplicial + 1)
            if not (check_simplicial_extension(a, simplicial) and is_acyclic(unnormalized_K(a), simplicial)):
                failed.append(f"Δ{sizes}")
            x = cech_pseudocubical(f, cubical + 1)
            if not (check_cubical_extension(x, cubical) and is_acyclic(kernel_form(x).augmented(), cubical)):
                failed.append(f"□{sizes}")
            if sum(sizes) > grid.hom_max_domain:
                continue
            for q in grid.hom_domain_sizes:
                for build, tag in ((cech_presimplicial, "Δ"), (cech_pseudocubical, "□")):
                    hom_checks += 1
                    if not is_acyclic(hom_complex(q, build(f, grid.hom_through + 1)), grid.hom_through):
                        failed.append(f"Hom({q}, {tag}{sizes})")
        for name in failed:
            logging.error(f"[Selftest] not contractible: {name}")
        detail = (f"{len(grid.fiber_sizes)} surjections, {hom_checks} Hom checks "
                  f"(q <= {max(grid.hom_domain_sizes, default=0)}, |E| <= {grid.hom_max_domain})")
        if deep:
            detail += f", {deep} large fibers through {grid.cubical_through}"
        return not failed, detail + (f"; failed: {', '.join(failed)}" if failed else "")

    @staticmethod
    def check_naturality(config: AcceptanceConfig) -> Tuple[bool, str]:
        failed = []
        for name in config.cubical_models:
            x = builtin_model(name)
            for coefficients in config.naturality_coefficients:
                functor = FreeTensorFunctor(FgAbGroup.parse(coefficients))
                if not verify_normalization_naturality(functor, x):
                    failed.append(f"{functor.tag} on {name}")
        total = len(config.cubical_models) * len(config.naturality_coefficients)
        return not failed, f"F(N(X)) ≅ N(F(X)) for {total} pairs" + (
            f"; failed: {', '.join(failed)}" if failed else "")

    @staticmethod
    def homology_table(config: AcceptanceConfig) -> Tuple[Dict[str, Any], bool]:
        table: Dict[str, Any] = {}
        agree = True
        for pair in config.compare_pairs:
            left, right, verdicts = HomologyService.compare(builtin_model(pair.delta), builtin_model(pair.cube))
            agree = agree and all(verdicts.values())
            table[pair.name] = {
                "delta": pair.delta, "cube": pair.cube,
                "H_delta": [g.model_dump(mode="json") for g in left.H],
                "H_cube": [g.model_dump(mode="json") for g in right.H],
            }
        return table, agree

    @staticmethod
    def derived_reports(config: AcceptanceConfig) -> List[ComparisonReport]:
        grid = config.derived
        through = max(grid.degrees)
        return [compare_theorem(FpModule.parse(m), TensorFunctor(FgAbGroup.parse(a)), through, seeds=grid.seeds)
                for m in grid.modules for a in grid.coefficients]

    @staticmethod
    def derived_table(reports: List[ComparisonReport]) -> Dict[str, Dict[str, List[Any]]]:
        table: Dict[str, Dict[str, List[Any]]] = {}
        for report in reports:
            table.setdefault(report.module, {})[report.functor] = [
                row.oracle.model_dump(mode="json") for row in report.degrees]
        return table

    @staticmethod
    def check_karoubi_paths(config: AcceptanceConfig, reports: List[ComparisonReport]) -> Tuple[bool, str]:
        grid = config.derived
        em_failed = [f"{r.functor}({r.module})" for r in reports if not r.eilenberg_moore]
        karoubi_failed = []
        for m in grid.karoubi_modules:
            for a in grid.coefficients:
                for n in grid.degrees:
                    if not karoubi_path_check(FpModule.parse(m), FgAbGroup.parse(a), n, grid.seeds[0]):
                        karoubi_failed.append(f"tensor:{a}({m}) degree {n}")
        failed = em_failed + karoubi_failed
        detail = f"{len(reports)} Eilenberg-Moore paths, Karoubi path on {len(grid.karoubi_modules)} modules"
        return not failed, detail + (f"; failed: {', '.join(failed)}" if failed else "")

    @staticmethod
    def check_additivity(config: AcceptanceConfig) -> Tuple[bool, str]:
        grid = config.derived
        failed = []
        for first, second in grid.additivity_pairs:
            for a in grid.coefficients:
                functor = TensorFunctor(FgAbGroup.parse(a))
                for n in grid.degrees:
                    simplicial, cubical = additivity_check(FpModule.parse(first), FpModule.parse(second), functor, n)
                    if not (simplicial and cubical):
                        failed.append(f"{functor.tag}({first}+{second}) degree {n}")
        return not failed, f"{len(grid.additivity_pairs)} pairs" + (f"; failed: {', '.join(failed)}" if failed else "")

    ###########################################################################
    # GOLDEN FILES
    ###########################################################################
    @staticmethod
    def _golden_matches(golden_dir: Path, filename: str, computed: Dict[str, Any]) -> Optional[bool]:
        path = golden_dir / filename
        if not path.exists():
            logging.warning(f"[Selftest] no golden file {path}; run selftest --emit-golden")
            return None
        with open(path, "r", encoding="utf-8") as f:
            stored = json.load(f)
        if stored != computed:
            logging.error(f"[Selftest] {path} differs from the computed table")
        return stored == computed

    @staticmethod
    def write_golden(golden_dir: Path, filename: str, table: Dict[str, Any]) -> None:
        golden_dir.mkdir(parents=True, exist_ok=True)
        with open(golden_dir / filename, "w", encoding="utf-8") as f:
            f.write(json.dumps(table, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        logging.info(f"[Selftest] wrote {golden_dir / filename}")

    ###########################################################################
    # DRIVER
    ###########################################################################
    @classmethod
    def run(cls, config: AcceptanceConfig, emit_golden: bool = False, quick: bool = False,
            golden_dir: Optional[str] = None, thorough: bool = False) -> List[CriterionResult]:
        """thorough also runs the large-fiber cubical cases that quick and default runs stop early on."""
        if emit_golden and quick:
            raise ValueError("--emit-golden needs the full grid, drop --quick")
        if quick:
            config = cls.quick(config)
        golden = Path(golden_dir or settings.GOLDEN_DIR)
        results: List[CriterionResult] = []

        def timed(name: str, check: Callable[[], Tuple[bool, str]]) -> None:
            start = time.perf_counter()
            try:
                passed, detail = check()
            except CubixError as e:
                logging.error(f"[Selftest] {name} raised {type(e).__name__}: {e}")
                passed, detail = False, f"{type(e).__name__}: {e}"
            results.append(CriterionResult(name, passed, detail, time.perf_counter() - start))
            logging.info(f"[Selftest] {name}: {'pass' if passed else 'FAIL'} ({detail})")

        timed("smith", lambda: cls.check_smith(config))
        timed("identity-systems", lambda: cls.check_identity_systems(config))
        timed("sigma", lambda: cls.check_sigma(config))
        timed("normalization-agreement", lambda: cls.check_agreement(config))
        timed("unnormalized-witness", lambda: cls.check_unnormalized_witness(config))
        timed("contractibility", lambda: cls.check_contractibility(config, thorough))
        timed("naturality", lambda: cls.check_naturality(config))

        def homology_check() -> Tuple[bool, str]:
            table, agree = cls.homology_table(config)
            return cls._with_golden(golden, HOMOLOGY_GOLDEN, table, agree, emit_golden, quick,
                                    f"Δ = □ on {len(table)} model pairs")
        timed("homology-table", homology_check)

        reports: List[ComparisonReport] = []

        def derived_check() -> Tuple[bool, str]:
            reports.extend(cls.derived_reports(config))
            agree = all(row.agree for r in reports for row in r.degrees)
            return cls._with_golden(golden, DERIVED_GOLDEN, cls.derived_table(reports), agree, emit_golden, quick,
                                    f"L^Δ = L^□ = Tor on {len(reports)} module/functor pairs")
        timed("derived-grid", derived_check)
        timed("eilenberg-moore-karoubi", lambda: cls.check_karoubi_paths(config, reports))

        def independence_check() -> Tuple[bool, str]:
            varying = [f"{r.functor}({r.module}) degree {row.degree}" for r in reports for row in r.degrees
                       if len(set(row.simplicial)) > 1 or len(set(row.cubical)) > 1]
            return not varying and bool(reports), f"{len(config.derived.seeds)} seeds" + (
                f"; seed-dependent: {', '.join(varying)}" if varying else "")
        timed("resolution-independence", independence_check)
        timed("additivity", lambda: cls.check_additivity(config))
        return results

    @classmethod
    def _with_golden(cls, golden: Path, filename: str, table: Dict[str, Any], agree: bool, emit: bool,
                     quick: bool, detail: str) -> Tuple[bool, str]:
        if emit:
            cls.write_golden(golden, filename, table)
            return agree, f"{detail}; golden written"
        if quick:
            return agree, f"{detail}; golden not compared in quick mode"
        matches = cls._golden_matches(golden, filename, table)
        if matches is None:
            return agree, f"{detail}; no golden file"
        return agree and matches, f"{detail}; golden {'matches' if matches else 'DIFFERS'}"

    @staticmethod
    def render(results: List[CriterionResult]) -> None:
        table = Table(title="cubix selftest")
        table.add_column("Criterion")
        table.add_column("Result")
        table.add_column("Detail")
        table.add_column("Seconds", justify="right")
        for r in results:
            table.add_row(r.name, "[green]pass[/green]" if r.passed else "[red]FAIL[/red]", escape(r.detail),
                          f"{r.seconds:.2f}")
        Console(stderr=True).print(table)
