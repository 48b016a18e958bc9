import logging
from typing import Dict, Optional, Tuple, Union

from app.chains.complexes import AugmentedComplex, ChainComplex, homology_report, is_acyclic
from app.dto.FgAbGroup import FgAbGroup
from app.dto.HomologyReport import HomologyReport
from app.normalize import kernel_form, normalized_sigma, unnormalized_C, unnormalized_K
from app.shapes import AugmentedShape, FinPresimplicialSet, Shape

THEORIES = ("K", "C", "N", "N-sigma")


class HomologyService:
    """Homology of shapes through K, C or one of the two normalized complexes."""

    @staticmethod
    def default_theory(shape: Shape) -> str:
        """K for Δ-shapes, N for □-shapes with degeneracies, C for precubical ones."""
        if isinstance(shape, FinPresimplicialSet):
            return "K"
        return "N" if shape.has_degeneracies else "C"

    @staticmethod
    def build_complex(shape: Union[Shape, AugmentedShape], theory: str) -> Union[ChainComplex, AugmentedComplex]:
        """
        K for presimplicial shapes; C, N (kernel form) or N-sigma for
        pseudocubical ones. Augmented input keeps its augmentation, except for
        N-sigma which only ever sees the plain complex.
        """
        simplicial = isinstance(shape, FinPresimplicialSet) or (
            isinstance(shape, AugmentedShape) and isinstance(shape.shape, FinPresimplicialSet))
        if theory not in THEORIES:
            raise ValueError(f"unknown theory '{theory}', expected one of {', '.join(THEORIES)}")
        if simplicial != (theory == "K"):
            kind = "presimplicial" if simplicial else "pseudocubical"
            raise ValueError(f"theory {theory} does not apply to a {kind} shape")
        if theory == "K":
            return unnormalized_K(shape)
        if theory == "C":
            return unnormalized_C(shape)
        if theory == "N":
            form = kernel_form(shape)
            return form.augmented() if isinstance(shape, AugmentedShape) else form.complex
        if isinstance(shape, AugmentedShape):
            shape = shape.shape
        return normalized_sigma(shape).complex

    @classmethod
    def homology(cls, shape: Shape, augmented: Optional[AugmentedShape] = None, theory: Optional[str] = None,
                 coefficients: Optional[FgAbGroup] = None) -> Tuple[HomologyReport, Dict[str, bool]]:
        """Homology report and, for augmented input, an acyclicity verdict below the top degree."""
        theory = theory or cls.default_theory(shape)
        built = cls.build_complex(augmented if augmented is not None else shape, theory)
        report, verdicts = cls.complex_homology(built, coefficients)
        logging.info(f"[HomologyService] {shape.name or shape.kind} via {theory}"
                     f"{f' with {coefficients}' if coefficients is not None else ''}: "
                     f"{[str(g) for g in report.H]}")
        return report, verdicts

    @staticmethod
    def complex_homology(built: Union[ChainComplex, AugmentedComplex], coefficients: Optional[FgAbGroup] = None
                         ) -> Tuple[HomologyReport, Dict[str, bool]]:
        if coefficients is not None:
            built = built.tensor(coefficients)
        complex_ = built.complex if isinstance(built, AugmentedComplex) else built
        report = homology_report(complex_)
        verdicts = {}
        if isinstance(built, AugmentedComplex) and complex_.top >= 1:
            verdicts["acyclic"] = is_acyclic(built, complex_.top - 1)
        return report, verdicts

    @classmethod
    def compare(cls, delta: Shape, cube: Shape, coefficients: Optional[FgAbGroup] = None
                ) -> Tuple[HomologyReport, HomologyReport, Dict[str, bool]]:
        """K on the Δ-model against kernel-form N on the □-model, degree by degree."""
        if not isinstance(delta, FinPresimplicialSet):
            raise ValueError(f"{delta.name or 'first model'} is not presimplicial")
        if isinstance(cube, FinPresimplicialSet):
            raise ValueError(f"{cube.name or 'second model'} is not pseudocubical")
        left, _ = cls.homology(delta, theory="K", coefficients=coefficients)
        right, _ = cls.homology(cube, theory="N", coefficients=coefficients)
        through = min(left.certified_through, right.certified_through)
        verdicts = {f"H{n}": left.H[n] == right.H[n] for n in range(through + 1)}
        if not all(verdicts.values()):
            logging.warning(f"[HomologyService] {delta.name} and {cube.name} disagree: "
                            f"{[str(g) for g in left.H]} vs {[str(g) for g in right.H]}")
        return left, right, verdicts
