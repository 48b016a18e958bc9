from typing import Optional, TypeVar, Union

from app.chains.complexes import AugmentedComplex, ChainComplex
from app.chains.groups import PresentedGroup
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix
from app.normalize.objects import PresimplicialObject, PseudocubicalObject

Obj = TypeVar("Obj", PresimplicialObject, PseudocubicalObject)


class TensorFunctor:
    """
    The additive endofunctor - ⊗ A of finitely presented abelian groups; A = None
    is the identity functor. Generator (i, k) of G ⊗ A sits at i * gens(A) + k.
    """

    def __init__(self, coefficients: Optional[FgAbGroup] = None):
        self.coefficients = coefficients
        self._presented = PresentedGroup.from_fg(coefficients) if coefficients is not None else None

    @property
    def tag(self) -> str:
        return "id" if self.coefficients is None else f"tensor:{self.coefficients}"

    @property
    def is_identity(self) -> bool:
        return self.coefficients is None

    def on_group(self, g: PresentedGroup) -> PresentedGroup:
        return g if self._presented is None else g.tensor(self._presented)

    def on_matrix(self, m: IntMatrix, source: PresentedGroup = None, target: PresentedGroup = None) -> IntMatrix:
        return m if self._presented is None else m.kron(IntMatrix.identity(self._presented.generators))

    def apply(self, obj: Obj) -> Obj:
        """F applied levelwise to a presimplicial or pseudocubical object."""
        if self.is_identity:
            return obj
        return obj.map_levels(self.on_group, self.on_matrix)

    def apply_complex(self, c: Union[ChainComplex, AugmentedComplex]) -> Union[ChainComplex, AugmentedComplex]:
        return c if self.is_identity else c.tensor(self._presented)

    def __repr__(self) -> str:
        return f"TensorFunctor({self.tag})"
