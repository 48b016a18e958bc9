from typing import Sequence

from app.chains.groups import PresentedGroup
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix
from app.freecat.formal import FinSet
from app.functors.concreteFunctors.FreeFunctor import FreeFunctor
from app.functors.concreteFunctors.TensorFunctor import TensorFunctor


class FreeTensorFunctor(FreeFunctor):
    """ℤ[-] ⊗ A, the free functor followed by a coefficient change."""

    def __init__(self, coefficients: FgAbGroup, tag: str = None):
        self.coefficients = coefficients
        self._tensor = TensorFunctor(coefficients)
        self.tag = tag or f"free-tensor:{coefficients}"

    def on_object(self, s: FinSet) -> PresentedGroup:
        return self._tensor.on_group(super().on_object(s))

    def on_map(self, source: FinSet, target: FinSet, images: Sequence[int]) -> IntMatrix:
        return self._tensor.on_matrix(super().on_map(source, target, images))
