from typing import Sequence

from app.chains.groups import PresentedGroup
from app.exactla import IntMatrix
from app.freecat.formal import FinSet
from app.functors.BaseFunctor import BaseFunctor
from app.normalize.objects import table_matrix


class FreeFunctor(BaseFunctor):
    """ℤ[-]: a finite set goes to the free abelian group on it."""
    tag = "free"

    def on_object(self, s: FinSet) -> PresentedGroup:
        return PresentedGroup.free(len(s))

    def on_map(self, source: FinSet, target: FinSet, images: Sequence[int]) -> IntMatrix:
        return table_matrix(images, len(target))
