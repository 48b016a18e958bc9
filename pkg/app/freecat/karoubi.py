from dataclasses import dataclass
from typing import TYPE_CHECKING

from app.chains.splitting import Summand, split_presented_idempotent
from app.core.errors import NotIdempotentError
from app.exactla import IntMatrix
from app.freecat.formal import FinSet, FormalMorphism, formal_compose

if TYPE_CHECKING:
    from app.functors.BaseFunctor import BaseFunctor


@dataclass(frozen=True)
class KaroubiObject:
    """An object of the idempotent completion: a finite set with a formal idempotent on it."""
    base: FinSet
    idem: FormalMorphism

    def __post_init__(self):
        if self.idem.source != self.base or self.idem.target != self.base:
            raise NotIdempotentError("the idempotent must be an endomorphism of the base set")
        if formal_compose(self.idem, self.idem) != self.idem:
            raise NotIdempotentError("idem ∘ idem differs from idem in the formal algebra")


def extend_additive(functor: "BaseFunctor", m: FormalMorphism) -> IntMatrix:
    """F_ad(Σ c f) = Σ c F(f), entries reduced in the target where its presentation allows."""
    return functor.on_object(m.target).reduce(functor.additive_lift(m))


def extend_to_karoubi(functor: "BaseFunctor", k: KaroubiObject) -> Summand:
    """The summand of F(base) cut out by F_ad(idem), split along Ker(1 - F_ad(idem))."""
    return split_presented_idempotent(functor.on_object(k.base), functor.additive_lift(k.idem), basis="kernel")
