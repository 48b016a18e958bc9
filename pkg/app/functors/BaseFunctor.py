from itertools import product
from typing import Optional, Sequence, Union

from app.chains.groups import PresentedGroup
from app.dto.Violation import Violation
from app.exactla import IntMatrix
from app.freecat.formal import FinSet, FormalMorphism, compose_maps, identity_map
from app.normalize.objects import PresimplicialObject, PseudocubicalObject
from app.shapes.augmented import AugmentedShape
from app.shapes.presimplicial import FinPresimplicialSet
from app.shapes.pseudocubical import FinPseudocubicalSet


class BaseFunctor:
    """
    Abstract base class for covariant functors from finite sets to finitely
    presented abelian groups.
    """
    tag: str = "abstract"

    def on_object(self, s: FinSet) -> PresentedGroup:
        raise NotImplementedError("Each functor must implement on_object.")

    def on_map(self, source: FinSet, target: FinSet, images: Sequence[int]) -> IntMatrix:
        raise NotImplementedError("Each functor must implement on_map.")

    # -- additive extension ---------------------------------------------------
    def additive_lift(self, m: FormalMorphism) -> IntMatrix:
        """Σ c F(f) as an integer matrix, without reducing entries."""
        total = IntMatrix.zeros(self.on_object(m.target).generators, self.on_object(m.source).generators)
        for f, c in m.terms:
            total = total + self.on_map(m.source, m.target, f) * c
        return total

    # -- shapes ---------------------------------------------------------------
    def on_shape(self, shape: Union[FinPresimplicialSet, FinPseudocubicalSet, AugmentedShape]
                 ) -> Union[PresimplicialObject, PseudocubicalObject]:
        """Apply the functor cellwise; degeneracies and augmentation come along."""
        augmented = shape if isinstance(shape, AugmentedShape) else None
        x = augmented.shape if augmented else shape
        levels = tuple(self.on_object(level) for level in x.cells)
        target = aug = None
        if augmented is not None:
            target = self.on_object(augmented.target)
            aug = self.on_map(x.cells[0], augmented.target, augmented.augmentation)
        if isinstance(x, FinPresimplicialSet):
            faces = [()] + [tuple(self.on_map(x.cells[n], x.cells[n - 1], x.face(n, i)) for i in range(n + 1))
                            for n in range(1, x.truncation + 1)]
            return PresimplicialObject(levels, tuple(faces), target, aug, name=x.name)
        faces = [()] + [tuple((self.on_map(x.cells[n], x.cells[n - 1], x.face(n, i, 0)),
                               self.on_map(x.cells[n], x.cells[n - 1], x.face(n, i, 1)))
                              for i in range(1, n + 1)) for n in range(1, x.truncation + 1)]
        degens = None
        if x.has_degeneracies:
            degens = tuple([()] + [tuple(self.on_map(x.cells[n - 1], x.cells[n], x.degeneracy(n, j))
                                         for j in range(1, n + 1)) for n in range(1, x.truncation + 1)])
        return PseudocubicalObject(levels, tuple(faces), degens, target, aug, name=x.name)

    # -- functoriality ----------------------------------------------------------
    def check_functoriality(self, sets: Sequence[FinSet]) -> Optional[Violation]:
        """Identities and composites over every map between the given (small) sets."""
        for s in sets:
            image = self.on_map(s, s, identity_map(len(s)))
            if not self.on_object(s).contains(image - IntMatrix.identity(image.rows)):
                return Violation(kind="functoriality", detail=f"F(id) ≠ id on a {len(s)}-element set")
        for a in sets:
            for b in sets:
                for c in sets:
                    target = self.on_object(c)
                    for f in product(range(len(b)), repeat=len(a)):
                        ff = self.on_map(a, b, f)
                        for g in product(range(len(c)), repeat=len(b)):
                            lhs = self.on_map(a, c, compose_maps(g, f))
                            if not target.contains(lhs - self.on_map(b, c, g) @ ff):
                                return Violation(kind="functoriality",
                                                 detail=f"F(g∘f) ≠ F(g)F(f) for f={list(f)}, g={list(g)}")
        return None

    def get_params(self):
        return {k: v for k, v in self.__dict__.items() if not k.startswith('_')}
