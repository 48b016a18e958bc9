import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from app.chains.complexes import AugmentedComplex, ChainComplex
from app.chains.groups import PresentedGroup
from app.core.errors import InvalidComplexError
from app.dto.Violation import Violation
from app.exactla import IntMatrix, image_basis, kernel_basis, solve_matrix
from app.normalize.builders import CubicalInput, as_pseudocubical_object, cubical_boundary
from app.normalize.objects import PseudocubicalObject
from app.normalize.sigma import normalized_sigma
from app.shapes.pseudocubical import FinPseudocubicalSet, nondegenerate_count


@dataclass(frozen=True)
class KernelForm:
    """N_n = ∩_i Ker ∂_i^1 with ∂ = Σ (-1)^{i+1} ∂_i^0; bases[n] spans the preimage lattice in X_n."""
    complex: ChainComplex
    bases: Tuple[IntMatrix, ...]
    source: PseudocubicalObject

    def augmented(self) -> AugmentedComplex:
        if not self.source.is_augmented:
            raise InvalidComplexError("the object carries no augmentation")
        return AugmentedComplex(self.complex, self.source.target, self.source.augmentation @ self.bases[0])


def kernel_lattice(obj: PseudocubicalObject, n: int) -> IntMatrix:
    """Basis of {x : ∂_i^1 x ∈ relations for every i}; contains the relations of X_n."""
    g = obj.levels[n].generators
    if n == 0:
        return IntMatrix.identity(g)
    stacked = IntMatrix.vstack([obj.face(n, i, 1) for i in range(1, n + 1)], cols=g)
    relations = IntMatrix.block_diagonal([obj.levels[n - 1].relations] * n)
    kernel = kernel_basis(IntMatrix.hstack([stacked, relations]))
    return image_basis(kernel.select_rows(0, g))


def kernel_boundary(obj: PseudocubicalObject, n: int) -> IntMatrix:
    """Σ_{i=1..n} (-1)^{i+1} ∂_i^0 on all of X_n."""
    d = IntMatrix.zeros(obj.levels[n - 1].generators, obj.levels[n].generators)
    for i in range(1, n + 1):
        d = d + obj.face(n, i, 0) * (-1) ** (i + 1)
    return d


def kernel_form(x: CubicalInput) -> KernelForm:
    obj = as_pseudocubical_object(x)
    bases = [kernel_lattice(obj, n) for n in range(obj.truncation + 1)]
    terms: List[PresentedGroup] = []
    for n, basis in enumerate(bases):
        coords = solve_matrix(basis, obj.levels[n].relations)
        if coords is None:
            raise InvalidComplexError(f"the faces of level {n} do not respect the relations")
        terms.append(PresentedGroup(basis.cols, coords))
    boundaries = []
    for n in range(1, obj.truncation + 1):
        coords = solve_matrix(bases[n - 1], kernel_boundary(obj, n) @ bases[n])
        if coords is None:
            raise InvalidComplexError(f"Σ(-1)^(i+1) ∂_i^0 leaves the normalized part in degree {n}")
        boundaries.append(coords)
    logging.debug(f"[Normalize] kernel-form ranks of {obj.name or 'object'}: {[b.cols for b in bases]}")
    return KernelForm(ChainComplex(tuple(terms), tuple(boundaries)), tuple(bases), obj)


def normalized_kernel(x: CubicalInput) -> ChainComplex:
    """Kernel-form N(X); needs faces only, so precubical input is fine."""
    return kernel_form(x).complex


def _spans(basis: IntMatrix, relations: IntMatrix, m: IntMatrix) -> bool:
    return solve_matrix(IntMatrix.hstack([basis, relations]), m) is not None


def check_normalization_agreement(x: CubicalInput) -> Optional[Violation]:
    """
    Ker(1 - σ_n) and ∩ Ker ∂_i^1 are the same subgroup of X_n, and the
    boundary of C(X) agrees with Σ (-1)^{i+1} ∂_i^0 on it.
    """
    obj = as_pseudocubical_object(x)
    sigma_part = normalized_sigma(obj)
    kernel_part = kernel_form(obj)
    for n in range(obj.truncation + 1):
        relations = obj.levels[n].relations
        fixed = sigma_part.inclusion.components[n]
        basis = kernel_part.bases[n]
        if not _spans(basis, relations, fixed):
            return Violation(kind="normalization", degree=n, detail="Ker(1 - σ) is not inside ∩ Ker ∂_i^1")
        if not _spans(fixed, relations, basis):
            return Violation(kind="normalization", degree=n, detail="∩ Ker ∂_i^1 is not inside Ker(1 - σ)")
        if n >= 1:
            diff = (cubical_boundary(obj, n) - kernel_boundary(obj, n)) @ fixed
            if not obj.levels[n - 1].contains(diff):
                return Violation(kind="normalization", degree=n, detail="the two boundaries differ on N")
    return None


def degenerate_subcomplex_rank(x: FinPseudocubicalSet, n: int) -> int:
    """Number of cells of X_n hit by some degeneracy."""
    return x.count(n) - nondegenerate_count(x, n)
