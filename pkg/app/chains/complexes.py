import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from app.chains.groups import PresentedGroup
from app.core.errors import DegreeOutOfRangeError, DimensionMismatchError, InvalidComplexError
from app.dto.FgAbGroup import FgAbGroup
from app.dto.HomologyReport import HomologyReport
from app.dto.Violation import Violation
from app.exactla import IntMatrix, cokernel_invariants, image_basis, kernel_basis, solve_matrix


@dataclass(frozen=True)
class ChainComplex:
    """
    C_0 <- C_1 <- ... <- C_D with boundaries[n - 1] = ∂_n : C_n -> C_{n-1}.

    The complex is truncated at its top degree D; homology in degree D is only
    an upper bound unless the complex really stops there.
    """
    terms: Tuple[PresentedGroup, ...]
    boundaries: Tuple[IntMatrix, ...]

    def __post_init__(self):
        if not self.terms:
            raise DimensionMismatchError("a chain complex needs at least the degree-0 term")
        if len(self.boundaries) != len(self.terms) - 1:
            raise DimensionMismatchError(
                f"{len(self.terms)} terms need {len(self.terms) - 1} boundaries, got {len(self.boundaries)}")
        for n, d in enumerate(self.boundaries, start=1):
            expected = (self.terms[n - 1].generators, self.terms[n].generators)
            if d.shape != expected:
                raise DimensionMismatchError(f"∂_{n} has shape {d.shape}, expected {expected}")

    @classmethod
    def free(cls, ranks: Sequence[int], boundaries: Sequence[IntMatrix]) -> "ChainComplex":
        return cls(tuple(PresentedGroup.free(r) for r in ranks), tuple(boundaries))

    @property
    def top(self) -> int:
        return len(self.terms) - 1

    @property
    def certified_through(self) -> int:
        return self.top - 1

    def ranks(self) -> List[int]:
        return [t.generators for t in self.terms]

    def is_free(self) -> bool:
        return all(t.is_free for t in self.terms)

    def boundary(self, n: int) -> IntMatrix:
        """∂_n, padded with zero maps below degree 1 and above the top degree."""
        if n == 0:
            return IntMatrix.zeros(0, self.terms[0].generators)
        if n == self.top + 1:
            return IntMatrix.zeros(self.terms[self.top].generators, 0)
        if not 1 <= n <= self.top:
            raise DegreeOutOfRangeError(f"no boundary ∂_{n} in a complex of top degree {self.top}")
        return self.boundaries[n - 1]

    def relations(self, n: int) -> IntMatrix:
        if n < 0:
            return IntMatrix.zeros(0, 0)
        return self.terms[n].relations

    def tensor(self, coefficients: Union[FgAbGroup, PresentedGroup]) -> "ChainComplex":
        """Apply - ⊗ A termwise; boundaries become ∂ ⊗ id_A."""
        if isinstance(coefficients, FgAbGroup):
            coefficients = PresentedGroup.from_fg(coefficients)
        eye = IntMatrix.identity(coefficients.generators)
        return ChainComplex(tuple(t.tensor(coefficients) for t in self.terms),
                            tuple(d.kron(eye) for d in self.boundaries))

    def truncate(self, top: int) -> "ChainComplex":
        return ChainComplex(self.terms[:top + 1], self.boundaries[:top])


@dataclass(frozen=True)
class AugmentedComplex:
    """A chain complex with ε = ∂_0 : C_0 -> target."""
    complex: ChainComplex
    target: PresentedGroup
    augmentation: IntMatrix

    def __post_init__(self):
        expected = (self.target.generators, self.complex.terms[0].generators)
        if self.augmentation.shape != expected:
            raise DimensionMismatchError(f"augmentation has shape {self.augmentation.shape}, expected {expected}")

    def as_complex(self) -> ChainComplex:
        """The augmented complex shifted up one degree, target in degree 0."""
        return ChainComplex((self.target,) + self.complex.terms,
                            (self.augmentation,) + self.complex.boundaries)

    def tensor(self, coefficients: Union[FgAbGroup, PresentedGroup]) -> "AugmentedComplex":
        if isinstance(coefficients, FgAbGroup):
            coefficients = PresentedGroup.from_fg(coefficients)
        eye = IntMatrix.identity(coefficients.generators)
        return AugmentedComplex(self.complex.tensor(coefficients), self.target.tensor(coefficients),
                                self.augmentation.kron(eye))


###############################################################################
# VALIDATION
###############################################################################
def _check_plain(c: ChainComplex, offset: int = 0) -> Optional[Violation]:
    """offset 1 reads c as a shifted augmented complex; failures touching ε are reported as 'augmentation'."""
    for n in range(1, c.top + 1):
        d = c.boundary(n)
        degree = n - offset
        if not c.terms[n].is_morphism(d, c.terms[n - 1]):
            return Violation(kind="augmentation" if offset and degree == 0 else "ill-defined-boundary",
                             degree=degree, detail=f"∂_{degree} does not send relations to relations")
        if n >= 2 and not c.terms[n - 2].contains(c.boundary(n - 1) @ d):
            return Violation(kind="augmentation" if offset and degree == 1 else "boundary-squared",
                             degree=degree, detail=f"∂_{degree - 1} ∂_{degree} is not zero modulo relations")
    return None


def validate_complex(c: Union[ChainComplex, AugmentedComplex]) -> Optional[Violation]:
    """First degree where ∂∂ ≠ 0 (or a boundary ignores relations); None when the complex is valid."""
    if isinstance(c, AugmentedComplex):
        return _check_plain(c.as_complex(), offset=1)
    return _check_plain(c)


###############################################################################
# HOMOLOGY
###############################################################################
def cycle_basis(c: ChainComplex, n: int) -> IntMatrix:
    """Basis of {x in Z^{g_n} : ∂_n x lies in the relation lattice of C_{n-1}}."""
    g = c.terms[n].generators
    if n == 0:
        return IntMatrix.identity(g)
    stacked = IntMatrix.hstack([c.boundary(n), c.relations(n - 1)])
    kernel = kernel_basis(stacked)
    return image_basis(kernel.select_rows(0, g))


def boundary_lattice(c: ChainComplex, n: int) -> IntMatrix:
    """Generators of im ∂_{n+1} + relations of C_n."""
    return IntMatrix.hstack([c.boundary(n + 1), c.relations(n)])


def homology(c: ChainComplex, n: int) -> FgAbGroup:
    """ker ∂_n / (im ∂_{n+1} + relations), with the relations of C_{n-1} stacked onto ∂_n."""
    if not 0 <= n <= c.top:
        raise DegreeOutOfRangeError(f"degree {n} outside 0..{c.top}")
    cycles = cycle_basis(c, n)
    coords = solve_matrix(cycles, boundary_lattice(c, n))
    if coords is None:
        raise InvalidComplexError(f"image of ∂_{n + 1} is not contained in the cycles of degree {n}")
    return cokernel_invariants(coords)


def homology_report(c: ChainComplex) -> HomologyReport:
    groups = [homology(c, n) for n in range(c.top + 1)]
    logging.info(f"[Chains] homology ranks {[g.rank for g in groups]} (top degree {c.top} uncertified)")
    return HomologyReport(H=groups[:c.top], certified_through=c.certified_through,
                          top_upper_bound=groups[c.top])


def is_acyclic(c: AugmentedComplex, through: int) -> bool:
    """
    True iff ... -> C_1 -> C_0 -> target -> 0 is exact in degrees -1..through.

    Degrees at the top of a truncated complex only mean something when the
    complex genuinely stops there; callers pass through <= top - 1 otherwise.
    """
    if through > c.complex.top:
        raise DegreeOutOfRangeError(f"acyclicity through {through} needs a complex of top degree >= {through}")
    shifted = c.as_complex()
    return all(homology(shifted, k).is_trivial() for k in range(through + 2))
