from dataclasses import dataclass
from typing import Tuple

from app.chains.complexes import AugmentedComplex, ChainComplex, boundary_lattice, cycle_basis
from app.core.errors import DimensionMismatchError, NotChainMapError
from app.exactla import IntMatrix, solve_matrix


@dataclass(frozen=True)
class ChainMap:
    """f_n : C_n -> C'_n for n = 0 .. min(top, top')."""
    source: ChainComplex
    target: ChainComplex
    components: Tuple[IntMatrix, ...]

    def __post_init__(self):
        if len(self.components) != min(self.source.top, self.target.top) + 1:
            raise DimensionMismatchError(
                f"{len(self.components)} components for tops {self.source.top} / {self.target.top}")
        for n, f in enumerate(self.components):
            expected = (self.target.terms[n].generators, self.source.terms[n].generators)
            if f.shape != expected:
                raise DimensionMismatchError(f"f_{n} has shape {f.shape}, expected {expected}")

    @classmethod
    def identity(cls, c: ChainComplex) -> "ChainMap":
        return cls(c, c, tuple(IntMatrix.identity(g) for g in c.ranks()))

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex) -> "ChainMap":
        top = min(source.top, target.top)
        return cls(source, target, tuple(IntMatrix.zeros(target.terms[n].generators, source.terms[n].generators)
                                         for n in range(top + 1)))

    @property
    def top(self) -> int:
        return len(self.components) - 1

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(self.source, self.target,
                        tuple(a - b for a, b in zip(self.components, other.components)))

    def __add__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(self.source, self.target,
                        tuple(a + b for a, b in zip(self.components, other.components)))


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g ∘ f, truncated to the lowest common top degree."""
    top = min(f.top, g.top)
    source = f.source.truncate(top) if f.source.top > top else f.source
    target = g.target.truncate(top) if g.target.top > top else g.target
    return ChainMap(source, target, tuple(g.components[n] @ f.components[n] for n in range(top + 1)))


@dataclass(frozen=True)
class ChainHomotopy:
    """h_n : C_n -> C'_{n+1} for n = 0 .. top - 1, top = min(top, top')."""
    source: ChainComplex
    target: ChainComplex
    components: Tuple[IntMatrix, ...]

    def __post_init__(self):
        for n, h in enumerate(self.components):
            expected = (self.target.terms[n + 1].generators, self.source.terms[n].generators)
            if h.shape != expected:
                raise DimensionMismatchError(f"h_{n} has shape {h.shape}, expected {expected}")


def verify_chain_map(f: ChainMap) -> bool:
    """f_{n-1} ∂_n = ∂'_n f_n modulo relations, and every f_n respects relations."""
    for n in range(f.top + 1):
        if not f.source.terms[n].is_morphism(f.components[n], f.target.terms[n]):
            return False
        if n >= 1:
            diff = f.components[n - 1] @ f.source.boundary(n) - f.target.boundary(n) @ f.components[n]
            if not f.target.terms[n - 1].contains(diff):
                return False
    return True


def verify_homotopy(f: ChainMap, g: ChainMap, h: ChainHomotopy) -> bool:
    """f_n - g_n = ∂'_{n+1} h_n + h_{n-1} ∂_n modulo relations, below the common top degree."""
    if f.top != g.top:
        raise DimensionMismatchError(f"chain maps of different lengths {f.top} / {g.top}")
    if len(h.components) < f.top:
        raise DimensionMismatchError(f"homotopy has {len(h.components)} components, needs {f.top}")
    for n in range(f.top):
        rhs = f.target.boundary(n + 1) @ h.components[n]
        if n >= 1:
            rhs = rhs + h.components[n - 1] @ f.source.boundary(n)
        if not f.target.terms[n].contains(f.components[n] - g.components[n] - rhs):
            return False
    return True


def induces_equal_maps(f: ChainMap, g: ChainMap, n: int) -> bool:
    """H_n(f) = H_n(g): f_n - g_n sends every cycle into boundaries + relations."""
    diff = (f.components[n] - g.components[n]) @ cycle_basis(f.source, n)
    return solve_matrix(boundary_lattice(f.target, n), diff) is not None


###############################################################################
# LIFTS (comparison of resolutions, built degree by degree)
###############################################################################
def _lift(target_map: IntMatrix, relations: IntMatrix, rhs: IntMatrix, what: str) -> IntMatrix:
    sol = solve_matrix(IntMatrix.hstack([target_map, relations]), rhs)
    if sol is None:
        raise NotChainMapError(f"no lift for {what}: the target is not acyclic there")
    return sol.select_rows(0, target_map.cols)


def lift_chain_map(source: AugmentedComplex, target: AugmentedComplex, phi: IntMatrix) -> ChainMap:
    """
    Extend phi : source.target -> target.target to a chain map, assuming the
    source terms are free and the target augmented complex is acyclic.
    """
    top = min(source.complex.top, target.complex.top)
    s, t = source.complex, target.complex
    components = [_lift(target.augmentation, target.target.relations, phi @ source.augmentation, "f_0")]
    for n in range(1, top + 1):
        components.append(_lift(t.boundary(n), t.relations(n - 1), components[n - 1] @ s.boundary(n), f"f_{n}"))
    return ChainMap(s.truncate(top), t.truncate(top), tuple(components))


def construct_homotopy(f: ChainMap, g: ChainMap) -> ChainHomotopy:
    """h with f - g = ∂'h + h∂, for two lifts of the same map into an acyclic target."""
    hs = []
    for n in range(f.top):
        rhs = f.components[n] - g.components[n]
        if n >= 1:
            rhs = rhs - hs[n - 1] @ f.source.boundary(n)
        hs.append(_lift(f.target.boundary(n + 1), f.target.relations(n), rhs, f"h_{n}"))
    return ChainHomotopy(f.source, f.target, tuple(hs))
