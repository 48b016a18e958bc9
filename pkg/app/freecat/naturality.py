import logging
from typing import TYPE_CHECKING, List, Optional

from app.chains.complexes import ChainComplex, homology
from app.chains.groups import PresentedGroup
from app.chains.splitting import Summand
from app.core.errors import MissingDegeneraciesError
from app.dto.Violation import Violation
from app.exactla import IntMatrix
from app.freecat.formal import FormalMorphism, formal_compose
from app.freecat.karoubi import KaroubiObject, extend_to_karoubi
from app.normalize.builders import plain_C
from app.normalize.sigma import NormalizedComplex, sigma_endomorphism, split_chain_idempotent
from app.shapes.pseudocubical import FinPseudocubicalSet, validate_pseudocubical

if TYPE_CHECKING:
    from app.functors.BaseFunctor import BaseFunctor


def formal_sigma(x: FinPseudocubicalSet, n: int) -> FormalMorphism:
    """σ_n = (1 - s_1 ∂_1^1) ... (1 - s_n ∂_n^1) in the free preadditive category."""
    cells = x.cells[n]
    one = FormalMorphism.identity(cells)
    sigma = one
    for i in range(1, n + 1):
        through_face = FormalMorphism.of(cells, cells, [x.degeneracy(n, i)[f] for f in x.face(n, i, 1)])
        sigma = formal_compose(sigma, one - through_face)
    return sigma


def formal_boundary(x: FinPseudocubicalSet, n: int) -> FormalMorphism:
    """Σ (-1)^i (∂_i^1 - ∂_i^0) : X_n -> X_{n-1}, as a formal combination of face maps."""
    terms = []
    for i in range(1, n + 1):
        sign = (-1) ** i
        terms.append((x.face(n, i, 1), sign))
        terms.append((x.face(n, i, 0), -sign))
    return FormalMorphism.combination(x.cells[n], x.cells[n - 1], terms)


def karoubi_normalization(functor: "BaseFunctor", x: FinPseudocubicalSet):
    """
    F̃ applied to N(X): each level is the Karoubi object (X_n, σ_n) sent to the
    summand of F(X_n), boundaries π F_ad(∂) i.
    """
    parts: List[Summand] = [extend_to_karoubi(functor, KaroubiObject(x.cells[n], formal_sigma(x, n)))
                            for n in range(x.truncation + 1)]
    boundaries = tuple(parts[n - 1].projection @ functor.additive_lift(formal_boundary(x, n)) @ parts[n].inclusion
                       for n in range(1, x.truncation + 1))
    return ChainComplex(tuple(p.group for p in parts), boundaries), parts


def _invertible_pair(phi: IntMatrix, psi: IntMatrix, source: PresentedGroup, target: PresentedGroup) -> bool:
    return (source.contains(psi @ phi - IntMatrix.identity(source.generators))
            and target.contains(phi @ psi - IntMatrix.identity(target.generators)))


def naturality_violation(functor: "BaseFunctor", x: FinPseudocubicalSet) -> Optional[Violation]:
    """
    Compare F(N(X)) built in the idempotent completion with N(F(X)) built by
    splitting σ^{F(X)} along the image basis. The comparison maps are
    φ = π' i and ψ = π i'; they must be mutually inverse chain maps and the
    homologies must agree below the top degree.
    """
    if not x.has_degeneracies:
        raise MissingDegeneraciesError(f"{x.name or 'shape'} carries no degeneracies")
    violation = validate_pseudocubical(x)
    if violation is not None:
        return violation
    fn, parts = karoubi_normalization(functor, x)
    fx = functor.on_shape(x)
    sigma = sigma_endomorphism(fx)
    c = plain_C(fx)
    for n, component in enumerate(sigma.components):
        lifted = functor.additive_lift(formal_sigma(x, n))
        if not fx.levels[n].contains(component - lifted):
            return Violation(kind="naturality", degree=n, detail="F_ad(σ^X) differs from σ^F(X)")
    nf: NormalizedComplex = split_chain_idempotent(c, sigma.as_chain_map(c), basis="image")

    phis, psis = [], []
    for n, part in enumerate(parts):
        phi = nf.projection.components[n] @ part.inclusion
        psi = part.projection @ nf.inclusion.components[n]
        if not _invertible_pair(phi, psi, fn.terms[n], nf.complex.terms[n]):
            return Violation(kind="naturality", degree=n, detail="π' i and π i' are not mutually inverse")
        phis.append(phi)
        psis.append(psi)
    for n in range(1, fn.top + 1):
        diff = phis[n - 1] @ fn.boundary(n) - nf.complex.boundary(n) @ phis[n]
        if not nf.complex.terms[n - 1].contains(diff):
            return Violation(kind="naturality", degree=n, detail="the comparison map does not commute with ∂")
    for n in range(fn.top):
        left, right = homology(fn, n), homology(nf.complex, n)
        if left != right:
            return Violation(kind="naturality", degree=n, detail=f"H_{n}: {left} vs {right}")
    return None


def verify_normalization_naturality(functor: "BaseFunctor", x: FinPseudocubicalSet) -> bool:
    violation = naturality_violation(functor, x)
    if violation is not None:
        logging.warning(f"[Freecat] naturality fails for {x.name} under {functor.tag}: {violation.describe()}")
    return violation is None
