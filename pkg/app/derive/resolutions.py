import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from app.chains.complexes import is_acyclic
from app.chains.groups import PresentedGroup
from app.core.errors import DegreeOutOfRangeError, ResolutionError
from app.derive.modules import FpModule
from app.dto.Violation import Violation
from app.exactla import IntMatrix, image_basis, kernel_basis, solve_matrix
from app.normalize.builders import unnormalized_K
from app.normalize.kernel_form import kernel_form
from app.normalize.objects import PresimplicialObject, PseudocubicalObject


@dataclass(frozen=True)
class PresimplicialResolution:
    module: FpModule
    object: PresimplicialObject
    seed: int

    @property
    def depth(self) -> int:
        return self.object.truncation

    def ranks(self) -> List[int]:
        return [g.generators for g in self.object.levels]


@dataclass(frozen=True)
class PseudocubicalResolution:
    module: FpModule
    object: PseudocubicalObject
    seed: int

    @property
    def depth(self) -> int:
        return self.object.truncation

    def ranks(self) -> List[int]:
        return [g.generators for g in self.object.levels]


###############################################################################
# SEEDED BASIS CHANGES
###############################################################################
def _reshuffle(basis: IntMatrix, rng: Optional[np.random.Generator]) -> IntMatrix:
    """Permute the basis columns and apply a few elementary column operations."""
    r = basis.cols
    if rng is None or r == 0:
        return basis
    u = IntMatrix.identity(r).array()
    u = u[:, rng.permutation(r)]
    if r >= 2:
        for _ in range(r):
            i, j = rng.choice(r, size=2, replace=False)
            u[:, j] = u[:, j] + int(rng.choice([-1, 1])) * u[:, i]
    return basis @ IntMatrix._wrap(u)


def _rng(seed: int) -> Optional[np.random.Generator]:
    return None if seed == 0 else np.random.default_rng(seed)


def _cover(module: FpModule, seed: int, rng) -> IntMatrix:
    """Augmentation of a free cover of the module, with seed % 2 redundant generators."""
    g = module.generators
    aug = _reshuffle(IntMatrix.identity(g), rng)
    if seed % 2:
        extra = aug.select_columns([0]) if g else IntMatrix.zeros(0, 1)
        aug = IntMatrix.hstack([aug, extra], rows=g)
    return aug


def _pullback_basis(module: FpModule, aug: IntMatrix) -> IntMatrix:
    """Basis of {(x, y) : aug x = aug y in the module}."""
    g0 = aug.cols
    relations = module.presentation.relations
    stacked = IntMatrix.hstack([aug, -aug, relations], rows=module.generators)
    kernel = kernel_basis(stacked)
    return image_basis(kernel.select_rows(0, 2 * g0))


def _check_depth(depth: int) -> None:
    if depth < 1:
        raise DegreeOutOfRangeError(f"resolutions need depth >= 1, got {depth}")


###############################################################################
# PRESIMPLICIAL
###############################################################################
def _simplicial_kernel(faces: Tuple[IntMatrix, ...], n: int, g_n: int) -> IntMatrix:
    """Basis of {(x_0..x_{n+1}) in P_n^{n+2} : ∂_i x_j = ∂_{j-1} x_i, i < j}, for n >= 1."""
    g_low = faces[0].rows
    rows = []
    for j in range(1, n + 2):
        for i in range(j):
            blocks = [IntMatrix.zeros(g_low, g_n) for _ in range(n + 2)]
            blocks[j] = faces[i]
            blocks[i] = blocks[i] - faces[j - 1]
            rows.append(IntMatrix.hstack(blocks, rows=g_low))
    return kernel_basis(IntMatrix.vstack(rows, cols=(n + 2) * g_n))


def build_presimplicial_resolution(m: FpModule, depth: int, seed: int = 0) -> PresimplicialResolution:
    """
    P_0 covers m; P_{n+1} is the simplicial kernel of P_n with the lattice basis
    as generators and ∂_i the i-th coordinate block.
    """
    _check_depth(depth)
    rng = _rng(seed)
    aug = _cover(m, seed, rng)
    levels = [PresentedGroup.free(aug.cols)]
    faces: List[Tuple[IntMatrix, ...]] = [()]
    for n in range(depth):
        g_n = levels[n].generators
        basis = _pullback_basis(m, aug) if n == 0 else _simplicial_kernel(faces[n], n, g_n)
        basis = _reshuffle(basis, rng)
        levels.append(PresentedGroup.free(basis.cols))
        faces.append(tuple(basis.row_blocks(g_n)) if g_n else
                     tuple(IntMatrix.zeros(0, basis.cols) for _ in range(n + 2)))
    obj = PresimplicialObject(tuple(levels), tuple(faces), m.presentation, aug, name=f"P({m})")
    res = PresimplicialResolution(m, obj, seed)
    violation = verify_resolution(res)
    if violation is not None:
        raise ResolutionError(f"presimplicial resolution of {m}: {violation.describe()}")
    logging.info(f"[Derive] presimplicial resolution of {m} (seed {seed}) ranks {res.ranks()}")
    return res


###############################################################################
# PSEUDOCUBICAL
###############################################################################
def _slot(i: int, eps: int) -> int:
    return 2 * (i - 1) + eps


def _cubical_kernel(faces, n: int, g_n: int) -> IntMatrix:
    """Basis of families (x_i^e), 1 <= i <= n+1, with ∂_i^a x_j^e = ∂_{j-1}^e x_i^a for i < j."""
    g_low = faces[n][0][0].rows
    slots = 2 * (n + 1)
    rows = []
    for j in range(2, n + 2):
        for i in range(1, j):
            for a in (0, 1):
                for e in (0, 1):
                    blocks = [IntMatrix.zeros(g_low, g_n) for _ in range(slots)]
                    blocks[_slot(j, e)] = faces[n][i - 1][a]
                    blocks[_slot(i, a)] = blocks[_slot(i, a)] - faces[n][j - 2][e]
                    rows.append(IntMatrix.hstack(blocks, rows=g_low))
    return kernel_basis(IntMatrix.vstack(rows, cols=slots * g_n))


def _degeneracy(basis: IntMatrix, faces, degens, n: int, i: int, g_n: int) -> IntMatrix:
    """
    s_i : X_n -> X_{n+1}, solved through the cover from the face family the
    identities prescribe: s_{i-1}∂_j^a (j < i), 1 (j = i), s_i ∂_{j-1}^a (j > i).
    """
    blocks = []
    for j in range(1, n + 2):
        for a in (0, 1):
            if j < i:
                blocks.append(degens[n][i - 2] @ faces[n][j - 1][a])
            elif j == i:
                blocks.append(IntMatrix.identity(g_n))
            else:
                blocks.append(degens[n][i - 1] @ faces[n][j - 2][a])
    prescribed = IntMatrix.vstack(blocks, cols=g_n)
    s = solve_matrix(basis, prescribed)
    if s is None:
        raise ResolutionError(f"no degeneracy s_{i} into level {n + 1}: prescribed faces are not a kernel element")
    return s


def build_pseudocubical_resolution(m: FpModule, depth: int, seed: int = 0) -> PseudocubicalResolution:
    """
    X_0 covers m, X_1 covers the pullback along the augmentation and X_{n+1}
    covers the cubical kernel of X_n; ∂_i^e is the (i, e) block of the
    cover basis and the degeneracies are lifted through it.
    """
    _check_depth(depth)
    rng = _rng(seed)
    aug = _cover(m, seed, rng)
    levels = [PresentedGroup.free(aug.cols)]
    faces: List[tuple] = [()]
    degens: List[tuple] = [()]
    for n in range(depth):
        g_n = levels[n].generators
        basis = _pullback_basis(m, aug) if n == 0 else _cubical_kernel(faces, n, g_n)
        basis = _reshuffle(basis, rng)
        blocks = basis.row_blocks(g_n) if g_n else [IntMatrix.zeros(0, basis.cols)] * (2 * (n + 1))
        faces.append(tuple((blocks[_slot(i, 0)], blocks[_slot(i, 1)]) for i in range(1, n + 2)))
        degens.append(tuple(_degeneracy(basis, faces, degens, n, i, g_n) for i in range(1, n + 2)))
        levels.append(PresentedGroup.free(basis.cols))
    obj = PseudocubicalObject(tuple(levels), tuple(faces), tuple(degens), m.presentation, aug, name=f"X({m})")
    res = PseudocubicalResolution(m, obj, seed)
    violation = verify_resolution(res)
    if violation is not None:
        raise ResolutionError(f"pseudocubical resolution of {m}: {violation.describe()}")
    logging.info(f"[Derive] pseudocubical resolution of {m} (seed {seed}) ranks {res.ranks()}")
    return res


def verify_resolution(res) -> Optional[Violation]:
    """Structure identities plus exactness of K(P) -> m, or of kernel-form N(X) -> m, through depth - 1."""
    violation = res.object.check()
    if violation is not None:
        return violation
    if isinstance(res, PresimplicialResolution):
        augmented = unnormalized_K(res.object)
    else:
        augmented = kernel_form(res.object).augmented()
    if not is_acyclic(augmented, res.depth - 1):
        return Violation(kind="acyclicity", degree=res.depth - 1,
                         detail=f"the augmented complex over {res.module} is not exact through {res.depth - 1}")
    return None
