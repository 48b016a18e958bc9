import logging
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from app.core.errors import DegreeOutOfRangeError, NotSurjectiveError
from app.shapes.augmented import AugmentedShape
from app.shapes.presimplicial import FinPresimplicialSet
from app.shapes.pseudocubical import FinPseudocubicalSet


def _fibers(f: Mapping[str, str], codomain: Optional[Sequence[str]]) -> Tuple[List[str], Tuple[str, ...], List[List[int]]]:
    domain = sorted(f)
    target = tuple(codomain) if codomain is not None else tuple(sorted(set(f.values())))
    position = {b: k for k, b in enumerate(target)}
    fibers: List[List[int]] = [[] for _ in target]
    for k, e in enumerate(domain):
        if f[e] not in position:
            raise NotSurjectiveError(f"{e} maps to {f[e]}, which is not in the codomain")
        fibers[position[f[e]]].append(k)
    missed = [b for b, fiber in zip(target, fibers) if not fiber]
    if missed:
        raise NotSurjectiveError(f"nothing maps onto {', '.join(missed)}")
    return domain, target, fibers


def _tuple_name(domain: Sequence[str], t: Sequence[int]) -> str:
    return "(" + ",".join(domain[e] for e in t) + ")"


def _check_depth(depth: int) -> None:
    if depth < 0:
        raise DegreeOutOfRangeError(f"depth must be non-negative, got {depth}")


def cech_presimplicial(f: Mapping[str, str], depth: int,
                       codomain: Optional[Sequence[str]] = None) -> AugmentedShape:
    """
    Čech nerve of f: S_n holds the (n+1)-tuples of E on which f is constant;
    ∂_i deletes coordinate i. Augmented by f.
    """
    _check_depth(depth)
    domain, target, fibers = _fibers(f, codomain)
    levels: List[List[Tuple[int, ...]]] = []
    for n in range(depth + 1):
        levels.append([t for fiber in fibers for t in product(fiber, repeat=n + 1)])
    index = [{t: k for k, t in enumerate(level)} for level in levels]
    faces = [()]
    for n in range(1, depth + 1):
        faces.append(tuple(
            tuple(index[n - 1][t[:i] + t[i + 1:]] for t in levels[n]) for i in range(n + 1)))
    shape = FinPresimplicialSet(
        cells=tuple(tuple(_tuple_name(domain, t) for t in level) for level in levels),
        faces=tuple(faces), name=f"cech-Δ({len(domain)}->{len(target)})")
    augmentation = tuple(target.index(f[domain[t[0]]]) for t in levels[0])
    logging.debug(f"[Shapes] {shape.name} cell counts {[len(level) for level in levels]}")
    return AugmentedShape(shape, target, augmentation)


def cech_pseudocubical(f: Mapping[str, str], depth: int,
                       codomain: Optional[Sequence[str]] = None) -> AugmentedShape:
    """
    Cubical Čech construction: X_n holds families (e_w) indexed by words
    w in {0,1}^n, lexicographically ordered, with f constant on the family.
    ∂_i^eps keeps the words with w_i = eps; s_i ignores letter i.
    """
    _check_depth(depth)
    domain, target, fibers = _fibers(f, codomain)
    words = [list(product((0, 1), repeat=n)) for n in range(depth + 1)]
    word_index = [{w: k for k, w in enumerate(ws)} for ws in words]
    levels: List[List[Tuple[int, ...]]] = []
    for n in range(depth + 1):
        levels.append([t for fiber in fibers for t in product(fiber, repeat=2 ** n)])
    index = [{t: k for k, t in enumerate(level)} for level in levels]

    faces = [()]
    degens = [()]
    for n in range(1, depth + 1):
        per_i = []
        for i in range(1, n + 1):
            pair = []
            for eps in (0, 1):
                kept = [k for k, w in enumerate(words[n]) if w[i - 1] == eps]
                pair.append(tuple(index[n - 1][tuple(t[k] for k in kept)] for t in levels[n]))
            per_i.append(tuple(pair))
        faces.append(tuple(per_i))
        per_j = []
        for j in range(1, n + 1):
            source = [word_index[n - 1][w[:j - 1] + w[j:]] for w in words[n]]
            per_j.append(tuple(index[n][tuple(t[k] for k in source)] for t in levels[n - 1]))
        degens.append(tuple(per_j))

    shape = FinPseudocubicalSet(
        cells=tuple(tuple(_tuple_name(domain, t) for t in level) for level in levels),
        faces=tuple(faces), degeneracies=tuple(degens), name=f"cech-□({len(domain)}->{len(target)})")
    augmentation = tuple(target.index(f[domain[t[0]]]) for t in levels[0])
    logging.debug(f"[Shapes] {shape.name} cell counts {[len(level) for level in levels]}")
    return AugmentedShape(shape, target, augmentation)


def surjection_from_fibers(sizes: Sequence[int]) -> Dict[str, str]:
    """A surjection with the given fiber sizes, e.g. [2, 1] -> {a: b0, b: b0, c: b1}."""
    f: Dict[str, str] = {}
    letter = 0
    for b, size in enumerate(sizes):
        if size < 1:
            raise NotSurjectiveError(f"fiber {b} is empty")
        for _ in range(size):
            f[chr(ord("a") + letter)] = f"b{b}"
            letter += 1
    return f
