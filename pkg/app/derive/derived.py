import hashlib
import json
import logging
from typing import Dict, Optional, Tuple

from app.chains.complexes import ChainComplex, homology
from app.chains.splitting import split_idempotent
from app.derive.modules import FpModule
from app.derive.resolutions import (PresimplicialResolution, PseudocubicalResolution, build_presimplicial_resolution,
                                    build_pseudocubical_resolution)
from app.dto.FgAbGroup import FgAbGroup
from app.functors.concreteFunctors.TensorFunctor import TensorFunctor
from app.normalize.builders import plain_C, unnormalized_K
from app.normalize.kernel_form import normalized_kernel
from app.normalize.sigma import sigma_endomorphism

_cache: Dict[str, object] = {}


def _cache_key(kind: str, m: FpModule, depth: int, seed: int) -> str:
    data = {
        "kind": kind,
        "generators": m.generators,
        "relations": m.presentation.relations.to_lists(),
        "depth": depth,
        "seed": seed,
    }
    return hashlib.md5(json.dumps(data, sort_keys=True).encode()).hexdigest()


def presimplicial_resolution(m: FpModule, depth: int, seed: int = 0, use_cache: bool = True
                             ) -> PresimplicialResolution:
    key = _cache_key("presimplicial", m, depth, seed)
    if use_cache and key in _cache:
        logging.debug(f"[Derive] using cached presimplicial resolution {key[:8]}")
        return _cache[key]
    res = build_presimplicial_resolution(m, depth, seed)
    if use_cache:
        _cache[key] = res
    return res


def pseudocubical_resolution(m: FpModule, depth: int, seed: int = 0, use_cache: bool = True
                             ) -> PseudocubicalResolution:
    key = _cache_key("pseudocubical", m, depth, seed)
    if use_cache and key in _cache:
        logging.debug(f"[Derive] using cached pseudocubical resolution {key[:8]}")
        return _cache[key]
    res = build_pseudocubical_resolution(m, depth, seed)
    if use_cache:
        _cache[key] = res
    return res


def clear_cache() -> None:
    _cache.clear()


def _depth_for(n: int, depth: Optional[int]) -> int:
    return n + 2 if depth is None else depth


def derived_simplicial(m: FpModule, functor: TensorFunctor, n: int, seed: int = 0,
                       depth: Optional[int] = None) -> FgAbGroup:
    """H_n(K(F(P))) for a presimplicial resolution P of m."""
    res = presimplicial_resolution(m, _depth_for(n, depth), seed)
    k = unnormalized_K(functor.apply(res.object))
    return homology(k.complex, n)


def derived_cubical(m: FpModule, functor: TensorFunctor, n: int, seed: int = 0,
                    depth: Optional[int] = None) -> FgAbGroup:
    """H_n of the kernel-form N(F(X)) for a pseudocubical resolution X of m."""
    res = pseudocubical_resolution(m, _depth_for(n, depth), seed)
    return homology(normalized_kernel(functor.apply(res.object)), n)


def eilenberg_moore_check(m: FpModule, a: Optional[FgAbGroup], depth: int, seed: int = 0) -> bool:
    """F_ad(K(P)) and K(F(P)) are the same complex, entry for entry."""
    functor = TensorFunctor(a)
    res = presimplicial_resolution(m, depth, seed)
    applied_after = functor.apply_complex(unnormalized_K(res.object).complex)
    applied_before = unnormalized_K(functor.apply(res.object)).complex
    same = applied_after == applied_before
    if not same:
        logging.warning(f"[Derive] Eilenberg-Moore path differs for {m} with {functor.tag} (seed {seed})")
    return same


def karoubi_path_check(m: FpModule, a: Optional[FgAbGroup], n: int, seed: int = 0) -> bool:
    """
    H_n of F applied to the σ-normalized complex of a pseudocubical resolution
    equals H_n of the kernel-form N(F(X)).
    """
    functor = TensorFunctor(a)
    res = pseudocubical_resolution(m, n + 2, seed)
    c = plain_C(res.object)
    sub = split_idempotent(c, sigma_endomorphism(res.object).as_chain_map(c)).sub
    left = homology(functor.apply_complex(sub), n)
    right = homology(normalized_kernel(functor.apply(res.object)), n)
    if left != right:
        logging.warning(f"[Derive] Karoubi path gives {left}, kernel form gives {right} for {m}, degree {n}")
    return left == right


def additivity_check(m: FpModule, other: FpModule, functor: TensorFunctor, n: int, seed: int = 0
                     ) -> Tuple[bool, bool]:
    """L_n F(m ⊕ m') = L_n F(m) ⊕ L_n F(m') for the simplicial and the cubical theory."""
    total = m.direct_sum(other)
    simplicial = derived_simplicial(total, functor, n, seed) == \
        derived_simplicial(m, functor, n, seed) + derived_simplicial(other, functor, n, seed)
    cubical = derived_cubical(total, functor, n, seed) == \
        derived_cubical(m, functor, n, seed) + derived_cubical(other, functor, n, seed)
    return simplicial, cubical
