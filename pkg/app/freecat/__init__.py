from app.freecat.formal import (BaseMap, FinSet, FormalMorphism, compose_maps, formal_add, formal_compose,
                                identity_map)
from app.freecat.karoubi import KaroubiObject, extend_additive, extend_to_karoubi
from app.freecat.hom import hom_complex, hom_shape
from app.freecat.naturality import (formal_boundary, formal_sigma, karoubi_normalization, naturality_violation,
                                    verify_normalization_naturality)
