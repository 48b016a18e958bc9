from app.derive.derived import (additivity_check, clear_cache, derived_cubical, derived_simplicial,
                                eilenberg_moore_check, karoubi_path_check, presimplicial_resolution,
                                pseudocubical_resolution)
from app.derive.modules import FpModule
from app.derive.oracle import tor_oracle
from app.derive.resolutions import (PresimplicialResolution, PseudocubicalResolution, build_presimplicial_resolution,
                                    build_pseudocubical_resolution, verify_resolution)
from app.derive.theorem import compare_theorem
