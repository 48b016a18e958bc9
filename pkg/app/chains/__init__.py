from app.chains.complexes import (AugmentedComplex, ChainComplex, boundary_lattice, cycle_basis, homology,
                                  homology_report, is_acyclic, validate_complex)
from app.chains.groups import PresentedGroup
from app.chains.maps import (ChainHomotopy, ChainMap, compose, construct_homotopy, induces_equal_maps,
                             lift_chain_map, verify_chain_map, verify_homotopy)
from app.chains.splitting import Splitting, Summand, split_idempotent, split_presented_idempotent
