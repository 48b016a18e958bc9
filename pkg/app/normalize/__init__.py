from app.normalize.builders import as_presimplicial_object, as_pseudocubical_object, plain_C, unnormalized_C, \
    unnormalized_K
from app.normalize.kernel_form import (KernelForm, check_normalization_agreement, degenerate_subcomplex_rank,
                                       kernel_form, normalized_kernel)
from app.normalize.objects import PresimplicialObject, PseudocubicalObject, table_matrix
from app.normalize.sigma import (NormalizedComplex, SigmaEndomorphism, normalized_sigma, sigma_endomorphism,
                                 split_chain_idempotent)
