from app.shapes.augmented import (AugmentedShape, Shape, check_cubical_extension, check_simplicial_extension,
                                  validate_augmented)
from app.shapes.cech import cech_presimplicial, cech_pseudocubical, surjection_from_fibers
from app.shapes.io import load_shape_spec, shape_from_spec, shape_to_spec
from app.shapes.models import MODEL_NAMES, builtin_model, default_truncation
from app.shapes.mutation import rewire_face
from app.shapes.presimplicial import FinPresimplicialSet, validate_presimplicial
from app.shapes.pseudocubical import (FinPseudocubicalSet, cubical_closure, degenerate_name, nondegenerate_count,
                                      validate_precubical, validate_pseudocubical)


def validate_shape(shape: Shape):
    """Dispatch to the validator for the shape's kind."""
    if isinstance(shape, FinPresimplicialSet):
        return validate_presimplicial(shape)
    return validate_pseudocubical(shape)
