import pytest

from app.core.errors import InvalidShapeError, UnknownModelError
from app.pydanticConfig.settings import settings
from app.shapes import (MODEL_NAMES, builtin_model, default_truncation, nondegenerate_count, validate_pseudocubical,
                        validate_shape)


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_builtin_models_validate(name):
    shape = builtin_model(name)
    assert validate_shape(shape) is None
    assert shape.truncation == 3


def test_default_truncation_sits_above_the_dimension():
    assert default_truncation(0) == settings.DEFAULT_TRUNCATION
    assert default_truncation(2) == 3
    assert default_truncation(10) == settings.CUBIX_MAX_DIM


def test_truncation_is_capped_and_checked():
    assert builtin_model("torus-□", settings.CUBIX_MAX_DIM + 5).truncation == settings.CUBIX_MAX_DIM
    with pytest.raises(InvalidShapeError):
        builtin_model("torus-Δ", -1)
    with pytest.raises(UnknownModelError):
        builtin_model("moebius-Δ")


def test_euler_characteristics_of_simplicial_models():
    assert builtin_model("point-Δ").euler_characteristic() == 1
    assert builtin_model("s1-Δ").euler_characteristic() == 0
    assert builtin_model("s2-Δ").euler_characteristic() == 2
    assert builtin_model("torus-Δ").euler_characteristic() == 0
    assert builtin_model("rp2-Δ").euler_characteristic() == 1
    assert builtin_model("klein-Δ").euler_characteristic() == 0


def test_cubical_models_carry_their_degenerate_cells():
    torus = builtin_model("torus-□", 2)
    assert torus.cells[1] == ("a", "b", "s[1](p)")
    assert torus.cells[2] == ("Q", "s[1](a)", "s[2](a)", "s[1](b)", "s[2](b)", "s[1,2](p)")
    assert validate_pseudocubical(torus) is None
    assert [nondegenerate_count(torus, n) for n in range(3)] == [1, 2, 1]


def test_closure_counts_up_to_the_truncation():
    point = builtin_model("point-□")
    assert [point.count(n) for n in range(point.truncation + 1)] == [1, 1, 1, 1]
    assert [nondegenerate_count(point, n) for n in range(point.truncation + 1)] == [1, 0, 0, 0]
    circle = builtin_model("s1-□")
    assert [circle.count(n) for n in range(circle.truncation + 1)] == [1, 2, 3, 4]


def test_face_names_follow_the_tables():
    klein = builtin_model("klein-□")
    assert klein.face_name(2, 1, 0, "Q") == "a"
    assert klein.face_name(2, 2, 1, "Q") == "a"
    assert klein.face_name(2, 1, 0, "s[2](a)") == "s[1](p)"
    assert builtin_model("s2-Δ").face_name(2, 0, "U") == "e12"
