from typing import Dict, List

from app.core.errors import SpecParseError, UnsupportedFunctorError
from app.dto.FgAbGroup import FgAbGroup
from app.functors.BaseFunctor import BaseFunctor
from app.functors.concreteFunctors.FreeFunctor import FreeFunctor
from app.functors.concreteFunctors.FreeTensorFunctor import FreeTensorFunctor
from app.functors.concreteFunctors.TensorFunctor import TensorFunctor


class FunctorService:
    """Lookup of functors by tag."""
    BUILT_IN_FUNCTORS: List[Dict[str, str]] = [
        {"name": "free", "description": "ℤ[-] on finite sets (FreeFunctor)"},
        {"name": "free-mod:m", "description": "ℤ[-] ⊗ ℤ/m on finite sets (FreeTensorFunctor)"},
        {"name": "free-tensor:<group>", "description": "ℤ[-] ⊗ A on finite sets (FreeTensorFunctor)"},
        {"name": "id", "description": "identity functor of abelian groups (TensorFunctor)"},
        {"name": "tensor:<group>", "description": "- ⊗ A on abelian groups (TensorFunctor)"},
    ]

    @staticmethod
    def _group(tag: str, text: str) -> FgAbGroup:
        try:
            return FgAbGroup.parse(text)
        except SpecParseError as e:
            raise UnsupportedFunctorError(f"bad coefficient group in functor tag '{tag}': {e}") from e

    @staticmethod
    def get_set_functor(tag: str) -> BaseFunctor:
        """Functors from finite sets: free, free-mod:m, free-tensor:<group>."""
        name, _, arg = tag.strip().partition(":")
        if name == "free" and not arg:
            return FreeFunctor()
        if name == "free-mod" and arg:
            if not arg.isdigit() or int(arg) < 2:
                raise UnsupportedFunctorError(f"free-mod needs a modulus >= 2, got '{arg}'")
            return FreeTensorFunctor(FgAbGroup.cyclic(int(arg)), tag=f"free-mod:{arg}")
        if name == "free-tensor" and arg:
            return FreeTensorFunctor(FunctorService._group(tag, arg))
        raise UnsupportedFunctorError(f"Unknown set functor: {tag}")

    @staticmethod
    def get_endofunctor(tag: str) -> TensorFunctor:
        """Additive endofunctors of abelian groups: id and tensor:<group>."""
        name, _, arg = tag.strip().partition(":")
        if name == "id" and not arg:
            return TensorFunctor()
        if name == "tensor" and arg:
            return TensorFunctor(FunctorService._group(tag, arg))
        raise UnsupportedFunctorError(f"Unknown functor: {tag}")
