"""Exact Grothendieck elements, Weyl group combinatorics, and truncated
characters for affine Kac-Moody root data."""

__version__ = "0.1.0"

from .cartan import AffineCartanData, build_cartan, from_type
from .coefq import CoefQ
from .errors import AffGrothError
from .groth import GrothTable, grothendieck
from .kring import KElement
from .weights import Weight

__all__ = [
    "AffineCartanData",
    "AffGrothError",
    "build_cartan",
    "CoefQ",
    "from_type",
    "grothendieck",
    "GrothTable",
    "KElement",
    "Weight",
    "__version__",
]
