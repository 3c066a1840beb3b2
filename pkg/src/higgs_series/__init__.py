"""Exact computation of the cell-product series Omega_g, its plethystic
logarithm H_g, Schiffmann's partition terms, and checks of the identities
relating them."""

ENGINE_VERSION = "1.0.0"

from .algebra import LaurentPoly, NotDivisible, VarSet  # noqa: E402
from .mozgovoy import HiggsContext, PolynomialityFailure  # noqa: E402
from .partitions import Partition, gen_partitions  # noqa: E402
from .plethystic import TSeries, pexp, plog  # noqa: E402
from .ratfunc import FactoredRat, NotPolynomial  # noqa: E402

__all__ = [
    "ENGINE_VERSION",
    "FactoredRat",
    "HiggsContext",
    "LaurentPoly",
    "NotDivisible",
    "NotPolynomial",
    "Partition",
    "PolynomialityFailure",
    "TSeries",
    "VarSet",
    "gen_partitions",
    "pexp",
    "plog",
]
