"""quantalab: a finite verification lab for quantale-valued fuzzy sets.

Finite unital quantales with residuation, fuzzy sets and Goguen maps,
function-space towers with deterministic seeded sampling, the covariant
and double-dual powerset monads with their liftings, Q-filters with
Kowalsky sums, and the Eilenberg-Moore algebra theory -- every law is
checked exhaustively or by reproducible sampling on finite instances.
"""

from .errors import (
    BadParameter,
    CapExceeded,
    CarrierMismatch,
    NotALattice,
    NotAPullback,
    NotAssociative,
    NotCommutative,
    NotDistributive,
    NotGoguen,
    NotReflexivePair,
    NotSeparated,
    PointOutOfRange,
    QuantalabError,
    UnitLawFails,
    UnknownLabel,
)
from .fuzzy import (
    Carrier,
    FuzzySet,
    GoguenMap,
    constant,
    delta,
    image,
    is_goguen,
    preimage,
    searrow,
    swarrow,
)
from .quantale import (
    Quantale,
    build_quantale,
    builtin_quantale,
    load_quantale,
    verify_quantale_laws,
)
from .report import Check, VerificationReport
from .towers import (
    DEFAULT_CAP,
    Functional,
    Space,
    apply,
    decode,
    encode,
    enumerate_functions,
    hat,
    index_codec,
    materialize,
    sample_function,
)

__version__ = "0.1.0"

__all__ = [
    "BadParameter", "CapExceeded", "Carrier", "CarrierMismatch", "Check",
    "DEFAULT_CAP", "Functional", "FuzzySet", "GoguenMap", "NotALattice",
    "NotAPullback", "NotAssociative", "NotCommutative", "NotDistributive",
    "NotGoguen", "NotReflexivePair", "NotSeparated", "PointOutOfRange",
    "Quantale", "QuantalabError", "Space", "UnitLawFails", "UnknownLabel",
    "VerificationReport", "apply", "build_quantale", "builtin_quantale",
    "constant", "decode", "delta", "encode", "enumerate_functions", "hat",
    "image", "index_codec", "is_goguen", "load_quantale", "materialize",
    "preimage", "sample_function", "searrow", "swarrow",
    "verify_quantale_laws",
]
