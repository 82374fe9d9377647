"""mklab: a finite-model laboratory for choice principles.

Hereditarily finite sets with a set-builder expression language, executable
order-theoretic predicates, and the constructive machinery tying choice
functions, maximal members, maximal nests, transversals, maximal elements,
and well-orders together, all verified exhaustively at small scale.
"""

from .errors import MkError
from .hfs import EMPTY, HfSet, canon, from_int, from_json, hfs, to_json

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "HfSet",
    "MkError",
    "canon",
    "from_int",
    "from_json",
    "hfs",
    "to_json",
    "__version__",
]
