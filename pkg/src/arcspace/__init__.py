"""arcspace: exact computer algebra for jet schemes and arc spaces.

Computes jet ideals via Hasse-Schmidt derivations, contact orders with
Jacobian ideals, embedding dimension and codimension at rational arcs, and
builds and verifies the finite-dimensional formal model of an arc space
neighborhood.  All arithmetic is exact over Q.
"""

from . import drinfeld, jets, localgeom, polyalg
from .errors import (
    ArcspaceError,
    CertificateFailureError,
    InsufficientPrecisionError,
    InternalInconsistencyError,
    InvalidCodimError,
    NegativeExponentError,
    NotMonicError,
    NotRegularError,
    ParseError,
    PointNotOnSchemeError,
    ResourceLimitError,
    UnknownVariableError,
    VarsetMismatchError,
    VerificationError,
)
from .jets import AffineScheme, Arc, JetPoint
from .localgeom import LocalAnalysis
from .polyalg import Poly, TruncSeries, VarId, VarSet, parse_poly

__version__ = "0.1.0"

__all__ = [
    "AffineScheme", "Arc", "ArcspaceError", "CertificateFailureError",
    "InsufficientPrecisionError", "InternalInconsistencyError",
    "InvalidCodimError", "JetPoint", "LocalAnalysis",
    "NegativeExponentError", "NotMonicError", "NotRegularError", "ParseError",
    "PointNotOnSchemeError", "Poly", "ResourceLimitError", "TruncSeries",
    "UnknownVariableError", "VarId", "VarSet", "VarsetMismatchError",
    "VerificationError", "drinfeld", "jets", "localgeom", "parse_poly",
    "polyalg",
]
