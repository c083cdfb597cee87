# Domain values: polynomials, 1-forms and the report records built from them
from .polynomial import Poly, UniPoly, Rational, INFINITY
from .parser import parse_poly
from .models import (
    OneForm,
    TangentLine,
    ColengthResult,
    SaitoCheck,
    InvariantReport,
    CurveInvariants,
    CharExponents,
    ResolutionStage,
    ResolutionChain,
    ClassCheck,
    ScanReport,
    SampleReport,
    CurveIndexStatus,
)
