from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from models.polynomial import ExtendedInt, INFINITY, Poly


class CurveIndexStatus(Enum):
    EXACT = "exact"
    CANDIDATE_UPPER_BOUND = "candidate upper bound"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class OneForm:
    """omega = A dx + B dy"""
    A: Poly
    B: Poly

    def __post_init__(self):
        if self.A.is_zero() and self.B.is_zero():
            raise ValueError("a 1-form needs at least one nonzero coefficient")

    def to_dict(self) -> Dict[str, Any]:
        return {"A": str(self.A), "B": str(self.B)}


@dataclass(frozen=True)
class TangentLine:
    """Tangent cone (y + epsilon*x)^nu"""
    epsilon: Fraction
    nu: int


@dataclass(frozen=True)
class ColengthResult:
    value: Optional[int]
    certified_degree: Optional[int]
    cap: int
    common_factor: Optional[Poly] = None

    @property
    def exceeds_cap(self) -> bool:
        return self.value is None

    def as_extended(self) -> ExtendedInt:
        return INFINITY if self.value is None else self.value


@dataclass(frozen=True)
class SaitoCheck:
    is_basis: bool
    divisible: bool
    unit: Optional[Poly]
    unit_at_origin: Fraction
    wedge: Poly


@dataclass(frozen=True)
class InvariantReport:
    nu: int
    nu1: int
    nu2: int
    good_basis: bool
    unit: Poly
    g1: Poly
    g2: Poly
    cofactor_orders: Tuple[ExtendedInt, ExtendedInt]
    mu: int
    tau: int
    i1: ExtendedInt
    i2: ExtendedInt
    curve_index: Optional[int]
    curve_index_status: CurveIndexStatus
    mu_tilde: int
    tau_tilde: int
    lhs: int
    igg: ExtendedInt
    rhs: Optional[int]
    formula_holds: bool
    mu_tau_identity_holds: bool
    intersection_lemma_rhs: Optional[int]
    diagnostics: Dict[str, Poly] = field(default_factory=dict)

    @property
    def curve_index_exact(self) -> bool:
        return self.curve_index_status is CurveIndexStatus.EXACT


@dataclass(frozen=True)
class CurveInvariants:
    """Invariants of a single curve (no basis needed)"""
    f: Poly
    nu: int
    tangent: Optional[TangentLine]
    mu: int
    tau: int
    multiplicity_sequence: Tuple[int, ...]
    strict_transform: Optional[Poly]
    vertical_tangent: bool = False  # tangent cone is x^nu; strict transform taken with x and y swapped


@dataclass(frozen=True)
class CharExponents:
    beta: Tuple[int, ...]
    gcd_chain: Tuple[int, ...]

    @property
    def beta0(self) -> int:
        return self.beta[0]

    @property
    def beta1(self) -> int:
        return self.beta[1]

    @property
    def pairs(self) -> int:
        return len(self.beta) - 1

    @property
    def is_smooth(self) -> bool:
        return self.beta == (1,)

    def __str__(self):
        return '(' + ','.join(str(b) for b in self.beta) + ')'


@dataclass(frozen=True)
class ResolutionStage:
    exponents: CharExponents
    multiplicity: int
    n: int
    p1: int
    curve_index: int
    nu1: int
    nu2: int
    contribution: int


@dataclass(frozen=True)
class ResolutionChain:
    exponents: CharExponents
    stages: Tuple[ResolutionStage, ...]
    mu: int
    tau_min: int

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(stage.multiplicity for stage in self.stages)

    @property
    def contributions(self) -> Tuple[int, ...]:
        return tuple(stage.contribution for stage in self.stages)


@dataclass(frozen=True)
class ClassCheck:
    """Outcome of the corollary checks on one topological class"""
    exponents: CharExponents
    mu: int
    tau_min: int
    dg_bound: int
    slack: int           # 4*tau_min - 3*mu
    slack_floor: int     # sum of (nu - 1) over the chain
    identity_value: int  # sum of nu + delta + 4*(p1 - 1)
    failed_checks: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failed_checks


@dataclass(frozen=True)
class ScanReport:
    max_beta0: Optional[int]
    max_beta1: Optional[int]
    max_pairs: Optional[int]
    classes_checked: int
    violations: Tuple[ClassCheck, ...]
    min_slack_witness: Optional[ClassCheck]
    min_bound_margin_witness: Optional[ClassCheck]
    elapsed_seconds: float
    results: Tuple[ClassCheck, ...] = ()


@dataclass(frozen=True)
class SampleReport:
    exponents: CharExponents
    mu: int
    tau_min: int
    samples: int
    seed: int
    observed: Tuple[int, ...]

    @property
    def min_tau(self) -> Optional[int]:
        return min(self.observed, default=None)

    @property
    def max_tau(self) -> Optional[int]:
        return max(self.observed, default=None)

    @property
    def reaches_tau_min(self) -> bool:
        return self.min_tau == self.tau_min
