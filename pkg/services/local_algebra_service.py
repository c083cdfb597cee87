import functools
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from config import get_config
from exceptions import (
    ColengthCapExceededError,
    InternalConsistencyError,
    NonIsolatedSingularityError,
    NotACurveGermError,
    NotDivisibleError,
    NotSingleLineError,
)
from loki_logger import get_logger, log_performance
from models.models import ColengthResult, CurveInvariants, TangentLine
from models.polynomial import (
    ExtendedInt,
    Poly,
    X,
    Y,
    exact_divide,
    homogeneous_component,
    order,
    partial,
    substitute,
)
from services import colength_engine

_SX, _SY = sympy.symbols('x y')


def to_sympy(p: Poly) -> sympy.Poly:
    data = {monomial: sympy.Rational(c.numerator, c.denominator) for monomial, c in p.items()}
    return sympy.Poly.from_dict(data, _SX, _SY, domain='QQ')


def from_sympy(p: sympy.Poly) -> Poly:
    return Poly({
        tuple(int(e) for e in monomial): Fraction(int(c.p), int(c.q))
        for monomial, c in p.terms()
        if c != 0
    })


def polynomial_gcd(gens: Sequence[Poly]) -> Poly:
    """Monic gcd of the nonzero generators (sympy, over QQ)"""
    nonzero = [to_sympy(g) for g in gens if not g.is_zero()]
    if not nonzero:
        raise ValueError("gcd of zero polynomials is undefined")
    return from_sympy(functools.reduce(sympy.gcd, nonzero))


def common_factor(gens: Sequence[Poly]) -> Optional[Poly]:
    """The generators' gcd when it is a non-unit vanishing at the origin, else None"""
    divisor = polynomial_gcd(gens)
    if divisor.is_constant() or divisor.constant_term() != 0:
        return None
    return divisor


def require_curve_germ(f: Poly):
    if f.is_zero():
        raise NotACurveGermError("the zero polynomial does not define a curve")
    if f.constant_term() != 0:
        raise NotACurveGermError(f"the curve {f} does not pass through the origin")


@functools.lru_cache(maxsize=512)
def _cached_colength(gens: Tuple[Poly, ...], cap: int, min_degree: int) -> ColengthResult:
    shared = common_factor(gens)
    if shared is not None:
        # the quotient is infinite dimensional; no truncation can certify
        return ColengthResult(value=None, certified_degree=None, cap=cap, common_factor=shared)
    result = colength_engine.compute_colength(gens, cap, min_degree)
    if result.exceeds_cap:
        return ColengthResult(value=None, certified_degree=None, cap=cap, common_factor=None)
    return result


class LocalAlgebraService:
    """Colength, Milnor/Tjurina numbers and one-step blow-ups at the origin"""

    def __init__(self, colength_cap: Optional[int] = None, config=None):
        config = config or get_config()
        engine_config = config.get_engine_config()
        self.cap = colength_cap or engine_config['colength_cap']
        self.min_degree = engine_config['min_degree']
        self.logger = get_logger(__name__)

    # -- colength -------------------------------------------------------

    def colength(self, gens: Sequence[Poly], cap: Optional[int] = None) -> ColengthResult:
        gens = tuple(gens)
        if not gens:
            raise ValueError("colength needs at least one generator")
        if all(g.is_zero() for g in gens):
            raise ValueError("colength of the zero ideal is undefined")
        cap = cap or self.cap

        result = _cached_colength(gens, cap, self.min_degree)

        self.logger.debug(
            "Colength computed",
            extra={
                "operation": "colength",
                "generator_count": len(gens),
                "value": result.value,
                "certified_degree": result.certified_degree,
                "cap": cap,
                "common_factor": str(result.common_factor) if result.common_factor else None,
            },
        )
        return result

    def colength_at_degree(self, gens: Sequence[Poly], degree: int) -> Tuple[int, bool]:
        return colength_engine.colength_at_degree(tuple(gens), degree)

    def common_factor(self, gens: Sequence[Poly]) -> Optional[Poly]:
        return common_factor(gens)

    # -- invariants -----------------------------------------------------

    def _finite_colength(self, f: Poly, gens: Sequence[Poly], label: str) -> int:
        result = self.colength(gens)
        if result.exceeds_cap:
            factor = result.common_factor
            self.logger.warning(
                "Non-isolated singularity",
                extra={
                    "operation": label,
                    "curve": str(f),
                    "common_factor": str(factor) if factor else None,
                    "cap": result.cap,
                },
            )
            detail = f"common factor {factor}" if factor else f"colength exceeds cap {result.cap}"
            raise NonIsolatedSingularityError(
                f"{f} does not have an isolated singularity at the origin ({detail})",
                common_factor=str(factor) if factor else None,
            )
        return result.value

    def jacobian(self, f: Poly) -> Tuple[Poly, Poly]:
        return partial(f, 'x'), partial(f, 'y')

    @log_performance("milnor_number")
    def milnor(self, f: Poly) -> int:
        require_curve_germ(f)
        return self._finite_colength(f, self.jacobian(f), "milnor")

    @log_performance("tjurina_number")
    def tjurina(self, f: Poly) -> int:
        require_curve_germ(f)
        return self._finite_colength(f, (f,) + self.jacobian(f), "tjurina")

    def intersection_multiplicity(self, g: Poly, h: Poly) -> ExtendedInt:
        result = self.colength([g, h])
        if result.exceeds_cap and result.common_factor is None:
            raise ColengthCapExceededError(
                f"I({g}, {h}) not certified below degree cap {result.cap}"
            )
        return result.as_extended()

    def is_isolated(self, f: Poly) -> bool:
        require_curve_germ(f)
        return not self.colength((f,) + self.jacobian(f)).exceeds_cap

    # -- tangent cone and blow-up ---------------------------------------

    def tangent_line(self, f: Poly) -> TangentLine:
        require_curve_germ(f)
        nu = int(order(f))
        jet = homogeneous_component(f, nu)
        leading = jet.coefficient(0, nu)
        if leading == 0:
            if jet == Poly.monomial(nu, 0, jet.coefficient(nu, 0)):
                raise NotSingleLineError(f"tangent cone of {f} is the line x = 0", vertical=True)
            raise NotSingleLineError(f"tangent cone {jet} is not a power of a single line y + eps*x")
        epsilon = jet.coefficient(1, nu - 1) / (nu * leading)
        if jet != ((Y + X.scale(epsilon)) ** nu).scale(leading):
            raise NotSingleLineError(
                f"tangent cone {jet} is not a power of a single line with rational slope"
            )
        return TangentLine(epsilon=epsilon, nu=nu)

    def strict_transform(self, f: Poly) -> Tuple[Poly, TangentLine]:
        """Blow up in the chart (x, x*y) and recentre the point on the tangent direction"""
        tangent = self.tangent_line(f)
        pulled_back = substitute(f, X, X * Y)
        try:
            reduced = exact_divide(pulled_back, Poly.monomial(tangent.nu, 0))
        except NotDivisibleError as e:
            raise InternalConsistencyError(f"x^{tangent.nu} does not divide {pulled_back}") from e
        recentred = substitute(reduced, X, Y - tangent.epsilon)
        return recentred, tangent

    def multiplicity_sequence(self, f: Poly) -> List[int]:
        """Multiplicities of the successive strict transforms until the curve is smooth"""
        require_curve_germ(f)
        if self.common_factor((f,) + self.jacobian(f)) is not None:
            raise NonIsolatedSingularityError(f"{f} is not reduced at the origin")
        sequence = []
        current = f
        while order(current) > 1:
            sequence.append(int(order(current)))
            try:
                current, _ = self.strict_transform(current)
            except NotSingleLineError as e:
                if not e.vertical:
                    raise
                # swapping x and y turns the tangent x = 0 into y = 0
                current, _ = self.strict_transform(substitute(current, Y, X))
        return sequence

    def curve_invariants(self, f: Poly) -> CurveInvariants:
        mu = self.milnor(f)
        tau = self.tjurina(f)
        nu = int(order(f))
        vertical = False
        try:
            tangent = self.tangent_line(f)
            transform, _ = self.strict_transform(f)
        except NotSingleLineError as e:
            tangent, transform = None, None
            if e.vertical:
                vertical = True
                transform, _ = self.strict_transform(substitute(f, Y, X))
        try:
            sequence = self.multiplicity_sequence(f)
        except NotSingleLineError:
            # several tangent directions: not a branch
            sequence = []
        return CurveInvariants(
            f=f,
            nu=nu,
            tangent=tangent,
            mu=mu,
            tau=tau,
            multiplicity_sequence=tuple(sequence),
            strict_transform=transform,
            vertical_tangent=vertical,
        )
