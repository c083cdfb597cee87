"""
Saito bases of logarithmic 1-forms along a plane branch.

A pair (w1, w2) is a Saito basis for f when w1 ^ w2 = u * f dx ^ dy with
u(0, 0) != 0. Every form in the module satisfies A*f_y - B*f_x = g*f for a
cofactor g. The index of a form is the vanishing order, at the tangent
direction, of its lowest homogeneous part restricted to the exceptional
line of one blow-up.
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, Optional, Tuple

from config import get_config
from exceptions import (
    NonIsolatedSingularityError,
    NotACurveGermError,
    NotDivisibleError,
    NotInvariantError,
    NotSaitoBasisError,
)
from loki_logger import get_logger, log_performance, log_result_event
from models.models import CurveIndexStatus, InvariantReport, OneForm, SaitoCheck, TangentLine
from models.polynomial import (
    INFINITY,
    ExtendedInt,
    Poly,
    exact_divide,
    order,
    partial,
    restrict_to_line,
    root_multiplicity,
    substitute,
)
from services.local_algebra_service import LocalAlgebraService, polynomial_gcd, require_curve_germ


def form_order(w: OneForm) -> int:
    """Algebraic multiplicity min(order(A), order(B))"""
    return int(min(order(w.A), order(w.B)))


def wedge_coefficient(w1: OneForm, w2: OneForm) -> Poly:
    return w1.A * w2.B - w2.A * w1.B


def pullback_form(w: OneForm, sx: Poly, sy: Poly) -> OneForm:
    """Pull w back along the polynomial map (x, y) -> (sx, sy)"""
    a = substitute(w.A, sx, sy)
    b = substitute(w.B, sx, sy)
    return OneForm(
        A=a * partial(sx, 'x') + b * partial(sy, 'x'),
        B=a * partial(sx, 'y') + b * partial(sy, 'y'),
    )


def index_for_tangent(w: OneForm, tangent: TangentLine) -> ExtendedInt:
    degree = form_order(w)
    restricted = restrict_to_line(w.A, degree) + restrict_to_line(w.B, degree).times_variable()
    return root_multiplicity(restricted, -tangent.epsilon)


class SaitoService:
    """Saito criterion, cofactors, indices and the blow-up formula for mu - tau"""

    def __init__(self, local_algebra: Optional[LocalAlgebraService] = None,
                 max_workers: Optional[int] = None, config=None):
        config = config or get_config()
        self.local_algebra = local_algebra or LocalAlgebraService(config=config)
        self.max_workers = max_workers or config.get_engine_config()['max_workers']
        self.logger = get_logger(__name__)

    def check_saito_basis(self, f: Poly, w1: OneForm, w2: OneForm) -> SaitoCheck:
        require_curve_germ(f)
        wedge = wedge_coefficient(w1, w2)
        try:
            unit = exact_divide(wedge, f)
        except NotDivisibleError:
            check = SaitoCheck(is_basis=False, divisible=False, unit=None,
                               unit_at_origin=Fraction(0), wedge=wedge)
        else:
            at_origin = unit.constant_term()
            check = SaitoCheck(is_basis=at_origin != 0, divisible=True, unit=unit,
                               unit_at_origin=at_origin, wedge=wedge)

        self.logger.info(
            "Saito criterion evaluated",
            extra={
                "operation": "check_saito_basis",
                "curve": str(f),
                "divisible": check.divisible,
                "is_basis": check.is_basis,
                "unit": str(check.unit) if check.unit is not None else None,
            },
        )
        return check

    def cofactor(self, f: Poly, w: OneForm) -> Poly:
        if f.is_zero():
            raise NotACurveGermError("the zero polynomial does not define a curve")
        numerator = w.A * partial(f, 'y') - w.B * partial(f, 'x')
        try:
            return exact_divide(numerator, f)
        except NotDivisibleError as e:
            raise NotInvariantError(f"{f} is not invariant for the form {w.to_dict()}") from e

    def index(self, f: Poly, w: OneForm) -> ExtendedInt:
        return index_for_tangent(w, self.local_algebra.tangent_line(f))

    def _transform_invariants(self, transform: Poly) -> Tuple[int, int]:
        if order(transform) <= 1:
            # regular point
            return 0, 0
        return self.local_algebra.milnor(transform), self.local_algebra.tjurina(transform)

    def _diagnostics(self, f_y: Poly, forms: Tuple[OneForm, OneForm],
                     cofactors: Tuple[Poly, Poly]) -> Dict[str, Poly]:
        diagnostics = {}
        for position, (w, g) in enumerate(zip(forms, cofactors), start=1):
            diagnostics[f"gcd(B{position},f_y)"] = polynomial_gcd([w.B, f_y])
            diagnostics[f"gcd(B{position},g{position})"] = polynomial_gcd([w.B, g])
        return diagnostics

    def _intersection_lemma(self, f_y: Poly, nu: int, good_basis: bool,
                            forms: Tuple[OneForm, OneForm], cofactors: Tuple[Poly, Poly],
                            indices: Tuple[ExtendedInt, ExtendedInt],
                            diagnostics: Dict[str, Poly]) -> Optional[int]:
        """I(f_y, B_k) - I(B_k, g_k) - nu + 1 for the index-realising form k, when it applies"""
        if not good_basis or min(indices) == INFINITY:
            return None
        k = 0 if indices[0] <= indices[1] else 1
        w, g = forms[k], cofactors[k]
        if order(g) != form_order(w) - 1:
            return None
        if not (diagnostics[f"gcd(B{k + 1},f_y)"].is_constant()
                and diagnostics[f"gcd(B{k + 1},g{k + 1})"].is_constant()):
            return None
        return int(
            self.local_algebra.intersection_multiplicity(f_y, w.B)
            - self.local_algebra.intersection_multiplicity(w.B, g)
            - nu + 1
        )

    @log_performance("verify_report")
    def verify_report(self, f: Poly, w1: OneForm, w2: OneForm) -> InvariantReport:
        check = self.check_saito_basis(f, w1, w2)
        if not check.is_basis:
            reason = ("w1 ^ w2 is not divisible by f" if not check.divisible
                      else "w1 ^ w2 = u*f with u(0,0) = 0")
            raise NotSaitoBasisError(f"not a Saito basis: {reason}")

        f_x, f_y = self.local_algebra.jacobian(f)
        shared = self.local_algebra.common_factor([f, f_x, f_y])
        if shared is not None:
            raise NonIsolatedSingularityError(
                f"{f} does not have an isolated singularity (common factor {shared})",
                common_factor=str(shared),
            )

        tangent = self.local_algebra.tangent_line(f)
        nu = tangent.nu
        forms = (w1, w2)
        nu1, nu2 = form_order(w1), form_order(w2)
        good_basis = nu1 + nu2 == nu

        try:
            cofactors = (self.cofactor(f, w1), self.cofactor(f, w2))
        except NotInvariantError as e:
            raise NotSaitoBasisError(str(e)) from e

        indices = (index_for_tangent(w1, tangent), index_for_tangent(w2, tangent))
        lowest = min(indices)
        curve_index = None if lowest == INFINITY else int(lowest)
        if curve_index is None:
            status = CurveIndexStatus.UNDEFINED
        elif good_basis:
            status = CurveIndexStatus.EXACT
        else:
            status = CurveIndexStatus.CANDIDATE_UPPER_BOUND

        transform, _ = self.local_algebra.strict_transform(f)

        # independent colength computations
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            mu_future = executor.submit(self.local_algebra.milnor, f)
            tau_future = executor.submit(self.local_algebra.tjurina, f)
            igg_future = executor.submit(self.local_algebra.intersection_multiplicity, *cofactors)
            tilde_future = executor.submit(self._transform_invariants, transform)
            mu, tau = mu_future.result(), tau_future.result()
            igg = igg_future.result()
            mu_tilde, tau_tilde = tilde_future.result()

        lhs = mu - tau
        rhs = None
        if curve_index is not None:
            rhs = (mu_tilde - tau_tilde) + (nu1 - 1) * (nu2 - 1) + curve_index - 1

        diagnostics = self._diagnostics(f_y, forms, cofactors)
        lemma_rhs = self._intersection_lemma(f_y, nu, good_basis, forms, cofactors, indices, diagnostics)

        report = InvariantReport(
            nu=nu,
            nu1=nu1,
            nu2=nu2,
            good_basis=good_basis,
            unit=check.unit,
            g1=cofactors[0],
            g2=cofactors[1],
            cofactor_orders=(order(cofactors[0]), order(cofactors[1])),
            mu=mu,
            tau=tau,
            i1=indices[0],
            i2=indices[1],
            curve_index=curve_index,
            curve_index_status=status,
            mu_tilde=mu_tilde,
            tau_tilde=tau_tilde,
            lhs=lhs,
            igg=igg,
            rhs=rhs,
            formula_holds=rhs is not None and lhs == rhs,
            mu_tau_identity_holds=lhs == igg,
            intersection_lemma_rhs=lemma_rhs,
            diagnostics=diagnostics,
        )

        log_result_event(
            self.logger,
            "invariant_report",
            curve=str(f),
            mu=mu,
            tau=tau,
            igg=igg,
            good_basis=good_basis,
            formula_lhs=lhs,
            formula_rhs=rhs,
            formula_holds=report.formula_holds,
        )
        if not report.mu_tau_identity_holds:
            self.logger.error(
                "mu - tau differs from I(g1, g2)",
                extra={"operation": "verify_report", "curve": str(f), "lhs": lhs, "igg": igg},
            )
        return report
