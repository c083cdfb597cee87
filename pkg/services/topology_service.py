"""
Topological invariants of plane branches from characteristic exponents.

Everything here is integer arithmetic on the exponent sequence
(beta_0; beta_1, ..., beta_s): the blow-up recursion, the multiplicity
sequence, the Milnor number, the stage table (n, p1, index, contribution)
and the minimal Tjurina number of the topological class.
"""
import math
from typing import Iterable, List, Sequence

from exceptions import InternalConsistencyError, InvalidExponentsError
from loki_logger import get_logger
from models.models import CharExponents, ClassCheck, ResolutionChain, ResolutionStage
from models.polynomial import Poly

SMOOTH = CharExponents(beta=(1,), gcd_chain=(1,))


def validate_exponents(beta: Iterable[int]) -> CharExponents:
    beta = list(beta)
    if not beta:
        raise InvalidExponentsError("empty exponent list")
    if any(isinstance(b, bool) or not isinstance(b, int) or b < 1 for b in beta):
        raise InvalidExponentsError("exponents must be positive integers", beta)
    if beta == [1]:
        return SMOOTH
    if beta[0] == 1:
        raise InvalidExponentsError("a smooth branch is encoded as [1] alone", beta)
    if any(later <= earlier for earlier, later in zip(beta, beta[1:])):
        raise InvalidExponentsError("exponents not strictly increasing", beta)

    chain = [beta[0]]
    for b in beta[1:]:
        e = math.gcd(chain[-1], b)
        if e >= chain[-1]:
            raise InvalidExponentsError("gcd chain not strictly decreasing", beta)
        chain.append(e)
    if chain[-1] != 1:
        raise InvalidExponentsError("gcd chain does not end in 1", beta)
    return CharExponents(beta=tuple(beta), gcd_chain=tuple(chain))


def blowup_exponents(c: CharExponents) -> CharExponents:
    """Characteristic exponents of the strict transform after one blow-up"""
    if c.is_smooth:
        raise InvalidExponentsError("cannot blow up a smooth branch", c.beta)
    b0, b1 = c.beta0, c.beta1
    tail = c.beta[2:]
    if b1 > 2 * b0:
        new_beta = [b0] + [b - b0 for b in c.beta[1:]]
    else:
        # b1 == 2*b0 is excluded by the strict gcd chain
        r = b1 - b0
        shifted = [b - b1 + b0 for b in tail]
        if b0 % r:
            new_beta = [r, b0] + shifted
        else:
            new_beta = [r] + shifted
    return validate_exponents(new_beta)


def milnor_from_sequence(seq: Sequence[int]) -> int:
    return sum(nu * (nu - 1) for nu in seq)


def conductor_crosscheck(c: CharExponents) -> int:
    """Conductor of the branch semigroup: sum (e_{i-1} - e_i) beta_i - beta_0 + 1"""
    if c.is_smooth:
        return 0
    total = sum(
        (c.gcd_chain[i - 1] - c.gcd_chain[i]) * c.beta[i]
        for i in range(1, len(c.beta))
    )
    return total - c.beta0 + 1


def _check_pair(beta0: int, beta1: int):
    if beta0 < 2 or beta1 <= beta0 or beta1 % beta0 == 0:
        raise InvalidExponentsError(
            "p1 needs 2 <= beta0 < beta1 with beta1 not a multiple of beta0", (beta0, beta1)
        )


def ceiling_ratio(beta0: int, beta1: int) -> int:
    """n = ceil(beta1 / (beta1 - beta0))"""
    return -(-beta1 // (beta1 - beta0))


def p1(beta0: int, beta1: int) -> int:
    _check_pair(beta0, beta1)
    n = ceiling_ratio(beta0, beta1)
    if beta0 % 2 == 0:
        if n == 2 or beta1 % 2 == 0:
            return 1
        return (n - 1) // 2 if n % 2 else (n - 2) // 2
    if n == 2:
        return 0
    if beta1 % 2:
        return 1
    return (n - 3) // 2 if n % 2 else (n - 2) // 2


def stage_index(beta0: int, beta1: int) -> int:
    value = beta0 // 2 + 1 - p1(beta0, beta1)
    if value < 1:
        raise InternalConsistencyError(f"p1 exceeds [beta0/2] for ({beta0},{beta1})")
    return value


def build_stage(c: CharExponents) -> ResolutionStage:
    b0, b1 = c.beta0, c.beta1
    nu1 = b0 // 2
    nu2 = b0 - nu1
    p = p1(b0, b1)
    index = stage_index(b0, b1)
    return ResolutionStage(
        exponents=c,
        multiplicity=b0,
        n=ceiling_ratio(b0, b1),
        p1=p,
        curve_index=index,
        nu1=nu1,
        nu2=nu2,
        contribution=(nu1 - 1) * (nu2 - 1) + index - 1,
    )


def closed_form_tau_min(stages: Sequence[ResolutionStage]) -> int:
    total = 0
    for stage in stages:
        nu, half = stage.multiplicity, stage.multiplicity // 2
        total += nu * nu + half * (half - nu - 1) - 1 + stage.p1
    return total


def dg_bound(mu: int) -> int:
    """Smallest integer t with 8t - 6mu + 1 >= sqrt(1 + 4mu)"""
    if mu < 0:
        raise ValueError("mu must be a natural number")
    radicand = 1 + 4 * mu
    root = math.isqrt(radicand)
    if root * root < radicand:
        root += 1
    return max(0, -(-(6 * mu - 1 + root) // 8))


def newton_representative(beta0: int, beta1: int) -> Poly:
    """y^beta0 - x^beta1, the quasi-homogeneous member of the class"""
    return Poly({(0, beta0): 1, (beta1, 0): -1})


class TopologyService:
    """Resolution chains and minimal Tjurina numbers of topological classes"""

    def __init__(self):
        self.logger = get_logger(__name__)

    def validate_exponents(self, beta: Iterable[int]) -> CharExponents:
        return validate_exponents(beta)

    def stages(self, c: CharExponents) -> List[ResolutionStage]:
        if c.is_smooth:
            raise InvalidExponentsError("the smooth branch has no resolution stages", c.beta)
        stages = []
        current = c
        # every singular stage adds nu(nu-1) >= 2 to the conductor
        limit = conductor_crosscheck(c) // 2
        while not current.is_smooth:
            if len(stages) > limit:
                raise InternalConsistencyError(f"blow-up recursion of {c} did not terminate")
            stages.append(build_stage(current))
            current = blowup_exponents(current)
        return stages

    def resolution_chain(self, c: CharExponents) -> ResolutionChain:
        stages = self.stages(c)
        mu = milnor_from_sequence([stage.multiplicity for stage in stages])
        conductor = conductor_crosscheck(c)
        if mu != conductor:
            raise InternalConsistencyError(
                f"multiplicity sequence gives mu={mu} but the conductor is {conductor} for {c}"
            )
        tau_min = mu - sum(stage.contribution for stage in stages)
        closed = closed_form_tau_min(stages)
        if closed != tau_min:
            raise InternalConsistencyError(
                f"closed form tau_min={closed} differs from recursive value {tau_min} for {c}"
            )

        self.logger.debug(
            "Resolution chain computed",
            extra={
                "operation": "resolution_chain",
                "exponents": list(c.beta),
                "multiplicities": [stage.multiplicity for stage in stages],
                "mu": mu,
                "tau_min": tau_min,
            },
        )
        return ResolutionChain(exponents=c, stages=tuple(stages), mu=mu, tau_min=tau_min)

    def tau_min(self, c: CharExponents) -> int:
        return self.resolution_chain(c).tau_min

    def multiplicity_sequence(self, c: CharExponents) -> List[int]:
        return [stage.multiplicity for stage in self.stages(c)]

    def check_class(self, c: CharExponents) -> ClassCheck:
        """Evaluate the lower-bound checks on one class; failures are recorded, not raised"""
        failed: List[str] = []
        try:
            chain = self.resolution_chain(c)
        except InternalConsistencyError as e:
            self.logger.error(
                "Self-check failed while building the resolution chain",
                extra={"operation": "check_class", "exponents": list(c.beta), "error": str(e)},
            )
            return ClassCheck(exponents=c, mu=0, tau_min=0, dg_bound=0, slack=0,
                              slack_floor=0, identity_value=0, failed_checks=("consistency",))

        mu, tau = chain.mu, chain.tau_min
        bound = dg_bound(mu)
        slack = 4 * tau - 3 * mu
        slack_floor = sum(nu - 1 for nu in chain.multiplicities)
        identity_value = sum(
            stage.multiplicity + parity_constant(stage.multiplicity) + 4 * (stage.p1 - 1)
            for stage in chain.stages
        )

        if slack <= 0:
            failed.append("4*tau_min > 3*mu")
        if tau < bound:
            failed.append("tau_min >= dg_bound")
        if slack < slack_floor:
            failed.append("slack >= sum(nu - 1)")
        if slack != identity_value:
            failed.append("slack identity")

        return ClassCheck(
            exponents=c,
            mu=mu,
            tau_min=tau,
            dg_bound=bound,
            slack=slack,
            slack_floor=slack_floor,
            identity_value=identity_value,
            failed_checks=tuple(failed),
        )


def parity_constant(nu: int) -> int:
    return 0 if nu % 2 == 0 else 3


def enumerate_classes(max_beta0: int, max_beta1: int, max_pairs: int) -> List[CharExponents]:
    """All valid singular exponent lists within the bounds, in lexicographic order"""
    classes: List[CharExponents] = []

    def extend(beta: List[int], e: int):
        if e == 1:
            classes.append(CharExponents(beta=tuple(beta), gcd_chain=tuple(_chain(beta))))
            return
        if len(beta) - 1 >= max_pairs:
            return
        for b in range(beta[-1] + 1, max_beta1 + 1):
            g = math.gcd(e, b)
            if g < e:
                extend(beta + [b], g)

    for beta0 in range(2, max_beta0 + 1):
        extend([beta0], beta0)
    classes.sort(key=lambda c: c.beta)
    return classes


def _chain(beta: Sequence[int]) -> List[int]:
    chain = [beta[0]]
    for b in beta[1:]:
        chain.append(math.gcd(chain[-1], b))
    return chain
