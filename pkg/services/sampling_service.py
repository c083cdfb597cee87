"""
Genericity spot-checks: the Tjurina number of random members of a class.

Members of the class of y^b0 - x^b1 are drawn by adding terms strictly
above the Newton segment, so the topology does not change. Their Tjurina
numbers are computed with the colength engine and compared with tau_min.
"""
import random
from typing import List, Optional, Tuple

from config import get_config
from loki_logger import get_logger, log_performance, log_result_event
from models.models import SampleReport
from models.polynomial import Poly
from services.local_algebra_service import LocalAlgebraService
from services.topology_service import TopologyService, newton_representative, validate_exponents


def monomials_above_newton(beta0: int, beta1: int) -> List[Tuple[int, int]]:
    return [
        (a, b)
        for b in range(beta0)
        for a in range(beta1)
        if beta1 * b + beta0 * a > beta0 * beta1
    ]


def random_class_member(beta0: int, beta1: int, rng: random.Random,
                        coefficient_range: int) -> Poly:
    choices = [c for c in range(-coefficient_range, coefficient_range + 1) if c != 0]
    terms = {monomial: rng.choice(choices) for monomial in monomials_above_newton(beta0, beta1)}
    return newton_representative(beta0, beta1) + Poly(terms)


class SamplingService:
    def __init__(self, local_algebra: Optional[LocalAlgebraService] = None,
                 topology: Optional[TopologyService] = None, config=None):
        config = config or get_config()
        self.sample_config = config.get_sample_config()
        self.local_algebra = local_algebra or LocalAlgebraService(config=config)
        self.topology = topology or TopologyService()
        self.logger = get_logger(__name__)

    @log_performance("sample_class_tjurina")
    def sample_class_tjurina(self, beta0: int, beta1: int, samples: Optional[int] = None,
                             seed: Optional[int] = None,
                             coefficient_range: Optional[int] = None) -> SampleReport:
        samples = samples if samples is not None else self.sample_config['samples']
        seed = seed if seed is not None else self.sample_config['seed']
        coefficient_range = coefficient_range or self.sample_config['coefficient_range']
        if samples < 1:
            raise ValueError("samples must be at least 1")
        if coefficient_range < 1:
            raise ValueError("coefficient_range must be at least 1")

        exponents = validate_exponents([beta0, beta1])
        chain = self.topology.resolution_chain(exponents)
        rng = random.Random(seed)

        observed = []
        for draw in range(samples):
            member = random_class_member(beta0, beta1, rng, coefficient_range)
            tau = self.local_algebra.tjurina(member)
            self.logger.debug(
                "Sampled class member",
                extra={"operation": "sample_class_tjurina", "draw": draw, "curve": str(member), "tau": tau},
            )
            observed.append(tau)

        report = SampleReport(
            exponents=exponents,
            mu=chain.mu,
            tau_min=chain.tau_min,
            samples=samples,
            seed=seed,
            observed=tuple(observed),
        )
        log_result_event(
            self.logger,
            "class_sampled",
            exponents=list(exponents.beta),
            tau_min=chain.tau_min,
            min_tau=report.min_tau,
            max_tau=report.max_tau,
        )
        if report.min_tau < chain.tau_min:
            self.logger.error(
                "Observed Tjurina number below tau_min",
                extra={"operation": "sample_class_tjurina", "exponents": list(exponents.beta),
                       "min_tau": report.min_tau, "tau_min": chain.tau_min},
            )
        return report
