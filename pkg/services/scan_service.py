import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from config import get_config
from loki_logger import get_logger, log_performance, log_result_event
from models.models import CharExponents, ClassCheck, ScanReport
from services.topology_service import TopologyService, enumerate_classes


class ScanService:
    """Bulk verification of the tau_min lower bounds over ranges of topological classes"""

    def __init__(self, topology: Optional[TopologyService] = None,
                 jobs: Optional[int] = None, config=None):
        config = config or get_config()
        self.topology = topology or TopologyService()
        self.jobs = jobs or config.get_scan_config()['jobs']
        self.logger = get_logger(__name__)

    def scan_exponents(self, classes: Sequence[CharExponents], jobs: Optional[int] = None,
                       bounds: Optional[dict] = None, keep_results: bool = False) -> ScanReport:
        jobs = jobs or self.jobs
        bounds = bounds or {}
        started = time.perf_counter()

        if jobs > 1 and len(classes) > 1:
            # check_class runs in worker processes, so it and its results must pickle
            chunksize = max(1, len(classes) // (4 * jobs))
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                results = list(executor.map(self.topology.check_class, classes, chunksize=chunksize))
        else:
            results = [self.topology.check_class(c) for c in classes]
        results.sort(key=lambda check: check.exponents.beta)

        violations = tuple(check for check in results if not check.passed)
        healthy = [check for check in results if check.passed]
        min_slack = min(healthy, key=lambda check: check.slack - check.slack_floor, default=None)
        min_margin = min(healthy, key=lambda check: check.tau_min - check.dg_bound, default=None)
        elapsed = time.perf_counter() - started

        for check in violations:
            self.logger.error(
                "Class violates the tau_min lower bounds",
                extra={
                    "operation": "scan_exponents",
                    "exponents": list(check.exponents.beta),
                    "failed_checks": list(check.failed_checks),
                    "mu": check.mu,
                    "tau_min": check.tau_min,
                },
            )

        log_result_event(
            self.logger,
            "scan_completed",
            classes_checked=len(results),
            violations=len(violations),
            jobs=jobs,
            elapsed_seconds=round(elapsed, 4),
        )

        return ScanReport(
            max_beta0=bounds.get('max_beta0'),
            max_beta1=bounds.get('max_beta1'),
            max_pairs=bounds.get('max_pairs'),
            classes_checked=len(results),
            violations=violations,
            min_slack_witness=min_slack,
            min_bound_margin_witness=min_margin,
            elapsed_seconds=elapsed,
            results=tuple(results) if keep_results else (),
        )

    @log_performance("scan_classes")
    def scan_classes(self, max_beta0: int, max_beta1: int, max_pairs: int,
                     jobs: Optional[int] = None, keep_results: bool = False) -> ScanReport:
        if max_beta0 < 2 or max_beta1 < 2:
            raise ValueError("scan bounds must be at least 2")
        if max_pairs < 1:
            raise ValueError("max_pairs must be at least 1")

        classes = enumerate_classes(max_beta0, max_beta1, max_pairs)
        self.logger.info(
            "Scanning topological classes",
            extra={
                "operation": "scan_classes",
                "max_beta0": max_beta0,
                "max_beta1": max_beta1,
                "max_pairs": max_pairs,
                "class_count": len(classes),
            },
        )
        return self.scan_exponents(
            classes,
            jobs=jobs,
            bounds={"max_beta0": max_beta0, "max_beta1": max_beta1, "max_pairs": max_pairs},
            keep_results=keep_results,
        )

    def check_class(self, c: CharExponents) -> ClassCheck:
        return self.topology.check_class(c)
