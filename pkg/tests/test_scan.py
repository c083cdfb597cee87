import pytest

from models.models import ClassCheck
from services.scan_service import ScanService
from services.topology_service import validate_exponents


@pytest.fixture
def scan(topology, config):
    return ScanService(topology=topology, config=config)


def test_full_scan_has_no_violations(scan):
    report = scan.scan_classes(12, 40, 2, jobs=4)
    assert report.classes_checked > 0
    assert report.violations == ()
    assert report.min_slack_witness is not None
    assert report.min_bound_margin_witness is not None
    assert (report.max_beta0, report.max_beta1, report.max_pairs) == (12, 40, 2)


def test_scan_of_multiplicity_two(scan):
    report = scan.scan_classes(2, 9, 1, keep_results=True)
    assert report.classes_checked == 4
    assert [check.exponents.beta for check in report.results] == [(2, 3), (2, 5), (2, 7), (2, 9)]
    assert all(check.tau_min == check.mu for check in report.results)


def test_results_are_dropped_unless_requested(scan):
    assert scan.scan_classes(2, 9, 1).results == ()


def test_results_keep_lexicographic_order_with_workers(scan):
    report = scan.scan_classes(6, 20, 2, jobs=3, keep_results=True)
    betas = [check.exponents.beta for check in report.results]
    assert betas == sorted(betas)


def test_worker_processes_match_the_serial_scan(scan):
    classes = [validate_exponents(beta) for beta in ([4, 6, 19], [9, 12, 17], [5, 7], [3, 7])]
    serial = scan.scan_exponents(classes, jobs=1, keep_results=True)
    parallel = scan.scan_exponents(classes, jobs=2, keep_results=True)
    assert parallel.results == serial.results
    assert parallel.violations == ()


@pytest.mark.parametrize('beta, slack, floor', [
    ([9, 12, 17], 26, 17),
    ([141, 142], 420, 140),
])
def test_singleton_scans(scan, beta, slack, floor):
    report = scan.scan_exponents([validate_exponents(beta)])
    assert report.classes_checked == 1
    assert report.violations == ()
    witness = report.min_slack_witness
    assert (witness.slack, witness.slack_floor) == (slack, floor)
    assert witness.slack >= witness.slack_floor


def test_bound_margin_witness_minimises_the_margin(scan):
    report = scan.scan_classes(5, 12, 1, keep_results=True)
    margins = [check.tau_min - check.dg_bound for check in report.results]
    witness = report.min_bound_margin_witness
    assert witness.tau_min - witness.dg_bound == min(margins)


def test_violations_are_collected(scan, monkeypatch):
    def failing(c):
        return ClassCheck(exponents=c, mu=0, tau_min=0, dg_bound=0, slack=0,
                          slack_floor=0, identity_value=0, failed_checks=("consistency",))

    monkeypatch.setattr(scan.topology, 'check_class', failing)
    report = scan.scan_exponents([validate_exponents([2, 3]), validate_exponents([3, 4])])
    assert len(report.violations) == 2
    assert report.min_slack_witness is None


@pytest.mark.parametrize('bounds', [(1, 9, 1), (2, 1, 1), (2, 9, 0)])
def test_scan_bounds_are_validated(scan, bounds):
    with pytest.raises(ValueError):
        scan.scan_classes(*bounds)
