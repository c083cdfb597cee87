import random

import pytest

from models.polynomial import order
from services.sampling_service import SamplingService, monomials_above_newton, random_class_member


@pytest.fixture
def sampling(local_algebra, topology, config):
    return SamplingService(local_algebra=local_algebra, topology=topology, config=config)


def test_monomials_lie_strictly_above_the_newton_segment():
    monomials = monomials_above_newton(3, 7)
    assert (5, 1) in monomials
    assert (3, 2) in monomials
    assert (4, 1) not in monomials
    assert all(7 * b + 3 * a > 21 for a, b in monomials)


def test_random_members_are_reproducible():
    first = random_class_member(3, 7, random.Random(3), 9)
    second = random_class_member(3, 7, random.Random(3), 9)
    assert first == second
    assert order(first) == 3
    assert first.coefficient(0, 3) == 1
    assert first.coefficient(7, 0) == -1


def test_sampled_tjurina_numbers_stay_above_tau_min(sampling):
    report = sampling.sample_class_tjurina(3, 5, samples=3, seed=1)
    assert report.tau_min == 8
    assert len(report.observed) == 3
    assert report.min_tau >= report.tau_min
    assert report.max_tau <= report.mu


def test_sampling_uses_configured_defaults(sampling):
    report = sampling.sample_class_tjurina(2, 5)
    assert report.samples == 5
    assert report.seed == 0
    assert report.observed == (4, 4, 4, 4, 4)


@pytest.mark.slow
def test_generic_member_reaches_tau_min(sampling):
    report = sampling.sample_class_tjurina(3, 7, samples=20, seed=0)
    assert report.mu == 12
    assert report.tau_min == 11
    assert report.min_tau == 11
    assert report.reaches_tau_min


def test_sampling_rejects_bad_arguments(sampling):
    with pytest.raises(ValueError):
        sampling.sample_class_tjurina(3, 7, samples=0)
    with pytest.raises(ValueError):
        sampling.sample_class_tjurina(3, 6)
