from fractions import Fraction

import pytest

from exceptions import ExitCode, NonIsolatedSingularityError, NotACurveGermError, NotSingleLineError
from models.parser import parse_poly
from models.polynomial import INFINITY, X, Y, partial, substitute
from services.topology_service import TopologyService, validate_exponents
from tests.conftest import ONE_STAGE, TWO_STAGE, SEVEN_EIGHT


@pytest.mark.parametrize('text, mu, tau', [
    ("y^2 - x^3", 2, 2),
    ("y^3 - x^4", 6, 6),
    ("y^5 - x^6", 20, 20),
    ("y^5 - x^6 + x^4*y^3", 20, 19),
    ("y^5 - x^11 + x^6*y^3", 40, 36),
    ("y^7 - x^8 - 7*x^6*y^2 - 147/8*x^4*y^4", 42, 37),
])
def test_milnor_and_tjurina_numbers(local_algebra, text, mu, tau):
    f = parse_poly(text)
    assert local_algebra.milnor(f) == mu
    assert local_algebra.tjurina(f) == tau


def test_tjurina_is_invariant_under_linear_change(local_algebra):
    f = TWO_STAGE[0]
    assert local_algebra.tjurina(substitute(f, X, X + Y)) == 36


@pytest.mark.parametrize('curve, mu, nu', [(ONE_STAGE[0], 20, 5), (TWO_STAGE[0], 40, 5), (SEVEN_EIGHT[0], 42, 7)])
def test_polar_intersection_is_mu_plus_nu_minus_one(local_algebra, curve, mu, nu):
    assert local_algebra.intersection_multiplicity(partial(curve, 'y'), curve) == mu + nu - 1


def test_colength_reports_a_common_factor(local_algebra):
    result = local_algebra.colength([parse_poly("x*y"), parse_poly("x*y^2 + x^2*y")])
    assert result.exceeds_cap
    assert result.as_extended() == INFINITY
    assert result.common_factor is not None
    assert local_algebra.intersection_multiplicity(X, X * Y) == INFINITY


def test_colength_rejects_the_zero_ideal(local_algebra):
    with pytest.raises(ValueError):
        local_algebra.colength([parse_poly("0")])


def test_non_isolated_singularity(local_algebra):
    f = parse_poly("(y^2 - x^3)^2")
    assert not local_algebra.is_isolated(f)
    assert local_algebra.is_isolated(parse_poly("y^2 - x^3"))
    with pytest.raises(NonIsolatedSingularityError) as err:
        local_algebra.milnor(f)
    assert err.value.common_factor is not None


def test_curve_must_pass_through_the_origin(local_algebra):
    with pytest.raises(NotACurveGermError) as err:
        local_algebra.milnor(parse_poly("1 + x + y^2"))
    assert err.value.exit_code == ExitCode.INPUT_ERROR
    with pytest.raises(NotACurveGermError):
        local_algebra.curve_invariants(parse_poly("y^2 - x^3 + 1"))


def test_tangent_line_of_a_sheared_branch(local_algebra):
    sheared = substitute(TWO_STAGE[0], X, X + Y)
    tangent = local_algebra.tangent_line(sheared)
    assert tangent.nu == 5
    assert tangent.epsilon == 1
    assert local_algebra.tangent_line(SEVEN_EIGHT[0]).epsilon == 0


def test_tangent_line_with_rational_slope(local_algebra):
    tangent = local_algebra.tangent_line(parse_poly("(2*y - x)^2 - x^3"))
    assert tangent.epsilon == Fraction(-1, 2)


def test_tangent_cone_with_two_lines(local_algebra):
    with pytest.raises(NotSingleLineError) as err:
        local_algebra.tangent_line(parse_poly("x*y + x^3"))
    assert not err.value.vertical


def test_vertical_tangent(local_algebra):
    with pytest.raises(NotSingleLineError) as err:
        local_algebra.tangent_line(parse_poly("x^2 - y^3"))
    assert err.value.vertical


def test_strict_transform_of_a_two_stage_branch(local_algebra):
    transform, tangent = local_algebra.strict_transform(TWO_STAGE[0])
    assert tangent.nu == 5
    assert transform == ONE_STAGE[0]


def test_strict_transform_recentres_on_the_tangent(local_algebra):
    transform, _ = local_algebra.strict_transform(substitute(TWO_STAGE[0], X, X + Y))
    assert transform.constant_term() == 0
    assert local_algebra.milnor(transform) == 20


@pytest.mark.parametrize('curve, exponents', [
    (ONE_STAGE[0], [5, 6]),
    (TWO_STAGE[0], [5, 11]),
    (SEVEN_EIGHT[0], [7, 8]),
    (parse_poly("x^2 - y^5"), [2, 5]),
])
def test_multiplicity_sequence_matches_the_topology(local_algebra, curve, exponents):
    expected = TopologyService().multiplicity_sequence(validate_exponents(exponents))
    assert local_algebra.multiplicity_sequence(curve) == expected


def test_curve_invariants(local_algebra):
    invariants = local_algebra.curve_invariants(TWO_STAGE[0])
    assert (invariants.mu, invariants.tau, invariants.nu) == (40, 36, 5)
    assert invariants.multiplicity_sequence == (5, 5)
    assert invariants.strict_transform == ONE_STAGE[0]


def test_curve_invariants_with_a_vertical_tangent(local_algebra):
    invariants = local_algebra.curve_invariants(parse_poly("x^2 - y^3"))
    assert invariants.tangent is None
    assert invariants.vertical_tangent
    assert invariants.multiplicity_sequence == (2,)
    assert invariants.strict_transform == parse_poly("y^2 - x")
    assert not local_algebra.curve_invariants(TWO_STAGE[0]).vertical_tangent
