import math
from fractions import Fraction

import pytest
from marshmallow import ValidationError

from cli.curve_file import parse_curve_text
from cli.report_schemas import (
    ExtendedIntegerField,
    envelope,
    sample_report_schema,
    scan_report_schema,
    topo_report_schema,
    verify_report_schema,
)
from cli.schemas import (
    load_curve_file,
    validate_bound_request,
    validate_run_options,
    validate_scan_request,
    validate_topo_request,
)
from exceptions import CurveFileError
from models.models import CurveIndexStatus, SampleReport, ScanReport
from models.parser import parse_poly
from services.topology_service import validate_exponents
from tests.conftest import TWO_STAGE


def test_topo_request_accepts_lists_and_strings():
    assert validate_topo_request({'exponents': '9, 12, 17'})['exponents'] == [9, 12, 17]
    assert validate_topo_request({'exponents': [2, 3]})['exponents'] == [2, 3]
    with pytest.raises(ValidationError):
        validate_topo_request({'exponents': '9,,12'})
    with pytest.raises(ValidationError):
        validate_topo_request({})


def test_run_options_defaults():
    assert validate_run_options({}) == {'colength_cap': None, 'json': False}


def test_scan_request_converts_strings():
    request = validate_scan_request({'max_beta0': '12', 'max_beta1': '40', 'max_pairs': '2', 'jobs': None})
    assert request == {'max_beta0': 12, 'max_beta1': 40, 'max_pairs': 2, 'jobs': None}


def test_bound_request_message():
    with pytest.raises(ValidationError) as err:
        validate_bound_request({'mu': 'x'})
    assert err.value.messages == {'mu': ['mu must be a natural number']}


def test_curve_file_round_trip():
    entries = parse_curve_text(
        '# comment line\n'
        'f = "y^2 - x^3"   # trailing comment\n'
        'omega1.A = "3*y"\n'
        'omega1.B = "-2*x"\n'
        'omega2.A = "-3*x^2"\n'
        'omega2.B = "2*y"\n'
    )
    curve = load_curve_file(entries)
    assert curve.f == parse_poly("y^2 - x^3")
    assert curve.has_basis
    assert curve.omega1.B == parse_poly("-2*x")


def test_curve_file_without_basis():
    curve = load_curve_file(parse_curve_text('f = "x^2 - y^5"'))
    assert not curve.has_basis


@pytest.mark.parametrize('text', ['f = y^2', 'f = "x"\nf = "y"', 'g = "x"'])
def test_malformed_curve_text(text):
    with pytest.raises(CurveFileError):
        parse_curve_text(text)


@pytest.mark.parametrize('entries, key', [
    ({'f': 'y^2 - 3x'}, 'f'),
    ({'f': '0'}, 'f'),
    ({'f': 'y^2 - x^3', 'omega1.A': 'y'}, '_schema'),
    ({'f': 'y^2 - x^3', 'omega1.A': 'y', 'omega1.B': 'x'}, '_schema'),
    ({'f': 'y^2 - x^3', 'omega1.A': '0', 'omega1.B': '0', 'omega2.A': 'x', 'omega2.B': 'y'}, 'omega1'),
])
def test_curve_file_validation(entries, key):
    with pytest.raises(ValidationError) as err:
        load_curve_file(entries)
    assert key in err.value.messages


def test_parse_error_message_keeps_the_position():
    with pytest.raises(ValidationError) as err:
        load_curve_file({'f': 'y^2 - 3x'})
    assert 'at position 7' in err.value.messages['f'][0]


def test_extended_integers():
    field = ExtendedIntegerField()
    assert field.serialize('v', {'v': math.inf}) == 'inf'
    assert field.serialize('v', {'v': 12}) == '12'
    assert field.deserialize('inf') == math.inf
    with pytest.raises(ValidationError):
        field.deserialize('infinite')


def test_topo_report_loads_back(topology):
    chain = topology.resolution_chain(validate_exponents([9, 12, 17]))
    dumped = topo_report_schema.dump(envelope('topo', chain, dg_bound=76, slack=26, dg_inequality_holds=True))
    loaded = topo_report_schema.load(dumped)
    assert loaded['exponents'].beta == (9, 12, 17)
    assert loaded['tau_min'] == 80
    assert [stage['contribution'] for stage in loaded['stages']] == [15, 1, 1, 1, 0, 0]


def test_verify_report_loads_back(saito):
    f, w1, w2 = TWO_STAGE
    check = saito.check_saito_basis(f, w1, w2)
    report = saito.verify_report(f, w1, w2)
    dumped = verify_report_schema.dump(envelope('verify', path='two_stage.curve', f=f, saito=check, report=report))
    loaded = verify_report_schema.load(dumped)
    assert loaded['f'] == f
    assert loaded['saito']['unit_at_origin'] == Fraction(-24200)
    assert loaded['report']['curve_index_status'] is CurveIndexStatus.EXACT
    assert loaded['report']['g2'] == report.g2
    assert loaded['report']['i2'] == 4
    assert 'curve_index_exact' not in loaded['report']


def test_scan_report_with_no_witnesses():
    report = ScanReport(max_beta0=None, max_beta1=None, max_pairs=None, classes_checked=0,
                        violations=(), min_slack_witness=None, min_bound_margin_witness=None,
                        elapsed_seconds=0.0)
    dumped = scan_report_schema.dump(envelope('scan', report))
    assert dumped['min_slack_witness'] is None
    assert scan_report_schema.load(dumped)['classes_checked'] == 0


def test_sample_report_derived_fields_are_dump_only():
    report = SampleReport(exponents=validate_exponents([3, 7]), mu=12, tau_min=11,
                          samples=3, seed=0, observed=(11, 12, 11))
    dumped = sample_report_schema.dump(envelope('sample', report))
    assert (dumped['min_tau'], dumped['max_tau'], dumped['reaches_tau_min']) == ('11', '12', True)
    loaded = sample_report_schema.load(dumped)
    assert 'min_tau' not in loaded
    assert loaded['observed'] == [11, 12, 11]
