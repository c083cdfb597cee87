"""
Marshmallow schemas for command input
Validation of command arguments and curve files
"""
from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from cli.curve_file import CurveFile
from exceptions import PolynomialParseError
from models.models import OneForm
from models.parser import parse_poly
from models.polynomial import Poly
from utils import parse_int_list


class PolyField(fields.Field):
    """Polynomial expression <-> Poly (canonical string form on output)"""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return str(value)

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, Poly):
            return value
        if not isinstance(value, str):
            raise ValidationError('Polynomial must be given as an expression string')
        try:
            return parse_poly(value)
        except PolynomialParseError as e:
            raise ValidationError(str(e)) from e


class ExponentListField(fields.Field):
    """'9,12,17' or [9, 12, 17] -> [9, 12, 17]"""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return ','.join(str(b) for b in value)

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, str):
            try:
                return parse_int_list(value)
            except ValueError as e:
                raise ValidationError('Exponents must be comma separated natural numbers') from e
        if isinstance(value, (list, tuple)) and all(
                isinstance(b, int) and not isinstance(b, bool) for b in value):
            return list(value)
        raise ValidationError('Exponents must be comma separated natural numbers')


class TopoRequestSchema(Schema):
    """topo command schema"""
    exponents = ExponentListField(
        required=True,
        validate=validate.Length(min=1),
        error_messages={'required': 'Characteristic exponents are required'}
    )


class VerifyRequestSchema(Schema):
    """verify and curve command schema"""
    path = fields.Str(
        required=True,
        validate=validate.Length(min=1),
        error_messages={'required': 'Curve file path is required'}
    )


class RunOptionsSchema(Schema):
    """Global options schema"""
    colength_cap = fields.Integer(
        allow_none=True,
        load_default=None,
        validate=validate.Range(min=2, error='Colength cap must be at least 2')
    )
    json = fields.Boolean(load_default=False)


class ScanRequestSchema(Schema):
    """scan command schema"""
    max_beta0 = fields.Integer(
        required=True,
        validate=validate.Range(min=2, error='max-beta0 must be at least 2')
    )
    max_beta1 = fields.Integer(
        required=True,
        validate=validate.Range(min=2, error='max-beta1 must be at least 2')
    )
    max_pairs = fields.Integer(
        required=True,
        validate=validate.Range(min=1, error='max-pairs must be at least 1')
    )
    jobs = fields.Integer(
        allow_none=True,
        load_default=None,
        validate=validate.Range(min=1, error='jobs must be at least 1')
    )


class BoundRequestSchema(Schema):
    """bound command schema"""
    mu = fields.Integer(
        required=True,
        validate=validate.Range(min=0, error='mu must be a natural number'),
        error_messages={'invalid': 'mu must be a natural number'}
    )


class SampleRequestSchema(Schema):
    """sample command schema"""
    exponents = ExponentListField(
        required=True,
        validate=validate.Length(equal=2, error='Sampling needs exactly one characteristic pair')
    )
    samples = fields.Integer(required=True, validate=validate.Range(min=1))
    seed = fields.Integer(required=True)
    coefficient_range = fields.Integer(required=True, validate=validate.Range(min=1))


class CurveFileSchema(Schema):
    """Curve file schema: f plus optional complete pairs of form coefficients"""
    f = PolyField(required=True, error_messages={'required': 'The curve f is required'})
    omega1_A = PolyField(data_key='omega1.A', load_default=None, allow_none=True)
    omega1_B = PolyField(data_key='omega1.B', load_default=None, allow_none=True)
    omega2_A = PolyField(data_key='omega2.A', load_default=None, allow_none=True)
    omega2_B = PolyField(data_key='omega2.B', load_default=None, allow_none=True)

    @validates_schema
    def validate_pairs(self, data, **kwargs):
        """Each form is given completely or not at all"""
        present = [data.get(key) is not None for key in ('omega1_A', 'omega1_B', 'omega2_A', 'omega2_B')]
        if present[0] != present[1]:
            raise ValidationError('omega1 needs both A and B')
        if present[2] != present[3]:
            raise ValidationError('omega2 needs both A and B')
        if present[0] != present[2]:
            raise ValidationError('give both forms of the basis or neither')
        if data.get('f') is not None and data['f'].is_zero():
            raise ValidationError('f must be a nonzero polynomial', 'f')

    @post_load
    def make_curve_file(self, data, **kwargs):
        forms = []
        for prefix in ('omega1', 'omega2'):
            a, b = data.get(f'{prefix}_A'), data.get(f'{prefix}_B')
            if a is None:
                forms.append(None)
                continue
            try:
                forms.append(OneForm(A=a, B=b))
            except ValueError as e:
                raise ValidationError(str(e), prefix) from e
        return CurveFile(f=data['f'], omega1=forms[0], omega2=forms[1])


topo_request_schema = TopoRequestSchema()
verify_request_schema = VerifyRequestSchema()
run_options_schema = RunOptionsSchema()
scan_request_schema = ScanRequestSchema()
bound_request_schema = BoundRequestSchema()
sample_request_schema = SampleRequestSchema()
curve_file_schema = CurveFileSchema()


def validate_topo_request(data: dict) -> dict:
    """Validate topo command arguments"""
    return topo_request_schema.load(data)


def validate_verify_request(data: dict) -> dict:
    """Validate verify/curve command arguments"""
    return verify_request_schema.load(data)


def validate_run_options(data: dict) -> dict:
    """Validate the global command-line options"""
    return run_options_schema.load(data)


def validate_scan_request(data: dict) -> dict:
    """Validate scan command arguments"""
    return scan_request_schema.load(data)


def validate_bound_request(data: dict) -> dict:
    """Validate bound command arguments"""
    return bound_request_schema.load(data)


def validate_sample_request(data: dict) -> dict:
    """Validate sample command arguments"""
    return sample_request_schema.load(data)


def load_curve_file(entries: dict) -> CurveFile:
    """Validate the key/expression entries of a curve file"""
    return curve_file_schema.load(entries)
