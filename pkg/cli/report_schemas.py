"""
Marshmallow schemas for machine-readable reports

Integers are written as decimal strings, values in N u {inf} as a decimal
string or "inf", polynomials in canonical form. Loading a dumped report
gives back the original field values.
"""
import dataclasses
from fractions import Fraction
from typing import Any, Dict

from marshmallow import EXCLUDE, Schema, ValidationError, fields

from cli.schemas import PolyField
from config import get_config
from exceptions import InvalidExponentsError
from models.models import CurveIndexStatus
from services.topology_service import validate_exponents
from utils import format_extended, parse_extended


class BigInteger(fields.Integer):
    def __init__(self, **kwargs):
        super().__init__(as_string=True, **kwargs)


class ExtendedIntegerField(fields.Field):
    """Natural number or infinity"""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_extended(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_extended(str(value))
        except ValueError as e:
            raise ValidationError('Expected a decimal integer or "inf"') from e


class RationalField(fields.Field):
    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return str(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError('Expected a rational number such as "-3/8"') from e


class ExponentsField(fields.Field):
    """CharExponents <-> [beta_0, ..., beta_s]"""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return list(value.beta)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return validate_exponents(value)
        except (InvalidExponentsError, TypeError) as e:
            raise ValidationError(str(e)) from e


class ReportSchema(Schema):
    """Fields shared by every report"""
    schema_version = fields.Str(required=True)
    command = fields.Str(required=True)

    class Meta:
        unknown = EXCLUDE
        ordered = True


class StageSchema(Schema):
    exponents = ExponentsField(required=True)
    multiplicity = BigInteger(required=True)
    n = BigInteger(required=True)
    p1 = BigInteger(required=True)
    curve_index = BigInteger(required=True)
    nu1 = BigInteger(required=True)
    nu2 = BigInteger(required=True)
    contribution = BigInteger(required=True)

    class Meta:
        ordered = True


class TopoReportSchema(ReportSchema):
    exponents = ExponentsField(required=True)
    stages = fields.List(fields.Nested(StageSchema), required=True)
    mu = BigInteger(required=True)
    tau_min = BigInteger(required=True)
    dg_bound = BigInteger(required=True)
    slack = BigInteger(required=True)
    dg_inequality_holds = fields.Boolean(required=True)


class SaitoCheckSchema(Schema):
    is_basis = fields.Boolean(required=True)
    divisible = fields.Boolean(required=True)
    unit = PolyField(allow_none=True)
    unit_at_origin = RationalField(required=True)
    wedge = PolyField(required=True)

    class Meta:
        ordered = True


class InvariantReportSchema(Schema):
    nu = BigInteger(required=True)
    nu1 = BigInteger(required=True)
    nu2 = BigInteger(required=True)
    good_basis = fields.Boolean(required=True)
    unit = PolyField(required=True)
    g1 = PolyField(required=True)
    g2 = PolyField(required=True)
    cofactor_orders = fields.List(ExtendedIntegerField(), required=True)
    mu = BigInteger(required=True)
    tau = BigInteger(required=True)
    i1 = ExtendedIntegerField(required=True)
    i2 = ExtendedIntegerField(required=True)
    curve_index = BigInteger(allow_none=True)
    curve_index_status = fields.Enum(CurveIndexStatus, by_value=True, required=True)
    curve_index_exact = fields.Boolean(dump_only=True)
    mu_tilde = BigInteger(required=True)
    tau_tilde = BigInteger(required=True)
    lhs = BigInteger(required=True)
    igg = ExtendedIntegerField(required=True)
    rhs = BigInteger(allow_none=True)
    formula_holds = fields.Boolean(required=True)
    mu_tau_identity_holds = fields.Boolean(required=True)
    intersection_lemma_rhs = BigInteger(allow_none=True)
    diagnostics = fields.Dict(keys=fields.Str(), values=PolyField())

    class Meta:
        unknown = EXCLUDE
        ordered = True


class VerifyReportSchema(ReportSchema):
    path = fields.Str(required=True)
    f = PolyField(required=True)
    saito = fields.Nested(SaitoCheckSchema, required=True)
    report = fields.Nested(InvariantReportSchema, allow_none=True)


class TangentSchema(Schema):
    epsilon = RationalField(required=True)
    nu = BigInteger(required=True)


class CurveReportSchema(ReportSchema):
    path = fields.Str(required=True)
    f = PolyField(required=True)
    nu = BigInteger(required=True)
    tangent = fields.Nested(TangentSchema, allow_none=True)
    mu = BigInteger(required=True)
    tau = BigInteger(required=True)
    multiplicity_sequence = fields.List(BigInteger(), required=True)
    strict_transform = PolyField(allow_none=True)
    vertical_tangent = fields.Boolean(load_default=False)


class ClassCheckSchema(Schema):
    exponents = ExponentsField(required=True)
    mu = BigInteger(required=True)
    tau_min = BigInteger(required=True)
    dg_bound = BigInteger(required=True)
    slack = BigInteger(required=True)
    slack_floor = BigInteger(required=True)
    identity_value = BigInteger(required=True)
    failed_checks = fields.List(fields.Str(), required=True)
    passed = fields.Boolean(dump_only=True)

    class Meta:
        unknown = EXCLUDE
        ordered = True


class ScanReportSchema(ReportSchema):
    max_beta0 = BigInteger(allow_none=True)
    max_beta1 = BigInteger(allow_none=True)
    max_pairs = BigInteger(allow_none=True)
    classes_checked = BigInteger(required=True)
    violations = fields.List(fields.Nested(ClassCheckSchema), required=True)
    min_slack_witness = fields.Nested(ClassCheckSchema, allow_none=True)
    min_bound_margin_witness = fields.Nested(ClassCheckSchema, allow_none=True)
    elapsed_seconds = fields.Float(required=True)


class BoundReportSchema(ReportSchema):
    mu = BigInteger(required=True)
    dg_bound = BigInteger(required=True)


class SampleReportSchema(ReportSchema):
    exponents = ExponentsField(required=True)
    mu = BigInteger(required=True)
    tau_min = BigInteger(required=True)
    samples = BigInteger(required=True)
    seed = fields.Integer(required=True)
    observed = fields.List(BigInteger(), required=True)
    min_tau = BigInteger(dump_only=True)
    max_tau = BigInteger(dump_only=True)
    reaches_tau_min = fields.Boolean(dump_only=True)


topo_report_schema = TopoReportSchema()
verify_report_schema = VerifyReportSchema()
curve_report_schema = CurveReportSchema()
scan_report_schema = ScanReportSchema()
bound_report_schema = BoundReportSchema()
sample_report_schema = SampleReportSchema()


def envelope(command: str, source: Any = None, **extra) -> Dict[str, Any]:
    """Report payload: schema version, command echo, the fields of `source` and extras"""
    payload: Dict[str, Any] = {
        'schema_version': get_config().REPORT_SCHEMA_VERSION,
        'command': command,
    }
    if source is not None:
        for field in dataclasses.fields(source):
            payload[field.name] = getattr(source, field.name)
        # derived properties carried by dump_only fields
        for name in ('min_tau', 'max_tau', 'reaches_tau_min'):
            if hasattr(source, name):
                payload[name] = getattr(source, name)
    payload.update(extra)
    return payload
