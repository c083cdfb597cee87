"""
Command handlers for the plane-branch toolkit CLI.

Each handler validates its arguments with the request schemas, runs the
services and returns a CommandResult; the entry point prints the output
once. Toolkit errors propagate and are mapped to exit codes by the caller.
"""
import json
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from cli.curve_file import CurveFile, read_curve_file
from cli.report_schemas import (
    bound_report_schema,
    curve_report_schema,
    envelope,
    sample_report_schema,
    scan_report_schema,
    topo_report_schema,
    verify_report_schema,
)
from cli.schemas import (
    load_curve_file,
    validate_bound_request,
    validate_sample_request,
    validate_scan_request,
    validate_topo_request,
    validate_verify_request,
)
from config import get_config
from exceptions import CurveFileError, ExitCode
from loki_logger import get_logger
from models.models import (
    ClassCheck,
    CurveInvariants,
    InvariantReport,
    ResolutionChain,
    SaitoCheck,
    SampleReport,
    ScanReport,
)
from services.local_algebra_service import LocalAlgebraService
from services.saito_service import SaitoService
from services.sampling_service import SamplingService
from services.scan_service import ScanService
from services.topology_service import TopologyService, dg_bound
from utils import format_extended

logger = get_logger(__name__)


@dataclass
class CommandResult:
    exit_code: ExitCode
    output: str


class CommandContext:
    """Services shared by the commands of one run"""

    def __init__(self, config=None, colength_cap: Optional[int] = None, as_json: bool = False):
        self.config = config or get_config()
        self.as_json = as_json
        self.local_algebra = LocalAlgebraService(colength_cap=colength_cap, config=self.config)
        self.topology = TopologyService()
        self.saito = SaitoService(local_algebra=self.local_algebra, config=self.config)
        self.scan = ScanService(topology=self.topology, config=self.config)
        self.sampling = SamplingService(local_algebra=self.local_algebra,
                                        topology=self.topology, config=self.config)


def _render_json(schema, payload) -> str:
    return json.dumps(schema.dump(payload), indent=2)


# -- topo ----------------------------------------------------------------

def format_chain(chain: ResolutionChain, bound: int) -> str:
    header = f"{'stage':>5}  {'exponents':<16}{'nu':>4}{'n':>5}{'p1':>5}{'index':>7}{'nu1':>5}{'nu2':>5}{'contribution':>14}"
    lines = [f"characteristic exponents {chain.exponents}", header]
    for number, stage in enumerate(chain.stages, start=1):
        lines.append(
            f"{number:>5}  {str(stage.exponents):<16}{stage.multiplicity:>4}{stage.n:>5}"
            f"{stage.p1:>5}{stage.curve_index:>7}{stage.nu1:>5}{stage.nu2:>5}{stage.contribution:>14}"
        )
    slack = 4 * chain.tau_min - 3 * chain.mu
    lines += [
        f"mu = {chain.mu}",
        f"tau_min = {chain.tau_min}",
        f"dg_bound = {bound}",
        f"4*tau_min > 3*mu: {'yes' if slack > 0 else 'NO'} (4*tau_min - 3*mu = {slack})",
    ]
    return '\n'.join(lines)


def cmd_topo(context: CommandContext, exponents: str) -> CommandResult:
    request = validate_topo_request({'exponents': exponents})
    c = context.topology.validate_exponents(request['exponents'])
    chain = context.topology.resolution_chain(c)
    bound = dg_bound(chain.mu)

    if context.as_json:
        slack = 4 * chain.tau_min - 3 * chain.mu
        payload = envelope('topo', chain, dg_bound=bound, slack=slack, dg_inequality_holds=slack > 0)
        return CommandResult(ExitCode.SUCCESS, _render_json(topo_report_schema, payload))
    return CommandResult(ExitCode.SUCCESS, format_chain(chain, bound))


# -- verify --------------------------------------------------------------

def _load_curve(path: str) -> CurveFile:
    validate_verify_request({'path': path})
    return load_curve_file(read_curve_file(path))


def format_saito_check(check: SaitoCheck) -> str:
    if not check.divisible:
        return "Saito criterion: FAILS (w1 ^ w2 is not divisible by f)"
    if not check.is_basis:
        return f"Saito criterion: FAILS (w1 ^ w2 = u*f with u = {check.unit}, u(0,0) = 0)"
    return f"Saito criterion: passes (w1 ^ w2 = u*f with u = {check.unit})"


def formula_headline(report: InvariantReport) -> str:
    if report.rhs is None:
        return (f"good basis: {'yes' if report.good_basis else 'no'}; "
                f"formula undefined (both forms dicritical)")
    if not report.good_basis:
        if report.formula_holds:
            return f"good basis: no; formula {report.lhs} = {report.rhs} (holds without a good basis)"
        return f"good basis: no; formula {report.lhs} != {report.rhs} (expected: no good basis)"
    verdict = f"{report.lhs} = {report.rhs} HOLDS" if report.formula_holds else f"{report.lhs} != {report.rhs} FAILS"
    return (f"good basis: yes; mu={report.mu} tau={report.tau} "
            f"I(g1,g2)={format_extended(report.igg)}; formula {verdict}")


def format_report(report: InvariantReport) -> str:
    status = report.curve_index_status.value
    lines = [
        formula_headline(report),
        f"  nu = {report.nu}; nu(w1) = {report.nu1}, nu(w2) = {report.nu2}",
        f"  unit u = {report.unit}",
        f"  cofactors g1 = {report.g1}, g2 = {report.g2} "
        f"(orders {', '.join(format_extended(o) for o in report.cofactor_orders)})",
        f"  mu = {report.mu}, tau = {report.tau}, mu - tau = {report.lhs}, "
        f"I(g1,g2) = {format_extended(report.igg)} "
        f"({'agree' if report.mu_tau_identity_holds else 'DISAGREE'})",
        f"  indices i(w1) = {format_extended(report.i1)}, i(w2) = {format_extended(report.i2)}; "
        f"curve index = {report.curve_index if report.curve_index is not None else 'undefined'} ({status})",
        f"  strict transform: mu~ = {report.mu_tilde}, tau~ = {report.tau_tilde}",
    ]
    if report.rhs is not None:
        lines.append(
            f"  formula: {report.lhs} vs (mu~ - tau~) + (nu1-1)(nu2-1) + i - 1 = {report.rhs}"
        )
    if report.intersection_lemma_rhs is not None:
        lines.append(f"  I(f_y,B) - I(B,g) - nu + 1 = {report.intersection_lemma_rhs}")
    for name, value in report.diagnostics.items():
        lines.append(f"  {name} = {value}")
    return '\n'.join(lines)


def cmd_verify(context: CommandContext, path: str) -> CommandResult:
    curve = _load_curve(path)
    if not curve.has_basis:
        raise CurveFileError(f"{path}: verify needs omega1.A, omega1.B, omega2.A and omega2.B")

    check = context.saito.check_saito_basis(curve.f, curve.omega1, curve.omega2)
    if not check.is_basis:
        logger.warning(
            "Input pair is not a Saito basis",
            extra={"operation": "cmd_verify", "path": path, "divisible": check.divisible},
        )
        if context.as_json:
            payload = envelope('verify', path=path, f=curve.f, saito=check, report=None)
            return CommandResult(ExitCode.NOT_SAITO_BASIS, _render_json(verify_report_schema, payload))
        return CommandResult(ExitCode.NOT_SAITO_BASIS, format_saito_check(check))

    report = context.saito.verify_report(curve.f, curve.omega1, curve.omega2)
    if context.as_json:
        payload = envelope('verify', path=path, f=curve.f, saito=check, report=report)
        return CommandResult(ExitCode.SUCCESS, _render_json(verify_report_schema, payload))
    return CommandResult(ExitCode.SUCCESS, '\n'.join([format_saito_check(check), format_report(report)]))


# -- curve ---------------------------------------------------------------

def format_curve(path: str, invariants: CurveInvariants) -> str:
    tangent = invariants.tangent
    if tangent:
        cone = f"(y + {tangent.epsilon}*x)^{tangent.nu}"
    elif invariants.vertical_tangent:
        cone = f"x^{invariants.nu} (the line x = 0)"
    else:
        cone = "not a single line"
    lines = [
        f"curve {invariants.f} ({path})",
        f"  nu = {invariants.nu}",
        f"  tangent cone = {cone}",
        f"  mu = {invariants.mu}, tau = {invariants.tau}",
        f"  multiplicity sequence = {list(invariants.multiplicity_sequence)}",
    ]
    if invariants.strict_transform is not None:
        lines.append(f"  strict transform = {invariants.strict_transform}")
    return '\n'.join(lines)


def cmd_curve(context: CommandContext, path: str) -> CommandResult:
    curve = _load_curve(path)
    invariants = context.local_algebra.curve_invariants(curve.f)
    if context.as_json:
        payload = envelope('curve', invariants, path=path)
        return CommandResult(ExitCode.SUCCESS, _render_json(curve_report_schema, payload))
    return CommandResult(ExitCode.SUCCESS, format_curve(path, invariants))


# -- scan ----------------------------------------------------------------

def _witness_line(label: str, check: Optional[ClassCheck], value: Callable[[ClassCheck], int]) -> str:
    if check is None:
        return f"{label}: none"
    return (f"{label}: {check.exponents} (mu={check.mu}, tau_min={check.tau_min}, "
            f"dg_bound={check.dg_bound}, margin {value(check)})")


def format_scan(report: ScanReport) -> str:
    lines = [f"{report.classes_checked} classes, {len(report.violations)} violations"]
    lines.append(_witness_line("minimal slack", report.min_slack_witness,
                               lambda c: c.slack - c.slack_floor))
    lines.append(_witness_line("minimal bound margin", report.min_bound_margin_witness,
                               lambda c: c.tau_min - c.dg_bound))
    for check in report.violations:
        lines.append(f"VIOLATION {check.exponents}: {', '.join(check.failed_checks)}")
    lines.append(f"elapsed {report.elapsed_seconds:.3f} s")
    return '\n'.join(lines)


def cmd_scan(context: CommandContext, max_beta0, max_beta1, max_pairs=None, jobs=None) -> CommandResult:
    defaults = context.config.get_scan_config()
    request = validate_scan_request({
        'max_beta0': max_beta0,
        'max_beta1': max_beta1,
        'max_pairs': max_pairs if max_pairs is not None else defaults['max_pairs'],
        'jobs': jobs,
    })
    report = context.scan.scan_classes(
        request['max_beta0'], request['max_beta1'], request['max_pairs'], jobs=request['jobs']
    )
    exit_code = ExitCode.SUCCESS if not report.violations else ExitCode.SCAN_VIOLATION
    if context.as_json:
        return CommandResult(exit_code, _render_json(scan_report_schema, envelope('scan', report)))
    return CommandResult(exit_code, format_scan(report))


# -- bound ---------------------------------------------------------------

def cmd_bound(context: CommandContext, mu) -> CommandResult:
    request = validate_bound_request({'mu': mu})
    bound = dg_bound(request['mu'])
    if context.as_json:
        payload = envelope('bound', mu=request['mu'], dg_bound=bound)
        return CommandResult(ExitCode.SUCCESS, _render_json(bound_report_schema, payload))
    return CommandResult(ExitCode.SUCCESS, str(bound))


# -- sample --------------------------------------------------------------

def format_sample(report: SampleReport) -> str:
    verdict = 'tau_min reached' if report.reaches_tau_min else 'tau_min NOT reached'
    return (f"{report.exponents}: mu = {report.mu}, tau_min = {report.tau_min}; "
            f"observed tau in [{report.min_tau}, {report.max_tau}] over {report.samples} samples "
            f"(seed {report.seed}); {verdict}")


def cmd_sample(context: CommandContext, exponents: str, samples=None, seed=None,
               coefficient_range=None) -> CommandResult:
    defaults = context.config.get_sample_config()
    request = validate_sample_request({
        'exponents': exponents,
        'samples': samples if samples is not None else defaults['samples'],
        'seed': seed if seed is not None else defaults['seed'],
        'coefficient_range': coefficient_range if coefficient_range is not None else defaults['coefficient_range'],
    })
    beta0, beta1 = request['exponents']
    report = context.sampling.sample_class_tjurina(
        beta0, beta1, samples=request['samples'], seed=request['seed'],
        coefficient_range=request['coefficient_range'],
    )
    exit_code = ExitCode.SUCCESS if report.reaches_tau_min else ExitCode.SCAN_VIOLATION
    if context.as_json:
        return CommandResult(exit_code, _render_json(sample_report_schema, envelope('sample', report)))
    return CommandResult(exit_code, format_sample(report))


COMMANDS: Dict[str, Callable[..., CommandResult]] = {
    'topo': cmd_topo,
    'verify': cmd_verify,
    'curve': cmd_curve,
    'scan': cmd_scan,
    'bound': cmd_bound,
    'sample': cmd_sample,
}


def command_names() -> List[str]:
    return sorted(COMMANDS)
