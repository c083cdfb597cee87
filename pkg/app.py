"""
Command-line entry point for the plane-branch toolkit.

    python app.py [--json] [--colength-cap N] topo 9,12,17
    python app.py verify tests/fixtures/two_stage.curve
    python app.py scan --max-beta0 12 --max-beta1 30 [--max-pairs 2] [--jobs 4]
    python app.py bound 19740
    python app.py curve FILE
    python app.py sample 3,7 [--samples 20] [--seed 0]
"""
import argparse
import sys
import time
import uuid
from typing import List, Optional

from marshmallow import ValidationError

from cli.commands import COMMANDS, CommandContext, CommandResult
from cli.schemas import validate_run_options
from config import get_config
from exceptions import ExitCode, SingularityToolkitError
from loki_logger import ContextLogger, get_logger, log_command_end, log_command_start
from utils import elapsed_ms

logger = get_logger(__name__)


def add_run_options(parser: argparse.ArgumentParser, config, suppress: bool = False):
    """--json and --colength-cap, accepted before or after the command name"""
    json_default = argparse.SUPPRESS if suppress else False
    cap_default = argparse.SUPPRESS if suppress else None
    parser.add_argument('--json', action='store_true', default=json_default,
                        help='emit a machine-readable JSON report')
    parser.add_argument('--colength-cap', default=cap_default,
                        help=f'truncation degree cap for colength computations (default {config.COLENGTH_CAP})')


def build_parser(config=None) -> argparse.ArgumentParser:
    config = config or get_config()
    scan_defaults = config.get_scan_config()
    parser = argparse.ArgumentParser(prog=config.APP_TITLE, description=config.APP_DESCRIPTION)
    add_run_options(parser, config)
    parser.add_argument('--version', action='version', version=f'%(prog)s {config.APP_VERSION}')

    # subcommand copies must not overwrite options given before the command name
    run_options = argparse.ArgumentParser(add_help=False)
    add_run_options(run_options, config, suppress=True)
    commands = parser.add_subparsers(dest='command', required=True)

    topo = commands.add_parser('topo', parents=[run_options],
                           help='resolution chain, mu and tau_min of a topological class')
    topo.add_argument('exponents', help='characteristic exponents, e.g. 9,12,17')

    verify = commands.add_parser('verify', parents=[run_options],
                           help='check a Saito basis and the mu - tau formula')
    verify.add_argument('path', help='curve file with f, omega1.A/B and omega2.A/B')

    curve = commands.add_parser('curve', parents=[run_options],
                           help='mu, tau and multiplicity sequence of a curve file')
    curve.add_argument('path', help='curve file with at least f')

    scan = commands.add_parser('scan', parents=[run_options],
                           help='check the tau_min lower bounds over a range of classes')
    scan.add_argument('--max-beta0', default=scan_defaults['max_beta0'])
    scan.add_argument('--max-beta1', default=scan_defaults['max_beta1'])
    scan.add_argument('--max-pairs', default=scan_defaults['max_pairs'])
    scan.add_argument('--jobs', default=None, help=f"parallel workers (default {scan_defaults['jobs']})")

    bound = commands.add_parser('bound', parents=[run_options],
                           help='integer Dimca-Greuel lower bound for tau given mu')
    bound.add_argument('mu')

    sample = commands.add_parser('sample', parents=[run_options],
                           help='Tjurina numbers of random members of a one-pair class')
    sample.add_argument('exponents', help='beta0,beta1')
    sample.add_argument('--samples', default=None)
    sample.add_argument('--seed', default=None)
    sample.add_argument('--coefficient-range', default=None)

    return parser


def create_app(config_name: Optional[str] = None, colength_cap: Optional[int] = None,
               as_json: bool = False) -> CommandContext:
    """Application factory: configuration plus the services one run needs"""
    config = get_config(config_name)
    return CommandContext(config=config, colength_cap=colength_cap, as_json=as_json)


def dispatch(context: CommandContext, args: argparse.Namespace) -> CommandResult:
    handler = COMMANDS[args.command]
    if args.command == 'topo':
        return handler(context, args.exponents)
    if args.command in ('verify', 'curve'):
        return handler(context, args.path)
    if args.command == 'scan':
        return handler(context, args.max_beta0, args.max_beta1, args.max_pairs, args.jobs)
    if args.command == 'bound':
        return handler(context, args.mu)
    return handler(context, args.exponents, args.samples, args.seed, args.coefficient_range)


def _fail(code: ExitCode, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return int(code)


def main(argv: Optional[List[str]] = None, config_name: Optional[str] = None) -> int:
    parser = build_parser(get_config(config_name))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(e.code or 0)

    run_id = str(uuid.uuid4())
    started = time.perf_counter()

    # record attributes set here must not collide with keys passed via extra=
    with ContextLogger(logger, session_id=run_id, subcommand=args.command):
        log_command_start(logger, run_id, args.command, json_output=args.json)
        try:
            options = validate_run_options({'colength_cap': args.colength_cap, 'json': args.json})
            context = create_app(config_name, colength_cap=options['colength_cap'],
                                 as_json=options['json'])
            result = dispatch(context, args)
        except ValidationError as err:
            logger.warning(
                "Validation failed",
                extra={'operation': args.command, 'validation_errors': err.messages}
            )
            return _fail(ExitCode.INPUT_ERROR, f"invalid input: {err.messages}")
        except SingularityToolkitError as e:
            logger.warning(
                "Command failed",
                extra={'operation': args.command, 'error': str(e),
                       'exit_code': int(e.exit_code)}
            )
            return _fail(e.exit_code, str(e))
        except Exception as e:
            logger.error(
                "Unexpected failure",
                extra={'operation': args.command, 'error': str(e)},
                exc_info=True
            )
            return _fail(ExitCode.SCAN_VIOLATION, f"internal error: {e}")

        print(result.output)
        log_command_end(logger, run_id, args.command,
                        duration_ms=elapsed_ms(started, time.perf_counter()),
                        exit_code=int(result.exit_code))
        return int(result.exit_code)


if __name__ == '__main__':
    sys.exit(main())
