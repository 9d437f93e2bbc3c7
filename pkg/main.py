#!/usr/bin/env python3
"""
Fake Quadric Divisor Toolkit
Command-line front end for the divisor-class computations on the two
Neron-Severi lattice types of a fake quadric.
"""

import argparse
import dataclasses
import logging
import re
import sys
from typing import Any, Callable, Dict, List, Optional

from src.data.output_generator import OutputGenerator
from src.models.errors import ClassArgumentError, ConsistencyFault, ModelMismatchError, PreconditionError
from src.models.lattice import DivisorClass, LatticeType, SurfaceModel
from src.persistence.certificate_store import CertificateStore
from src.reporting.checks import default_checks
from src.reporting.engine import AcceptanceEngine
from src.search.enumerator import enumerate_low_genus
from src.search.verifier import verify_no_p4_embedding
from src.theory.cohomology import bounded_cohomology_case, cohomology_bounds, kodaira_minimum
from src.theory.intersection import embed_even_into_odd, tangent_splitting_check
from src.theory.positivity import (
    cone_rays,
    curve_class_admissible,
    low_canonical_degree_classes,
    negative_curve_hypothesis,
    nef_not_ample_rays,
    positivity_verdict,
    rational_curve_exclusion,
)
from src.theory.riemann_roch import arithmetic_genus, euler_characteristic, genus_report
from src.utils.helpers import parse_class_arg
from src.utils.settings import Settings, get_settings, load_settings, use_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAULT = 2

DEFAULTS = Settings()


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""


# Negative numbers and "x,y" classes with a negative entry are values, not options.
_NEGATIVE_VALUE = re.compile(r"^-\d+$|^-\d*\.\d+$|^-?\d+\s*,\s*-?\d+$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE

    def error(self, message: str):
        raise UsageError(message)


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Log to stderr so that stdout only carries the document."""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    logging.getLogger().setLevel(level)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation group."""
    common = _Parser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help=f'Emit the JSON document (default output: {DEFAULTS.output_format})')
    common.add_argument('--config', type=str,
                        help='YAML settings file (default: config/defaults.yaml)')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', '-v', action='store_true', help='Log debug messages')
    verbosity.add_argument('--quiet', '-q', action='store_true', help='Log warnings and errors only')

    with_model = _Parser(add_help=False)
    with_model.add_argument('--model', '-m', required=True, choices=[t.value for t in LatticeType],
                            help='Lattice type of the Neron-Severi group')

    with_class = _Parser(add_help=False)
    with_class.add_argument('--class', '-c', dest='divisor', required=True, metavar='X,Y',
                            help='Divisor class x*H + y*F written as "x,y", e.g. "3,-1" or "-1,2"')

    parser = _Parser(
        description='Exact divisor-class computations on fake quadrics: positivity, Riemann-Roch, '
                    'cohomology relations, the P^4 embedding certificate and low-genus class lists.'
    )
    commands = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    commands.add_parser('classify', parents=[common, with_model, with_class],
                        help='Positivity, genus and cohomology of one class')
    commands.add_parser('chi', parents=[common, with_model, with_class], help='Euler characteristic of O(D)')
    commands.add_parser('genus', parents=[common, with_model, with_class], help='Arithmetic genus of D')

    cones = commands.add_parser('cones', parents=[common, with_model], help='Effective and nef cone rays')
    cones.add_argument('--x0', type=int, default=0,
                       help='Coefficient of the hypothetical negative curve x0*H + (x0+1)*F '
                            'reported for the odd model (default: 0)')

    verify = commands.add_parser('verify-p4', parents=[common, with_model],
                                 help='Certificate that no ample class embeds the surface in P^4')
    verify.add_argument('--box-bound', type=int,
                        help=f'Sweep box bound, at least 100 (default: {DEFAULTS.box_bound})')
    verify.add_argument('--output', '-o', type=str, help='Also save the certificate JSON to this file')
    verify.add_argument('--table', type=str, help='Write the certificate table to a .csv or .xlsx file')

    enumerate_ = commands.add_parser('enumerate', parents=[common, with_model],
                                     help='Admissible classes of arithmetic genus 2..g-max')
    enumerate_.add_argument('--g-max', type=int, help=f'Largest genus, 2..100 (default: {DEFAULTS.g_max})')
    enumerate_.add_argument('--simply-connected', action='store_true',
                            help='Drop classes without sections on a simply connected surface')
    enumerate_.add_argument('--table', type=str, help='Write the class lists to a .csv or .xlsx file')

    report = commands.add_parser('report', parents=[common], help='Run the full acceptance suite on both models')
    report.add_argument('--box-bound', type=int,
                        help=f'Sweep box bound for the certificates (default: {DEFAULTS.box_bound})')
    return parser


def _model(args: argparse.Namespace) -> SurfaceModel:
    return SurfaceModel.for_type(LatticeType.from_name(args.model))


def _divisor(args: argparse.Namespace) -> DivisorClass:
    try:
        return parse_class_arg(args.divisor)
    except ClassArgumentError as e:
        raise ClassArgumentError(f"--class: {e}")


def cmd_classify(args: argparse.Namespace, settings: Settings, generator: OutputGenerator) -> Dict[str, Any]:
    d = _divisor(args)
    model = _model(args)
    case = bounded_cohomology_case(model, d) if curve_class_admissible(model, d) else None
    extras: Dict[str, Any] = {}
    if arithmetic_genus(model, d) == 0:
        extras["rational_curve_exclusion"] = rational_curve_exclusion(model, d).to_dict()
    if model.is_even:
        extras["odd_coordinates"] = embed_even_into_odd(d).to_dict()
    return generator.classify_document(model, d, positivity_verdict(model, d), genus_report(model, d),
                                       cohomology_bounds(model, d), case, extras)


def cmd_chi(args: argparse.Namespace, settings: Settings, generator: OutputGenerator) -> Dict[str, Any]:
    d = _divisor(args)
    model = _model(args)
    return generator.scalar_document("chi", model, d, euler_characteristic(model, d))


def cmd_genus(args: argparse.Namespace, settings: Settings, generator: OutputGenerator) -> Dict[str, Any]:
    d = _divisor(args)
    model = _model(args)
    return generator.scalar_document("genus", model, d, arithmetic_genus(model, d))


def cmd_cones(args: argparse.Namespace, settings: Settings, generator: OutputGenerator) -> Dict[str, Any]:
    model = _model(args)
    body: Dict[str, Any] = {
        "model": model.lattice.value,
        "surface": model.to_dict(),
        **cone_rays(model).to_dict(),
        "nef_not_ample_rays": [r.to_dict() for r in nef_not_ample_rays(model)],
        "low_canonical_degree_classes": [c.to_dict() for c in low_canonical_degree_classes(model)],
        "kodaira_minimum": kodaira_minimum(model),
    }
    if not model.is_even:
        body["tangent_splitting"] = tangent_splitting_check(model).to_dict()
        body["negative_curve_hypothesis"] = negative_curve_hypothesis(model, args.x0).to_dict()
    return generator.document("cones", body)


def cmd_verify(args: argparse.Namespace, settings: Settings, generator: OutputGenerator) -> Dict[str, Any]:
    model = _model(args)
    certificate = verify_no_p4_embedding(model, args.box_bound if args.box_bound is not None else settings.box_bound)
    document = generator.certificate_document(certificate)
    if args.table:
        generator.generate_file(generator.certificate_table(certificate), args.table)
    if args.output:
        store = CertificateStore(args.output, generator)
        if store.file_path.exists():
            same = store.matches(document)
            logger.info(f"Existing certificate at {store.file_path} {'matches' if same else 'differs from'} this run")
        store.save(document)
    return document


def cmd_enumerate(args: argparse.Namespace, settings: Settings, generator: OutputGenerator) -> Dict[str, Any]:
    model = _model(args)
    lists = enumerate_low_genus(model, args.g_max if args.g_max is not None else settings.g_max,
                                args.simply_connected)
    if args.table:
        generator.generate_file(generator.class_list_table(lists), args.table)
    return generator.class_lists_document(model, lists, args.simply_connected)


def cmd_report(args: argparse.Namespace, settings: Settings, generator: OutputGenerator) -> Dict[str, Any]:
    if args.box_bound is not None:
        settings = dataclasses.replace(settings, box_bound=args.box_bound)
    engine = AcceptanceEngine(settings)
    for check in default_checks():
        engine.add_check(check)
    return generator.report_document(engine.run())


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings, OutputGenerator], Dict[str, Any]]] = {
    'classify': cmd_classify,
    'chi': cmd_chi,
    'genus': cmd_genus,
    'cones': cmd_cones,
    'verify-p4': cmd_verify,
    'enumerate': cmd_enumerate,
    'report': cmd_report,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and print its document.

    Returns:
        0 on success, 1 on a usage or precondition error, 2 on a consistency
        fault or a failed acceptance check.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"{parser.prog}: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    configure_logging(args.verbose, args.quiet)
    generator = OutputGenerator()
    try:
        settings = load_settings(args.config) if args.config else get_settings()
        use_settings(settings)
        document = COMMANDS[args.command](args, settings, generator)
    except ConsistencyFault as e:
        logger.error(f"Consistency fault: {e}")
        print(f"consistency fault: {e}", file=sys.stderr)
        return EXIT_FAULT
    except (ClassArgumentError, PreconditionError, ModelMismatchError) as e:
        logger.error(f"{e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except IOError as e:
        logger.error(f"{e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        use_settings(None)

    as_json = args.json or settings.output_format == "json"
    sys.stdout.write(generator.to_json(document) if as_json else generator.render_text(document))

    if args.command == 'report' and not document["passed"]:
        logger.error("Acceptance suite reported failures")
        return EXIT_FAULT
    logger.info("Done.")
    return EXIT_OK


def main():
    """Main execution function."""
    exit(run())


if __name__ == '__main__':
    try:
        main()
    except Exception as e:
        logger.critical(f"An unexpected critical error occurred: {e}", exc_info=True)
        exit(1)
