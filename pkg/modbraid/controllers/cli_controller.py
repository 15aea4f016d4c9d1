"""
Command-line front end.

    modbraid verify SUITE --n N [--t T]
    modbraid compute phi|kappa|section --cell SPEC --n N
    modbraid compute cocycle --p PERM --q PERM --n N
    modbraid compute burau --word W --n N --mod M
    modbraid compute element --word W --n N
    modbraid coset-enum (--pres FILE | --builtin NAME) [--n N] --limit K
    modbraid enumerate zn --n N
    modbraid bound schreier --n N

`compute` prints a pair vector as bare JSON; `--json PATH` writes it with its cell,
degree and schema. Every command takes `--language`, `--limit` and `--verbose`.

Exit status: 0 when every case passes, 1 when a verification fails, 2 on usage
errors (bad arguments, guards, unparsable input).
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Tuple

from modbraid import __version__
from modbraid.config import get_settings
from modbraid.errors import ModbraidError
from modbraid.i18n.translations import T, TranslationService
from modbraid.services.calculation_service import CalculationService
from modbraid.services.export_service import ExportService
from modbraid.services.validation_service import ValidationService
from modbraid.services.verification_service import SUITES, VerificationReport, VerificationService

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

# failing cases echoed to stdout; the JSON report keeps all of them
SHOWN_FAILURES = 20


class UsageError(Exception):
    """Invalid arguments caught after argparse accepted them."""


def _check(result: Tuple[bool, str]):
    valid, message = result
    if not valid:
        raise UsageError(message)


class CliController:
    """Parses argv, validates it, dispatches to the services and prints the outcome."""

    def __init__(self, out=None, err=None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.parser = self.build_parser()

    # ------------------------------------------------------------------
    # Parser
    # ------------------------------------------------------------------

    @staticmethod
    def _common_options() -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--json", metavar="PATH", help=T("cli.help.json", "write the result as JSON"))
        common.add_argument("--pdf", metavar="PATH", help=T("cli.help.pdf", "write a verification report as PDF"))
        common.add_argument("--verbose", "-v", action="store_true", help=T("cli.help.verbose", "log progress"))
        common.add_argument("--stretch", action="store_true",
                            help=T("cli.help.stretch", "allow the n = 5 order computations"))
        common.add_argument("--limit", type=int, help=T("cli.help.limit", "coset limit for enumeration"))
        common.add_argument("--language", choices=TranslationService.get_available_languages(),
                            help=T("cli.help.language", "message language"))
        return common

    def build_parser(self) -> argparse.ArgumentParser:
        common = self._common_options()
        parser = argparse.ArgumentParser(
            prog="modbraid",
            description=T("cli.description", "Braid group extensions of S_n: computations and verification"),
        )
        parser.add_argument("--version", action="version", version=f"modbraid {__version__}")
        commands = parser.add_subparsers(dest="command", metavar="COMMAND")
        commands.required = True

        verify = commands.add_parser("verify", parents=[common], help=T("cli.help.verify", "run a verification suite"))
        verify.add_argument("suite", choices=list(SUITES) + ["all"])
        verify.add_argument("--n", type=int, required=True)
        verify.add_argument("--t", type=int)
        verify.add_argument("--seed", type=int, default=0)
        verify.add_argument("--max-length", type=int, dest="max_length")

        compute = commands.add_parser("compute", parents=[common], help=T("cli.help.compute", "compute one value"))
        compute.add_argument("what", choices=["phi", "kappa", "section", "cocycle", "burau", "element"])
        compute.add_argument("--n", type=int, required=True)
        compute.add_argument("--cell")
        compute.add_argument("--p")
        compute.add_argument("--q")
        compute.add_argument("--word")
        compute.add_argument("--mod", type=int, default=0)
        compute.add_argument("--ring", choices=["z", "z2"], default="z")
        compute.add_argument("--t", type=int, default=1)

        coset = commands.add_parser("coset-enum", parents=[common],
                                    help=T("cli.help.coset_enum", "Todd-Coxeter on a presentation"))
        source = coset.add_mutually_exclusive_group(required=True)
        source.add_argument("--pres", metavar="FILE")
        source.add_argument("--builtin", metavar="NAME")
        coset.add_argument("--n", type=int, default=3)
        coset.add_argument("--t", type=int, default=1)

        enumerate_ = commands.add_parser("enumerate", parents=[common], help=T("cli.help.enumerate", "order of Z_n"))
        enumerate_.add_argument("what", choices=["zn"])
        enumerate_.add_argument("--n", type=int, required=True)

        bound = commands.add_parser("bound", parents=[common], help=T("cli.help.bound", "generator count bounds"))
        bound.add_argument("what", choices=["schreier"])
        bound.add_argument("--n", type=int, required=True)
        return parser

    # ------------------------------------------------------------------
    # Entry
    # ------------------------------------------------------------------

    def run(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

        self.settings = get_settings().with_overrides(
            coset_limit=args.limit, log_level="DEBUG" if args.verbose else None)
        logging.basicConfig(
            level=self.settings.log_level,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        if args.language:
            TranslationService.set_language(args.language)

        handlers: Dict[str, Callable[[argparse.Namespace], int]] = {
            "verify": self.handle_verify,
            "compute": self.handle_compute,
            "coset-enum": self.handle_coset_enum,
            "enumerate": self.handle_enumerate,
            "bound": self.handle_bound,
        }
        try:
            return handlers[args.command](args)
        except UsageError as e:
            print(T("cli.usage_error", "error: {error}", error=str(e)), file=self.err)
            return EXIT_USAGE
        except ModbraidError as e:
            logger.debug(f"{type(e).__name__} in {args.command}", exc_info=True)
            print(T("cli.usage_error", "error: {error}", error=str(e)), file=self.err)
            return EXIT_USAGE

    # ------------------------------------------------------------------
    # Handlers
    # ------------------------------------------------------------------

    def handle_verify(self, args) -> int:
        _check(ValidationService.validate_degree(args.n, minimum=2))
        _check(ValidationService.validate_limit(args.limit))
        if args.t is not None:
            _check(ValidationService.validate_scale(args.t, even=args.suite == "split"))
        t = args.t
        if args.suite == "split" and t is None:
            t = 2
        if args.suite in ("cocycle", "chainmap", "closed-forms", "coboundary", "nonsplit",
                          "b4-generators", "oracle", "presentations"):
            t = None
        report = VerificationService.run(args.suite, args.n, t, seed=args.seed, max_length=args.max_length,
                                         limit=self.settings.coset_limit, stretch=args.stretch)
        self._print_report(report)
        if not self._export(report, args):
            return EXIT_USAGE
        return EXIT_OK if report.passed else EXIT_FAILED

    def handle_compute(self, args) -> int:
        _check(ValidationService.validate_degree(args.n))
        what = args.what
        if what in ("phi", "kappa", "section"):
            if args.cell is None:
                raise UsageError(T("cli.missing_option", "--{option} is required", option="cell"))
            _check(ValidationService.validate_cell(args.cell, args.n))
            if what == "phi":
                result = CalculationService.compute_phi(args.cell, args.n)
            elif what == "kappa":
                result = CalculationService.compute_kappa(args.cell, args.n)
            else:
                _check(ValidationService.validate_scale(args.t))
                result = CalculationService.compute_section_cocycle(args.cell, args.n, args.ring, args.t)
        elif what == "cocycle":
            for option in ("p", "q"):
                if getattr(args, option) is None:
                    raise UsageError(T("cli.missing_option", "--{option} is required", option=option))
                _check(ValidationService.validate_permutation(getattr(args, option), args.n))
            _check(ValidationService.validate_scale(args.t))
            result = CalculationService.compute_cocycle(args.p, args.q, args.n, args.ring, args.t)
        else:
            if args.word is None:
                raise UsageError(T("cli.missing_option", "--{option} is required", option="word"))
            _check(ValidationService.validate_word(args.word, args.n))
            if what == "burau":
                _check(ValidationService.validate_modulus(args.mod))
                result = CalculationService.compute_burau(args.word, args.n, args.mod)
            else:
                result = CalculationService.compute_element(args.word, args.n, args.ring)
        # pair vectors print bare; --json keeps cell, n and schema
        if "value" in result:
            self.out.write(ExportService.value_text(result["value"]))
        else:
            self.out.write(ExportService.to_json_text(result))
        return EXIT_OK if self._export(result, args) else EXIT_USAGE

    def handle_coset_enum(self, args) -> int:
        _check(ValidationService.validate_limit(args.limit))
        if args.builtin is not None:
            _check(ValidationService.validate_builtin(args.builtin))
            _check(ValidationService.validate_degree(args.n))
            _check(ValidationService.validate_scale(args.t))
        result = CalculationService.coset_enumeration(args.builtin, args.pres, args.n, args.t,
                                                      self.settings.coset_limit)
        if result["status"] == "complete":
            print(T("cli.order", "order: {order}", order=result["order"]), file=self.out)
        else:
            print(T("cli.aborted", "aborted: more than {limit} cosets", limit=result["limit"]), file=self.out)
        if not self._export(result, args):
            return EXIT_USAGE
        return EXIT_OK if result["status"] == "complete" else EXIT_FAILED

    def handle_enumerate(self, args) -> int:
        _check(ValidationService.validate_degree(args.n))
        max_n = args.n if args.stretch else None
        result = CalculationService.enumerate_zn(args.n, max_n)
        print(result["order"], file=self.out)
        if not self._export(result, args):
            return EXIT_USAGE
        return EXIT_OK if result["pass"] else EXIT_FAILED

    def handle_bound(self, args) -> int:
        _check(ValidationService.validate_degree(args.n, minimum=2))
        result = CalculationService.schreier(args.n)
        print(result["bound"], file=self.out)
        return EXIT_OK if self._export(result, args) else EXIT_USAGE

    # ------------------------------------------------------------------
    # Output
    # ------------------------------------------------------------------

    def _print_report(self, report: VerificationReport):
        summary = report.summary
        print(T("cli.summary", "{suite} n={n}: {passed}/{total} cases passed",
                suite=report.suite, n=report.n, passed=summary["passed"], total=summary["total"]),
              file=self.out)
        for case in report.failures()[:SHOWN_FAILURES]:
            print(T("cli.failure", "  FAIL {case}", case=case.id), file=self.out)
        hidden = summary["failed"] - SHOWN_FAILURES
        if hidden > 0:
            print(T("cli.more_failures", "  ... and {hidden} more", hidden=hidden), file=self.out)

    def _export(self, result, args) -> bool:
        ok = True
        if args.json:
            success, message = ExportService.export_json(result, args.json)
            print(message, file=self.err)
            ok = ok and success
        if args.pdf:
            if not isinstance(result, VerificationReport):
                print(T("cli.pdf_verify_only", "--pdf applies to verify reports only"), file=self.err)
                return False
            success, message = ExportService.export_report_to_pdf(result, args.pdf)
            print(message, file=self.err)
            ok = ok and success
        return ok


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = get_settings()
    except ModbraidError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    TranslationService.initialize(settings.language)
    return CliController().run(argv)
