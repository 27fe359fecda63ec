"""
`scoherent` command line.

Exit codes: 0 when every check passed (a successful refutation included),
1 when a verification or refutation failed, 2 on parse and usage errors,
3 when a bounded search was inconclusive.
"""
import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, ValidationError

from src.config import budget_settings, settings
from src.core.exceptions import (
    AlgebraError,
    CertificateError,
    InconclusiveError,
    InvalidClaimError,
    LiteralParseError,
    RingMismatchError,
    UnsupportedRingError,
)
from src.core.schemas.base import CommandResult
from src.core.schemas.reports import AuditReport, DemoReport, RefutationTrace, VerifyReport
from src.certificates.schemas import dump_certificate, load_certificate
from src.certificates.search import find_csfp, find_s_finite, find_usfp
from src.certificates.verify import verify
from src.cli.parsing import (
    STANDARD_SSET,
    format_ideal,
    parse_element,
    parse_ideal,
    parse_mult_set,
    parse_subquotient,
    parse_vector_or_element,
    ring_from_spec,
)
from src.cli.rendering import OutputFormat, render
from src.ideals import arith, modules
from src.ideals.models import Target
from src.lab.demo import example_demo
from src.lab.idealization import RING as IDEALIZATION, refute_csfp, refute_finitely_presented
from src.rings.descriptors import ModularIntegers, Ring
from src.theorems.audits import (
    chase_audit,
    colon_formula_audit,
    formula_audit_passed,
    s_noetherian_sample_check,
)
from src.theorems.coherence import fp_scoherent_cert, free_scoherent_cert

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

# checked in order; subclasses before their bases
ERROR_EXIT_CODES: tuple[tuple[type[Exception], int], ...] = (
    (LiteralParseError, EXIT_USAGE),
    (ValidationError, EXIT_USAGE),
    (InvalidClaimError, EXIT_USAGE),
    (RingMismatchError, EXIT_USAGE),
    (UnsupportedRingError, EXIT_USAGE),
    (InconclusiveError, EXIT_INCONCLUSIVE),
    (CertificateError, EXIT_FAILED),
    (AlgebraError, EXIT_FAILED),
    (ValueError, EXIT_USAGE),
    (OSError, EXIT_USAGE),
)


class CommandError(Exception):
    """Raised for argument combinations argparse cannot reject on its own"""
    pass


def setup_logging(verbose: bool) -> None:
    logger.remove()
    level = "DEBUG" if verbose or settings.DEBUG else settings.LOG_LEVEL
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> | {name}:{line} - {message}")


def _emit(result: BaseModel, args: argparse.Namespace) -> None:
    sys.stdout.write(render(result, OutputFormat(args.format)))


def _command_result(args: argparse.Namespace, operation: str, data: str) -> int:
    _emit(CommandResult[str](data=data, message=operation), args)
    return EXIT_OK


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def _ring(args: argparse.Namespace):
    return ring_from_spec(args.ring)


def _mult_set(args: argparse.Namespace):
    return parse_mult_set(args.sset, _ring(args), allow_zero=args.allow_zero)


# ideal ...

def cmd_ideal_member(args: argparse.Namespace) -> int:
    ring = _ring(args)
    ideal = parse_ideal(args.ideal, ring)
    x = parse_element(args.element, ring)
    return _command_result(args, "member", "true" if arith.is_member(ideal, x) else "false")


def cmd_ideal_colon(args: argparse.Namespace) -> int:
    ring = _ring(args)
    out = arith.colon(parse_ideal(args.ideal, ring), parse_element(args.element, ring))
    return _command_result(args, "colon", format_ideal(out))


def cmd_ideal_intersect(args: argparse.Namespace) -> int:
    ring = _ring(args)
    out = arith.intersect(parse_ideal(args.left, ring), parse_ideal(args.right, ring))
    return _command_result(args, "intersect", format_ideal(out))


def cmd_ideal_sum(args: argparse.Namespace) -> int:
    ring = _ring(args)
    out = arith.ideal_sum(parse_ideal(args.left, ring), parse_ideal(args.right, ring))
    return _command_result(args, "sum", format_ideal(out))


def cmd_ideal_ann(args: argparse.Namespace) -> int:
    ring = _ring(args)
    out = arith.annihilator(parse_vector_or_element(args.vector, ring))
    return _command_result(args, "ann", format_ideal(out))


# cert ...

def _read_target(text: str, ring: Ring) -> Target:
    """Modules contain '[', everything else is an ideal literal."""
    if "[" in text:
        return parse_subquotient(text, ring)
    return parse_ideal(text, ring)


def cmd_cert_find(args: argparse.Namespace) -> int:
    mult_set = _mult_set(args)
    target = _read_target(args.target, mult_set.ring)
    if args.kind == "s-finite":
        cert = find_s_finite(target, mult_set, args.budget)
    else:
        module = modules.as_subquotient(target)
        if args.kind == "sfp":
            if module.relations.is_zero:
                cert = free_scoherent_cert(module.sub, mult_set, args.budget)
            else:
                cert = fp_scoherent_cert(module.relations, module.sub.gens, mult_set, args.budget)
        elif args.kind == "csfp":
            cert = find_csfp(module, mult_set, args.budget)
        else:
            cert = find_usfp(module, mult_set)
    text = dump_certificate(cert) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {cert.kind.value} certificate to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cert_verify(args: argparse.Namespace) -> int:
    cert = load_certificate(_read_text(args.file))
    report: VerifyReport = verify(cert)
    _emit(report, args)
    return EXIT_OK if report.ok else EXIT_FAILED


# audits

def _audit_exit(report: AuditReport) -> int:
    if any(c.failed for c in report.conditions):
        return EXIT_FAILED
    if any(c.inconclusive for c in report.conditions):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_chase_audit(args: argparse.Namespace) -> int:
    ring = _ring(args)
    if args.exhaustive and not isinstance(ring, ModularIntegers):
        raise CommandError("--exhaustive needs --ring zmod:N")
    report = chase_audit(
        ring,
        _mult_set(args),
        trials=args.trials,
        seed=args.seed,
        budget=args.budget,
        workers=args.workers,
        exhaustive=args.exhaustive,
    )
    _emit(report, args)
    return _audit_exit(report)


def cmd_chase_formula(args: argparse.Namespace) -> int:
    report = colon_formula_audit(_ring(args), trials=args.trials, seed=args.seed, workers=args.workers)
    _emit(report, args)
    return EXIT_OK if formula_audit_passed(report) else EXIT_FAILED


def cmd_noetherian_check(args: argparse.Namespace) -> int:
    report = s_noetherian_sample_check(trials=args.trials, seed=args.seed, workers=args.workers)
    _emit(report, args)
    return _audit_exit(report)


def cmd_demo_example(args: argparse.Namespace) -> int:
    report = example_demo(seed=args.seed)
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_report(args: argparse.Namespace) -> int:
    """Re-render a JSON audit or demo report in another format."""
    text = _read_text(args.file)
    report: AuditReport | DemoReport
    try:
        report = DemoReport.model_validate_json(text)
    except ValidationError:
        report = AuditReport.model_validate_json(text)
    _emit(report, args)
    return EXIT_OK if report.passed else EXIT_FAILED


# refute ...

def _trace_exit(trace: RefutationTrace, args: argparse.Namespace) -> int:
    _emit(trace, args)
    return EXIT_OK if trace.refuted else EXIT_FAILED


def cmd_refute_fp(args: argparse.Namespace) -> int:
    claimed = [parse_element(z, IDEALIZATION) for z in args.claimed]
    return _trace_exit(refute_finitely_presented(args.m, claimed), args)  # type: ignore[arg-type]


def cmd_refute_csfp(args: argparse.Namespace) -> int:
    candidate = parse_ideal(args.candidate, IDEALIZATION)
    claimed = [parse_element(z, IDEALIZATION) for z in args.claimed]
    return _trace_exit(refute_csfp(candidate, args.n, claimed), args)  # type: ignore[arg-type]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="z", help="z, zmod:N or idealization (default: z)")
    common.add_argument(
        "--sset", default=STANDARD_SSET, help="generators of S as {g1, g2}, or 'standard' (default)"
    )
    common.add_argument("--allow-zero", action="store_true", help="accept an S that contains 0")
    common.add_argument(
        "--format", default=OutputFormat.TEXT.value, choices=[f.value for f in OutputFormat], help="output format"
    )
    common.add_argument("--seed", type=int, default=settings.SEED, help=f"trial seed (default: {settings.SEED})")
    common.add_argument(
        "--budget",
        type=int,
        default=budget_settings.EXPONENT_BUDGET,
        help=f"exponent budget for searches in S (default: {budget_settings.EXPONENT_BUDGET})",
    )
    common.add_argument(
        "--workers",
        type=int,
        default=budget_settings.AUDIT_WORKERS,
        help=f"processes for audit trials (default: {budget_settings.AUDIT_WORKERS})",
    )
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="scoherent", description="Exact S-coherence toolkit")
    groups = parser.add_subparsers(dest="group", required=True)

    def command(sub, name: str, handler: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    ideal = groups.add_parser("ideal", help="ideal arithmetic").add_subparsers(dest="command", required=True)
    p = command(ideal, "member", cmd_ideal_member, "decide x ∈ I")
    p.add_argument("ideal")
    p.add_argument("element")
    p = command(ideal, "colon", cmd_ideal_colon, "(I : a)")
    p.add_argument("ideal")
    p.add_argument("element")
    p = command(ideal, "intersect", cmd_ideal_intersect, "I ∩ J")
    p.add_argument("left")
    p.add_argument("right")
    p = command(ideal, "sum", cmd_ideal_sum, "I + J")
    p.add_argument("left")
    p.add_argument("right")
    p = command(ideal, "ann", cmd_ideal_ann, "annihilator of an element or a vector [x1, ..., xn]")
    p.add_argument("vector")

    cert = groups.add_parser("cert", help="certificates").add_subparsers(dest="command", required=True)
    p = command(cert, "find", cmd_cert_find, "search for a certificate and print it as JSON")
    p.add_argument("target", help="an ideal literal or a module '<[..], ..> / <..>'")
    p.add_argument("--kind", default="s-finite", choices=["s-finite", "sfp", "csfp", "usfp"])
    p.add_argument("--out", default=None, help="write the certificate to this file")
    p = command(cert, "verify", cmd_cert_verify, "verify a JSON certificate ('-' reads stdin)")
    p.add_argument("file")

    chase = groups.add_parser("chase", help="audits").add_subparsers(dest="command", required=True)
    p = command(chase, "audit", cmd_chase_audit, "certify sampled colons, annihilators and intersections")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--exhaustive", action="store_true", help="every principal ideal and element of ℤ/n")
    p = command(chase, "formula", cmd_chase_formula, "audit the coordinate formula for (N : m)")
    p.add_argument("--trials", type=int, default=500)

    noetherian = groups.add_parser("noetherian", help="S-Noetherian check").add_subparsers(dest="command", required=True)
    p = command(noetherian, "check", cmd_noetherian_check, "(2, 0)·I over the idealization")
    p.add_argument("--trials", type=int, default=500)

    demo = groups.add_parser("demo", help="worked example").add_subparsers(dest="command", required=True)
    command(demo, "example", cmd_demo_example, "run the idealization example end to end")

    # fresh parent: set_defaults below mutates the shared --format action otherwise
    p = groups.add_parser("report", parents=[_common_parser()], help="re-render a JSON audit or demo report")
    p.set_defaults(handler=cmd_report, format=OutputFormat.MD.value)
    p.add_argument("file")

    refute = groups.add_parser("refute", help="idealization counterexamples").add_subparsers(dest="command", required=True)
    p = command(refute, "fp", cmd_refute_fp, "⟨(2m, ∅)⟩ is not finitely presented")
    p.add_argument("m", type=int)
    p.add_argument("claimed", nargs="*", help="claimed relations, e.g. '(0; {1})'")
    p = command(refute, "csfp", cmd_refute_csfp, "N does not witness ⟨(2, 0)⟩ as c-S-finitely presented")
    p.add_argument("candidate")
    p.add_argument("n", type=int)
    p.add_argument("claimed", nargs="*")
    return parser


def _exit_code(error: Exception) -> int:
    for error_type, code in ERROR_EXIT_CODES:
        if isinstance(error, error_type):
            return code
    raise error


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(args.verbose)
    try:
        return args.handler(args)
    except CommandError as e:
        sys.stderr.write(f"scoherent: error: {e}\n")
        return EXIT_USAGE
    except Exception as e:
        code = _exit_code(e)
        logger.debug(f"{type(e).__name__} mapped to exit code {code}")
        sys.stderr.write(f"scoherent: {e}\n")
        return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
