"""
Команда complete: статус множества в λ-пополнении и σ-аддитивная последовательность
"""
import logging

from ..algebras import OMEGA
from ..charges import evaluate
from ..completion import TailSequence, completion_sequence, completion_status, verify_sigma_additivity
from ..errors import ExitCode
from ..formats import format_extended_set, format_rational, format_set, parse_extended_set
from ..schemas import Report, ReportStatus
from .common import charge_lines, load_charge, rational_arg

logger = logging.getLogger(__name__)


def handle_complete(args) -> Report:
    lam = load_charge(args.charge)
    report = Report(command="complete")
    report.section("lambda", charge_lines(lam))

    if args.set is not None:
        B = parse_extended_set(args.set)
        status = completion_status(lam, B)
        lines = [
            f"B = {format_extended_set(B)}",
            f"inner = {format_rational(status.inner)}",
            f"outer = {format_rational(status.outer)}",
            f"member = {status.member}",
        ]
        if status.member:
            lines.append(f"extension = {format_rational(status.extension)}")
        report.section("completion status", lines)
        report.record("inner", format_rational(status.inner)).record("outer", format_rational(status.outer))
        report.record("member", status.member)

    if args.sequence or args.tail:
        tail = TailSequence(*args.tail) if args.tail else None
        sequence = [] if tail is not None else completion_sequence(lam)
        tests = [parse_extended_set(text) for text in args.test] or [OMEGA]
        result = verify_sigma_additivity(lam, sequence, tests, tail=tail)

        lines = [f"A[{n}] = {format_set(A)} lambda={format_rational(evaluate(lam, A))}" for n, A in enumerate(sequence, 1)]
        if tail is not None:
            lines.append(
                f"tail A[n] = [l-(l-s)/n, l-(l-s)/(n+1)) s={format_rational(tail.start)} l={format_rational(tail.limit)}"
            )
        report.section("sequence", lines)
        report.section(
            "sigma additivity",
            ["test value series defect"]
            + [
                f"{row.test} {format_rational(row.value)} {format_rational(row.series)} {format_rational(row.defect)}"
                for row in result.rows
            ],
        )
        report.record("sequence_length", len(sequence)).record("sigma_additive", result.passed)
        if not result.passed:
            report.fail(ReportStatus.VIOLATION, ExitCode.VIOLATION)
    return report


def register(subparsers) -> None:
    parser = subparsers.add_parser("complete", help="lambda-completion queries")
    parser.add_argument("charge")
    parser.add_argument("set", nargs="?", default=None)
    parser.add_argument("--sequence", action="store_true")
    parser.add_argument("--tail", nargs=2, type=rational_arg, metavar=("START", "LIMIT"), default=None)
    parser.add_argument("--test", nargs="+", default=[])
    parser.set_defaults(handler=handle_complete)
