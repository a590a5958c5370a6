"""
Команда yan: сертификат P теоремы Яна или свидетель A
"""
import logging

from ..errors import ExitCode
from ..formats import format_points, format_rational, format_yan_model, parse_yan_file
from ..schemas import Report, ReportStatus, YanModel
from ..yan import check_equivalence, find_certificate, verify_certificate
from .common import read_text

logger = logging.getLogger(__name__)


def yan_report(model: YanModel, equivalence: bool = False) -> Report:
    report = Report(command="yan")
    report.section("model", format_yan_model(model).splitlines())
    result = find_certificate(model)

    if result.found:
        c = result.certificate
        verified = verify_certificate(model, c)
        report.section(
            "PASS",
            [
                "p = " + " ".join(format_rational(v) for v in c.p),
                f"margin = {format_rational(c.margin)}",
                f"k_bound = {format_rational(c.k_bound)}",
                f"ratio_bound = {format_rational(c.ratio_bound)}",
                f"verified = {verified}",
            ],
        )
        report.record("result", "certificate").record("p", " ".join(format_rational(v) for v in c.p))
        report.record("margin", format_rational(c.margin))
        if not verified:
            report.fail(ReportStatus.ERROR, ExitCode.SEMANTIC_ERROR)
    else:
        report.section("FAIL", [f"witness A = {format_points(result.witness)}"])
        report.record("result", "witness").record("witness", format_points(result.witness))
        report.fail(ReportStatus.VIOLATION, ExitCode.VIOLATION)

    if equivalence:
        check = check_equivalence(model)
        report.section(
            "equivalence",
            [
                f"(i) sampled over {check.sampled} functions: {check.condition_i}",
                f"(ii) {check.condition_ii}",
                f"(iii) {check.condition_iii}",
            ],
        )
        report.record("consistent", check.consistent)
    return report


def handle_yan(args) -> Report:
    return yan_report(parse_yan_file(read_text(args.file)), args.equivalence)


def register(subparsers) -> None:
    parser = subparsers.add_parser("yan", help="Yan separation certificate")
    parser.add_argument("file")
    parser.add_argument("--equivalence", action="store_true")
    parser.set_defaults(handler=handle_yan)
