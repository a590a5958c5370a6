"""
Команда decompose: обобщенное разложение Лебега с проверочными строками
"""
import logging

from ..charges import abs_continuous, absolute, evaluate, singular, splitting_set
from ..config import settings
from ..decomposition import ChargeFamily, lebesgue_decompose
from ..errors import ExitCode
from ..formats import format_rational, format_set
from ..schemas import Report, ReportStatus
from .common import charge_lines, load_charge, rational_arg

logger = logging.getLogger(__name__)


def handle_decompose(args) -> Report:
    lam = load_charge(args.charge)
    members = tuple(load_charge(path) for path in args.against)
    family = ChargeFamily(members, tuple(args.weights) if args.weights else None)
    result = lebesgue_decompose(lam, family)
    eps = settings.capture_eps

    report = Report(command="decompose")
    report.section("lambda", charge_lines(lam))
    for i, (mu, alpha) in enumerate(zip(members, family.effective_weights if members else ())):
        report.section(f"mu[{i}] alpha={format_rational(alpha)}", charge_lines(mu))
    report.section("continuous part", charge_lines(result.continuous_part))
    report.section("singular part", charge_lines(result.singular_part))

    checks = []
    ok = (result.continuous_part + result.singular_part) == lam
    checks.append(f"sum_equals_lambda: {'OK' if ok else 'FAIL'}")
    if members:
        continuous_ok = abs_continuous(result.continuous_part, result.aggregate)
        checks.append(f"continuous<<aggregate: {'OK' if continuous_ok else 'FAIL'}")
        ok = ok and continuous_ok
    for i, mu in enumerate(members):
        variation = absolute(mu)
        if singular(result.singular_part, variation):
            B = splitting_set(result.singular_part, variation, eps)
            gap = evaluate(absolute(result.singular_part), B.complement()) + evaluate(variation, B)
            checks.append(
                f"singular_vs[mu_{i}]: OK (B={format_set(B)}, eps={format_rational(eps)}, gap={format_rational(gap)})"
            )
        else:
            checks.append(f"singular_vs[mu_{i}]: FAIL")
            ok = False
    report.section("verification", checks)
    report.record("members", len(members)).record("verified", ok)
    if not ok:
        logger.error(f"Decomposition verification failed for {lam}")
        report.fail(ReportStatus.VIOLATION, ExitCode.VIOLATION)
    return report


def register(subparsers) -> None:
    parser = subparsers.add_parser("decompose", help="generalized Lebesgue decomposition")
    parser.add_argument("charge")
    parser.add_argument("--against", nargs="*", default=[])
    parser.add_argument("--weights", nargs="+", type=rational_arg, default=None)
    parser.set_defaults(handler=handle_decompose)
