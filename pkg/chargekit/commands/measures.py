"""
Команды eval, tv и relate: значения зарядов и отношения ≪, ⊥
"""
import logging

from ..charges import abs_continuous, continuity_witness, evaluate, singular, splitting_set, total_variation
from ..config import settings
from ..formats import format_rational, format_set, parse_set
from ..schemas import Report
from .common import charge_lines, load_charge, rational_arg

logger = logging.getLogger(__name__)

WITNESS_INDICES = (1, 2, 4, 8, 16)


def handle_eval(args) -> Report:
    """μ(A) для множества алгебры"""
    mu = load_charge(args.charge)
    A = parse_set(args.set)
    value = evaluate(mu, A)
    report = Report(command="eval")
    report.section("charge", charge_lines(mu))
    report.section("value", [f"mu({format_set(A)}) = {format_rational(value)}"])
    return report.record("set", format_set(A)).record("value", format_rational(value))


def handle_tv(args) -> Report:
    """|μ| и ‖μ‖"""
    mu = load_charge(args.charge)
    variation, size = total_variation(mu)
    report = Report(command="tv")
    report.section("total variation", charge_lines(variation))
    report.section("norm", [format_rational(size)])
    return report.record("norm", format_rational(size))


def _witness_lines(mu, nu):
    lines = []
    abs_mu, abs_nu = total_variation(mu)[0], total_variation(nu)[0]
    for k in WITNESS_INDICES:
        A = continuity_witness(mu, nu, k)
        lines.append(
            f"k={k} A={format_set(A)} |mu|(A)={format_rational(evaluate(abs_mu, A))} "
            f"|nu|(A)={format_rational(evaluate(abs_nu, A))}"
        )
    return lines


def handle_relate(args) -> Report:
    """μ ≪ ν, ν ≪ μ и μ ⊥ ν со свидетелями"""
    mu, nu = load_charge(args.first), load_charge(args.second)
    eps = args.eps if args.eps is not None else settings.capture_eps
    forward, backward, orthogonal = abs_continuous(mu, nu), abs_continuous(nu, mu), singular(mu, nu)

    report = Report(command="relate")
    report.section("mu", charge_lines(mu)).section("nu", charge_lines(nu))
    report.section("relations", [f"mu<<nu: {forward}", f"nu<<mu: {backward}", f"mu_perp_nu: {orthogonal}"])
    if not forward:
        report.section("witness mu<<nu fails", _witness_lines(mu, nu))
    if not backward:
        report.section("witness nu<<mu fails", _witness_lines(nu, mu))
    report.record("mu_ac_nu", forward).record("nu_ac_mu", backward).record("singular", orthogonal)
    if orthogonal:
        B = splitting_set(mu, nu, eps)
        report.section("splitting set", [f"B={format_set(B)} eps={format_rational(eps)}"])
        report.record("splitting_set", format_set(B))
    return report


def register(subparsers) -> None:
    parser = subparsers.add_parser("eval", help="value of a charge on a set")
    parser.add_argument("charge")
    parser.add_argument("set")
    parser.set_defaults(handler=handle_eval)

    parser = subparsers.add_parser("tv", help="total variation and norm")
    parser.add_argument("charge")
    parser.set_defaults(handler=handle_tv)

    parser = subparsers.add_parser("relate", help="absolute continuity and singularity")
    parser.add_argument("first")
    parser.add_argument("second")
    parser.add_argument("--eps", type=rational_arg, default=None)
    parser.set_defaults(handler=handle_relate)
