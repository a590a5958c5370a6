"""
Команды dominate, exhaust и atoms
"""
import logging

from ..decomposition import ChargeFamily
from ..domination import dominate, enumerate_atoms, exhaust
from ..errors import ExitCode
from ..formats import format_rational, format_set, parse_set
from ..schemas import Report, ReportStatus
from .common import charge_lines, load_charge

logger = logging.getLogger(__name__)


def handle_dominate(args) -> Report:
    family = ChargeFamily(tuple(load_charge(path) for path in args.members))
    reference = load_charge(args.reference) if args.reference else None
    result = dominate(family, reference)

    report = Report(command="dominate")
    report.section("aggregate", charge_lines(result.dominating))
    report.section("members", [f"mu[{i}]<<aggregate: {flag}" for i, flag in enumerate(result.per_member)])
    report.section("equivalent subfamily", [" ".join(f"mu[{i}]" for i in result.equivalent_subfamily)])
    if result.pivot_flags is not None:
        report.section(
            "reference pivot",
            [
                f"mu[{i}]<<lambda: {ref} pivot: {'OK' if pivot else 'FAIL'}"
                for i, (ref, pivot) in enumerate(zip(result.reference_flags, result.pivot_flags))
            ],
        )
    report.record("dominated", result.dominated)
    report.record("subfamily", ",".join(str(i) for i in result.equivalent_subfamily))
    if not (result.dominated and result.pivot_holds):
        report.fail(ReportStatus.VIOLATION, ExitCode.VIOLATION)
    return report


def handle_exhaust(args) -> Report:
    lam = load_charge(args.charge)
    sets = [parse_set(text) for text in args.sets]
    trace = exhaust(lam, sets)

    report = Report(command="exhaust")
    report.section(
        "chosen",
        [f"H[{i}] = {format_set(H)} gain={format_rational(g)}" for i, H, g in zip(trace.chosen_indices, trace.chosen, trace.increments)],
    )
    report.section("residuals", ["k residual_k"] + [f"{k} {format_rational(r)}" for k, r in trace.table()])
    report.record("steps", len(trace.chosen)).record("final_residual", format_rational(trace.final_residual))
    if trace.final_residual != 0:
        report.fail(ReportStatus.VIOLATION, ExitCode.VIOLATION)
    return report


def handle_atoms(args) -> Report:
    lam = load_charge(args.charge)
    found = enumerate_atoms(lam)
    report = Report(command="atoms")
    report.section(
        "atoms",
        [
            f"{atom.kind.value} {format_rational(atom.location)} G={format_set(atom.representative)} mass={format_rational(atom.mass)}"
            for atom in found.atoms
        ],
    )
    if found.rejected:
        report.section("not isolated", [f"{kind.value} {format_rational(x)}" for kind, x in found.rejected])
    return report.record("atoms", len(found.atoms))


def register(subparsers) -> None:
    parser = subparsers.add_parser("dominate", help="Halmos-Savage domination of a family")
    parser.add_argument("members", nargs="+")
    parser.add_argument("--reference", default=None)
    parser.set_defaults(handler=handle_dominate)

    parser = subparsers.add_parser("exhaust", help="greedy exhaustion of a set family")
    parser.add_argument("charge")
    parser.add_argument("--sets", nargs="+", required=True)
    parser.set_defaults(handler=handle_exhaust)

    parser = subparsers.add_parser("atoms", help="atoms with disjoint representatives")
    parser.add_argument("charge")
    parser.set_defaults(handler=handle_atoms)
