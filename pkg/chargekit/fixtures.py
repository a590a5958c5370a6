"""
Набор эталонных случаев, вычисленных вручную

Используется командой selftest и параметризованными тестами.
"""
from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Callable, List, Tuple

from .algebras import OMEGA, CanonicalSet
from .charges import (
    Charge,
    SimpleFunction,
    abs_continuous,
    continuity_witness,
    density,
    density_transform,
    evaluate,
    integrate_simple,
    left_limit,
    linear_combine,
    meet,
    point_mass,
    singular,
    splitting_set,
    total_variation,
)
from .completion import TailSequence, completion_sequence, completion_status, verify_sigma_additivity
from .config import settings
from .decomposition import ChargeFamily, aggregate, in_L, lebesgue_decompose
from .domination import dominate, enumerate_atoms, exhaust, in_AH
from .formats import parse_charge_file, parse_extended_set
from .ratlp import LE, LinearProgram, LPOutcome, LPStatus, check_certificate, solve_lp
from .schemas import Certificate, YanMode, YanModel
from .yan import check_condition_ii, check_equivalence, find_certificate, sup_scale, verify_certificate

logger = logging.getLogger(__name__)

F = Fraction


def D(a, b, coeff=1) -> Charge:
    return Charge.of(density(a, b), coeff)


def delta(x, coeff=1) -> Charge:
    return Charge.of(point_mass(x), coeff)


def eta(c, coeff=1) -> Charge:
    return Charge.of(left_limit(c), coeff)


def interval(a, b) -> CanonicalSet:
    return CanonicalSet.interval(a, b)


@dataclass(frozen=True)
class FixtureCase:
    name: str
    module: str
    compute: Callable[[], object]
    expected: object

    def run(self) -> Tuple[bool, object]:
        actual = self.compute()
        return actual == self.expected, actual


# Модели Яна на двух точках
BALANCED_CONE = YanModel(n=2, weights=(F(1, 2), F(1, 2)), generators=((F(1), F(-1)),), mode=YanMode.CONE)
DEGENERATE_CONE = YanModel(n=2, weights=(F(1, 2), F(1, 2)), generators=((F(1), F(0)),), mode=YanMode.CONE)
CAPPED_HULL = YanModel(n=2, weights=(F(1, 2), F(1, 2)), generators=((F(0), F(0)), (F(2), F(0))), mode=YanMode.HULL)
TRIVIAL_CONE = YanModel(n=2, weights=(F(1, 2), F(1, 2)), mode=YanMode.CONE)

DEGENERATE_CONE_FILE = "yan\nspace 2\nlambda 1/2 1/2\nmode cone\ngen 1/1 0/1\n"

# λ = Density[0,1) + η⁻_1 и тестовые множества для проверки σ-аддитивности
ESCAPING_LAMBDA = D(0, 1) + eta(1)
COMPLETION_TESTS = (
    "[0,1)",
    "[0,1/2]",
    "{1/2}",
    "(1/4,3/4)",
    "[1/2,1)",
    "(1/2,1]",
    "[0,1/4)+{3/4}",
    "(0,1/8]+[1/2,5/8)",
    "empty",
)


def completion_tests() -> List:
    return [parse_extended_set(text) for text in COMPLETION_TESTS]


def _splits(mu: Charge, nu: Charge, eps) -> Tuple[bool, bool]:
    """(μ ⊥ ν, |μ|(Bᶜ) + |ν|(B) < ε для построенного B)"""
    B = splitting_set(mu, nu, eps)
    gap = evaluate(total_variation(mu)[0], B.complement()) + evaluate(total_variation(nu)[0], B)
    return singular(mu, nu), gap < F(eps)


def _atom_locations(lam: Charge, bounds) -> Tuple:
    atoms = enumerate_atoms(lam).atoms
    return tuple(
        (atom.location, atom.representative.difference(bound).is_empty) for atom, bound in zip(atoms, bounds)
    ) + (len(atoms),)


def _status(lam: Charge, text: str) -> Tuple:
    status = completion_status(lam, parse_extended_set(text))
    return status.inner, status.outer, status.member, status.extension


def _sequence_summary(lam: Charge) -> Tuple:
    sequence = completion_sequence(lam)
    return sequence[0], sum((evaluate(lam, A) for A in sequence), F(0))


def _cli_yan_exit():
    from .commands.yan import yan_report
    from .formats import parse_yan_file

    report = yan_report(parse_yan_file(DEGENERATE_CONE_FILE))
    return int(report.exit_code), dict(report.machine).get("witness")


_DEGENERATE_LP = LinearProgram(objective=(1,), rows=((1,),), relations=(LE,), rhs=(-1,))
_NEGATED_LP = LinearProgram(objective=(1,), rows=((1,),), relations=(LE,), rhs=(1,))
_UNBOUNDED_LP = LinearProgram(objective=(1, 1), rows=((1, -1),), relations=(LE,), rhs=(0,))


derived_cases: List[FixtureCase] = [
    # charges
    FixtureCase(
        "linear_combine_refines_overlaps",
        "charges",
        lambda: linear_combine([1, 1], [D(0, F(1, 2)), D(F(1, 4), F(3, 4))]).densities,
        ((F(0), F(1, 4), F(1)), (F(1, 4), F(1, 2), F(2)), (F(1, 2), F(3, 4), F(1))),
    ),
    FixtureCase(
        "total_variation_of_signed_charge",
        "charges",
        lambda: total_variation(delta(F(1, 3)) - eta(F(2, 3), 2)),
        (delta(F(1, 3)) + eta(F(2, 3), 2), F(3)),
    ),
    FixtureCase("meet_point_and_density", "charges", lambda: meet(delta(F(1, 2)), D(0, 1)).is_zero, True),
    FixtureCase(
        "meet_overlapping_densities",
        "charges",
        lambda: meet(D(0, F(1, 2), 2), D(F(1, 4), F(3, 4))),
        D(F(1, 4), F(1, 2)),
    ),
    FixtureCase(
        "left_limit_not_continuous_wrt_density",
        "charges",
        lambda: (abs_continuous(eta(F(1, 2)), D(0, 1)), continuity_witness(eta(F(1, 2)), D(0, 1), 4)),
        (False, interval(F(1, 4), F(1, 2))),
    ),
    FixtureCase(
        "point_singular_to_density",
        "charges",
        lambda: _splits(delta(F(1, 4)), D(0, 1), F(1, 100)),
        (True, True),
    ),
    FixtureCase(
        "left_limit_singular_to_point",
        "charges",
        lambda: _splits(eta(1), delta(F(1, 2)), F(1, 100)),
        (True, True),
    ),
    FixtureCase(
        "integrate_left_limit_uses_left_value",
        "charges",
        lambda: integrate_simple(eta(F(1, 2)), SimpleFunction.step([(F(1, 4), F(1, 2), 5)], default=7)),
        F(5),
    ),
    FixtureCase(
        "density_transform_by_steps",
        "charges",
        lambda: density_transform(D(0, 1), SimpleFunction.step([(0, F(1, 2), 2), (F(1, 2), 1, 4)])),
        D(0, F(1, 2), 2) + D(F(1, 2), 1, 4),
    ),
    # decomposition
    FixtureCase(
        "aggregate_with_weights",
        "decomposition",
        lambda: aggregate(ChargeFamily((delta(F(1, 2), 3), D(0, 1)), (F(1, 2), F(1, 2)))),
        delta(F(1, 2), F(1, 2)) + D(0, 1, F(1, 2)),
    ),
    FixtureCase(
        "aggregate_with_default_weights",
        "decomposition",
        lambda: aggregate(ChargeFamily.of(delta(F(1, 4)), delta(F(1, 4)) + D(0, 1))),
        delta(F(1, 4), F(3, 4)) + D(0, 1, F(1, 4)),
    ),
    FixtureCase(
        "in_L_by_support_cover",
        "decomposition",
        lambda: in_L(D(F(1, 4), F(1, 2)), ChargeFamily.of(D(0, F(1, 2)), delta(F(3, 4)))),
        True,
    ),
    FixtureCase(
        "decompose_mixed_charge",
        "decomposition",
        lambda: (lambda r: (r.continuous_part, r.singular_part))(
            lebesgue_decompose(D(0, 1) + delta(F(1, 2)) + eta(1), ChargeFamily.of(D(0, 1)))
        ),
        (D(0, 1), delta(F(1, 2)) + eta(1)),
    ),
    FixtureCase(
        "decompose_splits_density",
        "decomposition",
        lambda: (lambda r: (r.continuous_part, r.singular_part))(
            lebesgue_decompose(D(0, F(3, 4), 2), ChargeFamily.of(D(F(1, 2), 1)))
        ),
        (D(F(1, 2), F(3, 4), 2), D(0, F(1, 2), 2)),
    ),
    # domination
    FixtureCase(
        "dominate_picks_covering_member",
        "domination",
        lambda: (lambda r: (r.dominating, r.per_member, r.equivalent_subfamily))(
            dominate(ChargeFamily.of(delta(F(1, 4)), delta(F(1, 4)) + D(0, 1)))
        ),
        # члены семейства нумеруются с нуля: (1,) - второй член
        (delta(F(1, 4), F(3, 4)) + D(0, 1, F(1, 4)), (True, True), (1,)),
    ),
    FixtureCase(
        "dominate_pivot_with_reference",
        "domination",
        lambda: (lambda r: (r.per_member, r.reference_flags, r.pivot_holds))(
            dominate(ChargeFamily.of(D(0, F(1, 2)), D(F(1, 2), 1)), D(0, 1))
        ),
        ((True, True), (True, True), True),
    ),
    FixtureCase(
        "exhaust_density_three_sets",
        "domination",
        lambda: (lambda t: (t.chosen, t.residuals))(
            exhaust(D(0, 1), [interval(0, F(1, 2)), interval(0, F(3, 4)), interval(F(1, 2), 1)])
        ),
        ((interval(0, F(3, 4)), interval(F(1, 2), 1)), (F(1, 4), F(0))),
    ),
    FixtureCase(
        "exhaust_point_mass_first",
        "domination",
        lambda: (lambda t: (t.chosen, t.residuals))(
            exhaust(delta(F(1, 2)) + D(0, 1), [interval(F(1, 2), 1), interval(0, F(1, 2))])
        ),
        ((interval(F(1, 2), 1), interval(0, F(1, 2))), (F(1, 2), F(0))),
    ),
    FixtureCase(
        "in_AH_density_gap",
        "domination",
        lambda: in_AH(D(0, 1), [interval(0, F(1, 2))], interval(0, F(3, 4))),
        False,
    ),
    FixtureCase(
        "in_AH_point_location",
        "domination",
        lambda: (
            in_AH(delta(F(1, 4)), [interval(0, F(1, 8))], interval(0, F(1, 2))),
            in_AH(delta(F(1, 4)), [interval(F(1, 8), F(3, 8))], interval(0, F(1, 2))),
        ),
        (False, True),
    ),
    FixtureCase(
        "atoms_isolated_from_density",
        "domination",
        lambda: _atom_locations(
            delta(F(1, 4)) + delta(F(3, 4)) + D(F(1, 2), F(5, 8)),
            [interval(F(1, 4), F(1, 2)), interval(F(3, 4), 1)],
        ),
        ((F(1, 4), True), (F(3, 4), True), 2),
    ),
    FixtureCase(
        "no_atoms_for_abutting_density",
        "domination",
        lambda: enumerate_atoms(delta(F(1, 2)) + D(F(1, 2), 1)).atoms,
        (),
    ),
    # completion
    FixtureCase(
        "singleton_under_density",
        "completion",
        lambda: _status(D(0, 1), "{1/2}"),
        (F(0), F(0), True, F(0)),
    ),
    FixtureCase(
        "singleton_under_point_mass",
        "completion",
        lambda: _status(delta(F(1, 2)), "{1/2}"),
        (F(0), F(1), False, None),
    ),
    FixtureCase(
        "closed_interval_under_density",
        "completion",
        lambda: _status(D(0, 1), "[1/4,1/2]"),
        (F(1, 4), F(1, 4), True, F(1, 4)),
    ),
    FixtureCase(
        "sequence_captures_left_limit",
        "completion",
        lambda: _sequence_summary(ESCAPING_LAMBDA),
        (interval(1 - settings.capture_eps, 1), F(2)),
    ),
    FixtureCase(
        "sequence_captures_point_mass",
        "completion",
        lambda: _sequence_summary(delta(F(1, 2))),
        (interval(F(1, 2), F(1, 2) + settings.capture_eps), F(1)),
    ),
    FixtureCase(
        "tail_sequence_loses_left_limit",
        "completion",
        lambda: verify_sigma_additivity(ESCAPING_LAMBDA, [], [OMEGA], tail=TailSequence(0, 1)).rows[0].defect,
        F(1),
    ),
    FixtureCase(
        "constructed_sequence_has_no_defect",
        "completion",
        lambda: verify_sigma_additivity(
            ESCAPING_LAMBDA, completion_sequence(ESCAPING_LAMBDA), completion_tests()
        ).passed,
        True,
    ),
    # ratlp
    FixtureCase(
        "lp_unbounded_ray",
        "ratlp",
        lambda: (lambda o: (o.status, o.ray))(solve_lp(_UNBOUNDED_LP)),
        (LPStatus.UNBOUNDED, (F(1), F(1))),
    ),
    FixtureCase(
        "farkas_row_rejected_after_negating_rhs",
        "ratlp",
        lambda: check_certificate(
            _NEGATED_LP, LPOutcome(status=LPStatus.INFEASIBLE, y=solve_lp(_DEGENERATE_LP).y)
        ),
        False,
    ),
    # yan
    FixtureCase("sup_scale_balanced_cone", "yan", lambda: sup_scale(BALANCED_CONE, (1, 0)), F(0)),
    FixtureCase("sup_scale_degenerate_cone", "yan", lambda: sup_scale(DEGENERATE_CONE, (1, 0)), None),
    FixtureCase("sup_scale_capped_hull", "yan", lambda: sup_scale(CAPPED_HULL, (1, 0)), F(2)),
    FixtureCase("condition_ii_balanced_cone", "yan", lambda: check_condition_ii(BALANCED_CONE).holds, True),
    FixtureCase(
        "condition_ii_degenerate_cone",
        "yan",
        lambda: (lambda c: (c.holds, c.witness))(check_condition_ii(DEGENERATE_CONE)),
        (False, (0,)),
    ),
    FixtureCase(
        "certificate_balanced_cone",
        "yan",
        lambda: (lambda c: (c.p, c.margin, c.k_bound, c.ratio_bound))(find_certificate(BALANCED_CONE).certificate),
        ((F(1, 2), F(1, 2)), F(1), F(0), F(1)),
    ),
    FixtureCase(
        "certificate_degenerate_cone",
        "yan",
        lambda: (lambda r: (r.found, r.witness))(find_certificate(DEGENERATE_CONE)),
        (False, (0,)),
    ),
    FixtureCase(
        "certificate_positive_on_generator_rejected",
        "yan",
        lambda: verify_certificate(
            BALANCED_CONE, Certificate(p=(F(3, 4), F(1, 4)), k_bound=F(0), ratio_bound=F(3, 2), margin=F(1, 2))
        ),
        False,
    ),
    FixtureCase(
        "equivalence_balanced_cone",
        "yan",
        lambda: (lambda r: (r.condition_i, r.condition_ii, r.condition_iii))(check_equivalence(BALANCED_CONE)),
        (True, True, True),
    ),
    FixtureCase(
        "equivalence_degenerate_cone",
        "yan",
        lambda: (lambda r: (r.condition_i, r.condition_ii, r.condition_iii))(check_equivalence(DEGENERATE_CONE)),
        (False, False, False),
    ),
    # cli
    FixtureCase(
        "charge_file_refines_densities",
        "cli",
        lambda: parse_charge_file("charge\ndensity 0/1 1/2 coeff 1/1\ndensity 1/4 3/4 coeff 1/1\n"),
        D(0, F(1, 4)) + D(F(1, 4), F(1, 2), 2) + D(F(1, 2), F(3, 4)),
    ),
    FixtureCase("yan_command_reports_witness", "cli", _cli_yan_exit, (1, "{0}")),
]


def run_fixtures(cases: List[FixtureCase] = None) -> List[Tuple[FixtureCase, bool, object]]:
    results = []
    for case in cases or derived_cases:
        passed, actual = case.run()
        if not passed:
            logger.error(f"Fixture {case.name} failed: expected {case.expected}, got {actual}")
        results.append((case, passed, actual))
    return results
