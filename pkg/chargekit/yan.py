"""
Теорема Яна на конечном пространстве: условия (i), (ii) и вероятность P из (iii)

Координаты вне носителя λ отбрасываются перед каждой ЛП: в L¹(λ)
функции, равные λ-почти всюду, отождествляются.
"""
from fractions import Fraction
import logging
import random
from typing import List, Optional, Sequence, Tuple

from .algebras import ONE, ZERO, as_rational
from .config import settings
from .errors import BadInput, EquivalenceViolation, TooLarge
from .ratlp import GE, LE, EQ, LinearProgram, LPStatus, solve_lp
from .schemas import Certificate, ConditionCheck, EquivalenceReport, YanMode, YanModel, YanResult

logger = logging.getLogger(__name__)


def _indicator(n: int, points: Sequence[int]) -> Tuple[Fraction, ...]:
    return tuple(ONE if i in points else ZERO for i in range(n))


def sup_scale(model: YanModel, f: Sequence) -> Optional[Fraction]:
    """
    sup{t ≥ 0 : t·f ∈ C} для C = K − Sim₊; None означает +∞

    ЛП: max t при t·f_ω − Σ_j θ_j k_{jω} ≤ 0 на supp(λ), θ ≥ 0 и Σθ ≤ 1
    в режиме hull.
    """
    f = tuple(as_rational(v) for v in f)
    if len(f) != model.n:
        raise BadInput(f"vector has {len(f)} coordinates, space has {model.n} points")
    if any(v < 0 for v in f):
        raise BadInput("f must be nonnegative")
    if sum((v * w for v, w in zip(f, model.weights)), ZERO) <= 0:
        raise BadInput("f must have positive lambda-integral")

    support = model.support
    generators = model.generators
    rows = [(f[w],) + tuple(-k[w] for k in generators) for w in support]
    relations = [LE] * len(rows)
    rhs = [ZERO] * len(rows)
    if model.mode == YanMode.HULL and generators:
        rows.append((ZERO,) + (ONE,) * len(generators))
        relations.append(LE)
        rhs.append(ONE)
    program = LinearProgram(
        objective=(ONE,) + (ZERO,) * len(generators), rows=tuple(rows), relations=tuple(relations), rhs=tuple(rhs)
    )
    outcome = solve_lp(program)
    if outcome.status == LPStatus.UNBOUNDED:
        return None
    return outcome.value


def _subsets(support: Sequence[int]):
    """Непустые подмножества носителя в порядке битовой маски"""
    for mask in range(1, 2 ** len(support)):
        yield tuple(w for bit, w in enumerate(support) if mask >> bit & 1)


def check_condition_ii(model: YanModel) -> ConditionCheck:
    """Условие (ii): sup_scale(1_A) конечен для всех A ⊆ supp(λ) с λ(A) > 0"""
    if model.n > settings.YAN_MAX_SPACE:
        raise TooLarge(f"space of {model.n} points exceeds CHARGEKIT_YAN_MAX_SPACE={settings.YAN_MAX_SPACE}")
    checked = 0
    for A in _subsets(model.support):
        checked += 1
        if sup_scale(model, _indicator(model.n, A)) is None:
            logger.debug(f"Condition (ii) fails at A={A} after {checked} sets")
            return ConditionCheck(holds=False, witness=A, checked=checked)
    return ConditionCheck(holds=True, checked=checked)


def _bounds(model: YanModel, p: Sequence[Fraction]) -> Tuple[Fraction, Fraction, Fraction]:
    """(k_bound, ratio_bound, margin) для вектора p"""
    k_bound = max([ZERO] + [sum((a * b for a, b in zip(p, k)), ZERO) for k in model.generators])
    ratios = [p[w] / model.weights[w] for w in model.support]
    return k_bound, max(ratios), min(ratios)


def find_certificate(model: YanModel) -> YanResult:
    """
    Вероятность P из условия (iii) или свидетель A нарушения (ii)

    ЛП: max t при p·k_j ≤ 0 (cone), p_ω ≥ t·λ_ω на supp(λ), Σp = 1. В режиме
    hull ограничение на генераторы не нужно: на конечной оболочке sup_k P(k)
    всегда конечен. Если t* = 0 или ЛП несовместна, берется свидетель из (ii).
    """
    support = model.support
    size = len(support)
    rows, relations, rhs = [], [], []
    if model.mode == YanMode.CONE:
        for k in model.generators:
            rows.append(tuple(k[w] for w in support) + (ZERO,))
            relations.append(LE)
            rhs.append(ZERO)
    for i, w in enumerate(support):
        rows.append(tuple(ONE if j == i else ZERO for j in range(size)) + (-model.weights[w],))
        relations.append(GE)
        rhs.append(ZERO)
    rows.append((ONE,) * size + (ZERO,))
    relations.append(EQ)
    rhs.append(ONE)
    program = LinearProgram(
        objective=(ZERO,) * size + (ONE,), rows=tuple(rows), relations=tuple(relations), rhs=tuple(rhs)
    )
    outcome = solve_lp(program)

    if outcome.status == LPStatus.OPTIMAL and outcome.value > 0:
        p = [ZERO] * model.n
        for i, w in enumerate(support):
            p[w] = outcome.x[i]
        k_bound, ratio_bound, margin = _bounds(model, p)
        certificate = Certificate(p=tuple(p), k_bound=k_bound, ratio_bound=ratio_bound, margin=margin)
        logger.info(f"Yan certificate found: p={certificate.p}, margin={margin}")
        return YanResult(certificate=certificate)

    check = check_condition_ii(model)
    if check.holds:
        from .formats import format_yan_model

        raise EquivalenceViolation(
            "condition (ii) holds but no equivalent probability was found", instance=format_yan_model(model)
        )
    logger.info(f"No Yan certificate: witness A={check.witness}")
    return YanResult(witness=check.witness)


def verify_certificate(model: YanModel, certificate: Certificate) -> bool:
    """Проверка (a)–(c); sup в (b) на конечном пространстве достигается на одноточечных A"""
    p = certificate.p
    if len(p) != model.n or any(v < 0 for v in p) or sum(p, ZERO) != ONE:
        return False
    if any((v > 0) != (w > 0) for v, w in zip(p, model.weights)):
        return False
    products = [sum((a * b for a, b in zip(p, k)), ZERO) for k in model.generators]
    if model.mode == YanMode.CONE and any(v > 0 for v in products):
        return False
    k_bound, ratio_bound, margin = _bounds(model, p)
    return (
        certificate.k_bound == k_bound
        and certificate.ratio_bound == ratio_bound
        and certificate.margin == margin
        and margin > 0
    )


def sample_functions(model: YanModel) -> List[Tuple[Fraction, ...]]:
    """
    Детерминированное семейство f ≥ 0 с λ(f) > 0

    Индикаторы всех непустых A ⊆ supp(λ), смеси 1/3·1_{A_k} + 2/3·1_{A_{k+1}}
    соседних индикаторов и SAMPLE_COUNT случайных векторов из {0, 1/2, …, 3}.
    """
    n = model.n
    indicators = [_indicator(n, A) for A in _subsets(model.support)]
    mixtures = [
        tuple(Fraction(1, 3) * a + Fraction(2, 3) * b for a, b in zip(first, second))
        for first, second in zip(indicators, indicators[1:])
    ]
    rng = random.Random(settings.SAMPLE_SEED)
    randoms = []
    for _ in range(settings.SAMPLE_COUNT):
        f = tuple(Fraction(rng.randint(0, 6), 2) for _ in range(n))
        if sum((v * w for v, w in zip(f, model.weights)), ZERO) > 0:
            randoms.append(f)
    return indicators + mixtures + randoms


def check_equivalence(model: YanModel) -> EquivalenceReport:
    """
    Согласованность (i) ⇔ (ii) ⇔ (iii)

    (ii) перебором, (iii) через find_certificate, (i) на выборке функций.
    Любое расхождение - EquivalenceViolation с моделью в синтаксисе yan-файла.
    """
    condition_ii = check_condition_ii(model)
    result = find_certificate(model)
    samples = sample_functions(model)
    condition_i = all(sup_scale(model, f) is not None for f in samples)

    report = EquivalenceReport(
        condition_i=condition_i,
        condition_ii=condition_ii.holds,
        condition_iii=result.found,
        sampled=len(samples),
        witness=condition_ii.witness,
        certificate=result.certificate,
    )
    if not report.consistent:
        from .formats import format_yan_model

        logger.error(f"Yan conditions disagree: (i)={condition_i} (ii)={condition_ii.holds} (iii)={result.found}")
        raise EquivalenceViolation("conditions (i), (ii), (iii) disagree", instance=format_yan_model(model))
    return report
