"""
Доминирование семейств (Халмош–Сэвидж), жадное исчерпание и перечисление атомов
"""
from fractions import Fraction
import heapq
import logging
from itertools import islice
from typing import Iterable, List, Optional, Tuple

from .algebras import EMPTY, ONE, ZERO, CanonicalSet, left_neighborhood, right_neighborhood
from .charges import Charge, abs_continuous, evaluate
from .config import settings
from .decomposition import ChargeFamily, aggregate, lebesgue_decompose
from .errors import EmptyFamily, NotPositive
from .schemas import Atom, AtomKind, AtomList, DominationReport, ExhaustionTrace

logger = logging.getLogger(__name__)


def _support(mu: Charge) -> Tuple[frozenset, frozenset, CanonicalSet]:
    return mu.point_keys, mu.left_keys, mu.density_support


def _support_gain(current, mu: Charge) -> Fraction:
    """Сколько нового носителя добавляет μ: число новых ключей плюс новая длина плотности"""
    points, lefts, dens = current
    return (
        len(mu.point_keys - points)
        + len(mu.left_keys - lefts)
        + mu.density_support.difference(dens).length
    )


def _merge_support(current, mu: Charge):
    points, lefts, dens = current
    return points | mu.point_keys, lefts | mu.left_keys, dens.union(mu.density_support)


def equivalent_subfamily(family: ChargeFamily) -> Tuple[int, ...]:
    """
    Жадный выбор подсемейства с тем же носителем, что и у агрегата

    Сначала добавляется член с наибольшим приростом носителя (ничья - меньший
    индекс), затем лишние члены выбрасываются в порядке индексов.
    """
    members = family.members
    target = _support(aggregate(family))
    current = (frozenset(), frozenset(), EMPTY)
    chosen: List[int] = []
    while current != target:
        gains = [(_support_gain(current, mu), -i) for i, mu in enumerate(members) if i not in chosen]
        gain, index = max(gains)
        if gain == 0:
            break
        chosen.append(-index)
        current = _merge_support(current, members[-index])

    for i in sorted(chosen):
        rest = [j for j in chosen if j != i]
        if not rest:
            continue
        support = (frozenset(), frozenset(), EMPTY)
        for j in rest:
            support = _merge_support(support, members[j])
        if support == target:
            chosen = rest
    return tuple(sorted(chosen))


def dominate(family: ChargeFamily, reference: Optional[Charge] = None) -> DominationReport:
    """
    Агрегат m, флаги μ ≪ m и эквивалентное подсемейство

    Если задан λ, дополнительно проверяется, что μ ≪ λ ⇔ μ ≪ λ^c_M.
    """
    if not family.members:
        raise EmptyFamily("dominate requires a nonempty family")
    m = aggregate(family)
    flags = tuple(abs_continuous(mu, m) for mu in family.members)

    reference_flags = pivot_flags = None
    if reference is not None:
        continuous = lebesgue_decompose(reference, family).continuous_part
        reference_flags = tuple(abs_continuous(mu, reference) for mu in family.members)
        pivot_flags = tuple(
            ref == abs_continuous(mu, continuous) for mu, ref in zip(family.members, reference_flags)
        )
        if not all(pivot_flags):
            logger.error(f"Domination pivot failed for reference {reference}: {pivot_flags}")

    report = DominationReport(
        dominating=m,
        per_member=flags,
        equivalent_subfamily=equivalent_subfamily(family),
        reference_flags=reference_flags,
        pivot_flags=pivot_flags,
    )
    logger.info(f"Family of {len(family)} dominated by aggregate: {report.dominated}")
    return report


def _require_positive(lam: Charge) -> None:
    if not lam.is_positive:
        raise NotPositive(f"charge {lam} is not positive")


def _bounded(sets: Iterable[CanonicalSet]) -> List[CanonicalSet]:
    cap = settings.MAX_FAMILY
    bounded = list(islice(iter(sets), cap + 1))
    if len(bounded) > cap:
        logger.warning(f"Set family truncated to CHARGEKIT_MAX_FAMILY={cap}")
        bounded = bounded[:cap]
    return bounded


def exhaust(lam: Charge, sets: Iterable[CanonicalSet]) -> ExhaustionTrace:
    """
    Жадное исчерпание: на шаге n берется H с максимальным λ(H ∖ U_{n-1})

    Ничья разрешается меньшим индексом, остановка при нулевом приросте.
    Приросты только убывают с ростом U, поэтому используется ленивая
    очередь: устаревшая оценка пересчитывается при извлечении.
    """
    _require_positive(lam)
    family = _bounded(sets)
    if not family:
        raise EmptyFamily("exhaust requires a nonempty set family")

    whole = EMPTY
    for H in family:
        whole = whole.union(H)
    initial = evaluate(lam, whole)

    heap = [(-evaluate(lam, H), i) for i, H in enumerate(family)]
    heapq.heapify(heap)
    covered = EMPTY
    chosen, indices, increments, residuals = [], [], [], []
    while heap:
        _, i = heapq.heappop(heap)
        gain = evaluate(lam, family[i].difference(covered))
        if heap and (-gain, i) > heap[0]:
            heapq.heappush(heap, (-gain, i))
            continue
        if gain == 0:
            break
        covered = covered.union(family[i])
        chosen.append(family[i])
        indices.append(i)
        increments.append(gain)
        residuals.append(evaluate(lam, whole.difference(covered)))
        logger.debug(f"Exhaustion step {len(chosen)}: H[{i}] gain={gain} residual={residuals[-1]}")

    return ExhaustionTrace(
        chosen=tuple(chosen),
        chosen_indices=tuple(indices),
        increments=tuple(increments),
        residuals=tuple(residuals),
        initial=initial,
    )


def in_AH(lam: Charge, sets: Iterable[CanonicalSet], A: CanonicalSet) -> bool:
    """A ∈ A_H для конечного H: λ(A ∖ ⋃H) = 0"""
    _require_positive(lam)
    whole = EMPTY
    for H in _bounded(sets):
        whole = whole.union(H)
    return evaluate(lam, A.difference(whole)) == 0


def _neighbors(locations: List[Fraction], x: Fraction) -> Tuple[Fraction, Fraction]:
    below = max((l for l in locations if l < x), default=ZERO)
    above = min((l for l in locations if l > x), default=ONE)
    return below, above


def enumerate_atoms(lam: Charge) -> AtomList:
    """
    Атомы λ с попарно непересекающимися представителями

    Точечная масса в x дает атом, если правая окрестность x свободна от
    плотности; η⁻_c - если свободна левая окрестность c. Представители
    [x, x+ε) и [c−ε, c) сжаты до половины расстояния до соседних отметок.
    """
    _require_positive(lam)
    support = lam.density_support
    locations = sorted(
        {ZERO, ONE} | lam.point_keys | lam.left_keys | {e for a, b, _ in lam.densities for e in (a, b)}
    )
    candidates = [(c, AtomKind.LEFT_LIMIT, w) for c, w in lam.left_limits]
    candidates += [(x, AtomKind.POINT, w) for x, w in lam.points]
    # при равных координатах левый представитель идет раньше правого
    candidates.sort(key=lambda item: (item[0], item[1] != AtomKind.LEFT_LIMIT))

    atoms, rejected = [], []
    for location, kind, _ in candidates:
        below, above = _neighbors(locations, location)
        if kind == AtomKind.POINT:
            if right_neighborhood(support, location):
                rejected.append((kind, location))
                continue
            representative = CanonicalSet.interval(location, location + (above - location) / 2)
        else:
            if left_neighborhood(support, location):
                rejected.append((kind, location))
                continue
            representative = CanonicalSet.interval(location - (location - below) / 2, location)
        atoms.append(
            Atom(kind=kind, location=location, representative=representative, mass=evaluate(lam, representative))
        )

    logger.info(f"Found {len(atoms)} atoms, rejected {len(rejected)} non-isolated keys")
    return AtomList(atoms=tuple(atoms), rejected=tuple(rejected))
