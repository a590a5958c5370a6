"""
λ-пополнение алгебры: расширенные множества, внутреннее и внешнее значения,
σ-аддитивная последовательность и ее проверка
"""
from dataclasses import dataclass
import math
from fractions import Fraction
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from .algebras import EMPTY, ONE, ZERO, CanonicalSet, as_rational
from .charges import Charge, evaluate
from .config import settings
from .domination import exhaust
from .errors import NotDisjoint, NotMember, NotPositive, OutOfRange
from .schemas import CompletionStatus, DefectRow, SigmaAdditivityReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Span:
    """Интервал с независимо открытыми или замкнутыми концами"""

    left: Fraction
    right: Fraction
    left_closed: bool = True
    right_closed: bool = False

    def contains(self, x: Fraction) -> bool:
        above = self.left < x or (self.left_closed and x == self.left)
        below = x < self.right or (self.right_closed and x == self.right)
        return above and below


@dataclass(frozen=True)
class ExtendedSet:
    """
    Подмножество Ω, не обязательно лежащее в алгебре

    Каноничность поддерживается через разбиение на ячейки: точки разрыва
    и открытые промежутки между ними. Точка 1 лежит вне Ω и отбрасывается.
    """

    spans: Tuple[Span, ...] = ()
    points: Tuple[Fraction, ...] = ()

    @classmethod
    def build(cls, spans: Iterable[Span] = (), points: Iterable = ()) -> "ExtendedSet":
        spans = tuple(spans)
        points = tuple(as_rational(x) for x in points)
        for span in spans:
            if not (ZERO <= span.left <= ONE and ZERO <= span.right <= ONE) or span.left > span.right:
                raise OutOfRange(f"span {span} lies outside [0,1]")
        for x in points:
            if not ZERO <= x <= ONE:
                raise OutOfRange(f"point {x} lies outside [0,1]")
        raw = cls(spans, points)
        return _from_cells(raw._breaks(), raw._raw_contains)

    @classmethod
    def from_canonical(cls, A: CanonicalSet) -> "ExtendedSet":
        return cls(tuple(Span(a, b, True, False) for a, b in A.intervals), ())

    @classmethod
    def singleton(cls, x) -> "ExtendedSet":
        return cls.build(points=[x])

    def _breaks(self) -> List[Fraction]:
        marks = {ZERO, ONE} | set(self.points)
        for span in self.spans:
            marks |= {span.left, span.right}
        return sorted(marks)

    def _raw_contains(self, x: Fraction) -> bool:
        return x in self.points or any(span.contains(x) for span in self.spans)

    def contains(self, x) -> bool:
        x = as_rational(x)
        return ZERO <= x < ONE and self._raw_contains(x)

    def contains_right_germ(self, x) -> bool:
        """(x, x+ε) ⊆ B для некоторого ε > 0"""
        x = as_rational(x)
        above = min((m for m in self._breaks() if m > x), default=ONE)
        return x < ONE and self.contains((x + above) / 2)

    def contains_left_germ(self, c) -> bool:
        """(c−ε, c) ⊆ B для некоторого ε > 0"""
        c = as_rational(c)
        below = max((m for m in self._breaks() if m < c), default=ZERO)
        return c > ZERO and self.contains((below + c) / 2)

    def overlap_length(self, a: Fraction, b: Fraction) -> Fraction:
        total = ZERO
        for span in self.spans:
            lo, hi = max(span.left, a), min(span.right, b)
            if lo < hi:
                total += hi - lo
        return total

    @property
    def is_empty(self) -> bool:
        return not (self.spans or self.points)

    def _combine(self, other: "ExtendedSet", rule) -> "ExtendedSet":
        breaks = sorted(set(self._breaks()) | set(other._breaks()))
        return _from_cells(breaks, lambda x: rule(self.contains(x), other.contains(x)))

    def union(self, other: "ExtendedSet") -> "ExtendedSet":
        return self._combine(other, lambda x, y: x or y)

    def intersect(self, other: "ExtendedSet") -> "ExtendedSet":
        return self._combine(other, lambda x, y: x and y)

    def difference(self, other: "ExtendedSet") -> "ExtendedSet":
        return self._combine(other, lambda x, y: x and not y)

    def complement(self) -> "ExtendedSet":
        return _from_cells(self._breaks(), lambda x: not self.contains(x))

    def __str__(self) -> str:
        from .formats import format_extended_set

        return format_extended_set(self)


def _from_cells(breaks: Sequence[Fraction], member) -> ExtendedSet:
    """Канонический вид по принадлежности ячеек {p} и (p, q) между точками разрыва"""
    breaks = sorted({b for b in breaks if ZERO <= b <= ONE} | {ZERO, ONE})
    spans, points = [], []
    # прогон: начало, левый конец замкнут, конец, последняя ячейка - точка
    run = None

    def flush():
        start, left_closed, end, on_point = run
        if start == end:
            points.append(start)
        else:
            spans.append(Span(start, end, left_closed, on_point))

    for p, q in zip(breaks, breaks[1:]):
        for lo, hi, is_point in ((p, p, True), (p, q, False)):
            inside = member(p) if is_point else member((p + q) / 2)
            if inside and run is None:
                run = [lo, is_point, hi, is_point]
            elif inside:
                run[2], run[3] = hi, is_point
            elif run is not None:
                flush()
                run = None
    if run is not None:
        flush()
    return ExtendedSet(tuple(spans), tuple(points))


def as_extended(B) -> ExtendedSet:
    return ExtendedSet.from_canonical(B) if isinstance(B, CanonicalSet) else B


def _require_positive(lam: Charge) -> None:
    if not lam.is_positive:
        raise NotPositive(f"charge {lam} is not positive")


def completion_status(lam: Charge, B) -> CompletionStatus:
    """
    Внутреннее sup λ(A), A ⊆ B и внешнее inf λ(A'), A' ⊇ B значения

    Плотность дает длину пересечения в оба значения. δ_x входит во внутреннее,
    если B ⊇ [x, x+ε), и во внешнее, если x ∈ B или B содержит (x, x+ε).
    η⁻_c входит в оба значения, если B содержит (c−ε, c).
    """
    _require_positive(lam)
    B = as_extended(B)
    inner = outer = ZERO
    for a, b, w in lam.densities:
        part = w * B.overlap_length(a, b)
        inner += part
        outer += part
    for x, w in lam.points:
        here, germ = B.contains(x), B.contains_right_germ(x)
        if here and germ:
            inner += w
        if here or germ:
            outer += w
    for c, w in lam.left_limits:
        if B.contains_left_germ(c):
            inner += w
            outer += w
    member = inner == outer
    return CompletionStatus(inner=inner, outer=outer, member=member, extension=inner if member else None)


def extension(lam: Charge, B) -> Fraction:
    """bar-λ(B) для B ∈ A(λ)"""
    status = completion_status(lam, B)
    if not status.member:
        raise NotMember(f"set {B} is not in the completion: inner {status.inner} < outer {status.outer}")
    return status.extension


@dataclass(frozen=True)
class TailSequence:
    """
    Счетная последовательность A_n = [l − (l−s)/n, l − (l−s)/(n+1)), n ≥ 1

    Объединение равно [s, l). Сумма Σ bar-λ(B ∩ A_n) вычисляется в замкнутом
    виде: все примитивы кроме η⁻_l суммируются по объединению, а η⁻_l не
    попадает ни в один кусок.
    """

    start: Fraction
    limit: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", as_rational(self.start))
        object.__setattr__(self, "limit", as_rational(self.limit))
        if not ZERO <= self.start < self.limit <= ONE:
            raise OutOfRange(f"tail [{self.start},{self.limit}) is empty or outside [0,1]")

    @property
    def union(self) -> CanonicalSet:
        return CanonicalSet.interval(self.start, self.limit)

    def piece(self, n: int) -> CanonicalSet:
        if n < 1:
            raise ValueError("tail pieces are numbered from 1")
        width = self.limit - self.start
        return CanonicalSet.interval(self.limit - width / n, self.limit - width / (n + 1))

    def pieces(self, count: int) -> List[CanonicalSet]:
        return [self.piece(n) for n in range(1, count + 1)]

    def series(self, lam: Charge, B) -> Fraction:
        covered = as_extended(B).intersect(ExtendedSet.from_canonical(self.union))
        total = extension(lam, covered)
        escaped = dict(lam.left_limits).get(self.limit, ZERO)
        if escaped and covered.contains_left_germ(self.limit):
            total -= escaped
        return total


def _capture_family(lam: Charge, eps: Fraction, step: Fraction) -> List[CanonicalSet]:
    """Семейство H: захваты атомов и клетки сетки шага step на непокрытом носителе плотности"""
    locations = sorted(
        {ZERO, ONE} | lam.point_keys | lam.left_keys | {e for a, b, _ in lam.densities for e in (a, b)}
    )
    captures = []
    for x in sorted(lam.point_keys):
        above = min(l for l in locations if l > x)
        captures.append(CanonicalSet.interval(x, x + min(eps, (above - x) / 2)))
    for c in sorted(lam.left_keys):
        below = max(l for l in locations if l < c)
        captures.append(CanonicalSet.interval(c - min(eps, (c - below) / 2), c))

    captured = EMPTY
    for H in captures:
        captured = captured.union(H)
    residual = lam.density_support.difference(captured)
    cells = []
    for k in range(math.ceil(ONE / step)):
        cell = residual.intersect(CanonicalSet.interval(k * step, min(ONE, (k + 1) * step)))
        if not cell.is_empty:
            cells.append(cell)
    return captures + cells


def completion_sequence(
    lam: Charge, eps: Optional[Fraction] = None, step: Optional[Fraction] = None
) -> List[CanonicalSet]:
    """
    Дизъюнктная последовательность A_1, …, A_K с Σ λ(A_n) = λ(Ω)

    Строится жадным исчерпанием по сгенерированному семейству H:
    A_n = H_n ∖ ⋃_{j<n} H_j.
    """
    _require_positive(lam)
    eps = settings.capture_eps if eps is None else as_rational(eps)
    step = settings.grid_step if step is None else as_rational(step)
    family = _capture_family(lam, eps, step)
    if not family:
        return []

    trace = exhaust(lam, family)
    sequence, covered = [], EMPTY
    for H in trace.chosen:
        sequence.append(H.difference(covered))
        covered = covered.union(H)

    total = sum((evaluate(lam, A) for A in sequence), ZERO)
    whole = evaluate(lam, CanonicalSet.omega())
    if total != whole or not completion_status(lam, covered).member:
        logger.error(f"Completion sequence for {lam} sums to {total}, expected {whole}")
    logger.info(f"Completion sequence of {len(sequence)} sets from {len(family)} candidates")
    return sequence


def verify_sigma_additivity(
    lam: Charge,
    sequence: Sequence[CanonicalSet],
    tests: Iterable,
    tail: Optional[TailSequence] = None,
) -> SigmaAdditivityReport:
    """Дефект bar-λ(B) − Σ_n bar-λ(B ∩ A_n) для каждого тестового B"""
    _require_positive(lam)
    covered = EMPTY
    for A in sequence:
        if not A.intersect(covered).is_empty:
            raise NotDisjoint(f"set {A} meets an earlier member of the sequence")
        covered = covered.union(A)
    if tail is not None and not tail.union.intersect(covered).is_empty:
        raise NotDisjoint(f"tail {tail.union} meets the finite part of the sequence")

    rows = []
    for B in tests:
        B = as_extended(B)
        value = extension(lam, B)
        series = sum((extension(lam, B.intersect(ExtendedSet.from_canonical(A))) for A in sequence), ZERO)
        if tail is not None:
            series += tail.series(lam, B)
        rows.append(DefectRow(test=B, value=value, series=series, defect=value - series))
        if value != series:
            logger.warning(f"Sigma-additivity defect {value - series} at {B}")
    return SigmaAdditivityReport(rows=tuple(rows))
