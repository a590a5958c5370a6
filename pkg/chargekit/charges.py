"""
Заряды: конечные рациональные комбинации точечных масс, плотностей
на интервалах и зарядов левого предела η⁻_c

Модуль содержит вычисление значения на множествах алгебры, полную вариацию,
решеточную нижнюю грань, интегрирование простых функций, преобразование
μ ↦ μ_f и разрешающие процедуры для ≪ и ⊥.
"""
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import logging
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .algebras import (
    EMPTY,
    OMEGA,
    ONE,
    ZERO,
    CanonicalSet,
    as_rational,
    canonicalize,
    left_neighborhood,
    merge_intervals,
)
from .errors import InvalidPartition, NotPositive, NotSingular, OutOfRange

logger = logging.getLogger(__name__)


class PrimitiveKind(str, Enum):
    POINT = "point"
    DENSITY = "density"
    LEFT_LIMIT = "leftlim"


@dataclass(frozen=True, order=True)
class Primitive:
    kind: PrimitiveKind
    location: Fraction
    end: Optional[Fraction] = None

    def __str__(self) -> str:
        if self.kind == PrimitiveKind.POINT:
            return f"delta[{self.location}]"
        if self.kind == PrimitiveKind.LEFT_LIMIT:
            return f"eta-[{self.location}]"
        return f"density[{self.location},{self.end})"


def point_mass(x) -> Primitive:
    x = as_rational(x)
    if not ZERO <= x < ONE:
        raise OutOfRange(f"point mass location {x} lies outside [0,1)")
    return Primitive(PrimitiveKind.POINT, x)


def density(a, b) -> Primitive:
    a, b = as_rational(a), as_rational(b)
    if not ZERO <= a < b <= ONE:
        raise OutOfRange(f"density interval [{a},{b}) is empty or outside [0,1)")
    return Primitive(PrimitiveKind.DENSITY, a, b)


def left_limit(c) -> Primitive:
    c = as_rational(c)
    if not ZERO < c <= ONE:
        raise OutOfRange(f"left-limit location {c} lies outside (0,1]")
    return Primitive(PrimitiveKind.LEFT_LIMIT, c)


PointTerm = Tuple[Fraction, Fraction]
DensityTerm = Tuple[Fraction, Fraction, Fraction]


def _refine(pieces: Iterable[DensityTerm]) -> Tuple[DensityTerm, ...]:
    """Суммирование плотностей на общем разбиении с последующим слиянием равных соседей"""
    pieces = [p for p in pieces if p[2] != 0]
    cuts = sorted({x for a, b, _ in pieces for x in (a, b)})
    refined = []
    for lo, hi in zip(cuts, cuts[1:]):
        coeff = sum((c for a, b, c in pieces if a <= lo and hi <= b), ZERO)
        if coeff == 0:
            continue
        if refined and refined[-1][1] == lo and refined[-1][2] == coeff:
            refined[-1] = (refined[-1][0], hi, coeff)
        else:
            refined.append((lo, hi, coeff))
    return tuple(refined)


@dataclass(frozen=True)
class Charge:
    """
    Заряд в каноническом виде

    points - (x, коэффициент), densities - (a, b, коэффициент) с попарно
    непересекающимися интервалами, left_limits - (c, коэффициент).
    Нулевых коэффициентов нет, соседние плотности с равными коэффициентами слиты.
    """

    points: Tuple[PointTerm, ...] = ()
    densities: Tuple[DensityTerm, ...] = ()
    left_limits: Tuple[PointTerm, ...] = ()

    @classmethod
    def zero(cls) -> "Charge":
        return cls()

    @classmethod
    def of(cls, primitive: Primitive, coeff=1) -> "Charge":
        return cls.from_terms([(primitive, coeff)])

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Primitive, object]]) -> "Charge":
        points: Dict[Fraction, Fraction] = defaultdict(Fraction)
        lefts: Dict[Fraction, Fraction] = defaultdict(Fraction)
        pieces = []
        for primitive, coeff in terms:
            coeff = as_rational(coeff)
            if primitive.kind == PrimitiveKind.POINT:
                points[primitive.location] += coeff
            elif primitive.kind == PrimitiveKind.LEFT_LIMIT:
                lefts[primitive.location] += coeff
            else:
                pieces.append((primitive.location, primitive.end, coeff))
        return cls(
            points=tuple(sorted((x, c) for x, c in points.items() if c != 0)),
            densities=_refine(pieces),
            left_limits=tuple(sorted((x, c) for x, c in lefts.items() if c != 0)),
        )

    @property
    def terms(self) -> Dict[Primitive, Fraction]:
        result = {Primitive(PrimitiveKind.POINT, x): c for x, c in self.points}
        result.update({Primitive(PrimitiveKind.DENSITY, a, b): c for a, b, c in self.densities})
        result.update({Primitive(PrimitiveKind.LEFT_LIMIT, x): c for x, c in self.left_limits})
        return result

    @property
    def is_zero(self) -> bool:
        return not (self.points or self.densities or self.left_limits)

    @property
    def is_positive(self) -> bool:
        return all(c > 0 for c in self.coefficients)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return (
            tuple(c for _, c in self.points)
            + tuple(c for _, _, c in self.densities)
            + tuple(c for _, c in self.left_limits)
        )

    @property
    def point_keys(self) -> frozenset:
        return frozenset(x for x, _ in self.points)

    @property
    def left_keys(self) -> frozenset:
        return frozenset(x for x, _ in self.left_limits)

    @property
    def density_support(self) -> CanonicalSet:
        return CanonicalSet(merge_intervals((a, b) for a, b, _ in self.densities))

    @property
    def is_countably_additive(self) -> bool:
        """В этом классе зарядов σ-аддитивность равносильна отсутствию η⁻_c"""
        return not self.left_limits

    def scale(self, factor) -> "Charge":
        factor = as_rational(factor)
        if factor == 0:
            return Charge()
        return Charge(
            points=tuple((x, c * factor) for x, c in self.points),
            densities=tuple((a, b, c * factor) for a, b, c in self.densities),
            left_limits=tuple((x, c * factor) for x, c in self.left_limits),
        )

    def __add__(self, other: "Charge") -> "Charge":
        return linear_combine([ONE, ONE], [self, other])

    def __sub__(self, other: "Charge") -> "Charge":
        return linear_combine([ONE, -ONE], [self, other])

    def __neg__(self) -> "Charge":
        return self.scale(-1)

    def __mul__(self, factor) -> "Charge":
        return self.scale(factor)

    __rmul__ = __mul__

    def __call__(self, A: CanonicalSet) -> Fraction:
        return evaluate(self, A)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(f"{c}*{p}" for p, c in self.terms.items())


def evaluate(mu: Charge, A: CanonicalSet) -> Fraction:
    """μ(A) - конечно-аддитивное значение заряда на множестве алгебры"""
    total = ZERO
    for x, c in mu.points:
        if A.contains(x):
            total += c
    for a, b, c in mu.densities:
        total += c * A.overlap_length(a, b)
    for x, c in mu.left_limits:
        if left_neighborhood(A, x):
            total += c
    return total


def linear_combine(coeffs: Sequence, charges: Sequence[Charge]) -> Charge:
    if len(coeffs) != len(charges):
        raise ValueError("coefficient and charge lists differ in length")
    terms = []
    for factor, mu in zip(coeffs, charges):
        factor = as_rational(factor)
        terms.extend((p, factor * c) for p, c in mu.terms.items())
    return Charge.from_terms(terms)


def total_variation(mu: Charge) -> Tuple[Charge, Fraction]:
    """
    (|μ|, ‖μ‖)

    Различные примитивы попарно сингулярны, поэтому |μ| получается заменой
    коэффициентов на их модули.
    """
    variation = Charge.from_terms((p, abs(c)) for p, c in mu.terms.items())
    return variation, mass(variation)


def mass(mu: Charge) -> Fraction:
    """μ(Ω) без обхода множеств"""
    return (
        sum((c for _, c in mu.points), ZERO)
        + sum((c * (b - a) for a, b, c in mu.densities), ZERO)
        + sum((c for _, c in mu.left_limits), ZERO)
    )


def norm(mu: Charge) -> Fraction:
    return total_variation(mu)[1]


def absolute(mu: Charge) -> Charge:
    return total_variation(mu)[0]


def _require_positive(*charges: Charge) -> None:
    for mu in charges:
        if not mu.is_positive:
            raise NotPositive(f"charge {mu} is not positive")


def _density_at(mu: Charge, x: Fraction) -> Fraction:
    for a, b, c in mu.densities:
        if a <= x < b:
            return c
    return ZERO


def meet(mu: Charge, nu: Charge) -> Charge:
    """μ ∧ ν для положительных зарядов: почленный минимум на общем разбиении"""
    _require_positive(mu, nu)
    nu_points = dict(nu.points)
    nu_lefts = dict(nu.left_limits)
    terms = [(Primitive(PrimitiveKind.POINT, x), min(c, nu_points[x])) for x, c in mu.points if x in nu_points]
    terms += [
        (Primitive(PrimitiveKind.LEFT_LIMIT, x), min(c, nu_lefts[x])) for x, c in mu.left_limits if x in nu_lefts
    ]
    cuts = sorted({x for a, b, _ in mu.densities + nu.densities for x in (a, b)})
    for lo, hi in zip(cuts, cuts[1:]):
        low = min(_density_at(mu, lo), _density_at(nu, lo))
        if low:
            terms.append((Primitive(PrimitiveKind.DENSITY, lo, hi), low))
    return Charge.from_terms(terms)


def abs_continuous(mu: Charge, nu: Charge) -> bool:
    """
    μ ≪ ν по правилу покрытия ключей

    Для этого класса зарядов правило равносильно определению через ε–δ.
    """
    return (
        mu.point_keys <= nu.point_keys
        and mu.left_keys <= nu.left_keys
        and mu.density_support.difference(nu.density_support).is_empty
    )


def _free_gap(lo: Fraction, hi: Fraction, blocked: Iterable[Fraction]) -> CanonicalSet:
    """Полуинтервал внутри [lo,hi), не содержащий блокирующих точек и их левых окрестностей"""
    marks = sorted({lo, hi} | {x for x in blocked if lo < x < hi})
    u, v = max(zip(marks, marks[1:]), key=lambda gap: gap[1] - gap[0])
    return CanonicalSet.interval((3 * u + v) / 4, (u + 3 * v) / 4)


def continuity_witness(mu: Charge, nu: Charge, k: int) -> Optional[CanonicalSet]:
    """
    k-е множество семейства A_k, опровергающего μ ≪ ν

    |ν|(A_k) → 0 при k → ∞, а |μ|(A_k) отделено от нуля. Если μ ≪ ν, возвращает None.
    """
    if k < 1:
        raise ValueError("witness index starts at 1")
    missing_points = sorted(mu.point_keys - nu.point_keys)
    if missing_points:
        x = missing_points[0]
        return CanonicalSet.interval(x, min(ONE, x + Fraction(1, k)))
    missing_lefts = sorted(mu.left_keys - nu.left_keys)
    if missing_lefts:
        c = missing_lefts[0]
        return CanonicalSet.interval(max(ZERO, c - Fraction(1, k)), c)
    uncovered = mu.density_support.difference(nu.density_support)
    if uncovered.is_empty:
        return None
    lo, hi = uncovered.intervals[0]
    # постоянное семейство: |ν|-нулевой кусок с положительной |μ|-массой
    return _free_gap(lo, hi, nu.point_keys | nu.left_keys)


def singular(mu: Charge, nu: Charge) -> bool:
    """μ ⊥ ν ⇔ |μ| ∧ |ν| = 0"""
    return meet(absolute(mu), absolute(nu)).is_zero


def splitting_set(mu: Charge, nu: Charge, eps) -> CanonicalSet:
    """
    Множество B с |μ|(Bᶜ) + |ν|(B) < ε для сингулярных μ, ν

    B собирается из носителя μ (правые окрестности точек, левые окрестности
    η⁻_c, куски плотности) за вычетом малых окрестностей атомов ν.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not singular(mu, nu):
        raise NotSingular(f"charges {mu} and {nu} are not singular")

    locations = sorted(mu.point_keys | mu.left_keys | nu.point_keys | nu.left_keys)
    gaps = [b - a for a, b in zip(locations, locations[1:])]
    gap = min(gaps, default=ONE)
    mu_atoms = len(mu.points) + len(mu.left_limits)
    nu_atoms = len(nu.points) + len(nu.left_limits)
    mu_top = max((abs(c) for _, _, c in mu.densities), default=ZERO)
    nu_top = max((abs(c) for _, _, c in nu.densities), default=ZERO)
    h = min(gap / 3, eps / (mu_top * nu_atoms + nu_top * mu_atoms + 1))

    keep = [(x, min(ONE, x + h)) for x, _ in mu.points]
    keep += [(max(ZERO, c - h), c) for c, _ in mu.left_limits]
    keep += [(a, b) for a, b, _ in mu.densities]
    carve = [(y, min(ONE, y + h)) for y, _ in nu.points]
    carve += [(max(ZERO, c - h), c) for c, _ in nu.left_limits]
    witness = canonicalize(keep).difference(canonicalize(carve))
    logger.debug(f"Splitting set for eps={eps}: h={h}, B={witness.intervals}")
    return witness


@dataclass(frozen=True)
class SimpleFunction:
    """Простая функция: разбиение Ω на множества алгебры с рациональным значением на каждом"""

    pieces: Tuple[Tuple[CanonicalSet, Fraction], ...]

    def __post_init__(self):
        covered = EMPTY
        for piece, _ in self.pieces:
            if not piece.intersect(covered).is_empty:
                raise InvalidPartition("simple function pieces overlap")
            covered = covered.union(piece)
        if covered != OMEGA:
            raise InvalidPartition("simple function pieces do not cover [0,1)")

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[CanonicalSet, object]]) -> "SimpleFunction":
        return cls(tuple((A, as_rational(v)) for A, v in pieces if not A.is_empty))

    @classmethod
    def constant(cls, value) -> "SimpleFunction":
        return cls.from_pieces([(OMEGA, value)])

    @classmethod
    def step(cls, steps: Iterable[Tuple[object, object, object]], default=0) -> "SimpleFunction":
        """Значения v на непересекающихся [a,b), default на остальном"""
        pieces = [(CanonicalSet.interval(a, b), v) for a, b, v in steps]
        rest = OMEGA
        for A, _ in pieces:
            rest = rest.difference(A)
        return cls.from_pieces(pieces + [(rest, default)])

    def value_at(self, x: Fraction) -> Fraction:
        for piece, value in self.pieces:
            if piece.contains(x):
                return value
        raise InvalidPartition(f"point {x} is not covered")

    def left_limit_at(self, c: Fraction) -> Fraction:
        """Значение f слева от c: на куске, содержащем (c−ε, c)"""
        for piece, value in self.pieces:
            if left_neighborhood(piece, c):
                return value
        raise InvalidPartition(f"no piece accumulates at {c} from the left")

    def restrict(self, A: CanonicalSet) -> "SimpleFunction":
        """f·1_A"""
        pieces = [(piece.intersect(A), value) for piece, value in self.pieces]
        return SimpleFunction.from_pieces(pieces + [(A.complement(), ZERO)])


def integrate_simple(mu: Charge, f: SimpleFunction) -> Fraction:
    """μ(f) = Σ значение · μ(кусок)"""
    return sum((value * evaluate(mu, piece) for piece, value in f.pieces), ZERO)


def density_transform(mu: Charge, f: SimpleFunction) -> Charge:
    """μ_f с μ_f(A) = μ(f·1_A)"""
    terms = [(Primitive(PrimitiveKind.POINT, x), c * f.value_at(x)) for x, c in mu.points]
    terms += [(Primitive(PrimitiveKind.LEFT_LIMIT, x), c * f.left_limit_at(x)) for x, c in mu.left_limits]
    for a, b, c in mu.densities:
        for piece, value in f.pieces:
            for lo, hi in piece.intersect(CanonicalSet(((a, b),))).intervals:
                terms.append((Primitive(PrimitiveKind.DENSITY, lo, hi), c * value))
    return Charge.from_terms(terms)
