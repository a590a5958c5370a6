"""
Алгебра полуинтервалов на Ω = [0,1)

Каждое множество алгебры хранится в каноническом виде: отсортированный
список непересекающихся и несмежных полуинтервалов [a,b) с рациональными
концами. Все операции чистые, значения неизменяемые.
"""
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import OutOfRange

Rational = Fraction
Interval = Tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class BooleanOp(str, Enum):
    UNION = "union"
    INTERSECT = "intersect"
    DIFFERENCE = "difference"
    SYMMETRIC_DIFFERENCE = "symmetric_difference"


_OPS = {
    BooleanOp.UNION: lambda x, y: x or y,
    BooleanOp.INTERSECT: lambda x, y: x and y,
    BooleanOp.DIFFERENCE: lambda x, y: x and not y,
    BooleanOp.SYMMETRIC_DIFFERENCE: lambda x, y: x != y,
}


def as_rational(value) -> Fraction:
    """Приведение int/str/Fraction к Fraction (float запрещен)"""
    if isinstance(value, float):
        raise TypeError("floating endpoints are not allowed")
    return value if isinstance(value, Fraction) else Fraction(value)


def merge_intervals(raw: Iterable[Interval]) -> Tuple[Interval, ...]:
    """Слияние пересекающихся и смежных полуинтервалов"""
    merged = []
    for a, b in sorted((a, b) for a, b in raw if a < b):
        if merged and a <= merged[-1][1]:
            if b > merged[-1][1]:
                merged[-1] = (merged[-1][0], b)
        else:
            merged.append((a, b))
    return tuple(merged)


@dataclass(frozen=True)
class CanonicalSet:
    intervals: Tuple[Interval, ...] = ()

    @classmethod
    def interval(cls, a, b) -> "CanonicalSet":
        return canonicalize([(a, b)])

    @classmethod
    def empty(cls) -> "CanonicalSet":
        return EMPTY

    @classmethod
    def omega(cls) -> "CanonicalSet":
        return OMEGA

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def length(self) -> Fraction:
        """Мера Лебега множества"""
        return sum((b - a for a, b in self.intervals), ZERO)

    @property
    def endpoints(self) -> Tuple[Fraction, ...]:
        return tuple(x for pair in self.intervals for x in pair)

    def overlap_length(self, a: Fraction, b: Fraction) -> Fraction:
        """Длина пересечения с [a,b)"""
        total = ZERO
        for lo, hi in self.intervals:
            if lo >= b:
                break
            left, right = max(lo, a), min(hi, b)
            if left < right:
                total += right - left
        return total

    def _locate(self, x: Fraction) -> int:
        """Индекс интервала с наибольшим левым концом ≤ x, либо -1"""
        return bisect_right(self.intervals, (x, ONE + 1)) - 1

    def contains(self, x) -> bool:
        x = as_rational(x)
        i = self._locate(x)
        return i >= 0 and x < self.intervals[i][1]

    def union(self, other: "CanonicalSet") -> "CanonicalSet":
        return boolean(BooleanOp.UNION, self, other)

    def intersect(self, other: "CanonicalSet") -> "CanonicalSet":
        return boolean(BooleanOp.INTERSECT, self, other)

    def difference(self, other: "CanonicalSet") -> "CanonicalSet":
        return boolean(BooleanOp.DIFFERENCE, self, other)

    def symmetric_difference(self, other: "CanonicalSet") -> "CanonicalSet":
        return boolean(BooleanOp.SYMMETRIC_DIFFERENCE, self, other)

    def complement(self) -> "CanonicalSet":
        return boolean(BooleanOp.DIFFERENCE, OMEGA, self)

    __or__ = union
    __and__ = intersect
    __sub__ = difference
    __xor__ = symmetric_difference

    def __str__(self) -> str:
        from .formats import format_set

        return format_set(self)


EMPTY = CanonicalSet(())
OMEGA = CanonicalSet(((ZERO, ONE),))


def canonicalize(raw: Iterable[Sequence]) -> CanonicalSet:
    """
    Канонический вид объединения полуинтервалов [a,b)

    Пустые пары a = b допускаются и отбрасываются.
    """
    checked = []
    for pair in raw:
        a, b = as_rational(pair[0]), as_rational(pair[1])
        if not (ZERO <= a <= ONE and ZERO <= b <= ONE):
            raise OutOfRange(f"interval [{a},{b}) lies outside [0,1]")
        if a > b:
            raise OutOfRange(f"interval [{a},{b}) has a > b")
        checked.append((a, b))
    return CanonicalSet(merge_intervals(checked))


def boolean(op: BooleanOp, first: CanonicalSet, second: CanonicalSet) -> CanonicalSet:
    """Булева операция над каноническими множествами"""
    rule = _OPS[BooleanOp(op)]
    cuts = sorted(set(first.endpoints) | set(second.endpoints))
    pieces = [
        (lo, hi)
        for lo, hi in zip(cuts, cuts[1:])
        # на элементарном куске [lo,hi) принадлежность постоянна
        if rule(first.contains(lo), second.contains(lo))
    ]
    return CanonicalSet(merge_intervals(pieces))


def complement(A: CanonicalSet) -> CanonicalSet:
    return A.complement()


def contains_point(A: CanonicalSet, x) -> bool:
    x = as_rational(x)
    if not ZERO <= x < ONE:
        raise OutOfRange(f"point {x} lies outside [0,1)")
    return A.contains(x)


def left_neighborhood(A: CanonicalSet, c) -> bool:
    """Существует ли ε > 0 с (c−ε, c) ⊆ A"""
    c = as_rational(c)
    if not ZERO < c <= ONE:
        raise OutOfRange(f"left neighborhood point {c} lies outside (0,1]")
    # интервал [a,b) с a < c ≤ b
    i = bisect_right(A.intervals, (c, ZERO)) - 1
    return i >= 0 and A.intervals[i][0] < c <= A.intervals[i][1]


def right_neighborhood(A: CanonicalSet, c) -> bool:
    """Существует ли ε > 0 с (c, c+ε) ⊆ A"""
    c = as_rational(c)
    if not ZERO <= c < ONE:
        raise OutOfRange(f"right neighborhood point {c} lies outside [0,1)")
    # у полуинтервалов правая окрестность лежит в A ровно тогда, когда c ∈ A
    return A.contains(c)
