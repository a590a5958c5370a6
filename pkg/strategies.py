# strategies.py
"""
Общие стратегии hypothesis для тестов ChargeKit

Все координаты лежат на сетке шага 1/16, коэффициенты - небольшие рациональные.
"""
from fractions import Fraction

from hypothesis import strategies as st

from chargekit.algebras import canonicalize
from chargekit.charges import Charge, density, left_limit, point_mass
from chargekit.completion import ExtendedSet, Span
from chargekit.decomposition import ChargeFamily

GRID = 16

grid_points = st.integers(0, GRID).map(lambda k: Fraction(k, GRID))
inner_points = st.integers(0, GRID - 1).map(lambda k: Fraction(k, GRID))
left_points = st.integers(1, GRID).map(lambda k: Fraction(k, GRID))

positive_coefficients = st.builds(Fraction, st.integers(1, 6), st.sampled_from([1, 2, 3]))
signed_coefficients = st.builds(Fraction, st.integers(-6, 6).filter(bool), st.sampled_from([1, 2, 3]))


@st.composite
def canonical_sets(draw, max_intervals=4):
    pairs = draw(st.lists(st.tuples(grid_points, grid_points), max_size=max_intervals))
    return canonicalize(sorted((min(a, b), max(a, b)) for a, b in pairs))


@st.composite
def disjoint_set_pairs(draw):
    A = draw(canonical_sets())
    B = draw(canonical_sets()).difference(A)
    return A, B


@st.composite
def primitives(draw):
    kind = draw(st.sampled_from(["point", "density", "leftlim"]))
    if kind == "point":
        return point_mass(draw(inner_points))
    if kind == "leftlim":
        return left_limit(draw(left_points))
    a = draw(st.integers(0, GRID - 1))
    b = draw(st.integers(a + 1, GRID))
    return density(Fraction(a, GRID), Fraction(b, GRID))


@st.composite
def charges(draw, positive=False, max_terms=8, left_limits=True):
    coefficients = positive_coefficients if positive else signed_coefficients
    terms = draw(st.lists(st.tuples(primitives(), coefficients), max_size=max_terms))
    if not left_limits:
        terms = [(p, c) for p, c in terms if p.kind.value != "leftlim"]
    return Charge.from_terms(terms)


def positive_charges(**kwargs):
    return charges(positive=True, **kwargs)


@st.composite
def families(draw, min_size=1, max_size=5, positive=False):
    members = draw(st.lists(charges(positive=positive), min_size=min_size, max_size=max_size))
    return ChargeFamily(tuple(members))


@st.composite
def weights(draw, size):
    raw = draw(st.lists(st.integers(1, 9), min_size=size, max_size=size))
    total = sum(raw)
    return tuple(Fraction(r, total) for r in raw)


@st.composite
def extended_sets(draw, max_items=4):
    spans = []
    for _ in range(draw(st.integers(0, max_items))):
        a, b = sorted((draw(grid_points), draw(grid_points)))
        spans.append(Span(a, b, draw(st.booleans()), draw(st.booleans())))
    points = draw(st.lists(grid_points, max_size=2))
    return ExtendedSet.build(spans, points)
