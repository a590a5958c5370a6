# test_completion.py
"""
Тесты λ-пополнения: расширенные множества, внутреннее и внешнее значения,
последовательность A_n и проверка σ-аддитивности
"""
from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, given, settings

from chargekit.algebras import OMEGA
from chargekit.completion import (
    ExtendedSet,
    Span,
    TailSequence,
    as_extended,
    completion_sequence,
    completion_status,
    extension,
    verify_sigma_additivity,
)
from chargekit.errors import NotDisjoint, NotMember, NotPositive, OutOfRange
from chargekit.fixtures import ESCAPING_LAMBDA, D, completion_tests, delta, eta, interval
from chargekit.formats import format_extended_set, parse_extended_set
from strategies import GRID, canonical_sets, extended_sets, positive_charges

PROFILE = settings(max_examples=60, deadline=None, derandomize=True)
MEMBERS = settings(max_examples=300, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])

PROBES = [F(k, 2 * GRID) for k in range(2 * GRID)]


class TestExtendedSet:
    def test_adjacent_spans_merge(self):
        assert format_extended_set(parse_extended_set("[0,1/4)+[1/4,1/2]")) == "[0/1,1/2]"

    def test_degenerate_closed_span_is_point(self):
        assert format_extended_set(parse_extended_set("[1/4,1/4]")) == "{1/4}"

    def test_point_one_is_dropped(self):
        assert parse_extended_set("{1}").is_empty
        assert format_extended_set(parse_extended_set("(1/2,1]")) == "(1/2,1/1)"

    def test_point_inside_span_is_absorbed(self):
        B = ExtendedSet.build([Span(F(0), F(1, 2), True, False)], [F(1, 4), F(3, 4)])
        assert B.points == (F(3, 4),)
        assert B.spans == (Span(F(0), F(1, 2), True, False),)

    def test_rejects_out_of_range(self):
        with pytest.raises(OutOfRange):
            ExtendedSet.build([Span(F(1, 2), F(3, 2))])

    @PROFILE
    @given(extended_sets(), extended_sets())
    def test_pointwise_semantics(self, B, C):
        for x in PROBES:
            assert B.union(C).contains(x) == (B.contains(x) or C.contains(x))
            assert B.intersect(C).contains(x) == (B.contains(x) and C.contains(x))
            assert B.difference(C).contains(x) == (B.contains(x) and not C.contains(x))
            assert B.complement().contains(x) != B.contains(x)

    @PROFILE
    @given(extended_sets())
    def test_format_parse_is_stable(self, B):
        assert parse_extended_set(format_extended_set(B)) == B


class TestCompletionStatus:
    def test_requires_positive(self):
        with pytest.raises(NotPositive):
            completion_status(D(0, 1, -1), interval(0, 1))

    def test_closed_point_under_point_mass_is_member(self):
        status = completion_status(delta(F(1, 2)), parse_extended_set("[1/2,3/4]"))
        assert (status.inner, status.outer, status.member) == (F(1), F(1), True)

    def test_open_end_at_left_limit(self):
        status = completion_status(eta(F(1, 2)), parse_extended_set("(1/4,1/2)"))
        assert status.extension == 1
        with pytest.raises(NotMember):
            extension(delta(F(1, 4)), parse_extended_set("(1/4,1/2)"))

    @PROFILE
    @given(positive_charges(), canonical_sets())
    def test_algebra_sets_are_members(self, lam, A):
        status = completion_status(lam, A)
        assert status.member
        assert status.extension == lam(A)

    @MEMBERS
    @given(positive_charges(), extended_sets())
    def test_inner_outer_duality(self, lam, B):
        status = completion_status(lam, B)
        assert status.inner <= status.outer
        assert status.inner + completion_status(lam, B.complement()).outer == lam(OMEGA)

    @MEMBERS
    @given(positive_charges(), extended_sets())
    def test_member_and_complement_fill_omega(self, lam, B):
        if not completion_status(lam, B).member:
            return
        assert extension(lam, B) + extension(lam, B.complement()) == lam(OMEGA)

    @PROFILE
    @given(positive_charges(), extended_sets(), extended_sets())
    def test_monotone(self, lam, B, C):
        small, large = completion_status(lam, B.intersect(C)), completion_status(lam, B)
        assert small.inner <= large.inner
        assert small.outer <= large.outer

    @PROFILE
    @given(positive_charges(), extended_sets(), extended_sets())
    def test_extension_is_additive(self, lam, B, C):
        C = C.difference(B)
        if not (completion_status(lam, B).member and completion_status(lam, C).member):
            return
        assert extension(lam, B.union(C)) == extension(lam, B) + extension(lam, C)


class TestTailSequence:
    def test_rejects_empty_tail(self):
        with pytest.raises(OutOfRange):
            TailSequence(F(1, 2), F(1, 2))

    def test_piece_numbering(self):
        tail = TailSequence(0, 1)
        assert tail.piece(1) == interval(0, F(1, 2))
        with pytest.raises(ValueError):
            tail.piece(0)

    def test_series_misses_left_limit(self):
        tail = TailSequence(0, 1)
        assert tail.series(ESCAPING_LAMBDA, OMEGA) == 1
        assert tail.series(ESCAPING_LAMBDA, interval(0, F(1, 2))) == F(1, 2)

    def test_defect_only_where_left_limit_lives(self):
        tests = [OMEGA, parse_extended_set("[0,1/2]"), parse_extended_set("(3/4,1]")]
        report = verify_sigma_additivity(ESCAPING_LAMBDA, [], tests, tail=TailSequence(0, 1))
        assert [row.defect for row in report.rows] == [F(1), F(0), F(1)]
        assert not report.passed


class TestCompletionSequence:
    def test_zero_charge_has_empty_sequence(self):
        assert completion_sequence(D(0, 1, 0)) == []

    def test_left_limit_capture_then_grid_cells(self):
        sequence = completion_sequence(ESCAPING_LAMBDA, eps=F(1, 1024), step=F(1, 4))
        assert sequence == [
            interval(F(1023, 1024), 1),
            interval(0, F(1, 4)),
            interval(F(1, 4), F(1, 2)),
            interval(F(1, 2), F(3, 4)),
            interval(F(3, 4), F(1023, 1024)),
        ]

    def test_grid_step_sets_sequence_length(self):
        coarse = completion_sequence(ESCAPING_LAMBDA, eps=F(1, 1024), step=F(1, 4))
        fine = completion_sequence(ESCAPING_LAMBDA, eps=F(1, 1024), step=F(1, 16))
        assert (len(coarse), len(fine)) == (5, 17)

    def test_escaping_lambda_passes_all_tests(self):
        sequence = completion_sequence(ESCAPING_LAMBDA)
        assert verify_sigma_additivity(ESCAPING_LAMBDA, sequence, completion_tests()).passed

    def test_overlapping_sequence_is_rejected(self):
        with pytest.raises(NotDisjoint):
            verify_sigma_additivity(D(0, 1), [interval(0, F(1, 2)), interval(F(1, 4), 1)], [OMEGA])

    def test_tail_meeting_sequence_is_rejected(self):
        with pytest.raises(NotDisjoint):
            verify_sigma_additivity(D(0, 1), [interval(0, F(1, 2))], [OMEGA], tail=TailSequence(F(1, 4), 1))

    def test_non_member_test_set_is_rejected(self):
        with pytest.raises(NotMember):
            verify_sigma_additivity(delta(F(1, 2)), [interval(0, 1)], [ExtendedSet.singleton(F(1, 2))])

    @PROFILE
    @given(positive_charges())
    def test_sequence_is_disjoint_and_exhausts_mass(self, lam):
        sequence = completion_sequence(lam, eps=F(1, 64), step=F(1, 8))
        for i, A in enumerate(sequence):
            for B in sequence[i + 1 :]:
                assert A.intersect(B).is_empty
        assert sum((lam(A) for A in sequence), F(0)) == lam(OMEGA)

    @PROFILE
    @given(positive_charges(), extended_sets())
    def test_no_defect_on_members(self, lam, B):
        if not completion_status(lam, B).member:
            return
        sequence = completion_sequence(lam, eps=F(1, 64), step=F(1, 8))
        report = verify_sigma_additivity(lam, sequence, [as_extended(B)])
        assert report.passed
