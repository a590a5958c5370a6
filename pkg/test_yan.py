# test_yan.py
"""
Тесты теоремы Яна на конечных пространствах
"""
from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st
from pydantic import ValidationError

from chargekit.errors import BadInput, TooLarge
from chargekit.fixtures import BALANCED_CONE, CAPPED_HULL, DEGENERATE_CONE, TRIVIAL_CONE
from chargekit.schemas import Certificate, YanMode, YanModel
from chargekit.yan import (
    check_condition_ii,
    check_equivalence,
    find_certificate,
    sample_functions,
    sup_scale,
    verify_certificate,
)

PROFILE = settings(max_examples=40, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
MODELS = settings(max_examples=500, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])

thirds = st.integers(-9, 9).map(lambda k: F(k, 3))


@st.composite
def yan_models(draw, mode=None):
    n = draw(st.integers(1, 6))
    weights = draw(
        st.lists(st.integers(0, 6), min_size=n, max_size=n).filter(any).map(lambda ws: tuple(F(w, 3) for w in ws))
    )
    generators = draw(st.lists(st.tuples(*[thirds for _ in range(n)]), max_size=5).map(tuple))
    chosen = mode or draw(st.sampled_from(list(YanMode)))
    return YanModel(n=n, weights=weights, generators=generators, mode=chosen)


class TestModel:
    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            YanModel(n=2, weights=(F(1),))

    def test_generator_width(self):
        with pytest.raises(ValidationError):
            YanModel(n=2, weights=(F(1), F(1)), generators=((F(1),),))

    def test_lambda_needs_mass(self):
        with pytest.raises(ValidationError):
            YanModel(n=2, weights=(F(0), F(0)))

    def test_support(self):
        assert YanModel(n=3, weights=(F(1), F(0), F(2))).support == (0, 2)


class TestSupScale:
    def test_rejects_bad_vectors(self):
        with pytest.raises(BadInput):
            sup_scale(BALANCED_CONE, (1,))
        with pytest.raises(BadInput):
            sup_scale(BALANCED_CONE, (1, -1))
        with pytest.raises(BadInput):
            sup_scale(BALANCED_CONE, (0, 0))

    def test_trivial_cone_is_zero(self):
        assert sup_scale(TRIVIAL_CONE, (1, 1)) == 0

    def test_hull_scale_is_capped(self):
        assert sup_scale(CAPPED_HULL, (2, 0)) == 1

    @PROFILE
    @given(yan_models(), st.data())
    def test_scale_coherence(self, model, data):
        f = tuple(F(v) for v in data.draw(st.lists(st.integers(0, 3), min_size=model.n, max_size=model.n)))
        if sum((a * b for a, b in zip(f, model.weights)), F(0)) <= 0:
            return
        base = sup_scale(model, f)
        doubled = sup_scale(model, tuple(2 * v for v in f))
        assert (base is None) == (doubled is None)
        if base is not None:
            assert doubled == base / 2


class TestConditionII:
    def test_space_limit(self):
        model = YanModel(n=13, weights=(F(1),) * 13)
        with pytest.raises(TooLarge):
            check_condition_ii(model)

    def test_checks_every_subset_of_support(self):
        model = YanModel(n=3, weights=(F(1), F(0), F(1)))
        assert check_condition_ii(model).checked == 3


class TestCertificate:
    def test_trivial_cone_uses_lambda(self):
        certificate = find_certificate(TRIVIAL_CONE).certificate
        assert certificate.p == (F(1, 2), F(1, 2))
        assert verify_certificate(TRIVIAL_CONE, certificate)

    def test_support_mismatch_rejected(self):
        forged = Certificate(p=(F(1), F(0)), k_bound=F(1), ratio_bound=F(2), margin=F(0))
        assert not verify_certificate(CAPPED_HULL, forged)

    def test_degenerate_cone_has_witness(self):
        result = find_certificate(DEGENERATE_CONE)
        assert not result.found
        assert result.witness == (0,)

    @MODELS
    @given(yan_models())
    def test_certificate_iff_condition_ii(self, model):
        result = find_certificate(model)
        assert result.found == check_condition_ii(model).holds
        if result.found:
            assert verify_certificate(model, result.certificate)
        else:
            assert sup_scale(model, tuple(F(1) if i in result.witness else F(0) for i in range(model.n))) is None

    @PROFILE
    @given(yan_models(mode=YanMode.HULL))
    def test_hull_always_certified(self, model):
        assert find_certificate(model).found

    @PROFILE
    @given(yan_models(), st.data())
    def test_dominated_generator_keeps_scale(self, model, data):
        if not model.generators:
            return
        k = model.generators[data.draw(st.integers(0, len(model.generators) - 1))]
        extra = tuple(v - 1 for v in k)
        wider = YanModel(n=model.n, weights=model.weights, generators=model.generators + (extra,), mode=model.mode)
        for f in sample_functions(model)[:8]:
            assert sup_scale(wider, f) == sup_scale(model, f)
        assert find_certificate(wider).found == find_certificate(model).found


class TestEquivalence:
    def test_samples_are_deterministic(self):
        assert sample_functions(BALANCED_CONE) == sample_functions(BALANCED_CONE)

    def test_samples_have_positive_integral(self):
        for f in sample_functions(BALANCED_CONE):
            assert sum((a * b for a, b in zip(f, BALANCED_CONE.weights)), F(0)) > 0

    @settings(max_examples=15, deadline=None, derandomize=True)
    @given(yan_models())
    def test_conditions_agree(self, model):
        report = check_equivalence(model)
        assert report.consistent
        assert report.condition_iii == (report.certificate is not None)
