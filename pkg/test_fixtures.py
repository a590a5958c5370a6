# test_fixtures.py
"""
Прогон эталонных случаев, которые использует команда selftest
"""
import pytest

from chargekit.fixtures import FixtureCase, derived_cases, run_fixtures


@pytest.mark.parametrize("case", derived_cases, ids=lambda case: f"{case.module}-{case.name}")
def test_fixture(case: FixtureCase):
    passed, actual = case.run()
    assert passed, f"expected {case.expected}, got {actual}"


def test_names_are_unique():
    names = [case.name for case in derived_cases]
    assert len(names) == len(set(names))


def test_every_module_is_covered():
    modules = {case.module for case in derived_cases}
    assert modules == {"charges", "decomposition", "domination", "completion", "ratlp", "yan", "cli"}


def test_run_fixtures_reports_failures():
    broken = FixtureCase("broken", "charges", lambda: 1, 2)
    (case, passed, actual), = run_fixtures([broken])
    assert (case.name, passed, actual) == ("broken", False, 1)
