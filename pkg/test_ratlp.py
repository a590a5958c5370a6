# test_ratlp.py
"""
Тесты точного симплекс-метода: сверка с перебором вершин и проверка сертификатов
"""
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from chargekit.errors import Malformed
from chargekit.ratlp import EQ, GE, LE, LinearProgram, LPOutcome, LPStatus, check_certificate, is_feasible, solve_lp

PROFILE = settings(max_examples=100, deadline=None, derandomize=True)
PROGRAMS = settings(
    max_examples=1000, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)

BOX = 5

small = st.integers(-3, 3)


def gauss_solve(matrix, rhs):
    """Единственное решение квадратной системы или None"""
    n = len(matrix)
    rows = [list(map(F, row)) + [F(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col] / rows[col][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return tuple(rows[i][n] / rows[i][i] for i in range(n))


def vertex_optimum(program: LinearProgram):
    """Максимум по вершинам ограниченного многогранника с x ≥ 0; None при несовместности"""
    n = len(program.objective)
    planes = list(zip(program.rows, program.rhs))
    planes += [(tuple(F(1) if j == i else F(0) for j in range(n)), F(0)) for i in range(n)]
    best = None
    for chosen in combinations(planes, n):
        x = gauss_solve([row for row, _ in chosen], [b for _, b in chosen])
        if x is None or not is_feasible(program, x):
            continue
        value = sum((c * v for c, v in zip(program.objective, x)), F(0))
        best = value if best is None else max(best, value)
    return best


@st.composite
def boxed_programs(draw):
    # m + n ≤ 8: перебор вершин стоит C(m + 2n, n)
    n = draw(st.integers(1, 6))
    m = draw(st.integers(1, min(6, 8 - n)))
    rows = [tuple(draw(small) for _ in range(n)) for _ in range(m)]
    relations = [draw(st.sampled_from([LE, GE, EQ])) for _ in range(m)]
    rhs = [draw(st.integers(-4, 4)) for _ in range(m)]
    for j in range(n):
        rows.append(tuple(1 if i == j else 0 for i in range(n)))
        relations.append(LE)
        rhs.append(BOX)
    objective = tuple(draw(small) for _ in range(n))
    return LinearProgram(objective=objective, rows=tuple(rows), relations=tuple(relations), rhs=tuple(rhs))


@st.composite
def open_programs(draw):
    n = draw(st.integers(1, 8))
    m = draw(st.integers(0, 8))
    rows = tuple(tuple(draw(small) for _ in range(n)) for _ in range(m))
    return LinearProgram(
        objective=tuple(draw(small) for _ in range(n)),
        rows=rows,
        relations=tuple(draw(st.sampled_from([LE, GE, EQ])) for _ in range(m)),
        rhs=tuple(draw(st.integers(-4, 4)) for _ in range(m)),
        nonneg=tuple(draw(st.booleans()) for _ in range(n)),
    )


class TestValidation:
    def test_row_width(self):
        with pytest.raises(Malformed):
            LinearProgram(objective=(1, 1), rows=((1,),), relations=(LE,), rhs=(1,))

    def test_relation_count(self):
        with pytest.raises(Malformed):
            LinearProgram(objective=(1,), rows=((1,),), relations=(), rhs=(1,))

    def test_unknown_relation(self):
        with pytest.raises(Malformed):
            LinearProgram(objective=(1,), rows=((1,),), relations=("<",), rhs=(1,))

    def test_sign_flags(self):
        with pytest.raises(Malformed):
            LinearProgram(objective=(1, 1), nonneg=(True,))


class TestSolve:
    def test_simple_optimum(self):
        program = LinearProgram(objective=(3, 2), rows=((1, 1), (1, 0)), relations=(LE, LE), rhs=(4, 3))
        outcome = solve_lp(program)
        assert outcome.status == LPStatus.OPTIMAL
        assert outcome.value == 11
        assert outcome.x == (F(3), F(1))
        assert check_certificate(program, outcome)

    def test_equality_with_negative_rhs(self):
        program = LinearProgram(objective=(1,), rows=((-1,),), relations=(EQ,), rhs=(-2,))
        outcome = solve_lp(program)
        assert (outcome.status, outcome.value) == (LPStatus.OPTIMAL, F(2))
        assert check_certificate(program, outcome)

    def test_free_variable_goes_negative(self):
        program = LinearProgram(objective=(-1,), rows=((1,),), relations=(GE,), rhs=(-3,), nonneg=(False,))
        outcome = solve_lp(program)
        assert outcome.x == (F(-3),)
        assert check_certificate(program, outcome)

    def test_infeasible_certificate(self):
        program = LinearProgram(objective=(1, 1), rows=((1, 1), (1, 1)), relations=(LE, GE), rhs=(1, 2))
        outcome = solve_lp(program)
        assert outcome.status == LPStatus.INFEASIBLE
        assert check_certificate(program, outcome)

    def test_forged_certificates_rejected(self):
        program = LinearProgram(objective=(1,), rows=((1,),), relations=(LE,), rhs=(1,))
        assert not check_certificate(program, LPOutcome(status=LPStatus.OPTIMAL, value=F(2), x=(F(2),), y=(F(1),)))
        assert not check_certificate(program, LPOutcome(status=LPStatus.UNBOUNDED, x=(F(0),), ray=(F(1),)))

    @PROGRAMS
    @given(boxed_programs())
    def test_matches_vertex_enumeration(self, program):
        outcome = solve_lp(program)
        best = vertex_optimum(program)
        if best is None:
            assert outcome.status == LPStatus.INFEASIBLE
        else:
            assert outcome.status == LPStatus.OPTIMAL
            assert outcome.value == best
        assert check_certificate(program, outcome)

    @PROGRAMS
    @given(open_programs())
    def test_every_outcome_is_certified(self, program):
        assert check_certificate(program, solve_lp(program))

    @PROFILE
    @given(boxed_programs())
    def test_deterministic(self, program):
        assert solve_lp(program) == solve_lp(program)
