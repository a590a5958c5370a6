"""
Точный рациональный симплекс-метод

Двухфазный плотный симплекс с правилом Бленда. Каждый исход снабжен
сертификатом, который проверяется независимо от пути решения:
двойственное решение, строка Фаркаша или луч неограниченности.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import logging
from typing import List, Optional, Sequence, Tuple

from .algebras import ONE, ZERO, as_rational
from .errors import Malformed

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]

LE, EQ, GE = "<=", "=", ">="
_FLIP = {LE: GE, GE: LE, EQ: EQ}


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """max c·x при A_i x (≤|=|≥) b_i; nonneg[j] задает x_j ≥ 0, иначе x_j свободна"""

    objective: Vector
    rows: Tuple[Vector, ...] = ()
    relations: Tuple[str, ...] = ()
    rhs: Vector = ()
    nonneg: Optional[Tuple[bool, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(as_rational(c) for c in self.objective))
        object.__setattr__(self, "rows", tuple(tuple(as_rational(a) for a in row) for row in self.rows))
        object.__setattr__(self, "rhs", tuple(as_rational(b) for b in self.rhs))
        object.__setattr__(self, "relations", tuple(self.relations))
        n = len(self.objective)
        flags = (True,) * n if self.nonneg is None else tuple(bool(f) for f in self.nonneg)
        object.__setattr__(self, "nonneg", flags)
        if len(self.nonneg) != n:
            raise Malformed(f"{len(self.nonneg)} sign flags for {n} variables")
        if not len(self.rows) == len(self.relations) == len(self.rhs):
            raise Malformed("rows, relations and right-hand sides differ in length")
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise Malformed(f"row {i} has {len(row)} entries, expected {n}")
        unknown = set(self.relations) - set(_FLIP)
        if unknown:
            raise Malformed(f"unknown relations {sorted(unknown)}")

    @property
    def size(self) -> Tuple[int, int]:
        return len(self.rows), len(self.objective)


@dataclass(frozen=True)
class LPOutcome:
    status: LPStatus
    value: Optional[Fraction] = None
    x: Optional[Vector] = None
    # двойственное решение (OPTIMAL) или строка Фаркаша (INFEASIBLE)
    y: Optional[Vector] = None
    ray: Optional[Vector] = None


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


class _Simplex:
    """Плотная таблица в стандартной форме Āx̄ = b̄, x̄ ≥ 0, b̄ ≥ 0"""

    def __init__(self, program: LinearProgram):
        self.program = program
        # структурные столбцы: (исходная переменная, знак); свободная x = x⁺ − x⁻
        self.structural = []
        for j, flag in enumerate(program.nonneg):
            self.structural.append((j, 1))
            if not flag:
                self.structural.append((j, -1))
        self.signs = [-1 if b < 0 else 1 for b in program.rhs]
        relations = [_FLIP[r] if s < 0 else r for r, s in zip(program.relations, self.signs)]

        m = len(program.rows)
        self.m = m
        self.table: List[List[Fraction]] = [
            [s * row[j] * sign for j, sign in self.structural] for row, s in zip(program.rows, self.signs)
        ]
        self.beta = [s * b for s, b in zip(self.signs, program.rhs)]
        self.artificial = [False] * len(self.structural)
        self.basis = [0] * m
        for i, rel in enumerate(relations):
            if rel != EQ:
                self._add_column(i, ONE if rel == LE else -ONE, artificial=False)
                if rel == LE:
                    self.basis[i] = len(self.artificial) - 1
        for i, rel in enumerate(relations):
            if rel != LE:
                self._add_column(i, ONE, artificial=True)
                self.basis[i] = len(self.artificial) - 1
        # столбцы начального базиса образуют B⁻¹ на каждом шаге
        self.identity = list(self.basis)

    def _add_column(self, row: int, value: Fraction, artificial: bool) -> None:
        for i in range(self.m):
            self.table[i].append(value if i == row else ZERO)
        self.artificial.append(artificial)

    @property
    def width(self) -> int:
        return len(self.artificial)

    def pivot(self, r: int, j: int) -> None:
        lead = self.table[r][j]
        self.table[r] = [a / lead for a in self.table[r]]
        self.beta[r] /= lead
        for i in range(self.m):
            factor = self.table[i][j]
            if i != r and factor:
                self.table[i] = [a - factor * b for a, b in zip(self.table[i], self.table[r])]
                self.beta[i] -= factor * self.beta[r]
        self.basis[r] = j

    def reduced_costs(self, cost: Sequence[Fraction]) -> List[Fraction]:
        return [
            sum((cost[self.basis[i]] * self.table[i][j] for i in range(self.m)), ZERO) - cost[j]
            for j in range(self.width)
        ]

    def run(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> Optional[int]:
        """Итерации до оптимума; возвращает входящий столбец при неограниченности"""
        steps = 0
        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in range(self.width) if allowed[j] and reduced[j] < 0), None)
            if entering is None:
                logger.debug(f"Simplex converged after {steps} pivots")
                return None
            candidates = [i for i in range(self.m) if self.table[i][entering] > 0]
            if not candidates:
                return entering
            leaving = min(candidates, key=lambda i: (self.beta[i] / self.table[i][entering], self.basis[i]))
            self.pivot(leaving, entering)
            steps += 1

    def objective_value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * v for b, v in zip(self.basis, self.beta)), ZERO)

    def drive_out_artificials(self) -> None:
        for r in range(self.m):
            if not self.artificial[self.basis[r]]:
                continue
            j = next((j for j in range(self.width) if not self.artificial[j] and self.table[r][j]), None)
            # строка без неискусственных столбцов избыточна и остается как есть
            if j is not None:
                self.pivot(r, j)

    def duals(self, cost: Sequence[Fraction]) -> Vector:
        """y_i = σ_i (c_B B⁻¹)_i в исходных знаках строк"""
        return tuple(
            self.signs[i] * sum((cost[self.basis[k]] * self.table[k][col] for k in range(self.m)), ZERO)
            for i, col in enumerate(self.identity)
        )

    def _to_original(self, values: Sequence[Fraction]) -> Vector:
        x = [ZERO] * len(self.program.objective)
        for column, (j, sign) in enumerate(self.structural):
            x[j] += sign * values[column]
        return tuple(x)

    def primal(self) -> Vector:
        values = [ZERO] * self.width
        for b, v in zip(self.basis, self.beta):
            values[b] = v
        return self._to_original(values)

    def ray(self, entering: int) -> Vector:
        direction = [ZERO] * self.width
        direction[entering] = ONE
        for i, b in enumerate(self.basis):
            direction[b] -= self.table[i][entering]
        return self._to_original(direction)


def solve_lp(program: LinearProgram) -> LPOutcome:
    """
    Точное решение ЛП: OPTIMAL, INFEASIBLE или UNBOUNDED с сертификатом

    Фаза 1 максимизирует −Σ искусственных переменных; ее двойственное
    решение при отрицательном оптимуме и есть строка Фаркаша.
    """
    simplex = _Simplex(program)
    if any(simplex.artificial):
        phase_one = [-ONE if a else ZERO for a in simplex.artificial]
        simplex.run(phase_one, [True] * simplex.width)
        if simplex.objective_value(phase_one) < 0:
            farkas = simplex.duals(phase_one)
            logger.debug(f"LP {program.size} infeasible, Farkas row {farkas}")
            return LPOutcome(status=LPStatus.INFEASIBLE, y=farkas)
        simplex.drive_out_artificials()

    cost = [program.objective[j] * sign for j, sign in simplex.structural]
    cost += [ZERO] * (simplex.width - len(cost))
    entering = simplex.run(cost, [not a for a in simplex.artificial])
    x = simplex.primal()
    if entering is not None:
        ray = simplex.ray(entering)
        logger.debug(f"LP {program.size} unbounded along {ray}")
        return LPOutcome(status=LPStatus.UNBOUNDED, x=x, ray=ray)
    return LPOutcome(status=LPStatus.OPTIMAL, value=_dot(program.objective, x), x=x, y=simplex.duals(cost))


def _satisfies(value: Fraction, relation: str, bound: Fraction) -> bool:
    if relation == LE:
        return value <= bound
    if relation == GE:
        return value >= bound
    return value == bound


def _sign_pattern(program: LinearProgram, y: Vector) -> bool:
    """y_i ≥ 0 для ≤, y_i ≤ 0 для ≥, свободен для ="""
    return all(
        (rel == EQ) or (rel == LE and yi >= 0) or (rel == GE and yi <= 0)
        for rel, yi in zip(program.relations, y)
    )


def _column_products(program: LinearProgram, y: Vector) -> Vector:
    n = len(program.objective)
    return tuple(sum((y[i] * row[j] for i, row in enumerate(program.rows)), ZERO) for j in range(n))


def is_feasible(program: LinearProgram, x: Vector) -> bool:
    if x is None or len(x) != len(program.objective):
        return False
    if any(flag and xj < 0 for flag, xj in zip(program.nonneg, x)):
        return False
    return all(_satisfies(_dot(row, x), rel, b) for row, rel, b in zip(program.rows, program.relations, program.rhs))


def check_certificate(program: LinearProgram, outcome: LPOutcome) -> bool:
    """Независимая точная проверка сертификата исхода"""
    m = len(program.rows)
    if outcome.status == LPStatus.OPTIMAL:
        y = outcome.y
        if y is None or len(y) != m or outcome.value is None or not is_feasible(program, outcome.x):
            return False
        if not _sign_pattern(program, y):
            return False
        products = _column_products(program, y)
        dual_feasible = all(
            (p >= c) if flag else (p == c) for p, c, flag in zip(products, program.objective, program.nonneg)
        )
        return (
            dual_feasible
            and _dot(program.objective, outcome.x) == outcome.value
            and _dot(program.rhs, y) == outcome.value
        )

    if outcome.status == LPStatus.INFEASIBLE:
        y = outcome.y
        if y is None or len(y) != m or not _sign_pattern(program, y):
            return False
        products = _column_products(program, y)
        pattern = all((p >= 0) if flag else (p == 0) for p, flag in zip(products, program.nonneg))
        return pattern and _dot(program.rhs, y) < 0

    d = outcome.ray
    if d is None or len(d) != len(program.objective) or not is_feasible(program, outcome.x):
        return False
    if any(flag and dj < 0 for flag, dj in zip(program.nonneg, d)):
        return False
    homogeneous = all(_satisfies(_dot(row, d), rel, ZERO) for row, rel in zip(program.rows, program.relations))
    return homogeneous and _dot(program.objective, d) > 0
