"""
Pydantic схемы результатов и отчетов
"""
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, InstanceOf, model_validator

from .algebras import CanonicalSet
from .charges import Charge
from .errors import ExitCode


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


# Enums for schemas
class AtomKind(str, Enum):
    POINT = "point"
    LEFT_LIMIT = "leftlim"


class YanMode(str, Enum):
    HULL = "hull"
    CONE = "cone"


class ReportStatus(str, Enum):
    OK = "ok"
    VIOLATION = "violation"
    ERROR = "error"


# Decomposition schemas
class Decomposition(FrozenModel):
    continuous_part: InstanceOf[Charge]
    singular_part: InstanceOf[Charge]
    aggregate: InstanceOf[Charge]


class DominationReport(FrozenModel):
    dominating: InstanceOf[Charge]
    per_member: Tuple[bool, ...]
    equivalent_subfamily: Tuple[int, ...]
    # проверка опорного шага доказательства, если задан λ
    reference_flags: Optional[Tuple[bool, ...]] = None
    pivot_flags: Optional[Tuple[bool, ...]] = None

    @property
    def dominated(self) -> bool:
        return all(self.per_member)

    @property
    def pivot_holds(self) -> bool:
        return self.pivot_flags is None or all(self.pivot_flags)


class ExhaustionTrace(FrozenModel):
    chosen: Tuple[InstanceOf[CanonicalSet], ...]
    chosen_indices: Tuple[int, ...]
    increments: Tuple[Fraction, ...]
    residuals: Tuple[Fraction, ...]
    # r_0 = λ(⋃H)
    initial: Fraction

    @property
    def final_residual(self) -> Fraction:
        return self.residuals[-1] if self.residuals else self.initial

    def table(self) -> List[Tuple[int, Fraction]]:
        """Таблица k, r_k начиная с k = 0"""
        return list(enumerate((self.initial,) + tuple(self.residuals)))


class Atom(FrozenModel):
    kind: AtomKind
    location: Fraction
    representative: InstanceOf[CanonicalSet]
    mass: Fraction


class AtomList(FrozenModel):
    atoms: Tuple[Atom, ...] = ()
    # ключи, не прошедшие проверку изолированности
    rejected: Tuple[Tuple[AtomKind, Fraction], ...] = ()


# Completion schemas
class CompletionStatus(FrozenModel):
    inner: Fraction
    outer: Fraction
    member: bool
    extension: Optional[Fraction] = None

    @model_validator(mode="after")
    def check_bounds(self):
        if self.inner > self.outer:
            raise ValueError("inner value exceeds outer value")
        if self.member != (self.inner == self.outer):
            raise ValueError("membership must coincide with inner = outer")
        return self


class DefectRow(FrozenModel):
    test: object
    value: Fraction
    series: Fraction
    defect: Fraction


class SigmaAdditivityReport(FrozenModel):
    rows: Tuple[DefectRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.defect == 0 for row in self.rows)


# Yan schemas
class YanModel(FrozenModel):
    n: int = Field(ge=1)
    weights: Tuple[Fraction, ...]
    generators: Tuple[Tuple[Fraction, ...], ...] = ()
    mode: YanMode = YanMode.CONE

    @model_validator(mode="after")
    def check_dimensions(self):
        if len(self.weights) != self.n:
            raise ValueError(f"lambda has {len(self.weights)} weights, space has {self.n} points")
        if any(w < 0 for w in self.weights):
            raise ValueError("lambda weights must be nonnegative")
        if not any(w > 0 for w in self.weights):
            raise ValueError("lambda needs at least one positive weight")
        for k in self.generators:
            if len(k) != self.n:
                raise ValueError(f"generator {k} does not have {self.n} coordinates")
        return self

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)


class Certificate(FrozenModel):
    p: Tuple[Fraction, ...]
    k_bound: Fraction
    ratio_bound: Fraction
    margin: Fraction


class ConditionCheck(FrozenModel):
    holds: bool
    witness: Optional[Tuple[int, ...]] = None
    checked: int = 0


class YanResult(FrozenModel):
    certificate: Optional[Certificate] = None
    witness: Optional[Tuple[int, ...]] = None

    @property
    def found(self) -> bool:
        return self.certificate is not None


class EquivalenceReport(FrozenModel):
    condition_i: bool
    condition_ii: bool
    condition_iii: bool
    sampled: int
    witness: Optional[Tuple[int, ...]] = None
    certificate: Optional[Certificate] = None

    @property
    def consistent(self) -> bool:
        return self.condition_i == self.condition_ii == self.condition_iii


# Report schemas
class ReportSection(BaseModel):
    title: str
    lines: List[str] = []


class Report(BaseModel):
    command: str
    status: ReportStatus = ReportStatus.OK
    exit_code: ExitCode = ExitCode.OK
    sections: List[ReportSection] = []
    machine: List[Tuple[str, str]] = []

    def section(self, title: str, lines: List[str]) -> "Report":
        self.sections.append(ReportSection(title=title, lines=list(lines)))
        return self

    def record(self, key: str, value) -> "Report":
        self.machine.append((key, str(value)))
        return self

    def fail(self, status: ReportStatus, exit_code: ExitCode) -> "Report":
        self.status = status
        self.exit_code = exit_code
        return self

    def machine_block(self) -> str:
        """Стабильный построчный дамп key=value"""
        lines = [f"command={self.command}", f"status={self.status.value}"]
        lines += [f"{key}={value}" for key, value in self.machine]
        return "\n".join(lines)

    def render(self) -> str:
        out = []
        for section in self.sections:
            out.append(f"== {section.title}")
            out.extend(section.lines)
            out.append("")
        out.append("-- machine")
        out.append(self.machine_block())
        return "\n".join(out) + "\n"
