"""
Агрегаты семейства зарядов и обобщенное разложение Лебега
"""
from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Optional, Tuple

from .algebras import ONE, as_rational
from .charges import Charge, Primitive, PrimitiveKind, abs_continuous, total_variation
from .config import settings
from .errors import BadInput, EmptyFamily, TooLarge
from .schemas import Decomposition

logger = logging.getLogger(__name__)


def default_weights(size: int) -> Tuple[Fraction, ...]:
    """α_n = 2⁻ⁿ для n < N и α_N = 2^-(N-1), так что Σα_n = 1"""
    if size < 1:
        raise EmptyFamily("weights requested for an empty family")
    weights = [Fraction(1, 2 ** n) for n in range(1, size)]
    weights.append(Fraction(1, 2 ** (size - 1)))
    return tuple(weights)


@dataclass(frozen=True)
class ChargeFamily:
    members: Tuple[Charge, ...]
    weights: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if len(self.members) > settings.MAX_FAMILY:
            raise TooLarge(
                f"family of {len(self.members)} charges exceeds CHARGEKIT_MAX_FAMILY={settings.MAX_FAMILY}"
            )
        if self.weights is None:
            return
        weights = tuple(as_rational(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != len(self.members):
            raise BadInput("weights and members differ in length")
        if any(w <= 0 for w in weights):
            raise BadInput("weights must be strictly positive")
        if sum(weights) != ONE:
            raise BadInput(f"weights sum to {sum(weights)}, expected 1")

    @classmethod
    def of(cls, *members: Charge) -> "ChargeFamily":
        return cls(tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def effective_weights(self) -> Tuple[Fraction, ...]:
        return self.weights if self.weights is not None else default_weights(len(self.members))


def aggregate(family: ChargeFamily) -> Charge:
    """m = Σ α_n |μ_n| / (1 ∨ ‖μ_n‖)"""
    if not family.members:
        raise EmptyFamily("aggregate of an empty family")
    result = Charge.zero()
    for alpha, mu in zip(family.effective_weights, family.members):
        variation, size = total_variation(mu)
        result = result + variation.scale(alpha / max(ONE, size))
    return result


def in_L(nu: Charge, family: ChargeFamily) -> bool:
    """ν ∈ L(M): ν ≪ m для агрегата m; L(∅) = {0}"""
    if not family.members:
        return nu.is_zero
    return abs_continuous(nu, aggregate(family))


def lebesgue_decompose(lam: Charge, family: ChargeFamily) -> Decomposition:
    """
    λ = λ^c + λ^⊥ с λ^c ≪ m и λ^⊥ ⊥ |μ| для всех μ ∈ M

    Точечные массы и η⁻_c уходят в λ^c, если их ключ есть у агрегата; каждая
    плотность режется по носителю плотности агрегата.
    """
    if not family.members:
        return Decomposition(continuous_part=Charge.zero(), singular_part=lam, aggregate=Charge.zero())

    m = aggregate(family)
    covered = m.density_support
    continuous, orthogonal = [], []
    for x, c in lam.points:
        (continuous if x in m.point_keys else orthogonal).append((Primitive(PrimitiveKind.POINT, x), c))
    for x, c in lam.left_limits:
        (continuous if x in m.left_keys else orthogonal).append((Primitive(PrimitiveKind.LEFT_LIMIT, x), c))
    for a, b, c in lam.densities:
        for target, part in ((continuous, covered), (orthogonal, covered.complement())):
            for lo, hi in part.intervals:
                lo, hi = max(lo, a), min(hi, b)
                if lo < hi:
                    target.append((Primitive(PrimitiveKind.DENSITY, lo, hi), c))

    result = Decomposition(
        continuous_part=Charge.from_terms(continuous),
        singular_part=Charge.from_terms(orthogonal),
        aggregate=m,
    )
    logger.debug(f"Lebesgue decomposition over {len(family)} members: {result.continuous_part} | {result.singular_part}")
    return result
