"""
Grading of the asymptotic hierarchy and the state it evolves
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from pydantic import Field as PydanticField
from pydantic import model_validator

from ..field.spectral import Field
from ..models.base import BaseWaveModel, ValidationError

# (n, m) pairs of ε^n δ^m in chain order
IMPLEMENTED: Tuple[Tuple[int, int], ...] = ((0, 0), (1, 0), (1, 1), (0, 2), (1, 2))


class OrderTag(BaseWaveModel):
    """Truncation order (n, m) of the graded hierarchy"""

    n: int = PydanticField(..., ge=0, description="Power of ε")
    m: int = PydanticField(..., ge=0, description="Power of δ")

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _implemented(self) -> "OrderTag":
        if (self.n, self.m) not in IMPLEMENTED:
            raise ValueError(f"order ({self.n},{self.m}) is not implemented; choose one of {IMPLEMENTED}")
        return self

    @classmethod
    def parse(cls, value: Union[str, "OrderTag", Tuple[int, int]]) -> "OrderTag":
        """Accepts "12", "1,2", (1, 2) or an OrderTag"""
        if isinstance(value, OrderTag):
            return value
        try:
            if isinstance(value, str):
                digits = value.replace(",", "").replace(" ", "")
                if len(digits) != 2 or not digits.isdigit():
                    raise ValueError(f"cannot parse order '{value}'")
                n, m = int(digits[0]), int(digits[1])
            else:
                n, m = value
            return cls(n=n, m=m)
        except Exception as e:
            raise ValidationError(f"invalid order {value!r}", [{"detail": str(e)}]) from e

    @property
    def grades(self) -> List[Tuple[int, int]]:
        """Graded terms included at this order"""
        return list(IMPLEMENTED[: IMPLEMENTED.index((self.n, self.m)) + 1])

    @property
    def previous(self) -> "OrderTag":
        i = IMPLEMENTED.index((self.n, self.m))
        if i == 0:
            raise ValidationError("order (0,0) has no predecessor")
        n, m = IMPLEMENTED[i - 1]
        return OrderTag(n=n, m=m)

    @property
    def has_dispersion(self) -> bool:
        """Contains the δ² fourth-derivative terms"""
        return (0, 2) in self.grades

    @property
    def label(self) -> str:
        return f"{self.n}{self.m}"

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


ALL_ORDERS: List[OrderTag] = [OrderTag(n=n, m=m) for n, m in IMPLEMENTED]


@dataclass
class HierarchyState:
    """Wave height η and surface potential ξ at time t on a 1-D grid"""

    eta: Field
    xi: Field
    t: float = 0.0

    def __post_init__(self):
        if self.eta.grid != self.xi.grid:
            raise ValidationError("η and ξ are sampled on different grids")
        if self.eta.grid.dim != 1:
            raise ValidationError("the long-wave hierarchy is one-dimensional")
        if not (self.eta.is_real and self.xi.is_real):
            raise ValidationError("hierarchy fields must be real")

    @property
    def grid(self):
        return self.eta.grid

    def perturbed(self, d_eta=None, d_xi=None, scale: float = 1.0) -> "HierarchyState":
        """State with η + scale·d_eta and ξ + scale·d_xi (arrays); drift is kept"""
        eta = self.eta if d_eta is None else Field(self.grid, self.eta.values + scale * d_eta, self.eta.drift)
        xi = self.xi if d_xi is None else Field(self.grid, self.xi.values + scale * d_xi, self.xi.drift)
        return HierarchyState(eta, xi, self.t)
