"""Caseload composition when a flat cost cut hits every kind of case.

Shipping the good apples: subtract the same dollar amount from cheap and
expensive case types and the cheap ones get relatively cheaper, so the docket
tilts toward them. Each area's filing volume responds to its own fractional
price decline with a constant-elasticity rule,

    new_volume = share * (unit_cost / (unit_cost - reduction)) ** elasticity,

and shares are renormalized so the docket total is conserved. With equal
elasticities the ranking of share gains is exactly the inverse ranking of
unit costs; high-cost areas can lose share outright even as their absolute
volume grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

_SHARE_SUM_SLACK = 1e-9


@dataclass(frozen=True)
class AreaShare:
    """One slice of the docket: its share, per-case cost, and filing elasticity."""

    name: str
    share: float
    unit_cost: float
    demand_elasticity: float

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise DomainError("area name must be a nonempty string")
        if not (isinstance(self.share, (int, float)) and 0.0 <= self.share <= 1.0):
            raise DomainError(f"share must lie in [0, 1]: got {self.share!r}")
        if not (
            isinstance(self.unit_cost, (int, float))
            and math.isfinite(self.unit_cost)
            and self.unit_cost > 0
        ):
            raise DomainError(f"unit_cost must be finite and > 0: got {self.unit_cost!r}")
        e = self.demand_elasticity
        if not (isinstance(e, (int, float)) and math.isfinite(e) and e > 0):
            raise DomainError(f"demand_elasticity must be finite and > 0: got {e!r}")


@dataclass(frozen=True)
class ShareShift:
    name: str
    old_share: float
    new_share: float


def validate_composition(areas: list[AreaShare], flat_reduction: float) -> None:
    """Raise DomainError unless the docket and the cut are mutually admissible."""
    if not areas:
        raise DomainError("at least one area is required")
    names = [a.name for a in areas]
    if len(set(names)) != len(names):
        raise DomainError(f"area names must be unique: got {names!r}")
    total = sum(a.share for a in areas)
    if total > 1.0 + _SHARE_SUM_SLACK:
        raise DomainError(f"area shares sum to {total!r} > 1")
    if total == 0.0:
        raise DomainError("area shares sum to zero; nothing to shift")
    if not (
        isinstance(flat_reduction, (int, float))
        and math.isfinite(flat_reduction)
        and flat_reduction >= 0
    ):
        raise DomainError(f"flat_reduction must be finite and >= 0: got {flat_reduction!r}")
    cheapest = min(a.unit_cost for a in areas)
    if flat_reduction >= cheapest:
        raise DomainError(
            f"flat_reduction={flat_reduction!r} wipes out the cheapest area's cost ({cheapest!r})"
        )


def shift_composition(areas: list[AreaShare], flat_reduction: float) -> list[ShareShift]:
    """New docket shares after the flat cut, input order preserved, total conserved."""
    validate_composition(areas, flat_reduction)
    old_total = sum(a.share for a in areas)
    volumes = [
        a.share * (a.unit_cost / (a.unit_cost - flat_reduction)) ** a.demand_elasticity
        for a in areas
    ]
    scale = old_total / sum(volumes)
    return [
        ShareShift(name=a.name, old_share=a.share, new_share=v * scale)
        for a, v in zip(areas, volumes)
    ]


def relative_price_change(areas: list[AreaShare], flat_reduction: float) -> list[tuple[str, float]]:
    """Fractional cost decline per area; larger for cheaper areas by construction."""
    validate_composition(areas, flat_reduction)
    return [(a.name, flat_reduction / a.unit_cost) for a in areas]
