"""Nuisance filings: when a suit with no merit still extracts a settlement.

Sequence of play. A plaintiff of known-to-self type (frivolous or meritorious)
pays a filing cost (f_o or f_q) to file. The defendant, who cannot observe the
type, either settles for s, hires counsel at cost d, or ignores the filing and
eats a default judgment j. If the defendant defends, the plaintiff chooses to
drop or to proceed to trial at personal cost c_p, where a frivolous claim
recovers nothing and a meritorious one recovers j.

Solved backward:

  * a frivolous plaintiff facing a defense always drops (trial adds c_p for
    nothing), so a frivolous case never reaches trial;
  * a meritorious plaintiff proceeds exactly when j - c_p > 0;
  * the defendant compares s, d plus the expected judgment if a meritorious
    plaintiff would press on (weighted by belief_merit), and j, preferring
    Settle, then Defend, then Default on ties;
  * the plaintiff files when the anticipated response leaves them at least
    whole (payoff >= 0).

The extraction region is the wedge where defending costs more than settling
(roughly f_o <= s < d): a frivolous filing is profitable there even though
everyone knows it would lose at trial. play() analyzes the response at belief
0 by default, the pooled defendant who prices a filing as if frivolous; pass
belief_merit to study any screening belief.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError


class PlaintiffType(Enum):
    FRIVOLOUS = "frivolous"
    MERITORIOUS = "meritorious"


class DefendantAction(Enum):
    SETTLE = "settle"
    DEFEND = "defend"
    DEFAULT = "default"
    NONE = "none"  # plaintiff never filed


class FollowUp(Enum):
    DROP = "drop"
    TRIAL = "trial"
    NONE = "none"  # no defense to respond to


class RegionShift(Enum):
    MORE_FILINGS = "more_filings"
    FEWER_FILINGS = "fewer_filings"
    UNCHANGED = "unchanged"


@dataclass(frozen=True)
class FrivolousConfig:
    """Costs of the filing game; defense_trial_cost is what a lost defended trial
    adds on top of the judgment (0 keeps counsel cost d as the whole defense bill)."""

    f_o: float  # filing cost, frivolous plaintiff
    f_q: float  # filing cost, meritorious plaintiff
    d: float  # defendant's cost of mounting a defense
    s: float  # settlement demand on the table
    j: float  # judgment if the plaintiff wins (or wins by default)
    c_p: float  # plaintiff's cost of actually going to trial
    defense_trial_cost: float = 0.0

    def __post_init__(self):
        for name in ("f_o", "f_q", "d", "s", "c_p", "defense_trial_cost"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v >= 0):
                raise DomainError(f"{name} must be finite and >= 0: got {v!r}")
        if not (isinstance(self.j, (int, float)) and math.isfinite(self.j) and self.j > 0):
            raise DomainError(f"j must be finite and > 0: got {self.j!r}")


@dataclass(frozen=True)
class GameOutcome:
    plaintiff_type: PlaintiffType
    filed: bool
    defendant_action: DefendantAction
    plaintiff_followup: FollowUp
    plaintiff_payoff: float
    defendant_payoff: float


def plaintiff_followup(plaintiff_type: PlaintiffType, config: FrivolousConfig) -> FollowUp:
    """Drop or proceed once the defendant has lawyered up."""
    if plaintiff_type is PlaintiffType.FRIVOLOUS:
        return FollowUp.DROP  # trial pays -c_p on top of a sure loss
    if config.j - config.c_p > 0.0:
        return FollowUp.TRIAL
    return FollowUp.DROP


def defendant_best_response(belief_merit: float, config: FrivolousConfig) -> DefendantAction:
    """Cheapest of settling, defending, defaulting at the given merit belief.

    Ties break toward Settle, then Defend: at equal cost the defendant takes
    the certain, litigation-free exit.
    """
    if not (isinstance(belief_merit, (int, float)) and 0.0 <= belief_merit <= 1.0):
        raise DomainError(f"belief_merit must lie in [0, 1]: got {belief_merit!r}")
    defend_cost = config.d
    if plaintiff_followup(PlaintiffType.MERITORIOUS, config) is FollowUp.TRIAL:
        defend_cost = config.d + belief_merit * (config.j + config.defense_trial_cost)
    options = [
        (config.s, 0, DefendantAction.SETTLE),
        (defend_cost, 1, DefendantAction.DEFEND),
        (config.j, 2, DefendantAction.DEFAULT),
    ]
    return min(options)[2]


def plaintiff_files(
    plaintiff_type: PlaintiffType, anticipated: DefendantAction, config: FrivolousConfig
) -> bool:
    """File when the anticipated response covers the filing cost (weakly)."""
    return _filing_payoff(plaintiff_type, anticipated, config) >= 0.0


def _filing_payoff(
    plaintiff_type: PlaintiffType, response: DefendantAction, config: FrivolousConfig
) -> float:
    fee = config.f_o if plaintiff_type is PlaintiffType.FRIVOLOUS else config.f_q
    if response is DefendantAction.SETTLE:
        return config.s - fee
    if response is DefendantAction.DEFAULT:
        return config.j - fee
    if response is DefendantAction.DEFEND:
        if plaintiff_followup(plaintiff_type, config) is FollowUp.TRIAL:
            return config.j - fee - config.c_p
        return -fee
    raise DomainError(f"anticipated response must be a real action: got {response!r}")


def play(
    plaintiff_type: PlaintiffType,
    config: FrivolousConfig,
    belief_merit: float | None = None,
) -> GameOutcome:
    """Resolve the whole game for one plaintiff type.

    belief_merit defaults to 0: the pooled defendant prices every filing as
    frivolous, the posture under which nuisance extraction is starkest.
    """
    belief = 0.0 if belief_merit is None else belief_merit
    response = defendant_best_response(belief, config)
    if not plaintiff_files(plaintiff_type, response, config):
        return GameOutcome(plaintiff_type, False, DefendantAction.NONE, FollowUp.NONE, 0.0, 0.0)

    fee = config.f_o if plaintiff_type is PlaintiffType.FRIVOLOUS else config.f_q
    if response is DefendantAction.SETTLE:
        return GameOutcome(
            plaintiff_type, True, response, FollowUp.NONE, config.s - fee, -config.s
        )
    if response is DefendantAction.DEFAULT:
        return GameOutcome(
            plaintiff_type, True, response, FollowUp.NONE, config.j - fee, -config.j
        )
    followup = plaintiff_followup(plaintiff_type, config)
    if followup is FollowUp.TRIAL:
        return GameOutcome(
            plaintiff_type,
            True,
            response,
            followup,
            config.j - fee - config.c_p,
            -(config.d + config.j + config.defense_trial_cost),
        )
    return GameOutcome(plaintiff_type, True, response, followup, -fee, -config.d)


def filing_region_shift(
    config: FrivolousConfig, delta_f: float, delta_d: float
) -> RegionShift:
    """Direction the frivolous extraction region moves when costs fall.

    The region is the wedge of demands with f_o <= s < d; its width d - f_o
    grows by delta_f - delta_d when filing gets cheaper by delta_f and
    defending by delta_d. Classified by that sign, so equal reductions leave
    the region unchanged.
    """
    for name, delta, ceiling in (("delta_f", delta_f, config.f_o), ("delta_d", delta_d, config.d)):
        if not (isinstance(delta, (int, float)) and math.isfinite(delta) and delta >= 0):
            raise DomainError(f"{name} must be finite and >= 0: got {delta!r}")
        if delta > ceiling:
            raise DomainError(f"{name}={delta!r} would push a cost below zero (cap {ceiling!r})")
    change = delta_f - delta_d
    if change > 0.0:
        return RegionShift.MORE_FILINGS
    if change < 0.0:
        return RegionShift.FEWER_FILINGS
    return RegionShift.UNCHANGED
