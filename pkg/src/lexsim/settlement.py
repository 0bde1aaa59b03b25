"""Settle-or-try bargaining under the American and English fee rules.

A dispute is five numbers: the plaintiff thinks they win with probability p_q,
the defendant puts that same event at p_g, the judgment is j, and each side
would burn c_q / c_g at trial. Under the American rule each side eats its own
costs; under the English rule the loser pays both.

The plaintiff accepts any settlement at or above their expected trial value;
the defendant pays anything at or below their expected trial cost:

    American   lower = p_q*j - c_q              upper = p_g*j + c_g
    English    lower = p_q*j - (1-p_q)*(c_q+c_g)
               upper = p_g*(j + c_q + c_g)

A nonempty range [lower, upper] settles at its midpoint; an empty one goes to
trial. Range widths collapse to

    W_A = (p_g - p_q)*j + (c_q + c_g)
    W_E = (p_g - p_q)*j + (p_g + 1 - p_q)*(c_q + c_g)

so cutting both parties' costs by delta_c narrows the American range by
2*delta_c but the English range by (p_g + 1 - p_q)*2*delta_c: fee shifting
amplifies a cost change whenever the parties are mutually optimistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError


class FeeRule(Enum):
    AMERICAN = "american"
    ENGLISH = "english"


class OutcomeKind(Enum):
    SETTLE = "settle"
    TRIAL = "trial"


@dataclass(frozen=True)
class Dispute:
    """One filed case: subjective win odds, stakes, and per-side trial costs."""

    p_q: float
    p_g: float
    j: float
    c_q: float
    c_g: float

    def __post_init__(self):
        for name in ("p_q", "p_g"):
            p = getattr(self, name)
            if not (isinstance(p, (int, float)) and 0.0 <= p <= 1.0):
                raise DomainError(f"{name} must lie in [0, 1]: got {p!r}")
        if not (isinstance(self.j, (int, float)) and math.isfinite(self.j) and self.j > 0):
            raise DomainError(f"j must be finite and > 0: got {self.j!r}")
        for name in ("c_q", "c_g"):
            c = getattr(self, name)
            if not (isinstance(c, (int, float)) and math.isfinite(c) and c >= 0):
                raise DomainError(f"{name} must be finite and >= 0: got {c!r}")


@dataclass(frozen=True)
class SettlementRange:
    lower: float
    upper: float

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def feasible(self) -> bool:
        return self.width >= 0.0


@dataclass(frozen=True)
class Outcome:
    kind: OutcomeKind
    amount: float | None = None


def _bounds(p_q, p_g, j, c_q, c_g, rule: FeeRule):
    # shared with the evolution simulator, which calls it on arrays; keep the
    # operation order identical for scalars and vectors
    if rule is FeeRule.AMERICAN:
        lower = p_q * j - c_q
        upper = p_g * j + c_g
    else:
        lower = p_q * j - (1.0 - p_q) * (c_q + c_g)
        upper = p_g * (j + c_q + c_g)
    return lower, upper


def plaintiff_trial_value(d: Dispute, rule: FeeRule) -> float:
    """Least settlement the plaintiff accepts: their expected value of trial."""
    return _bounds(d.p_q, d.p_g, d.j, d.c_q, d.c_g, rule)[0]


def defendant_trial_cost(d: Dispute, rule: FeeRule) -> float:
    """Most the defendant pays to settle: their expected cost of trial."""
    return _bounds(d.p_q, d.p_g, d.j, d.c_q, d.c_g, rule)[1]


def settlement_range(d: Dispute, rule: FeeRule) -> SettlementRange:
    lower, upper = _bounds(d.p_q, d.p_g, d.j, d.c_q, d.c_g, rule)
    return SettlementRange(lower=lower, upper=upper)


def decide(d: Dispute, rule: FeeRule) -> Outcome:
    """Settle at the range midpoint when the range is nonempty, else try the case."""
    r = settlement_range(d, rule)
    if r.feasible:
        return Outcome(OutcomeKind.SETTLE, 0.5 * (r.lower + r.upper))
    return Outcome(OutcomeKind.TRIAL)


def apply_cost_reduction(d: Dispute, delta_c: float) -> Dispute:
    """Cut both sides' trial costs by delta_c; the reduction may not exceed either cost."""
    if not (isinstance(delta_c, (int, float)) and math.isfinite(delta_c) and delta_c >= 0):
        raise DomainError(f"delta_c must be finite and >= 0: got {delta_c!r}")
    if delta_c > min(d.c_q, d.c_g):
        raise DomainError(
            f"delta_c={delta_c!r} exceeds a party's cost (c_q={d.c_q!r}, c_g={d.c_g!r})"
        )
    return Dispute(p_q=d.p_q, p_g=d.p_g, j=d.j, c_q=d.c_q - delta_c, c_g=d.c_g - delta_c)


def shrink_ratio(d: Dispute) -> float:
    """American-to-English ratio of range shrinkage per unit of cost reduction.

    Equals 1 / (p_g + 1 - p_q): below one under mutual optimism (p_q > p_g),
    meaning the English range shrinks faster than the American one.
    """
    # grouped so equal probabilities cancel to zero first and the ratio is
    # exactly one whenever p_q == p_g
    denom = 1.0 - (d.p_q - d.p_g)
    if denom == 0.0:
        raise DomainError("shrink ratio undefined when p_g + 1 - p_q = 0")
    return 1.0 / denom
