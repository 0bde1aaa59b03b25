"""Selective relitigation and the drift of legal rules toward efficiency.

Each legal rule in an area is either efficient or inefficient. Inefficient
rules impose larger losses on the parties they govern, so disputes under them
are fought at higher stakes (stakes_multiplier >= 1), reach trial more often,
and hand courts more chances to overturn them. Efficient rules are litigated
at base stakes and flip back only rarely. Every rule is an independent
two-state Markov chain; the population fraction of efficient rules drifts
toward p_ie / (p_ie + p_ei).

Per period, each rule independently:

  1. draws a dispute with the area's effective dispute rate (the raw rate
     gated by 1 - g* in areas whose gaps can be contracted away);
  2. draws a mutual-optimism shock eps ~ U[-spread, +spread], giving beliefs
     p_q = center + eps, p_g = center - eps (clipped to [0, 1]);
  3. settles or tries the case under the area's fee rule at the rule's stakes;
  4. on a trial, flips state with the overturn probability for its direction.

Randomness. Rule i draws from Philox substream i of the run seed, three
uniforms per period in a fixed order (dispute, belief, flip), so a trace is
bit-reproducible and growing the population never reshuffles existing rules'
draws. The flip-rate estimator owns substream 2^63. An optional stream of
frivolous filers rides along in its own trace columns; those cases never
reach trial, so rule columns are untouched by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .contracts import AiShock, GapCurve, apply_shock, solve_completeness
from .errors import ConvergenceError, DomainError
from .frivolous import DefendantAction, FollowUp, FrivolousConfig, PlaintiffType, play
from .rng import substream
from .settlement import Dispute, FeeRule, OutcomeKind, _bounds, decide

_STREAM_RATES = 2**63  # reserved substream of the flip-rate estimator
_MAX_CLOSURE_ITER = 10**7


class AreaKind(Enum):
    TORT = "tort"
    CONTRACT = "contract"
    PROPERTY = "property"


@dataclass(frozen=True)
class LegalArea:
    """A body of law: dispute flow, stakes, costs, beliefs, and review odds.

    Contract-like kinds (contract, property) must carry a gap_curve; their
    dispute flow is gated by how complete contracts get. Tort parties are
    strangers ex ante, so tort carries no curve and no gating.
    """

    name: str
    kind: AreaKind
    dispute_rate: float
    stakes_j: float
    stakes_multiplier: float = 1.0
    cost_q: float = 0.0
    cost_g: float = 0.0
    belief_spread: float = 0.0
    belief_center: float = 0.5
    overturn_prob: float = 0.0
    overturn_prob_ie: float | None = None
    overturn_prob_ei: float | None = None
    fee_rule: FeeRule = FeeRule.AMERICAN
    gap_curve: GapCurve | None = None

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise DomainError("area name must be a nonempty string")
        if not isinstance(self.kind, AreaKind):
            raise DomainError(f"kind must be an AreaKind: got {self.kind!r}")
        if not (
            isinstance(self.dispute_rate, (int, float)) and 0.0 < self.dispute_rate <= 1.0
        ):
            raise DomainError(
                f"dispute_rate must lie in (0, 1]: got {self.dispute_rate!r}"
            )
        if not (
            isinstance(self.stakes_j, (int, float))
            and math.isfinite(self.stakes_j)
            and self.stakes_j > 0
        ):
            raise DomainError(f"stakes_j must be finite and > 0: got {self.stakes_j!r}")
        if not (
            isinstance(self.stakes_multiplier, (int, float))
            and math.isfinite(self.stakes_multiplier)
            and self.stakes_multiplier >= 1.0
        ):
            raise DomainError(
                f"stakes_multiplier must be finite and >= 1: got {self.stakes_multiplier!r}"
            )
        for name in ("cost_q", "cost_g", "belief_spread"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v >= 0):
                raise DomainError(f"{name} must be finite and >= 0: got {v!r}")
        if not (
            isinstance(self.belief_center, (int, float)) and 0.0 <= self.belief_center <= 1.0
        ):
            raise DomainError(f"belief_center must lie in [0, 1]: got {self.belief_center!r}")
        for name in ("overturn_prob", "overturn_prob_ie", "overturn_prob_ei"):
            v = getattr(self, name)
            if v is None and name != "overturn_prob":
                continue
            if not (isinstance(v, (int, float)) and 0.0 <= v <= 1.0):
                raise DomainError(f"{name} must lie in [0, 1]: got {v!r}")
        if not isinstance(self.fee_rule, FeeRule):
            raise DomainError(f"fee_rule must be a FeeRule: got {self.fee_rule!r}")
        if self.kind is AreaKind.TORT:
            if self.gap_curve is not None:
                raise DomainError("tort areas cannot carry a gap_curve")
        else:
            if self.gap_curve is None:
                raise DomainError(f"{self.kind.value} areas must carry a gap_curve")

    @property
    def q_ie(self) -> float:
        """Overturn probability of a tried inefficient rule."""
        return self.overturn_prob if self.overturn_prob_ie is None else self.overturn_prob_ie

    @property
    def q_ei(self) -> float:
        """Overturn probability of a tried efficient rule."""
        return self.overturn_prob if self.overturn_prob_ei is None else self.overturn_prob_ei


@dataclass(frozen=True)
class RulePopulation:
    n_rules: int
    fraction_efficient: float

    def __post_init__(self):
        if not isinstance(self.n_rules, int) or self.n_rules < 1:
            raise DomainError(f"n_rules must be an integer >= 1: got {self.n_rules!r}")
        if self.n_rules >= _STREAM_RATES:
            raise DomainError(f"n_rules must stay below 2^63: got {self.n_rules!r}")
        f = self.fraction_efficient
        if not (isinstance(f, (int, float)) and 0.0 <= f <= 1.0):
            raise DomainError(f"fraction_efficient must lie in [0, 1]: got {f!r}")

    @property
    def initial_efficient_count(self) -> int:
        """Integer head count, nearest with .5 up; the first this-many rules start efficient."""
        return int(math.floor(self.fraction_efficient * self.n_rules + 0.5))


@dataclass(frozen=True)
class FlipRates:
    """Per-period transition probabilities of one rule's efficiency state."""

    p_ie: float  # inefficient -> efficient
    p_ei: float  # efficient -> inefficient

    def __post_init__(self):
        for name in ("p_ie", "p_ei"):
            p = getattr(self, name)
            if not (isinstance(p, (int, float)) and 0.0 <= p <= 1.0):
                raise DomainError(f"{name} must lie in [0, 1]: got {p!r}")


@dataclass(frozen=True)
class FrivolousStream:
    """Fixed count of nuisance filers appended to each period of a trace."""

    game: FrivolousConfig
    filers_per_period: int
    belief: float | None = None

    def __post_init__(self):
        if not isinstance(self.filers_per_period, int) or self.filers_per_period < 0:
            raise DomainError(
                f"filers_per_period must be an integer >= 0: got {self.filers_per_period!r}"
            )


@dataclass
class EvolutionTrace:
    """Period-by-period record; row 0 is the initial state, rows 1..periods follow."""

    area_name: str
    seed: int
    n_rules: int
    t: np.ndarray
    fraction_efficient: np.ndarray
    disputes: np.ndarray
    settlements: np.ndarray
    trials: np.ndarray
    frivolous_filings: np.ndarray
    frivolous_settlements: np.ndarray
    frivolous_drops: np.ndarray


def effective_dispute_rate(
    area: LegalArea, shock: AiShock = AiShock(), tolerance: float = 1e-9
) -> float:
    """Dispute flow after contracting away what can be contracted away.

    Contract-like areas litigate only the 1 - g* of contingencies left
    ungoverned at the (possibly shocked) equilibrium completeness; tort flow
    is the raw rate.
    """
    if area.gap_curve is None:
        return area.dispute_rate
    solution = solve_completeness(apply_shock(area.gap_curve, shock), tolerance)
    return area.dispute_rate * (1.0 - solution.g_star)


def _cost_delta_ok(area: LegalArea, cost_delta: float) -> None:
    if not (isinstance(cost_delta, (int, float)) and math.isfinite(cost_delta) and cost_delta >= 0):
        raise DomainError(f"cost_delta must be finite and >= 0: got {cost_delta!r}")
    if cost_delta > min(area.cost_q, area.cost_g):
        raise DomainError(
            f"cost_delta={cost_delta!r} exceeds a party cost "
            f"(cost_q={area.cost_q!r}, cost_g={area.cost_g!r})"
        )


def trial_fractions(
    area: LegalArea,
    cost_delta: float = 0.0,
    n_samples: int = 10_000,
    seed: int = 0,
) -> tuple[float, float]:
    """Monte Carlo Pr[trial | dispute] at (inefficient, efficient) stakes.

    Both stakes levels reuse the same belief draws, so a cost cut moves the
    two estimates together and their comparison is noise-free.
    """
    _cost_delta_ok(area, cost_delta)
    if not isinstance(n_samples, int) or n_samples < 1:
        raise DomainError(f"n_samples must be an integer >= 1: got {n_samples!r}")
    u = substream(seed, _STREAM_RATES).random(n_samples)
    eps = (2.0 * u - 1.0) * area.belief_spread
    p_q = np.clip(area.belief_center + eps, 0.0, 1.0)
    p_g = np.clip(area.belief_center - eps, 0.0, 1.0)
    c_q = area.cost_q - cost_delta
    c_g = area.cost_g - cost_delta
    fractions = []
    for stakes in (area.stakes_j * area.stakes_multiplier, area.stakes_j):
        trials = 0
        for k in range(n_samples):
            d = Dispute(p_q=float(p_q[k]), p_g=float(p_g[k]), j=stakes, c_q=c_q, c_g=c_g)
            if decide(d, area.fee_rule).kind is OutcomeKind.TRIAL:
                trials += 1
        fractions.append(trials / n_samples)
    return fractions[0], fractions[1]


def flip_rates(
    area: LegalArea,
    shock: AiShock = AiShock(),
    cost_delta: float = 0.0,
    n_samples: int = 10_000,
    seed: int = 0,
) -> FlipRates:
    """Per-period flip probabilities: dispute rate x Pr[trial] x overturn odds."""
    rate = effective_dispute_rate(area, shock)
    frac_ie, frac_ei = trial_fractions(area, cost_delta, n_samples, seed)
    return FlipRates(p_ie=rate * frac_ie * area.q_ie, p_ei=rate * frac_ei * area.q_ei)


def stationary_fraction(rates: FlipRates) -> float:
    """Long-run efficient fraction p_ie / (p_ie + p_ei)."""
    total = rates.p_ie + rates.p_ei
    if total == 0.0:
        raise DomainError("both flip rates are zero; the stationary fraction is undefined")
    return rates.p_ie / total


def expected_path(x0: float, rates: FlipRates, periods: int) -> np.ndarray:
    """Deterministic mean path x_{t+1} = x_t (1 - p_ei) + (1 - x_t) p_ie, length periods+1."""
    if not (isinstance(x0, (int, float)) and 0.0 <= x0 <= 1.0):
        raise DomainError(f"x0 must lie in [0, 1]: got {x0!r}")
    if not isinstance(periods, int) or periods < 0:
        raise DomainError(f"periods must be an integer >= 0: got {periods!r}")
    path = np.empty(periods + 1)
    path[0] = x = float(x0)
    for t in range(1, periods + 1):
        x = x * (1.0 - rates.p_ei) + (1.0 - x) * rates.p_ie
        path[t] = x
    return path


def gap_closure_time(x0: float, rates: FlipRates, fraction: float = 0.9) -> int:
    """Periods until the expected path closes `fraction` of its gap to stationary."""
    if not (isinstance(fraction, (int, float)) and 0.0 < fraction < 1.0):
        raise DomainError(f"fraction must lie in (0, 1): got {fraction!r}")
    if not (isinstance(x0, (int, float)) and 0.0 <= x0 <= 1.0):
        raise DomainError(f"x0 must lie in [0, 1]: got {x0!r}")
    target_x = stationary_fraction(rates)
    gap0 = abs(x0 - target_x)
    if gap0 == 0.0:
        return 0
    threshold = (1.0 - fraction) * gap0
    x = float(x0)
    for t in range(1, _MAX_CLOSURE_ITER + 1):
        x = x * (1.0 - rates.p_ei) + (1.0 - x) * rates.p_ie
        if abs(x - target_x) <= threshold:
            return t
    raise ConvergenceError(
        f"gap not {fraction:.0%} closed within {_MAX_CLOSURE_ITER} periods"
    )


def _frivolous_period_counts(stream: FrivolousStream | None) -> tuple[int, int, int]:
    """Per-period (filings, settlements, drops) of the nuisance stream.

    The filing game is deterministic, so the stream contributes constant
    counts; defaulted filings show up in filings only.
    """
    if stream is None or stream.filers_per_period == 0:
        return 0, 0, 0
    outcome = play(PlaintiffType.FRIVOLOUS, stream.game, stream.belief)
    if not outcome.filed:
        return 0, 0, 0
    n = stream.filers_per_period
    settled = n if outcome.defendant_action is DefendantAction.SETTLE else 0
    dropped = n if outcome.plaintiff_followup is FollowUp.DROP else 0
    return n, settled, dropped


def simulate(
    area: LegalArea,
    population: RulePopulation,
    periods: int,
    shock: AiShock = AiShock(),
    cost_delta: float = 0.0,
    seed: int = 0,
    frivolous: FrivolousStream | None = None,
    tolerance: float = 1e-9,
) -> EvolutionTrace:
    """Run the population of rule chains for `periods` periods.

    All draws are materialized up front (24 bytes per rule-period), three
    uniforms per rule per period in the order dispute / belief / flip.
    """
    if not isinstance(periods, int) or periods < 1:
        raise DomainError(f"periods must be an integer >= 1: got {periods!r}")
    _cost_delta_ok(area, cost_delta)
    rate = effective_dispute_rate(area, shock, tolerance)
    n = population.n_rules

    efficient = np.zeros(n, dtype=bool)
    efficient[: population.initial_efficient_count] = True

    draws = np.empty((periods, 3, n))
    for i in range(n):
        draws[:, :, i] = substream(seed, i).random((periods, 3))

    friv_filed, friv_settled, friv_dropped = _frivolous_period_counts(frivolous)

    t_col = np.arange(periods + 1, dtype=np.int64)
    fraction = np.empty(periods + 1)
    counts = {
        name: np.zeros(periods + 1, dtype=np.int64)
        for name in ("disputes", "settlements", "trials")
    }
    fraction[0] = int(efficient.sum()) / n

    c_q = area.cost_q - cost_delta
    c_g = area.cost_g - cost_delta
    stakes_eff = area.stakes_j
    stakes_ineff = area.stakes_j * area.stakes_multiplier
    q_ie, q_ei = area.q_ie, area.q_ei

    for t in range(periods):
        u_dispute, u_belief, u_flip = draws[t, 0], draws[t, 1], draws[t, 2]
        disputed = u_dispute < rate
        eps = (2.0 * u_belief - 1.0) * area.belief_spread
        p_q = np.clip(area.belief_center + eps, 0.0, 1.0)
        p_g = np.clip(area.belief_center - eps, 0.0, 1.0)
        stakes = np.where(efficient, stakes_eff, stakes_ineff)
        lower, upper = _bounds(p_q, p_g, stakes, c_q, c_g, area.fee_rule)
        width = upper - lower
        trial = disputed & (width < 0.0)
        q = np.where(efficient, q_ei, q_ie)
        flip = trial & (u_flip < q)
        efficient = efficient ^ flip

        row = t + 1
        n_disputes = int(disputed.sum())
        n_trials = int(trial.sum())
        counts["disputes"][row] = n_disputes
        counts["trials"][row] = n_trials
        counts["settlements"][row] = n_disputes - n_trials
        fraction[row] = int(efficient.sum()) / n

    friv = {
        name: np.full(periods + 1, value, dtype=np.int64)
        for name, value in (
            ("frivolous_filings", friv_filed),
            ("frivolous_settlements", friv_settled),
            ("frivolous_drops", friv_dropped),
        )
    }
    for arr in friv.values():
        arr[0] = 0

    return EvolutionTrace(
        area_name=area.name,
        seed=seed,
        n_rules=n,
        t=t_col,
        fraction_efficient=fraction,
        disputes=counts["disputes"],
        settlements=counts["settlements"],
        trials=counts["trials"],
        frivolous_filings=friv["frivolous_filings"],
        frivolous_settlements=friv["frivolous_settlements"],
        frivolous_drops=friv["frivolous_drops"],
    )
