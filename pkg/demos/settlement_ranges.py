"""
Settlement ranges, fee rules, and what cheaper lawyers do to them
=================================================================

A dispute settles when there is a price both sides prefer to trial. This
script prints that bargaining window under each fee rule and then shrinks
litigation costs to show the window closing.
"""

from lexsim import Dispute, FeeRule, apply_cost_reduction, decide, settlement_range, shrink_ratio

# mutual optimism: the plaintiff thinks she wins 60% of the time, the
# defendant concedes only 50%
dispute = Dispute(p_q=0.6, p_g=0.5, j=100.0, c_q=10.0, c_g=10.0)

print("dispute: stakes 100, costs 10 each, beliefs 0.6 vs 0.5")
print()
for rule in (FeeRule.AMERICAN, FeeRule.ENGLISH):
    rng = settlement_range(dispute, rule)
    outcome = decide(dispute, rule)
    print(f"{rule.value} rule")
    print(f"  plaintiff will accept at least {rng.lower:.2f}")
    print(f"  defendant will pay at most    {rng.upper:.2f}")
    print(f"  window width {rng.width:.2f} -> {outcome.kind.value}", end="")
    if outcome.amount is not None:
        print(f" at {outcome.amount:.2f}")
    else:
        print()
print()

# now cut each side's cost by 5: the surplus that held the window open
reduced = apply_cost_reduction(dispute, 5.0)
print("after a cost reduction of 5 per side")
for rule in (FeeRule.AMERICAN, FeeRule.ENGLISH):
    before = settlement_range(dispute, rule).width
    after = settlement_range(reduced, rule).width
    outcome = decide(reduced, rule)
    print(f"  {rule.value:8s} width {before:5.2f} -> {after:5.2f}  ({outcome.kind.value})")
print()

# the English window shrinks faster whenever the parties are jointly
# optimistic; the ratio below is the American shrinkage per unit of English
ratio = shrink_ratio(dispute)
print(f"shrinkage ratio (American per English) = {ratio:.6f}")
print("under optimism the loser-pays rule tips disputes into trial first.")
