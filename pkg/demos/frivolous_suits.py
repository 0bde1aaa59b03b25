"""
Nuisance suits: filed to be paid off, never to be tried
=======================================================

A frivolous claim loses at trial, so its only value is the defendant's cost
of making it go away. We play the filing game for both plaintiff types and
then move the costs to see the extraction region widen.
"""

from lexsim import (
    FrivolousConfig,
    PlaintiffType,
    filing_region_shift,
    play,
)

# filing costs 1, defending costs 10, the demand is 5, trial stakes 100
config = FrivolousConfig(f_o=1.0, f_q=1.0, d=10.0, s=5.0, j=100.0, c_p=10.0)

print("nuisance configuration: file 1, defend 10, demand 5, stakes 100")
print()
for ptype in (PlaintiffType.FRIVOLOUS, PlaintiffType.MERITORIOUS):
    outcome = play(ptype, config)
    print(f"{ptype.value} plaintiff")
    print(f"  files: {outcome.filed}")
    print(f"  defendant: {outcome.defendant_action.value}, "
          f"follow-up: {outcome.plaintiff_followup.value}")
    print(f"  payoffs: plaintiff {outcome.plaintiff_payoff:+.2f}, "
          f"defendant {outcome.defendant_payoff:+.2f}")
print()
print("the frivolous claim settles for 5 because defending costs 10; the")
print("threat is the defense bill, not the merits.")
print()

# raise the demand past the defense cost and the threat collapses
greedy = FrivolousConfig(f_o=1.0, f_q=1.0, d=10.0, s=20.0, j=100.0, c_p=10.0)
outcome = play(PlaintiffType.FRIVOLOUS, greedy)
print(f"demand 20 instead: files = {outcome.filed} (defending at 10 beats paying 20,")
print("so filing would only burn the filing fee; the claim is deterred)")
print()

# cheaper filing versus cheaper defense moves the extraction wedge
for delta_f, delta_d, note in (
    (0.5, 0.0, "filing gets cheaper"),
    (0.0, 5.0, "defending gets cheaper"),
    (0.5, 0.5, "both drop equally"),
):
    shift = filing_region_shift(config, delta_f, delta_d)
    print(f"  cut filing by {delta_f}, defense by {delta_d}: {shift.value:14s} ({note})")
print()
print("automation that lowers filing costs more than defense costs invites")
print("more extraction; symmetric drops leave the wedge alone.")
