"""
A flat cost cut is not neutral: docket composition after cheap lawyering
========================================================================

Subtracting the same dollar amount from every kind of case changes relative
prices: cheap case types get relatively much cheaper and expand their share
of the docket.
"""

from lexsim import AreaShare, relative_price_change, shift_composition

# filing shares with two cheap high-volume areas and one expensive one
docket = [
    AreaShare("civil", share=0.51, unit_cost=10.0, demand_elasticity=1.0),
    AreaShare("contract", share=0.17, unit_cost=10.0, demand_elasticity=1.0),
    AreaShare("tort", share=0.02, unit_cost=30.0, demand_elasticity=1.0),
]
reduction = 5.0

print(f"flat cost reduction: {reduction}")
print()
print("relative price declines (cut / unit cost)")
for name, decline in relative_price_change(docket, reduction):
    print(f"  {name:10s} {decline:6.1%}")
print()

print("docket shares before and after")
print(f"  {'area':10s} {'before':>8s} {'after':>8s} {'swing':>9s}")
for shift in shift_composition(docket, reduction):
    swing = shift.new_share - shift.old_share
    print(f"  {shift.name:10s} {shift.old_share:8.4f} {shift.new_share:8.4f} {swing:+9.5f}")
print()
print("the same 5-dollar cut is half the price of a civil filing but only a")
print("sixth of a tort case, so the docket tilts toward the cheap areas and")
print("the expensive area's share falls even though its absolute cost fell.")
