"""Selective information provision: divisive issues in, common issues out.

Two issues, one contested and one common-interest. Parties converge on the
common issue whatever anyone believes about it, so informing voters there
moves welfare but not party payoffs. On the contested issue, platform
separation scales with how confidently voters sort into sides, so parties
gain from resolving who-stands-where even though the sharper divide is
welfare-detrimental.
"""

import numpy as np

import polcomp as pc

nu = pc.payoff_preset("quadratic")
gamma = pc.separation_coefficient(nu)

print("Contested-issue platforms as the posterior hardens (salience 0.6):")
print(f"{'posterior':>10} {'x_high':>8} {'x_low':>8} {'separation':>11}")
for post in (0.5, 0.6, 0.75, 0.9, 1.0):
    scen = pc.InfoScenario(salience=0.6, prior_common=0.5, prior_conflict=0.5,
                           posterior_conflict=post)
    p = pc.information_platforms(scen, nu)
    print(f"{post:>10.2f} {p.x_high:>8.4f} {p.x_low:>8.4f} {p.separation:>11.4f}")
print(f"separation = {gamma:.2f} * (2 * posterior - 1) throughout\n")

print("Party payoff rises with salience of the contested issue:")
voters = pc.VoterDistribution([0.0, 1.0], [0.5, 0.5])
shock = pc.Shock(1.0)
for salience in (0.2, 0.6, 1.0):
    v = pc.conflict_issue_payoff(voters, nu, shock, salience)
    print(f"  salience {salience:.1f}: payoff {v:.4f}")
print()

print("Welfare value of revealing the common-interest optimum (prior 0.5):")
for salience in (0.2, 0.6, 0.9):
    gain = pc.common_interest_welfare_gain(salience, 0.5)
    print(f"  salience {salience:.1f} on the contested issue: +{gain:.4f} per voter")
print("Parties capture none of this, so they have no reason to provide it;")
print("revealing the contested state maximizes |separation|, so they do that")
print("even though policy risk for voters rises with the divide.")
