"""Party identity and the self-reinforcing polarization loop.

Activating partisan identity pulls each voter toward the platform of the
nearer party, which spreads the electorate along the party-difference
direction, which lets the parties separate further, which strengthens the
next round of identity shifts. When the per-period communication cost
clears the amplification threshold, investment is a best response every
period and both gaps grow geometrically.
"""

import numpy as np

import polcomp as pc

nu = pc.payoff_preset("quadratic")
gamma = pc.separation_coefficient(nu)
print(f"Separation coefficient of the payoff: {gamma:.3f}")
print("(two-type platform gap per unit of voter disagreement)\n")

print("One identity shift on two dimensions:")
dist = pc.VoterDistribution([[0.0, 0.0], [1.0, 1.0]], [0.5, 0.5])
shock = pc.Shock(4.5)
report = pc.party_preferred_equilibria(dist, nu, shock)
ref = report.party_preferred[0].pair
shifted, unmoved = pc.identity_adjusted_distribution(dist, ref, strength=0.4)
print(f"  platforms {np.round(ref.x_a, 3)} vs {np.round(ref.x_b, 3)}")
print(f"  voters move to {np.round(shifted.bliss, 3).tolist()} (unmoved: {unmoved})")
direction = ref.x_a - ref.x_b
cmp = pc.compare_directional_spread_payoffs(dist, shifted, nu, shock)
print(f"  a spread along the party direction: "
      f"{pc.is_directional_spread(dist, shifted, direction)}")
print(f"  preferred payoff {cmp.base_payoff:.4f} -> {cmp.candidate_payoff:.4f}\n")

params = pc.FeedbackParams(gap=1.0, theta_high=0.4, theta_low=0.2, cost=0.01,
                           half_width=1.0, separation=gamma, horizon=6)
print(f"Repeated elections, identity strength {params.theta_high} when both invest:")
print(f"  self-reinforcing investment: {pc.is_self_reinforcing(params)}")
traj = pc.polarization_feedback_trajectory(params)
print(f"  regime: {traj.regime} (growth ratio {params.growth_ratio:.2f}); "
      f"limit gap {traj.limit_gap:.4f}")
print(f"  {'t':>3} {'voter gap':>10} {'platform gap':>13} {'geometric sum':>14}")
for r in traj.records:
    print(f"  {r.period:>3} {r.voter_gap:>10.5f} {r.platform_gap:>13.5f} "
          f"{r.closed_form_gap:>14.5f}")

print("\nPast the knife edge the loop diverges:")
hot = pc.FeedbackParams(gap=1.0, theta_high=1.2, theta_low=0.6, cost=0.01,
                        half_width=1.0, separation=gamma, horizon=6)
hot_traj = pc.polarization_feedback_trajectory(hot)
print(f"  growth ratio {hot.growth_ratio:.2f} ({hot_traj.regime}); platform gaps "
      f"{[round(float(g), 2) for g in hot_traj.platform_gaps]}")
