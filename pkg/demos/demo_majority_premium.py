"""Majority premium as an institutional lever against polarization.

The implemented policy is the power-weighted compromise between the two
platforms, so voters bear both bias (mean policy away from the utilitarian
optimum) and variance (policy swinging with the shock). Raising the
majority premium concentrates equilibrium weight on the median type:
platforms converge, variance dies out, and welfare approaches first-best
less the squared median-to-optimum gap.
"""

import polcomp as pc

u = pc.utility_preset("quadratic")
shock = pc.Shock(5.0)

print("Symmetric electorate {-1: 0.3, 0: 0.4, +1: 0.3} (median = optimum = 0):")
dist = pc.VoterDistribution([-1.0, 0.0, 1.0], [0.3, 0.4, 0.3])
sweep = pc.premium_sweep(dist, u, 1.0, [0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 1 - 1e-6],
                         shock)
print(f"{'premium':>8} {'x_low':>9} {'x_high':>9} {'variance':>10} "
      f"{'bias^2':>10} {'welfare':>10}")
for row in sweep.rows:
    print(f"{row.rho_m:>8.4f} {row.x_low:>9.5f} {row.x_high:>9.5f} "
          f"{row.variance:>10.3e} {row.bias_sq:>10.3e} {row.welfare:>10.6f}")
first_best = -0.6
print(f"first-best welfare: {first_best:.6f}; the maximal premium attains it.\n")

print("Asymmetric electorate {-1: 0.2, 0: 0.5, +1: 0.3} (optimum 0.1, median 0):")
skew = pc.VoterDistribution([-1.0, 0.0, 1.0], [0.2, 0.5, 0.3])
sweep = pc.premium_sweep(skew, u, 1.0, [0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 1 - 1e-6],
                         shock)
print(f"{'premium':>8} {'variance':>10} {'bias^2':>10} {'welfare':>10}")
best = max(sweep.rows, key=lambda r: r.welfare)
for row in sweep.rows:
    marker = "  <- best on this grid" if row is best else ""
    print(f"{row.rho_m:>8.4f} {row.variance:>10.3e} {row.bias_sq:>10.3e} "
          f"{row.welfare:>10.6f}{marker}")
print("\nKilling variance now costs bias: the mean policy is pinned to the median,")
print("0.1 away from the optimum, so the best premium can be interior.")

print("\nThe welfare split at the proportional equilibrium (premium 0):")
nu = pc.payoff_preset("quadratic")
eq = pc.equilibrium_1d(skew, nu, shock)
lottery = pc.policy_lottery(eq.pair, skew, pc.proportional_power(), shock)
report = pc.welfare_decomposition(lottery, skew)
print(f"  implemented-policy support: {[round(float(x), 4) for x in lottery.outcomes]}")
print(f"  probabilities:              {[round(float(p), 4) for p in lottery.probabilities]}")
print(f"  welfare {report.welfare:.6f} = first-best {report.first_best:.6f}"
      f" - bias^2 {report.bias_sq:.6f} - variance {report.variance:.6f}")
