"""Platform divergence as insurance, on one policy dimension.

Two identical parties compete for a two-type electorate. With linear
returns to power both would converge on the median; with concave returns
the trailing party values marginal voters more than the leading one, and
the unique equilibrium splits the platforms around the median. The payoff
gain over the coin-flip outcome is exactly the squared platform distance
over twice the shock width: separation buys insurance against the
popularity shock.
"""

import numpy as np

import polcomp as pc

dist = pc.VoterDistribution([0.0, 1.0], [0.5, 0.5], ["left", "right"])
nu = pc.payoff_preset("quadratic")          # power utility 2r - r^2, proportional power
shock = pc.Shock(1.0)

print("Electorate: types at 0 and 1, equal shares; shock half-width 1.")
print(f"Reduced payoff nu(s) = 2s - s^2, so nu(1/2) = {nu(0.5):.3f}: an even split")
print("is worth 0.75, well above the 0.5 coin-flip average of the extremes.\n")

eq = pc.equilibrium_1d(dist, nu, shock)
print(f"Equilibrium platforms: {eq.x_low:.4f} and {eq.x_high:.4f}")
print(f"Median voter: {eq.median:.4f}; risk-neutral benchmark: {eq.x_risk_neutral:.4f}")
print(f"Common equilibrium payoff: {eq.payoff:.4f}"
      f" = 0.5 + distance^2 / (2 phi) = 0.5 + {eq.distance:.2f}^2 / 2\n")

# the closed form agrees with the exact integrator and a Monte-Carlo check
exact = pc.expected_payoff(dist, nu, shock, eq.pair, "A")
mc = pc.monte_carlo_payoff(dist, nu, shock, eq.pair, "A", n_draws=500_000, seed=1)
print(f"Exact integrator: {exact:.6f}; Monte Carlo (5e5 draws): {mc:.6f}\n")

print("Convergence is not an equilibrium: against an opponent at the median,")
mid = eq.median
for x in (mid, 0.6, eq.x_high):
    v = pc.expected_payoff(dist, nu, shock, pc.PlatformPair([x], [mid]), "A")
    print(f"  platform {x:.2f} vs opponent at {mid:.2f}: expected payoff {v:.4f}")
print()

print("Who does each party want to court or repel (attract/alienate)?")
for i, label in enumerate(dist.labels):
    a = pc.classify_group(dist, nu, shock, i, "A").value
    b = pc.classify_group(dist, nu, shock, i, "B").value
    grad = pc.payoff_gradient(dist, nu, shock, i)
    print(f"  {label:>5}: party A {a:>9}, party B {b:>9}; "
          f"d(payoff)/d(bliss) = {grad:+.3f}")
print()

print("Polarization pays: spreading the types outward raises both payoffs.")
base = dist
for amount in (0.25, 0.5):
    cand = pc.VoterDistribution([0.0 - amount, 1.0 + amount], [0.5, 0.5])
    wide = pc.Shock(float((1 + 2 * amount) ** 2) + 0.5)
    cmp = pc.compare_spread_payoffs(base, cand, nu, wide)
    print(f"  outward shift {amount:.2f}: distance {cmp.base_distance:.3f} -> "
          f"{cmp.candidate_distance:.3f}, payoff {cmp.base_payoff:.4f} -> "
          f"{cmp.candidate_payoff:.4f}")
