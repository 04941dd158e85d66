"""Shared test utilities: independent oracles and instance generators."""

import numpy as np

import polcomp as pc


def grid_best_response(dist, nu, shock, opponent, n_points=10_000):
    """Brute-force best platform against a fixed opponent on a 1-D grid.

    Independent of the closed-form weights: scans expected_payoff over a
    uniform grid spanning the bliss range.
    """
    lo = float(dist.bliss[:, 0].min())
    hi = float(dist.bliss[:, 0].max())
    xs = np.linspace(lo, hi, n_points)
    best_x, best_v = xs[0], -np.inf
    for x in xs:
        v = pc.expected_payoff(dist, nu, shock, pc.PlatformPair([x], [opponent]), "A")
        if v > best_v:
            best_x, best_v = float(x), v
    return best_x, best_v


def grid_equilibrium_1d(dist, nu, shock, n_points=10_000, iters=8):
    """Fixed point of alternating grid best responses (high side, low side)."""
    lo = float(dist.bliss[:, 0].min())
    hi = float(dist.bliss[:, 0].max())
    x_hi, x_lo = hi, lo
    for _ in range(iters):
        new_hi, _ = grid_best_response(dist, nu, shock, x_lo, n_points)
        new_lo, _ = grid_best_response(dist, nu, shock, new_hi, n_points)
        if abs(new_hi - x_hi) < 1e-12 and abs(new_lo - x_lo) < 1e-12:
            x_hi, x_lo = new_hi, new_lo
            break
        x_hi, x_lo = new_hi, new_lo
    return x_lo, x_hi


def central_difference(f, x, h=1e-5):
    return (f(x + h) - f(x - h)) / (2.0 * h)


def shock_for(dist, margin=1.0):
    """Shock wide enough to cover every achievable preference gap."""
    hi = dist.bliss.max(axis=0)
    lo = dist.bliss.min(axis=0)
    return pc.Shock(float(np.sum((hi - lo) ** 2)) + margin)


def random_diverse_instance(rng, n_types=None, dim=1, scale=1.0):
    """Random electorate with well-separated types and interior shares."""
    if n_types is None:
        n_types = int(rng.integers(2, 7))
    while True:
        bliss = rng.uniform(-scale, scale, size=(n_types, dim))
        diffs = bliss[:, None, :] - bliss[None, :, :]
        dist_mat = np.sqrt(np.sum(diffs**2, axis=2))
        np.fill_diagonal(dist_mat, np.inf)
        if dist_mat.min() > 0.05 * scale:
            break
    shares = rng.uniform(0.5, 1.5, size=n_types)
    shares = shares / shares.sum()
    return pc.VoterDistribution(bliss, shares)


def random_symmetric_instance(rng, n_pairs=None, dim=2, center_type=False, scale=1.0):
    """Random electorate symmetric through its mean bliss point."""
    if n_pairs is None:
        n_pairs = int(rng.integers(1, 4))
    center = rng.uniform(-0.5, 0.5, size=dim)
    while True:
        offsets = rng.uniform(0.1, scale, size=(n_pairs, dim))
        offsets *= rng.choice([-1.0, 1.0], size=(n_pairs, dim))
        pts = np.vstack([center + offsets, center - offsets])
        diffs = pts[:, None, :] - pts[None, :, :]
        dist_mat = np.sqrt(np.sum(diffs**2, axis=2))
        np.fill_diagonal(dist_mat, np.inf)
        if dist_mat.min() > 0.05 * scale:
            break
    pair_shares = rng.uniform(0.5, 1.5, size=n_pairs)
    if center_type:
        total = pair_shares.sum() * rng.uniform(1.1, 1.6)
        center_share = 1.0 - pair_shares.sum() / total
        pair_shares = pair_shares / total
        pts = np.vstack([pts, center])
        shares = np.concatenate([pair_shares / 2.0, pair_shares / 2.0, [center_share]])
    else:
        pair_shares = pair_shares / pair_shares.sum()
        shares = np.concatenate([pair_shares / 2.0, pair_shares / 2.0])
    return pc.VoterDistribution(pts, shares)


def outward_spread(dist, amount):
    """Shift every type away from the median by ``amount`` (1-D helper)."""
    median, _ = pc.median_bliss(dist)
    x = dist.bliss[:, 0]
    shift = np.where(x > median, amount, np.where(x < median, -amount, 0.0))
    return pc.VoterDistribution((x + shift).reshape(-1, 1), dist.shares, dist.labels)


def outward_directional_spread(dist, direction, amount):
    """Translate every type outward along a direction by the sign of its projection."""
    d = np.asarray(direction, dtype=float)
    unit = d / np.linalg.norm(d)
    proj = dist.bliss @ unit
    center = float(dist.shares @ proj)
    signs = np.sign(proj - center)
    return pc.VoterDistribution(dist.bliss + amount * signs[:, None] * unit[None, :],
                                dist.shares, dist.labels)
