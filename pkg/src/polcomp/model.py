"""Primitive model objects and expected-payoff evaluators.

The electorate is a finite list of voter types, each a bliss-point vector
with a population share. Voters compare two announced platforms under
quadratic policy loss, an aggregate uniform popularity shock tips the
comparison, and each party's payoff is a reduced function of its realized
vote share. Everything downstream (closed-form equilibria, enumeration,
welfare) consumes the evaluators defined here.

All objects are immutable after construction and all functions are pure;
``monte_carlo_payoff`` is deterministic given its seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, PreconditionError

SHARE_SUM_TOL = 1e-12
TIE_TOL = 1e-9


def _as_matrix(bliss) -> np.ndarray:
    pts = np.asarray(bliss, dtype=float)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if pts.ndim != 2:
        raise PreconditionError(f"bliss points must form an (N, K) array, got shape {pts.shape}")
    return pts


class VoterDistribution:
    """Finite electorate: bliss points (N, K), shares (N,), optional labels.

    Shares must sum to one and bliss points must be pairwise distinct.
    One-dimensional inputs may be passed as a flat list of scalars.
    """

    def __init__(self, bliss, shares, labels=None):
        pts = _as_matrix(bliss)
        shr = np.asarray(shares, dtype=float)
        if shr.ndim != 1 or shr.shape[0] != pts.shape[0]:
            raise PreconditionError("shares must be a vector with one entry per type")
        if pts.shape[0] < 1 or pts.shape[1] < 1:
            raise PreconditionError("need at least one type and one policy dimension")
        if np.any(shr <= 0.0) or np.any(shr > 1.0):
            raise PreconditionError("every share must lie in (0, 1]")
        if abs(shr.sum() - 1.0) > SHARE_SUM_TOL:
            raise PreconditionError(f"shares sum to {shr.sum():.17g}, expected 1")
        for i in range(pts.shape[0]):
            for j in range(i + 1, pts.shape[0]):
                if np.array_equal(pts[i], pts[j]):
                    raise PreconditionError(f"bliss points of types {i} and {j} coincide")
        if labels is None:
            labels = tuple(f"type{i}" for i in range(pts.shape[0]))
        else:
            labels = tuple(str(l) for l in labels)
            if len(labels) != pts.shape[0]:
                raise PreconditionError("labels must match the number of types")
        self.bliss = pts
        self.shares = shr
        self.labels = labels
        self.bliss.setflags(write=False)
        self.shares.setflags(write=False)

    @property
    def n_types(self) -> int:
        return self.bliss.shape[0]

    @property
    def dimension(self) -> int:
        return self.bliss.shape[1]

    def translate(self, offset) -> "VoterDistribution":
        off = np.asarray(offset, dtype=float).reshape(self.dimension)
        return VoterDistribution(self.bliss + off, self.shares, self.labels)

    def sorted_1d(self) -> "VoterDistribution":
        """Ascending-bliss copy of a one-dimensional electorate."""
        if self.dimension != 1:
            raise DimensionError("sorted_1d requires a one-dimensional electorate")
        order = np.argsort(self.bliss[:, 0], kind="stable")
        return VoterDistribution(self.bliss[order], self.shares[order],
                                 tuple(self.labels[i] for i in order))

    def ascending_order(self) -> np.ndarray:
        if self.dimension != 1:
            raise DimensionError("ascending_order requires a one-dimensional electorate")
        return np.argsort(self.bliss[:, 0], kind="stable")

    def mean_bliss(self) -> np.ndarray:
        return self.shares @ self.bliss

    def __repr__(self):
        return f"VoterDistribution(n_types={self.n_types}, dimension={self.dimension})"


@dataclass(frozen=True)
class Shock:
    """Uniform popularity shock on [-half_width, half_width]."""

    half_width: float

    def __post_init__(self):
        if not self.half_width > 0.0:
            raise PreconditionError("shock half-width must be positive")

    @property
    def density_at_zero(self) -> float:
        return 1.0 / (2.0 * self.half_width)

    def cdf(self, value):
        out = np.clip(0.5 + np.asarray(value, dtype=float) / (2.0 * self.half_width),
                      0.0, 1.0)
        return out if out.shape else float(out)


class PlatformPair:
    """Two announced platforms of equal dimension (party A first)."""

    def __init__(self, x_a, x_b):
        a = np.atleast_1d(np.asarray(x_a, dtype=float))
        b = np.atleast_1d(np.asarray(x_b, dtype=float))
        if a.ndim != 1 or b.ndim != 1 or a.shape != b.shape:
            raise DimensionError("platforms must be vectors of equal length")
        self.x_a = a
        self.x_b = b
        self.x_a.setflags(write=False)
        self.x_b.setflags(write=False)

    @property
    def dimension(self) -> int:
        return self.x_a.shape[0]

    @property
    def sq_distance(self) -> float:
        return float(np.sum((self.x_a - self.x_b) ** 2))

    def swapped(self) -> "PlatformPair":
        return PlatformPair(self.x_b, self.x_a)

    def __repr__(self):
        return f"PlatformPair(x_a={self.x_a.tolist()}, x_b={self.x_b.tolist()})"


def as_pair(pair) -> PlatformPair:
    """Coerce (x_a, x_b) tuples into a PlatformPair."""
    if isinstance(pair, PlatformPair):
        return pair
    x_a, x_b = pair
    return PlatformPair(x_a, x_b)


_GRID = np.linspace(0.0, 1.0, 1001)
_FD_STEP = 1e-4


class PowerMap:
    """Mapping from vote share to political power.

    Strictly increasing and constant-sum: rho(s) + rho(1 - s) == total.
    A jump of size ``jump`` at s = 1/2 models a majority premium; the
    one-sided limits there are kept explicitly so payoff increments across
    the threshold stay unambiguous.
    """

    def __init__(self, total, func, jump=0.0, half_lower=None, half_upper=None,
                 description="custom", validate=True):
        if not total > 0.0:
            raise PreconditionError("total power must be positive")
        self.total = float(total)
        self._func = func
        self.jump = float(jump)
        mid = float(func(np.asarray(0.5)))
        self.half_lower = mid if half_lower is None else float(half_lower)
        self.half_upper = mid if half_upper is None else float(half_upper)
        self.description = description
        if validate:
            self._validate()

    def _validate(self):
        vals = self.evaluate(_GRID)
        diffs = np.diff(vals)
        if np.any(diffs <= 0.0):
            raise PreconditionError("power map must be strictly increasing in vote share")
        csum = vals + vals[::-1]
        if np.max(np.abs(csum - self.total)) > 1e-10:
            raise PreconditionError("power map violates the constant-sum requirement")
        if vals[0] < -1e-12 or vals[-1] > self.total + 1e-12:
            raise PreconditionError("power map must take values in [0, total]")

    def evaluate(self, share):
        s = np.clip(np.asarray(share, dtype=float), 0.0, 1.0)
        out = np.asarray(self._func(s), dtype=float)
        return out if out.shape else float(out)

    __call__ = evaluate


class PowerUtility:
    """Party utility over political power: strictly increasing, strictly concave.

    Verified by central finite differences on a grid over [0, total].
    """

    def __init__(self, func, total=1.0, description="custom", validate=True):
        if not total > 0.0:
            raise PreconditionError("total power must be positive")
        self._func = func
        self.total = float(total)
        self.description = description
        if validate:
            self._validate()

    def _validate(self):
        h = _FD_STEP * self.total
        pts = np.linspace(h, self.total - h, 999)
        up = self.evaluate(pts + h)
        mid = self.evaluate(pts)
        dn = self.evaluate(pts - h)
        first = (up - dn) / (2.0 * h)
        second = (up - 2.0 * mid + dn) / (h * h)
        if np.any(first <= 0.0):
            raise PreconditionError("power utility must be strictly increasing")
        if np.any(second >= 0.0):
            raise PreconditionError("power utility must be strictly concave")

    def evaluate(self, power):
        out = np.asarray(self._func(np.asarray(power, dtype=float)), dtype=float)
        return out if out.shape else float(out)

    __call__ = evaluate


class ReducedPayoff:
    """Map from a party's vote share to its payoff, with diagnostics.

    Constructed either directly from a callable or by composing a
    PowerUtility with a PowerMap (see payoffs.compose_reduced_payoff).
    When ``normalize`` is set the payoff is affinely rescaled so that the
    full swing from losing every voter to winning every voter is worth
    exactly one unit.

    Diagnostics recorded on construction (never raised here):

    - ``minority_gain_strict``: winning extra support is strictly more
      valuable to the trailing party than to the leading one, checked on
      grid pairs below/above one half. For a payoff with a jump at 1/2 the
      check near the threshold is recorded one-sidedly in
      ``minority_gain_at_half``.
    - ``strictly_concave``: continuous with strictly negative second
      differences on the grid; required by the multidimensional machinery.
    """

    def __init__(self, func, *, normalize=True, provenance="direct", power_map=None,
                 half_lower_raw=None, half_upper_raw=None, assume_monotone=False):
        raw0 = float(func(np.asarray(0.0)))
        raw1 = float(func(np.asarray(1.0)))
        span = raw1 - raw0
        if normalize:
            if span <= 0.0:
                raise PreconditionError("cannot normalize: payoff span over [0, 1] is not positive")
            self._offset, self._scale = raw0, span
        else:
            self._offset, self._scale = 0.0, 1.0
        self._func = func
        self.normalized = bool(normalize)
        self.provenance = provenance
        self.power_map = power_map

        vals = self.evaluate(_GRID)
        diffs = np.diff(vals)
        if assume_monotone:
            # strictness already guaranteed by the validated factors; the grid
            # only guards against float-level decreases (values can plateau
            # where increments fall below machine resolution)
            if np.any(diffs < -1e-15) or vals[-1] <= vals[0]:
                raise PreconditionError("reduced payoff decreases on the validation grid")
        elif np.any(diffs <= 0.0):
            raise PreconditionError("reduced payoff must be strictly increasing in vote share")
        self.value_at_zero = float(vals[0])
        self.value_at_one = float(vals[-1])
        self.value_at_half = float(self.evaluate(0.5))

        def _norm(v):
            return (float(v) - self._offset) / self._scale

        if half_lower_raw is not None or half_upper_raw is not None:
            self.half_lower = _norm(half_lower_raw if half_lower_raw is not None else self.value_at_half)
            self.half_upper = _norm(half_upper_raw if half_upper_raw is not None else self.value_at_half)
        else:
            self.half_lower = self.value_at_half
            self.half_upper = self.value_at_half
        self.jump = self.half_upper - self.half_lower
        self.has_jump = self.jump > 1e-15

        second = vals[:-2] - 2.0 * vals[1:-1] + vals[2:]
        self.strictly_concave = (not self.has_jump) and bool(np.all(second < 0.0))

        # gain asymmetry: nu(s) + nu(1 - s) strictly increasing on [0, 1/2]
        half = vals[: len(_GRID) // 2 + 1]          # grid points in [0, 0.5]
        mirror = vals[len(_GRID) // 2:][::-1]        # nu(1 - s) on the same points
        gain = half + mirror
        interior = np.diff(gain[:-1])                # pairs strictly below 0.5
        self.minority_gain_strict = bool(np.all(interior > 0.0))
        if self.has_jump:
            s_last = _GRID[len(_GRID) // 2 - 1]
            base = float(self.evaluate(s_last) + self.evaluate(1.0 - s_last))
            lower_ok = self.half_lower * 2.0 > base
            upper_ok = self.half_upper * 2.0 > base
            self.minority_gain_at_half = (bool(lower_ok), bool(upper_ok))
            self.minority_gain_strict = self.minority_gain_strict and lower_ok and upper_ok
        else:
            edge_ok = bool(gain[-1] - gain[-2] > 0.0)
            self.minority_gain_at_half = (edge_ok, edge_ok)
            self.minority_gain_strict = self.minority_gain_strict and edge_ok

    @property
    def span(self) -> float:
        return self.value_at_one - self.value_at_zero

    def evaluate(self, share):
        s = np.clip(np.asarray(share, dtype=float), 0.0, 1.0)
        out = (np.asarray(self._func(s), dtype=float) - self._offset) / self._scale
        return out if out.shape else float(out)

    __call__ = evaluate

    def require_normalized(self):
        if abs(self.span - 1.0) > 1e-12:
            raise PreconditionError("operation requires a payoff normalized to unit span")

    def require_strictly_concave(self):
        if not self.strictly_concave:
            raise PreconditionError("operation requires a strictly concave reduced payoff")


def preference_gap(pair, bliss) -> float:
    """Utility advantage of platform A over platform B for a voter at ``bliss``.

    Quadratic loss: ||x_b - bliss||^2 - ||x_a - bliss||^2. Positive values
    mean the voter leans toward party A.
    """
    p = as_pair(pair)
    b = np.atleast_1d(np.asarray(bliss, dtype=float))
    if b.shape != p.x_a.shape:
        raise DimensionError(f"bliss point has dimension {b.shape[0]}, platforms {p.dimension}")
    return float(np.sum((p.x_b - b) ** 2) - np.sum((p.x_a - b) ** 2))


def preference_gaps(pair, dist: VoterDistribution) -> np.ndarray:
    """Vectorized preference_gap over every type in the electorate."""
    p = as_pair(pair)
    if dist.dimension != p.dimension:
        raise DimensionError("electorate and platforms disagree on dimension")
    d_b = np.sum((dist.bliss - p.x_b) ** 2, axis=1)
    d_a = np.sum((dist.bliss - p.x_a) ** 2, axis=1)
    return d_b - d_a


def vote_probability(gap, shock: Shock):
    """Probability a voter with the given preference gap votes for party A."""
    return shock.cdf(gap)


@dataclass(frozen=True)
class ShockSupportReport:
    ok: bool
    extreme_gap: float
    bound: float
    message: str


def check_shock_support(dist: VoterDistribution, shock: Shock) -> ShockSupportReport:
    """Verify the shock support covers the most extreme achievable gaps.

    Uses the coordinate-wise envelope of the bliss points: the gap between
    the two corner platforms must not escape [-half_width, half_width],
    otherwise interior vote probabilities can hit 0 or 1.
    """
    hi = dist.bliss.max(axis=0)
    lo = dist.bliss.min(axis=0)
    extreme = float(np.sum((hi - lo) ** 2))
    ok = extreme <= shock.half_width
    if ok:
        msg = "ok"
    else:
        msg = (f"extreme preference gap {extreme:.17g} exceeds shock half-width "
               f"{shock.half_width:.17g}; vote probabilities may clamp at 0/1")
    return ShockSupportReport(ok=ok, extreme_gap=extreme, bound=shock.half_width, message=msg)


def vote_share_lottery(dist: VoterDistribution, shock: Shock, pair, tie_tol=TIE_TOL):
    """Exact distribution of party A's vote share under the uniform shock.

    Types are sorted by preference gap, gaps closer than ``tie_tol`` are
    merged into blocks, and the share is piecewise constant between block
    gaps clamped to the shock support. Returns ``(shares, probabilities)``
    with probabilities summing to one. Tail shares are accumulated
    backwards to limit cancellation.
    """
    gaps = preference_gaps(pair, dist)
    order = np.argsort(gaps, kind="stable")
    g = gaps[order]
    s = dist.shares[order]
    # merge near-ties into blocks
    cut = np.flatnonzero(np.diff(g) >= tie_tol) + 1
    starts = np.concatenate(([0], cut))
    block_gap = g[starts]
    block_share = np.add.reduceat(s, starts)
    tails = np.concatenate((np.cumsum(block_share[::-1])[::-1], [0.0]))
    # the full-population tail is exactly one by the share invariant; pinning
    # it avoids noise amplification in payoffs with unbounded slope at zero
    tails[0] = 1.0
    tails = np.clip(tails, 0.0, 1.0)
    phi = shock.half_width
    cuts = np.concatenate(([-phi], np.clip(block_gap, -phi, phi), [phi]))
    probs = np.diff(cuts) / (2.0 * phi)
    return tails, probs


def expected_payoff(dist: VoterDistribution, nu: ReducedPayoff, shock: Shock, pair,
                    party="A", tie_tol=TIE_TOL) -> float:
    """Exact expected reduced payoff for one party at a platform pair."""
    shares, probs = vote_share_lottery(dist, shock, pair, tie_tol)
    if party == "B":
        shares = 1.0 - shares
    elif party != "A":
        raise PreconditionError(f"party must be 'A' or 'B', got {party!r}")
    return float(np.dot(nu.evaluate(shares), probs))


def monte_carlo_payoff(dist: VoterDistribution, nu: ReducedPayoff, shock: Shock, pair,
                       party="A", n_draws=100_000, seed=0) -> float:
    """Monte-Carlo estimate of expected_payoff; deterministic given seed."""
    if n_draws < 1:
        raise PreconditionError("need at least one draw")
    gaps = preference_gaps(pair, dist)
    order = np.argsort(gaps, kind="stable")
    g = gaps[order]
    s = dist.shares[order]
    tails = np.concatenate((np.clip(np.cumsum(s[::-1])[::-1], 0.0, 1.0), [0.0]))
    tails[0] = 1.0
    if party == "B":
        tails = 1.0 - tails
    elif party != "A":
        raise PreconditionError(f"party must be 'A' or 'B', got {party!r}")
    rng = np.random.default_rng(seed)
    eps = rng.uniform(-shock.half_width, shock.half_width, size=n_draws)
    idx = np.searchsorted(g, eps, side="left")
    values = np.asarray(nu.evaluate(tails), dtype=float)
    return float(values[idx].mean())
