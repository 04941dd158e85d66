"""Multidimensional platform competition: rankings, enumeration, dynamics.

A platform pair splits voter types into a strict order by their relative
preference between the two parties. Local equilibria are exactly the
self-consistent orders: weight the bliss points by the marginal payoff
increments along the order, and the order induced by the resulting pair
must reproduce itself. Enumerating all permutations therefore finds every
local equilibrium at desk scale; party-preferred Nash equilibria are the
local equilibria of maximal platform distance (symmetric electorates).
Best-response dynamics over the finite candidate set provides the fallback
beyond the factorial cap and the convergence machinery.

Directional spreads order multidimensional electorates by projecting onto
a direction (typically the equilibrium separation axis) and applying the
one-dimensional spread comparison to the projections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InternalConsistencyError, PreconditionError
from .model import (
    PlatformPair,
    ReducedPayoff,
    Shock,
    VoterDistribution,
    as_pair,
    expected_payoff,
    preference_gaps,
)
from .equilibrium1d import equilibrium_weights, is_spread

RANK_TOL = 1e-9
FACTORIAL_CAP = 8
_PAYOFF_TIE_TOL = 1e-12


def induced_ranking(pair, dist: VoterDistribution, tol: float = RANK_TOL):
    """Strict order of types by preference gap, least A-leaning first.

    Returns None when two types are closer than ``tol`` in preference gap:
    tied profiles induce no strict ranking.
    """
    gaps = preference_gaps(pair, dist)
    order = np.argsort(gaps, kind="stable")
    if np.any(np.diff(gaps[order]) < tol):
        return None
    return tuple(int(i) for i in order)


def ranking_weights(ranking, dist: VoterDistribution, nu: ReducedPayoff):
    """Low/high-side payoff weights along a ranking (positions, not types)."""
    shares = dist.shares[np.asarray(ranking, dtype=int)]
    return equilibrium_weights(shares, nu)


def platforms_for_ranking(ranking, dist: VoterDistribution, nu: ReducedPayoff) -> PlatformPair:
    """Candidate platform pair generated by a ranking of the electorate.

    Party A averages bliss points with the high-side weights (it wins a
    type only together with all types ranked above it); party B mirrors.
    Requires a strictly concave payoff, which rules out best responses at
    tie profiles.
    """
    _validate_ranking(ranking, dist)
    nu.require_strictly_concave()
    idx = np.asarray(ranking, dtype=int)
    w_low, w_high = equilibrium_weights(dist.shares[idx], nu)
    pts = dist.bliss[idx]
    return PlatformPair(w_high @ pts, w_low @ pts)


def _validate_ranking(ranking, dist):
    if sorted(ranking) != list(range(dist.n_types)):
        raise PreconditionError("ranking must be a permutation of all type indices")


@dataclass(frozen=True)
class LocalEquilibrium:
    """Self-consistent ranking with its platform pair and common payoff."""

    pair: PlatformPair
    ranking: tuple
    sq_distance: float
    payoff: float


def _payoff_base(nu: ReducedPayoff) -> float:
    return 0.5 * (nu.value_at_one + nu.value_at_zero)


def enumerate_local_equilibria(dist: VoterDistribution, nu: ReducedPayoff, shock: Shock,
                               cap: int = FACTORIAL_CAP, tol: float = RANK_TOL,
                               check: bool = True):
    """All local equilibria by permutation search, in lexicographic order.

    Keeps exactly the rankings that reproduce themselves at their generated
    platform pair. With ``check`` every kept pair is verified against the
    exact integrator: both parties' expected payoffs must match the
    distance identity within 1e-8.
    """
    if dist.n_types > cap:
        raise PreconditionError(
            f"{dist.n_types} types exceed the factorial cap {cap}; "
            "use best_response_dynamics for larger electorates")
    nu.require_normalized()
    base = _payoff_base(nu)
    found = []
    for perm in itertools.permutations(range(dist.n_types)):
        pair = platforms_for_ranking(perm, dist, nu)
        if induced_ranking(pair, dist, tol) != perm:
            continue
        sq = pair.sq_distance
        payoff = base + sq / (2.0 * shock.half_width)
        if check:
            _check_equilibrium_payoffs(pair, payoff, dist, nu, shock)
        found.append(LocalEquilibrium(pair=pair, ranking=perm, sq_distance=sq, payoff=payoff))
    return found


def _check_equilibrium_payoffs(pair, payoff, dist, nu, shock):
    v_a = expected_payoff(dist, nu, shock, pair, "A")
    v_b = expected_payoff(dist, nu, shock, pair, "B")
    if abs(v_a - payoff) > 1e-8 or abs(v_b - payoff) > 1e-8:
        raise InternalConsistencyError(
            f"distance identity {payoff:.17g} disagrees with integrator "
            f"(A={v_a:.17g}, B={v_b:.17g}); check the shock support")
    if abs(v_a - v_b) > 1e-10:
        raise InternalConsistencyError("parties' payoffs differ at a local equilibrium")


def candidate_platforms(dist: VoterDistribution, nu: ReducedPayoff, cap: int = FACTORIAL_CAP):
    """Every best-response candidate: both platforms of every ranking.

    Ordered lexicographically by generating permutation, high side first,
    so index order breaks payoff ties deterministically.
    """
    if dist.n_types > cap:
        raise PreconditionError(
            f"{dist.n_types} types exceed the factorial cap {cap}")
    nu.require_strictly_concave()
    rows = []
    for perm in itertools.permutations(range(dist.n_types)):
        idx = np.asarray(perm, dtype=int)
        w_low, w_high = equilibrium_weights(dist.shares[idx], nu)
        pts = dist.bliss[idx]
        rows.append(w_high @ pts)
        rows.append(w_low @ pts)
    cands = np.vstack(rows)
    return cands


def _batch_payoffs(cands: np.ndarray, opponent: np.ndarray, dist, nu, shock):
    """Expected payoff of each candidate platform against a fixed opponent."""
    d_opp = np.sum((dist.bliss - opponent) ** 2, axis=1)
    diff = cands[:, None, :] - dist.bliss[None, :, :]
    d_cand = np.einsum("mnk,mnk->mn", diff, diff)
    gaps = d_opp[None, :] - d_cand
    order = np.argsort(gaps, axis=1, kind="stable")
    g = np.take_along_axis(gaps, order, axis=1)
    s = dist.shares[order]
    m = cands.shape[0]
    tails = np.concatenate(
        (np.clip(np.cumsum(s[:, ::-1], axis=1)[:, ::-1], 0.0, 1.0), np.zeros((m, 1))), axis=1)
    tails[:, 0] = 1.0
    phi = shock.half_width
    cuts = np.concatenate(
        (np.full((m, 1), -phi), np.clip(g, -phi, phi), np.full((m, 1), phi)), axis=1)
    probs = np.diff(cuts, axis=1) / (2.0 * phi)
    vals = np.asarray(nu.evaluate(tails), dtype=float)
    return np.sum(vals * probs, axis=1)


def best_response(opponent, dist: VoterDistribution, nu: ReducedPayoff, shock: Shock,
                  cap: int = FACTORIAL_CAP, _cands=None) -> np.ndarray:
    """Globally best platform against ``opponent``.

    Global best responses always lie in the finite candidate set generated
    by rankings, so the argmax over that set suffices. Payoff ties resolve
    to the candidate of the lexicographically smallest generating
    permutation (high side before low side).
    """
    opp = np.atleast_1d(np.asarray(opponent, dtype=float))
    if opp.shape[0] != dist.dimension:
        raise DimensionError("opponent platform dimension mismatch")
    cands = candidate_platforms(dist, nu, cap) if _cands is None else _cands
    payoffs = _batch_payoffs(cands, opp, dist, nu, shock)
    best = int(np.flatnonzero(payoffs >= payoffs.max() - _PAYOFF_TIE_TOL)[0])
    return cands[best].copy()


@dataclass(frozen=True)
class DynamicsResult:
    trajectory: tuple           # PlatformPair per step, start included
    sq_distances: np.ndarray
    converged: bool
    symmetric: bool             # distance monotonicity is only guaranteed when True


def best_response_dynamics(start, dist: VoterDistribution, nu: ReducedPayoff, shock: Shock,
                           max_iters: int = 60, cap: int = FACTORIAL_CAP) -> DynamicsResult:
    """Alternating best-response path from ``start`` (A moves first).

    A party already best-responding stays put; the walk stops once both
    parties pass in turn. Started from a local equilibrium of a symmetric
    electorate, the platform distance never falls below its starting value
    and the walk terminates in a Nash equilibrium.
    """
    pair = as_pair(start)
    if pair.dimension != dist.dimension:
        raise DimensionError("starting platforms dimension mismatch")
    symmetric = is_symmetric(dist)
    cands = candidate_platforms(dist, nu, cap)
    traj = [pair]
    sq = [pair.sq_distance]
    stale = 0
    converged = False
    for step in range(1, max_iters + 1):
        mover_is_a = step % 2 == 1
        own = pair.x_a if mover_is_a else pair.x_b
        opp = pair.x_b if mover_is_a else pair.x_a
        payoffs = _batch_payoffs(cands, opp, dist, nu, shock)
        best_val = payoffs.max()
        current = _batch_payoffs(own[None, :], opp, dist, nu, shock)[0]
        if current >= best_val - _PAYOFF_TIE_TOL:
            stale += 1
        else:
            stale = 0
            chosen = cands[int(np.flatnonzero(payoffs >= best_val - _PAYOFF_TIE_TOL)[0])]
            pair = PlatformPair(chosen, opp) if mover_is_a else PlatformPair(opp, chosen)
        traj.append(pair)
        sq.append(pair.sq_distance)
        if stale >= 2:
            converged = True
            break
    return DynamicsResult(trajectory=tuple(traj), sq_distances=np.array(sq),
                          converged=converged, symmetric=symmetric)


@dataclass(frozen=True)
class NashReport:
    """Party-preferred equilibria with the full local-equilibrium inventory."""

    party_preferred: tuple
    max_sq_distance: float
    inventory: tuple


def party_preferred_equilibria(dist: VoterDistribution, nu: ReducedPayoff, shock: Shock,
                               cap: int = FACTORIAL_CAP, tol: float = 1e-9) -> NashReport:
    """Nash equilibria of maximal platform differentiation.

    Requires a symmetric electorate (existence is only guaranteed there).
    All local equilibria within ``tol`` of the maximal squared distance are
    returned; ties at machine precision are not broken.
    """
    if not is_symmetric(dist):
        raise PreconditionError("party-preferred selection requires a symmetric electorate")
    inventory = enumerate_local_equilibria(dist, nu, shock, cap=cap)
    if not inventory:
        raise InternalConsistencyError(
            "no local equilibrium found for a symmetric electorate; "
            "check ranking tolerance against near-tied types")
    max_sq = max(eq.sq_distance for eq in inventory)
    best = tuple(eq for eq in inventory if eq.sq_distance >= max_sq - tol)
    return NashReport(party_preferred=best, max_sq_distance=max_sq, inventory=tuple(inventory))


def is_symmetric(dist: VoterDistribution, tol: float = 1e-9) -> bool:
    """Whether every type has a mirror image through the mean bliss point."""
    center = dist.mean_bliss()
    targets = 2.0 * center - dist.bliss
    unused = set(range(dist.n_types))
    for i in range(dist.n_types):
        if i not in unused:
            continue
        match = None
        for j in unused:
            if (np.max(np.abs(dist.bliss[j] - targets[i])) <= tol
                    and abs(dist.shares[j] - dist.shares[i]) <= tol):
                match = j
                break
        if match is None:
            return False
        unused.discard(i)
        unused.discard(match)
    return True


def median_position(ranking, dist: VoterDistribution):
    """Position splitting a ranking into the two parties' supporter blocs.

    Returns ``(position, straddling)``; position is None when a cumulative
    share hits one half exactly, in which case no position qualifies and
    sign statements about the split are skipped.
    """
    _validate_ranking(ranking, dist)
    shares = dist.shares[np.asarray(ranking, dtype=int)]
    heads = np.cumsum(shares)
    if np.any(np.abs(heads[:-1] - 0.5) <= 1e-12):
        return None, True
    below = np.concatenate(([0.0], heads[:-1]))
    above = 1.0 - heads
    ok = np.flatnonzero((below < 0.5) & (above < 0.5))
    if len(ok) != 1:
        raise InternalConsistencyError("median position is not unique")
    return int(ok[0]), False


def local_divide_gradient(ranking, dist: VoterDistribution, nu: ReducedPayoff, shock: Shock,
                          position: int, dim: int) -> float:
    """Derivative of the local-equilibrium payoff in one bliss coordinate.

    ``position`` indexes the ranking (0 = least A-leaning), ``dim`` the
    policy dimension. The value is the weight differential at that position
    times the platform separation on that dimension, over the shock
    half-width; its sign aligns with the separation exactly for positions
    on party A's side of the split.
    """
    _validate_ranking(ranking, dist)
    if not 0 <= position < dist.n_types:
        raise PreconditionError(f"position {position} out of range")
    if not 0 <= dim < dist.dimension:
        raise PreconditionError(f"dimension {dim} out of range")
    pair = platforms_for_ranking(ranking, dist, nu)
    if induced_ranking(pair, dist) != tuple(ranking):
        raise PreconditionError("ranking is not self-consistent for this electorate")
    w_low, w_high = ranking_weights(ranking, dist, nu)
    sep = pair.x_a[dim] - pair.x_b[dim]
    return float((w_high[position] - w_low[position]) * sep / shock.half_width)


def project_distribution(dist: VoterDistribution, direction) -> VoterDistribution:
    """One-dimensional electorate of inner products with ``direction``.

    Types whose projections coincide are merged with summed shares so the
    result is a valid electorate for spread comparisons.
    """
    d = np.atleast_1d(np.asarray(direction, dtype=float))
    if d.shape[0] != dist.dimension:
        raise DimensionError("direction dimension mismatch")
    if not np.any(d != 0.0):
        raise PreconditionError("direction must be nonzero")
    z = dist.bliss @ d
    order = np.argsort(z, kind="stable")
    values, shares, labels = [], [], []
    for pos in order:
        if values and abs(z[pos] - values[-1]) <= 1e-12:
            shares[-1] += dist.shares[pos]
            labels[-1] = f"{labels[-1]}+{dist.labels[pos]}"
        else:
            values.append(float(z[pos]))
            shares.append(float(dist.shares[pos]))
            labels.append(dist.labels[pos])
    return VoterDistribution(np.array(values).reshape(-1, 1), np.array(shares), labels)


def is_directional_spread(base: VoterDistribution, candidate: VoterDistribution,
                          direction) -> bool:
    """Spread comparison of the two electorates projected onto a direction."""
    if base.dimension != candidate.dimension:
        raise DimensionError("electorates disagree on dimension")
    return is_spread(project_distribution(base, direction),
                     project_distribution(candidate, direction))


@dataclass(frozen=True)
class DirectionalSpreadComparison:
    base_payoff: float
    candidate_payoff: float
    base_sq_distance: float
    candidate_sq_distance: float
    direction: np.ndarray


def compare_directional_spread_payoffs(base: VoterDistribution, candidate: VoterDistribution,
                                       nu: ReducedPayoff, shock: Shock,
                                       cap: int = FACTORIAL_CAP) -> DirectionalSpreadComparison:
    """Party-preferred payoffs for a base electorate and a spread of it.

    The spread direction is the separation axis of the base's (first)
    party-preferred equilibrium. Requires both electorates symmetric and
    the candidate to be a spread of the base along that direction; the
    candidate's payoff must then strictly exceed the base's.
    """
    nash_base = party_preferred_equilibria(base, nu, shock, cap=cap)
    ref = nash_base.party_preferred[0]
    direction = ref.pair.x_a - ref.pair.x_b
    if not is_directional_spread(base, candidate, direction):
        raise PreconditionError(
            "candidate electorate is not a spread of the base along the equilibrium direction")
    nash_cand = party_preferred_equilibria(candidate, nu, shock, cap=cap)
    base_pay = ref.payoff
    cand_pay = nash_cand.party_preferred[0].payoff
    if not cand_pay > base_pay:
        raise InternalConsistencyError("directional spread failed to raise the preferred payoff")
    return DirectionalSpreadComparison(
        base_payoff=base_pay, candidate_payoff=cand_pay,
        base_sq_distance=nash_base.max_sq_distance,
        candidate_sq_distance=nash_cand.max_sq_distance,
        direction=direction)
