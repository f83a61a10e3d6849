"""Exact solvers for distance-to-non-halting, distance-to-recurrent, and rank.

Both distance solvers enumerate effective top-up divisors g by increasing
degree and, within a degree, in placement order (chips on the lowest vertex
ids first, i.e. count tuples in descending lexicographic order); the first
hit wins, which makes witnesses deterministic.  The solvers are exponential
by design; the only accelerations are evaluation shortcuts that provably
return the same verdict per candidate:

* non-halting checks run from the stabilization of f rather than from f
  itself, since adding an effective g commutes with stabilizing (play the
  stabilizing sequence first, it stays legal with extra chips on the board);
* recurrence checks extend the exactly-once closure of f instead of
  recomputing it, since extra chips never deactivate anything and the
  reachable fired set does not depend on the firing order.

Candidates that cannot activate any new vertex are rejected without
simulation.  Equality with direct per-candidate evaluation is pinned by the
test suite.

Termination: adding max(0, degree(v) - f(v)) chips to every vertex makes the
divisor pointwise at least the degree vector, which is recurrent and hence
non-halting, so that total is an upper bound for both distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chipfire import Divisor, _simulate_halting, deg, validate_divisor, winnability_complement
from .multigraph import Multigraph

_NEVER = 1 << 60


@dataclass(frozen=True)
class DistanceResult:
    """A distance value with the minimizing effective top-up divisor."""

    value: int
    witness: Divisor

    def to_json(self) -> dict:
        return {"value": self.value, "witness": list(self.witness)}


@lru_cache(maxsize=None)
def effective_divisors(total: int, n: int) -> tuple[Divisor, ...]:
    """All effective divisors of the given degree on n vertices, ordered with
    chips on the lowest vertex ids first."""
    if n == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in effective_divisors(total - first, n - 1):
            out.append((first,) + rest)
    return tuple(out)


def upper_bound_to_recurrent(g: Multigraph, f) -> int:
    """Chips needed to raise every vertex to its degree; always reaches a
    recurrent divisor."""
    f = validate_divisor(g, f)
    return sum(max(0, d - x) for d, x in zip(g.degrees, f))


def _exactly_once_closure(g: Multigraph, f) -> tuple[bytearray, list[int], int]:
    """Largest set fireable exactly once from f, with per-vertex chips received.

    The set does not depend on the firing order: chips received only grow, so
    any stalled maximal order stalls at the same set.
    """
    n = g.n
    degs = g.degrees
    nbrs = g.nbrs
    fired = bytearray(n)
    received = [0] * n
    count = 0
    stack = []
    for v in range(n):
        if f[v] >= degs[v]:
            fired[v] = 1
            count += 1
            stack.append(v)
    while stack:
        v = stack.pop()
        for u, m in nbrs[v]:
            received[u] += m
            if not fired[u] and f[u] + received[u] >= degs[u]:
                fired[u] = 1
                count += 1
                stack.append(u)
    return fired, received, count


def _closure_covers(g, f, top_up, fired0, received0, count0) -> bool:
    """Whether the exactly-once closure of f + top_up reaches every vertex,
    continued from the precomputed closure of f."""
    n = g.n
    degs = g.degrees
    nbrs = g.nbrs
    fired = bytearray(fired0)
    received = list(received0)
    count = count0
    stack = []
    for v in range(n):
        if top_up[v] and not fired[v] and f[v] + top_up[v] + received[v] >= degs[v]:
            fired[v] = 1
            count += 1
            stack.append(v)
    if not stack:
        return False
    while stack:
        v = stack.pop()
        for u, m in nbrs[v]:
            received[u] += m
            if not fired[u] and f[u] + top_up[u] + received[u] >= degs[u]:
                fired[u] = 1
                count += 1
                stack.append(u)
    return count == n


def dist_rec(g: Multigraph, f) -> DistanceResult:
    """Minimum degree of an effective g such that f + g is recurrent."""
    g.require_connected()
    f = validate_divisor(g, f)
    n = g.n
    degs = g.degrees
    fired0, received0, count0 = _exactly_once_closure(g, f)
    if count0 == n:
        return DistanceResult(0, (0,) * n)
    # chips a candidate must drop on v to start anything new there
    need = [
        _NEVER if fired0[v] else degs[v] - f[v] - received0[v] for v in range(n)
    ]
    limit = upper_bound_to_recurrent(g, f)
    for k in range(1, limit + 1):
        for cand in effective_divisors(k, n):
            promising = False
            for v in range(n):
                if cand[v] and cand[v] >= need[v]:
                    promising = True
                    break
            if not promising:
                continue
            if _closure_covers(g, f, cand, fired0, received0, count0):
                return DistanceResult(k, cand)
    raise AssertionError("unreachable: the pointwise deficit filler is recurrent")


def dist_nonhalt(g: Multigraph, f) -> DistanceResult:
    """Minimum degree of an effective g such that f + g is non-halting."""
    g.require_connected()
    f = validate_divisor(g, f)
    n = g.n
    degs = g.degrees
    nbrs = g.nbrs
    chips = list(f)
    if not _simulate_halting(degs, nbrs, chips):
        return DistanceResult(0, (0,) * n)
    stable = chips
    limit = upper_bound_to_recurrent(g, f)
    for k in range(1, limit + 1):
        for cand in effective_divisors(k, n):
            for v in range(n):
                if cand[v] and stable[v] + cand[v] >= degs[v]:
                    break
            else:
                continue  # still stable, the game halts immediately
            trial = [a + b for a, b in zip(stable, cand)]
            if not _simulate_halting(degs, nbrs, trial):
                return DistanceResult(k, cand)
    raise AssertionError("unreachable: the pointwise deficit filler is non-halting")


def rank(g: Multigraph, f) -> int:
    """Divisor rank: one less than the distance of degree - 1 - f from a
    non-halting state; -1 exactly when f is not winnable."""
    g.require_connected()
    f = validate_divisor(g, f)
    if deg(f) < 0:
        # degree is invariant under firing, so no effective equivalent exists
        return -1
    return dist_nonhalt(g, winnability_complement(g, f)).value - 1
