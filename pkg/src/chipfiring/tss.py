"""Minimum target set selection: threshold activation dynamics and solvers.

A vertex activates once at least its threshold of neighbors is active; the
closure is the least fixed point of that monotone rule, so round-based and
asynchronous schedules agree.  Thresholds live on simple graphs and are
capped at degree + 1: a vertex with threshold degree + 1 can never be
activated by its neighbors and must belong to every target set, and any
larger threshold would mean the same thing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import FormatError, GraphStructureError, InvalidVertexError
from .multigraph import Multigraph

Thresholds = tuple[int, ...]


def validate_thresholds(g: Multigraph, tau) -> Thresholds:
    g.require_simple()
    tau = tuple(tau)
    if len(tau) != g.n:
        raise GraphStructureError(f"threshold vector has {len(tau)} entries for {g.n} vertices")
    for v, t in enumerate(tau):
        if not isinstance(t, int) or t < 0:
            raise GraphStructureError(f"threshold at vertex {v} must be a nonnegative integer, got {t!r}")
        if t > g.degrees[v] + 1:
            raise GraphStructureError(
                f"threshold {t} at vertex {v} exceeds degree + 1 = {g.degrees[v] + 1}"
            )
    return tau


def _validate_seed(g: Multigraph, seed) -> tuple[int, ...]:
    members = sorted(set(seed))
    for v in members:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise InvalidVertexError(f"seed vertex {v!r} out of range [0, {g.n})")
    return tuple(members)


@dataclass(frozen=True)
class TargetSet:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def activation_closure(g: Multigraph, tau, seed) -> frozenset[int]:
    """Least fixed point of threshold activation from the seed set.

    Vertices with threshold 0 activate on their own.  Monotone in the seed.
    """
    tau = validate_thresholds(g, tau)
    seed = _validate_seed(g, seed)
    n = g.n
    active = bytearray(n)
    stack = []
    for v in seed:
        active[v] = 1
        stack.append(v)
    for v in range(n):
        if tau[v] == 0 and not active[v]:
            active[v] = 1
            stack.append(v)
    active_neighbors = [0] * n
    while stack:
        v = stack.pop()
        for u, _m in g.nbrs[v]:
            active_neighbors[u] += 1
            if not active[u] and active_neighbors[u] >= tau[u]:
                active[u] = 1
                stack.append(u)
    return frozenset(v for v in range(n) if active[v])


def is_target_set(g: Multigraph, tau, seed) -> bool:
    return len(activation_closure(g, tau, seed)) == g.n


def min_target_set(g: Multigraph, tau) -> TargetSet:
    """Exact minimum by subset enumeration in increasing cardinality.

    The full vertex set always works, so the search terminates; among minimum
    solutions the lexicographically least id tuple is returned.
    """
    tau = validate_thresholds(g, tau)
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            if is_target_set(g, tau, subset):
                return TargetSet(subset)
    raise AssertionError("unreachable: the full vertex set is a target set")


def greedy_target_set(g: Multigraph, tau) -> TargetSet:
    """A valid, not necessarily minimum, target set.

    Seeds every vertex that can never be neighbor-activated, then repeatedly
    seeds the unreached vertex with the largest remaining activation deficit
    (lowest id on ties).
    """
    tau = validate_thresholds(g, tau)
    chosen = [v for v in range(g.n) if tau[v] > g.degrees[v]]
    while True:
        reached = activation_closure(g, tau, chosen)
        if len(reached) == g.n:
            return TargetSet(tuple(sorted(chosen)))
        missing = [v for v in range(g.n) if v not in reached]
        deficits = {
            v: tau[v] - sum(1 for u, _m in g.nbrs[v] if u in reached) for v in missing
        }
        chosen.append(max(missing, key=lambda v: (deficits[v], -v)))


def parse_thresholds(text: str, n: int | None = None) -> Thresholds:
    """One line of space-separated nonnegative integers."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 1:
        raise FormatError("thresholds file must contain exactly one line of integers")
    try:
        tau = tuple(int(p) for p in lines[0].split())
    except ValueError:
        raise FormatError(f"thresholds line must contain integers, got {lines[0]!r}") from None
    if any(t < 0 for t in tau):
        raise FormatError("thresholds must be nonnegative")
    if n is not None and len(tau) != n:
        raise FormatError(f"thresholds vector has {len(tau)} entries, expected {n}")
    return tau


def thresholds_to_text(tau) -> str:
    return " ".join(str(t) for t in tau) + "\n"
