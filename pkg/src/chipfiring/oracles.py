"""Independent brute-force oracles that certify the main pipeline.

Everything here re-derives its answer from definitions, deliberately sharing
no game-engine or closure code with the other modules: the greedy engine is
checked against permutation search, the target-set solver against an
independent subset scan, and the rank pipeline against the raw definition
with winnability decided by a bounded search over firing-count vectors.

The bounded winnability search asks whether some integer vector z with
entries in [0, bound] makes f minus the net chip flow of firing each vertex
z(v) times effective.  Uniformly shifting z changes nothing (firing everyone
once is the identity), so searching vectors with some zero entry loses no
generality, and any larger solution can be shifted down into the box unless
it exceeds the bound everywhere.  The search is complete only within the
box, which is why callers cross-check against the game-based path instead of
trusting a "not winnable within bound" verdict blindly.  Two strategies are
provided: a literal product enumeration, and an equivalent descent to the
componentwise-maximal candidate (feasible vectors are closed under
componentwise max, so the box holds a solution exactly when the descent
lands on one).  Both decide the same predicate; the descent is the default
and the enumeration pins it down in tests.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from json import dumps

from .distance import dist_nonhalt, dist_rec, effective_divisors
from .errors import SizeGuardError
from .multigraph import Multigraph, graph_to_text
from .reductions import reduce_tss_to_nonhalt
from .tss import min_target_set, validate_thresholds

PERMUTATION_GUARD = 9
SUBSET_GUARD = 20
EXHAUSTIVE_GUARD = 200_000


@dataclass(frozen=True)
class OracleReport:
    """One cross-checked quantity; `agree` is the verdict, never swallowed."""

    quantity: str
    pipeline: int
    oracle: int
    agree: bool
    fingerprint: str

    def json_line(self) -> str:
        return dumps(
            {
                "quantity": self.quantity,
                "pipeline": self.pipeline,
                "oracle": self.oracle,
                "agree": self.agree,
                "instance": self.fingerprint,
            },
            sort_keys=True,
        )


def instance_fingerprint(g: Multigraph, values) -> str:
    payload = graph_to_text(g) + "|" + " ".join(str(x) for x in values)
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


def recurrent_permutation(g: Multigraph, f) -> bool:
    """Whether some permutation of the vertices is a legal firing sequence
    from f, by depth-first search over all orders (illegal prefixes are
    abandoned, which discards no legal permutation)."""
    g.require_connected()
    if g.n > PERMUTATION_GUARD:
        raise SizeGuardError(f"permutation search is limited to {PERMUTATION_GUARD} vertices")
    n = g.n
    degs = g.degrees
    mult = g.mult
    chips = list(f)
    used = bytearray(n)

    def search(depth: int) -> bool:
        if depth == n:
            return True
        for v in range(n):
            if used[v] or chips[v] < degs[v]:
                continue
            used[v] = 1
            row = mult[v]
            chips[v] -= degs[v]
            for u in range(n):
                chips[u] += row[u]
            if search(depth + 1):
                return True
            for u in range(n):
                chips[u] -= row[u]
            chips[v] += degs[v]
            used[v] = 0
        return False

    return search(0)


def ts_subset_enumeration(g: Multigraph, tau) -> int:
    """Exact minimum target set size by scanning subsets in increasing size,
    with a from-scratch round-based activation recount."""
    tau = validate_thresholds(g, tau)
    if g.n > SUBSET_GUARD:
        raise SizeGuardError(f"subset enumeration is limited to {SUBSET_GUARD} vertices")
    n = g.n
    mult = g.mult
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            active = set(subset) | {v for v in range(n) if tau[v] == 0}
            changed = True
            while changed:
                changed = False
                for v in range(n):
                    if v in active:
                        continue
                    hot = sum(1 for u in active if mult[v][u])
                    if hot >= tau[v]:
                        active.add(v)
                        changed = True
            if len(active) == n:
                return size
    raise AssertionError("unreachable: the full vertex set activates everything")


def default_winnability_bound(g: Multigraph, f) -> int:
    deficit = sum(max(0, d - x) for d, x in zip(g.degrees, f))
    positive = sum(x for x in f if x > 0)
    return 2 * (deficit + positive + 1)


def winnable_within_bound(g: Multigraph, f, bound: int) -> bool:
    """Whether some firing-count vector z in [0, bound]^n leaves f effective.

    Descends from the all-bound vector: whenever a vertex would be left
    negative, its count is lowered to the largest value its neighbors still
    support.  Feasible vectors are closed under componentwise max, so this
    lands on the componentwise-maximal feasible vector if any exists, and a
    count forced below zero proves the box empty.
    """
    f = tuple(f)
    if sum(f) < 0:
        return False  # firing preserves degree; nothing effective is reachable
    if all(x >= 0 for x in f):
        return True
    n = g.n
    degs = g.degrees
    mult = g.mult
    z = [bound] * n
    pending = deque(range(n))
    queued = bytearray([1] * n)
    while pending:
        v = pending.popleft()
        queued[v] = 0
        if degs[v] == 0:
            if f[v] < 0:
                return False
            continue
        row = mult[v]
        incoming = f[v]
        for u in range(n):
            if row[u]:
                incoming += row[u] * z[u]
        allowed = incoming // degs[v]
        if allowed < z[v]:
            if allowed < 0:
                return False
            z[v] = allowed
            for u in range(n):
                if row[u] and not queued[u]:
                    queued[u] = 1
                    pending.append(u)
    return True


def winnable_exhaustive(g: Multigraph, f, bound: int) -> bool:
    """Literal enumeration of firing-count vectors with one coordinate pinned
    to zero; reference implementation for the descent above."""
    f = tuple(f)
    n = g.n
    if (bound + 1) ** n > EXHAUSTIVE_GUARD:
        raise SizeGuardError("exhaustive winnability enumeration would be too large")
    degs = g.degrees
    mult = g.mult
    for z in product(range(bound + 1), repeat=n):
        if min(z) != 0:
            continue  # a uniform shift of z induces the same net flow
        ok = True
        for v in range(n):
            flow = degs[v] * z[v]
            row = mult[v]
            for u in range(n):
                if row[u]:
                    flow -= row[u] * z[u]
            if f[v] - flow < 0:
                ok = False
                break
        if ok:
            return True
    return False


def rank_definitional(g: Multigraph, f, winnability_bound: int | None = None) -> int:
    """Rank straight from the definition: one less than the least degree of
    an effective g with f - g not winnable, independent of the game engine."""
    g.require_connected()
    f = tuple(f)
    n = g.n
    if sum(f) < 0:
        return -1
    bound = winnability_bound if winnability_bound is not None else default_winnability_bound(g, f)
    for k in range(sum(f) + 2):
        for cand in effective_divisors(k, n):
            reduced = tuple(a - b for a, b in zip(f, cand))
            if not winnable_within_bound(g, reduced, bound):
                return k - 1
    raise AssertionError("unreachable: removing deg(f)+1 chips leaves a negative degree")


def verify_reduction_chain(g: Multigraph, tau) -> list[OracleReport]:
    """Run every leg of the target-set-to-chip-distance chain on one instance
    and report each equality and safety margin; disagreements are returned,
    never swallowed."""
    tau = validate_thresholds(g, tau)
    fp = instance_fingerprint(g, tau)
    ts_pipeline = min_target_set(g, tau).size
    ts_oracle = ts_subset_enumeration(g, tau)
    apex_inst, bundle_inst = reduce_tss_to_nonhalt(g, tau)
    rec_value = dist_rec(bundle_inst.gprime, bundle_inst.x).value
    nonhalt_value = dist_nonhalt(apex_inst.gpp, apex_inst.fpp).value
    return [
        OracleReport("target-set-size/subset-oracle", ts_pipeline, ts_oracle,
                     ts_pipeline == ts_oracle, fp),
        OracleReport("target-set-size/dist-rec", ts_pipeline, rec_value,
                     ts_pipeline == rec_value, fp),
        OracleReport("dist-rec/dist-nonhalt", rec_value, nonhalt_value,
                     rec_value == nonhalt_value, fp),
        OracleReport("target-set-size/dist-nonhalt", ts_pipeline, nonhalt_value,
                     ts_pipeline == nonhalt_value, fp),
        OracleReport("bundle-margin (N vs dist-rec + 1)", bundle_inst.N, rec_value + 1,
                     bundle_inst.N > rec_value + 1, fp),
        OracleReport("apex-margin (M vs dist-nonhalt)", apex_inst.M, nonhalt_value,
                     apex_inst.M > nonhalt_value, fp),
    ]
