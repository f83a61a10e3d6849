"""Divisors and the chip-firing game engine.

A divisor assigns an integer chip count to every vertex; negative counts are
permitted everywhere, only the legality of a firing depends on the active
test (a vertex is active when it holds at least its degree in chips).

Halting classification simulates a legal game and stops on one of two
conditions: no vertex is active (the game halts, and the stable result is
unique regardless of the firing order), or every vertex has fired at least
once (the game never halts).  The two stop conditions are exhaustive on a
connected graph: in an endless game some vertex fires infinitely often, and
a vertex that never fired would receive chips from an infinitely-firing
neighbor without bound, impossible because the total chip count is conserved
by firing.  So an endless game marks every vertex as fired after finitely
many steps, and the simulation always terminates.  No step cap is imposed.

Recurrence is decided greedily: fire any active not-yet-fired vertex (lowest
index, for reproducible witnesses) until all have fired or none can.  The
greedy order is exhaustive by an exchange argument: if greedy stalls with
fired set A but some full exactly-once order exists, the first vertex of
that order outside A has received at least as many chips after greedy's run
(all of A fired once) as it had at its own firing point, so it is active and
greedy could not have stalled.  The permutation-search oracle cross-checks
this at small scale.

A single degree-0 vertex is a degenerate arena: it is active whenever its
chip count is nonnegative and firing it changes nothing, so such a divisor
is non-halting when the count is >= 0 and halting otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from random import Random

from .errors import FormatError, GraphStructureError, IllegalFiringError
from .multigraph import Multigraph

Divisor = tuple[int, ...]

HALTING = "halting"
NON_HALTING = "non-halting"


def validate_divisor(g: Multigraph, f) -> Divisor:
    f = tuple(f)
    if len(f) != g.n:
        raise GraphStructureError(f"divisor has {len(f)} entries for a graph on {g.n} vertices")
    for x in f:
        if not isinstance(x, int):
            raise GraphStructureError(f"divisor entries must be integers, got {x!r}")
    return f


def deg(f) -> int:
    """Total chip count; invariant under firing."""
    return sum(f)


def is_effective(f) -> bool:
    return all(x >= 0 for x in f)


def add(f, g) -> Divisor:
    return tuple(a + b for a, b in zip(f, g))


def sub(f, g) -> Divisor:
    return tuple(a - b for a, b in zip(f, g))


def is_active(g: Multigraph, f, v: int) -> bool:
    g._check_vertex(v)
    return f[v] >= g.degrees[v]


def fire(g: Multigraph, f, v: int) -> Divisor:
    """Raw firing of v: legality is not required, this is the bare
    linear-equivalence move."""
    g._check_vertex(v)
    f = validate_divisor(g, f)
    out = list(f)
    out[v] -= g.degrees[v]
    for u, m in g.nbrs[v]:
        out[u] += m
    return tuple(out)


def fire_sequence(g: Multigraph, f, seq, require_legal: bool = True) -> Divisor:
    """Fold `fire` over a vertex sequence.

    With require_legal, the first firing of an inactive vertex raises
    IllegalFiringError carrying its position in the sequence.
    """
    f = validate_divisor(g, f)
    chips = list(f)
    degs = g.degrees
    for pos, v in enumerate(seq):
        g._check_vertex(v)
        if require_legal and chips[v] < degs[v]:
            raise IllegalFiringError(
                f"vertex {v} is not active at position {pos} of the firing sequence", pos
            )
        chips[v] -= degs[v]
        for u, m in g.nbrs[v]:
            chips[u] += m
    return tuple(chips)


@dataclass(frozen=True)
class GameTrace:
    """A legal firing sequence with its histogram and the divisor it reaches."""

    firing_order: tuple[int, ...]
    fire_counts: tuple[int, ...]
    final: Divisor


@dataclass(frozen=True)
class HaltVerdict:
    kind: str
    stable: Divisor | None = None
    witness: GameTrace | None = None

    @property
    def is_halting(self) -> bool:
        return self.kind == HALTING


def _simulate_halting(degs, nbrs, chips) -> bool:
    """Play a canonical legal game in place; True when it halts.

    `chips` is mutated: on a halting game it ends as the stable divisor, on a
    non-halting game as the state at the moment every vertex has fired once.
    """
    n = len(chips)
    unfired = n
    fired = bytearray(n)
    while True:
        v = -1
        for i in range(n):
            if chips[i] >= degs[i]:
                v = i
                break
        if v < 0:
            return True
        chips[v] -= degs[v]
        for u, m in nbrs[v]:
            chips[u] += m
        if not fired[v]:
            fired[v] = 1
            unfired -= 1
            if unfired == 0:
                return False


def classify_halting(g: Multigraph, f, rng: Random | None = None) -> HaltVerdict:
    """Decide whether the game from f halts.

    Returns the unique stable divisor on halting games, or a witness trace in
    which every vertex fired at least once on non-halting ones.  The default
    policy fires the lowest-indexed active vertex, which makes witnesses
    byte-reproducible; pass an rng to randomize the policy (the verdict and
    the stable divisor do not depend on it).
    """
    g.require_connected()
    f = validate_divisor(g, f)
    n = g.n
    degs = g.degrees
    nbrs = g.nbrs
    chips = list(f)
    fired = [0] * n
    order: list[int] = []
    unfired = n
    while True:
        if rng is None:
            v = -1
            for i in range(n):
                if chips[i] >= degs[i]:
                    v = i
                    break
        else:
            actives = [i for i in range(n) if chips[i] >= degs[i]]
            v = rng.choice(actives) if actives else -1
        if v < 0:
            return HaltVerdict(HALTING, stable=tuple(chips))
        chips[v] -= degs[v]
        for u, m in nbrs[v]:
            chips[u] += m
        order.append(v)
        if fired[v] == 0:
            unfired -= 1
        fired[v] += 1
        if unfired == 0:
            trace = GameTrace(tuple(order), tuple(fired), tuple(chips))
            return HaltVerdict(NON_HALTING, witness=trace)


def is_recurrent(g: Multigraph, f) -> tuple[bool, GameTrace | None]:
    """Whether some legal game from f fires every vertex exactly once.

    The witness trace fires the lowest-indexed eligible vertex at each step;
    its final divisor always equals f, since firing every vertex once moves
    one chip each way across every edge.
    """
    g.require_connected()
    f = validate_divisor(g, f)
    n = g.n
    degs = g.degrees
    nbrs = g.nbrs
    chips = list(f)
    fired = bytearray(n)
    order: list[int] = []
    for _ in range(n):
        v = -1
        for i in range(n):
            if not fired[i] and chips[i] >= degs[i]:
                v = i
                break
        if v < 0:
            return False, None
        chips[v] -= degs[v]
        for u, m in nbrs[v]:
            chips[u] += m
        fired[v] = 1
        order.append(v)
    return True, GameTrace(tuple(order), (1,) * n, tuple(chips))


def winnability_complement(g: Multigraph, f) -> Divisor:
    """The divisor with degree(v) - 1 - f(v) chips on every vertex."""
    f = validate_divisor(g, f)
    return tuple(d - 1 - x for d, x in zip(g.degrees, f))


def is_winnable(g: Multigraph, f) -> bool:
    """Whether f is linearly equivalent to an effective divisor.

    Decided by halting classification of the complement divisor
    degree - 1 - f; no nonnegativity assumption is placed on it.
    """
    return classify_halting(g, winnability_complement(g, f)).is_halting


def parse_divisor(text: str, n: int | None = None) -> Divisor:
    """Parse a divisor: one line of space-separated integers, or {"chips": [...]}."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON divisor: {exc}") from None
        if not isinstance(obj, dict) or "chips" not in obj or not isinstance(obj["chips"], list):
            raise FormatError('JSON divisor must be an object with a "chips" list')
        values = obj["chips"]
        if not all(isinstance(x, int) for x in values):
            raise FormatError("divisor entries must be integers")
        f = tuple(values)
    else:
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if len(lines) != 1:
            raise FormatError("divisor file must contain exactly one line of integers")
        try:
            f = tuple(int(p) for p in lines[0].split())
        except ValueError:
            raise FormatError(f"divisor line must contain integers, got {lines[0]!r}") from None
    if n is not None and len(f) != n:
        raise FormatError(f"divisor has {len(f)} entries, expected {n}")
    return f


def divisor_to_text(f) -> str:
    return " ".join(str(x) for x in f) + "\n"


def divisor_to_json(f) -> dict:
    return {"chips": list(f)}


def trace_to_json(t: GameTrace) -> dict:
    return {"order": list(t.firing_order), "counts": list(t.fire_counts), "final": list(t.final)}
