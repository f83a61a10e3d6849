"""Gadget constructions tying target set selection to chip-firing distances.

Three constructions live here, plus witness transport between them and an
edge subdivision that turns any instance into one on a simple graph.

Bundle gadget (target sets -> distance to recurrence).  Every source vertex
v becomes a chain v_i, v_c, v_o: N parallel edges join v_i to v_c and a
single edge joins v_c to v_o, with N = |V| + 2.  Every source edge uv grows
two port vertices: N parallel edges join u_o to p_uv and a single edge sends
p_uv into v_i, and symmetrically N parallel edges join v_o to p_vu with a
single edge into u_i.  Chips: x(v_o) = deg(v_o) - 1, x(v_i) = deg(v_i) -
tau(v), and x(z) = deg(z) - N = 1 on cores and ports.  Dropping one chip on
u_o lets u_o fire immediately, which charges its ports, which feed the
inner vertices of u's neighbors one chip each: the exactly-once game then
replays the activation cascade, threshold for threshold.

Apex gadget (distance to recurrence -> distance to non-halting).  A new apex
vertex joins the graph with M parallel edges to every original vertex, M
chips are added on every original vertex and none on the apex.  M must
exceed dist_rec(G, f) + max(0, max_v(f(v) - degree(v))); the default
2*|E| + sum of negative chips + that max term + 1 always suffices and keeps
constructions reproducible without solving the distance first.  Once every
original vertex fires once the apex holds exactly its degree in chips, so
exactly-once games extend to non-halting games and vice versa.

Vertex ids are laid out deterministically (inner block, core block, outer
block, then ports in sorted edge order; the apex is always last) so that
instances are byte-reproducible; the role strings are the authoritative
meaning of each id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chipfire import add, is_effective, is_recurrent, validate_divisor
from .distance import dist_rec
from .errors import GraphStructureError, WitnessError
from .multigraph import Multigraph
from .tss import TargetSet, is_target_set, validate_thresholds


@dataclass(frozen=True)
class TssToRecInstance:
    """Bundle-gadget output: graph, chip configuration, and the role maps."""

    gprime: Multigraph
    x: tuple[int, ...]
    N: int
    inner: tuple[int, ...]
    core: tuple[int, ...]
    outer: tuple[int, ...]
    ports: dict[tuple[int, int], int]
    roles: tuple[str, ...]
    circ: frozenset[int]
    bullet: frozenset[int]
    source: Multigraph
    tau: tuple[int, ...]


@dataclass(frozen=True)
class RecToNonhaltInstance:
    """Apex-gadget output: graph, shifted chips, apex id and multiplicity."""

    gpp: Multigraph
    fpp: tuple[int, ...]
    M: int
    new_vertex: int
    roles: tuple[str, ...]
    source: Multigraph
    f: tuple[int, ...]


def reduce_tss_to_rec(g: Multigraph, tau) -> TssToRecInstance:
    """Build the bundle gadget for a simple connected graph with thresholds."""
    tau = validate_thresholds(g, tau)
    g.require_connected()
    if g.n < 2:
        raise GraphStructureError("the bundle gadget needs at least two source vertices")
    n = g.n
    bundle = n + 2
    edge_pairs = [(u, v) for u, v, _m in g.edges()]
    inner = tuple(range(n))
    core = tuple(range(n, 2 * n))
    outer = tuple(range(2 * n, 3 * n))
    ports: dict[tuple[int, int], int] = {}
    for j, (u, v) in enumerate(edge_pairs):
        ports[(u, v)] = 3 * n + 2 * j
        ports[(v, u)] = 3 * n + 2 * j + 1
    total = 3 * n + 2 * len(edge_pairs)

    edges = []
    for v in range(n):
        edges.append((inner[v], core[v], bundle))
        edges.append((core[v], outer[v], 1))
    for u, v in edge_pairs:
        edges.append((outer[u], ports[(u, v)], bundle))
        edges.append((ports[(u, v)], inner[v], 1))
        edges.append((outer[v], ports[(v, u)], bundle))
        edges.append((ports[(v, u)], inner[u], 1))
    gprime = Multigraph(total, edges)

    x = [0] * total
    for v in range(n):
        x[outer[v]] = gprime.degrees[outer[v]] - 1
        x[inner[v]] = gprime.degrees[inner[v]] - tau[v]
        x[core[v]] = gprime.degrees[core[v]] - bundle
    for p in ports.values():
        x[p] = gprime.degrees[p] - bundle

    roles = [""] * total
    for v in range(n):
        roles[inner[v]] = f"i:{v}"
        roles[core[v]] = f"c:{v}"
        roles[outer[v]] = f"o:{v}"
    for (u, v), p in ports.items():
        roles[p] = f"p:{u}:{v}"

    circ = frozenset(inner) | frozenset(outer)
    bullet_set = frozenset(core) | frozenset(ports.values())
    for z in range(total):
        if not 0 <= x[z] <= gprime.degrees[z]:
            raise AssertionError(f"gadget chip count out of range at vertex {z}")
    for z in bullet_set:
        if x[z] != 1:
            raise AssertionError(f"core/port vertex {z} must start with one chip")

    return TssToRecInstance(
        gprime=gprime,
        x=tuple(x),
        N=bundle,
        inner=inner,
        core=core,
        outer=outer,
        ports=ports,
        roles=tuple(roles),
        circ=circ,
        bullet=bullet_set,
        source=g,
        tau=tau,
    )


def lift_target_set(inst: TssToRecInstance, members) -> tuple[int, ...]:
    """Turn a valid target set into a recurrence witness: one chip on the
    outer vertex of every seed.  The recurrence of x + y is asserted."""
    if isinstance(members, TargetSet):
        members = members.members
    members = tuple(sorted(set(members)))
    if not is_target_set(inst.source, inst.tau, members):
        raise WitnessError(f"{members} is not a target set of the source instance")
    y = [0] * inst.gprime.n
    for v in members:
        y[inst.outer[v]] = 1
    ok, _trace = is_recurrent(inst.gprime, add(inst.x, y))
    if not ok:
        raise WitnessError(
            "lifted seed chips do not make the gadget configuration recurrent; "
            "this happens when some threshold exceeds the source degree"
        )
    return tuple(y)


def extract_target_set(inst: TssToRecInstance, y) -> TargetSet:
    """Read a target set off a minimum-degree recurrence witness.

    The witness is first normalized: chips on cores and ports are rejected
    outright (a minimum witness never needs them), then chips on each inner
    vertex v_i are relocated onto outer vertices u_o whose port into v_i had
    not yet fired in a canonical exactly-once game, lowest u first, taking
    all of them when fewer than the chip count remain.  Every normalization
    step re-checks recurrence, so a witness that is not actually of minimum
    degree fails loudly instead of yielding a bogus set.
    """
    y = validate_divisor(inst.gprime, y)
    if not is_effective(y):
        raise WitnessError("witness must be effective")
    gp = inst.gprime
    ok, trace = is_recurrent(gp, add(inst.x, y))
    if not ok:
        raise WitnessError("x + y is not recurrent")
    original_degree = sum(y)
    work = list(y)
    for z in sorted(inst.bullet):
        if work[z]:
            raise WitnessError(
                f"chips on core/port vertex {z}: a minimum witness never needs them"
            )
    for v in range(inst.source.n):
        if work[inst.outer[v]] > 1:
            raise WitnessError(
                f"more than one chip on outer vertex of {v}: witness is not minimum"
            )
    source_nbrs = {
        v: sorted(u for u, _m in inst.source.nbrs[v]) for v in range(inst.source.n)
    }
    for v in range(inst.source.n):
        iv = inst.inner[v]
        k = work[iv]
        if k == 0:
            continue
        ok, trace = is_recurrent(gp, add(inst.x, work))
        if not ok:
            raise WitnessError("witness lost recurrence during normalization; not minimum")
        position = {vertex: t for t, vertex in enumerate(trace.firing_order)}
        pivot = position[iv]
        late_ports = [
            u for u in source_nbrs[v] if position[inst.ports[(u, v)]] > pivot
        ]
        chosen = late_ports[:k]
        work[iv] = 0
        for u in chosen:
            ov = inst.outer[u]
            if work[ov] == 1:
                raise WitnessError(
                    f"relocation collides with an existing seed chip on vertex {u}: "
                    "witness is not minimum"
                )
            work[ov] = 1
    ok, _trace = is_recurrent(gp, add(inst.x, work))
    if not ok:
        raise WitnessError("normalized witness is not recurrent; input was not minimum")
    members = tuple(v for v in range(inst.source.n) if work[inst.outer[v]] == 1)
    if len(members) != original_degree:
        raise WitnessError(
            "normalization changed the witness degree; input was not minimum"
        )
    if not is_target_set(inst.source, inst.tau, members):
        raise WitnessError("extracted seed set does not activate the whole source graph")
    return TargetSet(members)


def default_apex_multiplicity(g: Multigraph, f) -> int:
    """The always-sufficient apex bundle size, computable without solving
    any distance: 2|E| + total negative chips + max(0, max(f - degree)) + 1."""
    f = validate_divisor(g, f)
    negative = sum(-x for x in f if x < 0)
    overshoot = max(0, max(x - d for x, d in zip(f, g.degrees)))
    return 2 * g.edge_count + negative + overshoot + 1


def reduce_rec_to_nonhalt(
    g: Multigraph, f, M: int | None = None, verify_bound: bool = False
) -> RecToNonhaltInstance:
    """Build the apex gadget.

    With verify_bound, a supplied M is checked against the exact requirement
    M > dist_rec(G, f) + max(0, max(f - degree)), which solves a distance;
    otherwise a supplied M is trusted.
    """
    g.require_connected()
    f = validate_divisor(g, f)
    if M is None:
        M = default_apex_multiplicity(g, f)
    elif not isinstance(M, int) or M < 1:
        raise GraphStructureError(f"apex multiplicity must be a positive integer, got {M!r}")
    elif verify_bound:
        overshoot = max(0, max(x - d for x, d in zip(f, g.degrees)))
        required = dist_rec(g, f).value + overshoot
        if M <= required:
            raise WitnessError(
                f"apex multiplicity {M} must exceed {required} for this instance"
            )
    n = g.n
    apex = n
    edges = list(g.edges())
    edges.extend((v, apex, M) for v in range(n))
    gpp = Multigraph(n + 1, edges)
    fpp = tuple(list(x + M for x in f) + [0])
    roles = tuple([f"orig:{v}" for v in range(n)] + ["new"])
    return RecToNonhaltInstance(
        gpp=gpp, fpp=fpp, M=M, new_vertex=apex, roles=roles, source=g, f=f
    )


def reduce_tss_to_nonhalt(g: Multigraph, tau) -> tuple[RecToNonhaltInstance, TssToRecInstance]:
    """Compose the two gadgets with apex multiplicity |V| + 1.

    That choice is justified when no threshold exceeds its vertex degree:
    the minimum target set has at most |V| seeds and the gadget chips never
    exceed the gadget degrees, so the apex bound holds without solving
    anything.
    """
    bundle_inst = reduce_tss_to_rec(g, tau)
    m = g.n + 1
    apex_inst = reduce_rec_to_nonhalt(bundle_inst.gprime, bundle_inst.x, M=m)
    combined_roles = tuple(list(bundle_inst.roles) + ["new"])
    apex_inst = RecToNonhaltInstance(
        gpp=apex_inst.gpp,
        fpp=apex_inst.fpp,
        M=apex_inst.M,
        new_vertex=apex_inst.new_vertex,
        roles=combined_roles,
        source=apex_inst.source,
        f=apex_inst.f,
    )
    return apex_inst, bundle_inst


def subdivide_to_simple(g: Multigraph, f) -> tuple[Multigraph, tuple[int, ...]]:
    """Replace every parallel edge copy by a two-edge path through a fresh
    vertex carrying zero chips; the result is simple and the rank of the
    divisor is unchanged."""
    g.require_connected()
    f = validate_divisor(g, f)
    n = g.n
    edges = []
    point = n
    for u, v, m in g.edges():
        for _copy in range(m):
            edges.append((u, point, 1))
            edges.append((point, v, 1))
            point += 1
    if point == n:  # single-vertex graph, nothing to subdivide
        return g, f
    g2 = Multigraph(point, edges)
    f2 = tuple(list(f) + [0] * (point - n))
    return g2, f2


def subdivision_roles(g: Multigraph) -> tuple[str, ...]:
    """Role strings matching the id layout of subdivide_to_simple."""
    roles = [f"orig:{v}" for v in range(g.n)]
    for u, v, m in g.edges():
        roles.extend([f"sub:{u}:{v}"] * m)
    return tuple(roles)


def bundle_sidecar(inst: TssToRecInstance | RecToNonhaltInstance,
                   inner: TssToRecInstance | None = None) -> dict:
    """The JSON sidecar of a reduced-instance bundle."""
    if isinstance(inst, TssToRecInstance):
        return {"N": inst.N, "M": None, "roles": list(inst.roles)}
    n_value = inner.N if inner is not None else None
    return {"N": n_value, "M": inst.M, "roles": list(inst.roles)}
