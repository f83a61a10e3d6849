"""Undirected multigraphs with parallel edges.

Vertices are dense integers 0..n-1, stable for the lifetime of a graph.
Edges are stored as a symmetric multiplicity matrix: every operation in this
package only needs the number of parallel edges between two endpoints, so a
bundle of N parallel edges costs the same as a single edge.  Self-loops are
rejected at construction time; firing across one would be a no-op and no
construction here ever creates one.
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import (
    DisconnectedGraphError,
    FormatError,
    GraphStructureError,
    InvalidVertexError,
)

Edge = tuple[int, int, int]


class Multigraph:
    """Immutable undirected multigraph without self-loops.

    Instances are safe to share read-only across workers; all derived data
    (degrees, neighbor lists, edge count) is computed once at construction.
    """

    __slots__ = ("n", "mult", "degrees", "nbrs", "edge_count")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not isinstance(n, int) or n < 1:
            raise GraphStructureError(f"vertex count must be a positive integer, got {n!r}")
        m = [[0] * n for _ in range(n)]
        for item in edges:
            try:
                u, v, k = item
            except (TypeError, ValueError):
                raise GraphStructureError(
                    f"edge must be a (u, v, multiplicity) triple, got {item!r}"
                ) from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphStructureError(f"edge endpoints must be integers, got {item!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge endpoint out of range [0, {n}) in {item!r}")
            if u == v:
                raise GraphStructureError(f"self-loop at vertex {u} is not allowed")
            if not isinstance(k, int) or k < 1:
                raise GraphStructureError(f"edge multiplicity must be a positive integer, got {item!r}")
            m[u][v] += k
            m[v][u] += k
        self.n = n
        self.mult = tuple(tuple(row) for row in m)
        self.degrees = tuple(sum(row) for row in self.mult)
        self.nbrs = tuple(
            tuple((u, row[u]) for u in range(n) if row[u]) for row in self.mult
        )
        self.edge_count = sum(self.degrees) // 2

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v!r} out of range [0, {self.n})")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def degree_vector(self) -> tuple[int, ...]:
        """Per-vertex degrees, viewable as a divisor of degree 2*edge_count."""
        return self.degrees

    def multiplicity(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.mult[u][v]

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """(vertex, multiplicity) pairs for every neighbor of v."""
        self._check_vertex(v)
        return self.nbrs[v]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        """Unordered pairs with positive multiplicity, as sorted (u, v, m) triples."""
        return [
            (u, v, self.mult[u][v])
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.mult[u][v]
        ]

    def is_connected(self) -> bool:
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for u, _m in self.nbrs[v]:
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    stack.append(u)
        return count == self.n

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError("operation requires a connected graph")

    def genus(self) -> int:
        """Cyclotomic number edge_count - n + 1; needs a connected graph."""
        self.require_connected()
        return self.edge_count - self.n + 1

    def is_simple(self) -> bool:
        return all(m <= 1 for row in self.mult for m in row)

    def require_simple(self) -> None:
        if not self.is_simple():
            raise GraphStructureError("operation requires a simple graph (all multiplicities <= 1)")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.mult == other.mult
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mult))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={self.edges()!r})"


def graph_to_text(g: Multigraph) -> str:
    """Text form: first line n, then one 'u v m' line per pair with m >= 1."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v} {m}" for u, v, m in g.edges())
    return "\n".join(lines) + "\n"


def graph_to_json(g: Multigraph) -> dict:
    return {"n": g.n, "edges": [[u, v, m] for u, v, m in g.edges()]}


def parse_graph(text: str) -> Multigraph:
    """Parse either the text format or its JSON equivalent.

    Text: first line n, remaining lines 'u v m' (0-based, m >= 1); blank lines
    and '#' comments are ignored.  JSON: {"n": ..., "edges": [[u, v, m], ...]}.
    Repeated pairs accumulate their multiplicities.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON graph: {exc}") from None
        return graph_from_json(obj)
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"edge line must be 'u v m', got {ln!r}")
        try:
            u, v, m = (int(p) for p in parts)
        except ValueError:
            raise FormatError(f"edge line must contain integers, got {ln!r}") from None
        edges.append((u, v, m))
    try:
        return Multigraph(n, edges)
    except GraphStructureError as exc:
        raise FormatError(str(exc)) from None
    except InvalidVertexError as exc:
        raise FormatError(str(exc)) from None


def graph_from_json(obj: object) -> Multigraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise FormatError('JSON graph must be an object with "n" and "edges"')
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise FormatError('"edges" must be a list of [u, v, m] triples')
    triples = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 3:
            raise FormatError(f"edge entry must be a [u, v, m] triple, got {e!r}")
        triples.append(tuple(e))
    try:
        return Multigraph(n, triples)
    except GraphStructureError as exc:
        raise FormatError(str(exc)) from None
    except InvalidVertexError as exc:
        raise FormatError(str(exc)) from None
