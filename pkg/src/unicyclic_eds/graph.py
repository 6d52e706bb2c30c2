"""Immutable simple-graph representation and exact distance invariants.

Everything here is integer arithmetic over unweighted shortest paths: no
floats anywhere. Graphs are small (desk scale), so all-pairs distances are
computed with one BFS per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its domain."""


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    Keeps both views of the edge set: per-vertex sorted neighbor tuples
    (``adj``) and a sorted tuple of (u, v) pairs with u < v (``edges``).
    """

    __slots__ = ("n", "adj", "edges")

    def __init__(self, order: int, edges: Iterable[Tuple[int, int]]):
        if order < 1:
            raise GraphError("graph order must be at least 1")
        seen = set()
        pairs = []
        for u, v in edges:
            if not (0 <= u < order) or not (0 <= v < order):
                raise GraphError(f"vertex index out of range [0, {order}): ({u}, {v})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            pairs.append(e)
        pairs.sort()
        neighbors = [[] for _ in range(order)]
        for u, v in pairs:
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(self, "n", order)
        object.__setattr__(self, "adj", tuple(tuple(sorted(nb)) for nb in neighbors))
        object.__setattr__(self, "edges", tuple(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def build_graph(order: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Validating constructor; rejects loops, duplicates and bad indices."""
    return Graph(order, edges)


# -- traversal ---------------------------------------------------------------

def _bfs(adj: Sequence[Sequence[int]], source: int, n: int):
    dist = [-1] * n
    dist[source] = 0
    queue = [source]
    for v in queue:
        d = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = d
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> Tuple[int, ...]:
    """Exact shortest-path distances from ``source``; errors if g is disconnected."""
    dist = _bfs(g.adj, source, g.n)
    if -1 in dist:
        raise GraphError("graph is disconnected; distance invariants are undefined")
    return tuple(dist)


def is_connected(g: Graph) -> bool:
    return g.n == 1 or -1 not in _bfs(g.adj, 0, g.n)


def all_distances(g: Graph):
    """One distance row per vertex (n BFS runs); errors on disconnected input."""
    return [bfs_distances(g, v) for v in range(g.n)]


# -- scalar invariants -------------------------------------------------------

def eccentricity(g: Graph, v: int) -> int:
    return max(bfs_distances(g, v))


def transmission(g: Graph, v: int) -> int:
    """Sum of distances from v to every vertex."""
    return sum(bfs_distances(g, v))


def eds(g: Graph) -> int:
    """Eccentric distance sum: sum over vertices of eccentricity * transmission."""
    adj = g.adj
    n = g.n
    total = 0
    for v in range(n):
        dist = _bfs(adj, v, n)
        ecc = 0
        tr = 0
        for d in dist:
            if d < 0:
                raise GraphError("graph is disconnected; distance invariants are undefined")
            tr += d
            if d > ecc:
                ecc = d
        total += ecc * tr
    return total


def eds_by_pairs(g: Graph) -> int:
    """EDS in its pair form: sum over unordered pairs of (ecc(u)+ecc(v)) * d(u,v).

    Kept separate from :func:`eds` so the two routes can be checked against
    each other.
    """
    rows = all_distances(g)
    ecc = [max(r) for r in rows]
    total = 0
    for u in range(g.n):
        row = rows[u]
        eu = ecc[u]
        for v in range(u + 1, g.n):
            total += (eu + ecc[v]) * row[v]
    return total


def wiener(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs."""
    return sum(transmission(g, v) for v in range(g.n)) // 2


def degree_distance(g: Graph) -> int:
    """Sum over unordered pairs of (deg(u)+deg(v)) * d(u,v)."""
    return sum(len(g.adj[v]) * transmission(g, v) for v in range(g.n))


def max_degree(g: Graph) -> int:
    return max(len(nb) for nb in g.adj)


def unique_cycle(g: Graph) -> Optional[Tuple[int, ...]]:
    """The unique cycle of a connected unicyclic graph, in a fixed orientation.

    Returns None for a tree. The orientation starts at the lowest-indexed
    cycle vertex and proceeds toward its lower-indexed cycle neighbor, so the
    result is deterministic. Graphs with more than one cycle are out of
    domain and raise.
    """
    if not is_connected(g):
        raise GraphError("graph is disconnected")
    m = len(g.edges)
    if m == g.n - 1:
        return None
    if m != g.n:
        raise GraphError("graph has more than one cycle (|E| > |V|)")
    # strip leaves until only the cycle remains
    deg = [len(nb) for nb in g.adj]
    queue = [v for v in range(g.n) if deg[v] == 1]
    removed = [False] * g.n
    for v in queue:
        removed[v] = True
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    members = [v for v in range(g.n) if not removed[v]]
    start = members[0]
    on_cycle = set(members)
    second = min(w for w in g.adj[start] if w in on_cycle)
    cycle = [start, second]
    prev, cur = start, second
    while True:
        nxt = next(w for w in g.adj[cur] if w in on_cycle and w != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return tuple(cycle)


def girth(g: Graph) -> int:
    """Length of a shortest cycle; 0 when the graph is a forest."""
    if len(g.edges) == g.n - 1 and is_connected(g):
        return 0
    cyc = None
    if is_connected(g) and len(g.edges) == g.n:
        cyc = unique_cycle(g)
        return len(cyc)
    # general fallback: shortest cycle through each edge
    best = 0
    for u, v in g.edges:
        adj = [tuple(w for w in nb if not ((a == u and w == v) or (a == v and w == u)))
               for a, nb in enumerate(g.adj)]
        dist = _bfs(adj, u, g.n)
        if dist[v] >= 0 and (best == 0 or dist[v] + 1 < best):
            best = dist[v] + 1
    return best


# -- derived graphs ----------------------------------------------------------

def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u}, {v}) to delete")
    e = (u, v) if u < v else (v, u)
    return Graph(g.n, tuple(p for p in g.edges if p != e))


def induced_subgraph(g: Graph, keep: Iterable[int]):
    """Subgraph on ``keep`` with compact relabeling.

    Returns (subgraph, old_to_new) where old_to_new maps every kept original
    index to its new index (kept vertices stay in ascending order).
    """
    kept = sorted(set(keep))
    old_to_new = {v: i for i, v in enumerate(kept)}
    edges = [(old_to_new[u], old_to_new[v]) for u, v in g.edges
             if u in old_to_new and v in old_to_new]
    return Graph(len(kept), edges), old_to_new


def delete_vertices(g: Graph, drop: Iterable[int]):
    dropped = set(drop)
    return induced_subgraph(g, (v for v in range(g.n) if v not in dropped))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the permutation new_index = perm[old_index]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling is not a permutation of the vertex set")
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


# -- full report -------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    """Per-vertex eccentricities/transmissions plus every scalar invariant."""

    order: int
    eccentricities: Tuple[int, ...]
    transmissions: Tuple[int, ...]
    eds: int
    wiener: int
    degree_distance: int
    matching_number: int
    girth: int
    max_degree: int
    radius: int
    diameter: int


def invariant_report(g: Graph) -> InvariantReport:
    """Compute every invariant of a connected graph in one pass.

    The two EDS routes (vertex form and pair form) are cross-checked here on
    every call.
    """
    from .matching import matching_number  # local import: matching builds on this module

    rows = all_distances(g)
    eccs = tuple(max(r) for r in rows)
    trs = tuple(sum(r) for r in rows)
    eds_value = sum(e * t for e, t in zip(eccs, trs))
    pair_value = 0
    for u in range(g.n):
        row = rows[u]
        for v in range(u + 1, g.n):
            pair_value += (eccs[u] + eccs[v]) * row[v]
    if pair_value != eds_value:
        raise GraphError("internal error: EDS vertex form disagrees with pair form")
    return InvariantReport(
        order=g.n,
        eccentricities=eccs,
        transmissions=trs,
        eds=eds_value,
        wiener=sum(trs) // 2,
        degree_distance=sum(len(g.adj[v]) * trs[v] for v in range(g.n)),
        matching_number=matching_number(g),
        girth=girth(g),
        max_degree=max_degree(g),
        radius=min(eccs),
        diameter=max(eccs),
    )


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: '#' comments, 'n <order>', then 'u v' lines."""
    order = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphError(f"line {lineno}: expected 'n <order>', got {line!r}")
            try:
                order = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: order is not an integer: {parts[1]!r}") from None
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: endpoints are not integers: {line!r}") from None
        if not (0 <= u < order) or not (0 <= v < order):
            raise GraphError(f"line {lineno}: vertex index out of range [0, {order}): {line!r}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        edges.append(e)
    if order is None:
        raise GraphError("no 'n <order>' header line found")
    return Graph(order, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
