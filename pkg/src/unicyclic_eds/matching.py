"""Exact matching numbers for forests and unicyclic graphs.

The production path reduces a unicyclic matching to two forest matchings via
a case split on one cycle edge; a branch-and-bound oracle over independent
edge sets provides the independent ground truth for tests, and a Berge-style
augmenting-path search certifies maximality of explicit matchings.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

from .graph import Graph, GraphError, delete_vertices, is_connected, unique_cycle

Matching = Tuple[Tuple[int, int], ...]

_ORACLE_MAX = 16
_ENUMERATION_MAX = 12


def normalize_matching(g: Graph, pairs: Iterable[Tuple[int, int]]) -> Matching:
    """Validate ``pairs`` as a matching in g and return it in sorted form."""
    edges = []
    used = set()
    for u, v in pairs:
        e = (u, v) if u < v else (v, u)
        if not g.has_edge(*e):
            raise GraphError(f"matching edge ({e[0]}, {e[1]}) is not in the graph")
        if e[0] in used or e[1] in used:
            raise GraphError(f"edges are not vertex-disjoint at ({e[0]}, {e[1]})")
        used.update(e)
        edges.append(e)
    return tuple(sorted(edges))


def matching_number_tree(g: Graph) -> int:
    """Maximum matching size of a forest, by greedy leaf matching.

    Repeatedly matches a leaf to its neighbor and deletes both; isolated
    vertices are dropped. Connectivity is not required. Raises if the input
    contains a cycle.
    """
    adj = [set(nb) for nb in g.adj]
    leaves = [v for v in range(g.n) if len(adj[v]) == 1]
    matched = 0
    for u in leaves:
        if len(adj[u]) != 1:
            continue  # became isolated in the meantime
        v = adj[u].pop()
        adj[v].discard(u)
        for w in adj[v]:
            adj[w].discard(v)
            if len(adj[w]) == 1:
                leaves.append(w)
        adj[v].clear()
        matched += 1
    if any(adj[v] for v in range(g.n)):
        raise GraphError("input contains a cycle; not a forest")
    return matched


def matching_number_unicyclic(g: Graph) -> int:
    """Maximum matching size of a connected unicyclic graph.

    A maximum matching either omits a fixed cycle edge xy (match the graph
    minus that edge, a tree) or contains it (match the graph minus both
    endpoints, a forest, plus one).
    """
    if len(g.edges) != g.n or not is_connected(g):
        raise GraphError("graph is not connected unicyclic (|E| must equal |V|)")
    cycle = unique_cycle(g)
    x, y = cycle[0], cycle[1]
    e = (x, y) if x < y else (y, x)
    without_edge = Graph(g.n, tuple(p for p in g.edges if p != e))
    without_ends, _ = delete_vertices(g, (x, y))
    return max(matching_number_tree(without_edge),
               1 + matching_number_tree(without_ends))


def matching_number(g: Graph) -> int:
    """Dispatch on |E|: forest, unicyclic, or (small) general graph."""
    m = len(g.edges)
    if m <= g.n - 1:
        try:
            return matching_number_tree(g)
        except GraphError:
            return matching_number_oracle(g)  # disconnected but cyclic
    if m == g.n and is_connected(g):
        return matching_number_unicyclic(g)
    return matching_number_oracle(g)


def matching_number_oracle(g: Graph) -> int:
    """Exhaustive branch-and-bound over independent edge sets (test oracle).

    Deterministic edge order; prunes with the floor(free vertices / 2) bound.
    """
    if g.n > _ORACLE_MAX:
        raise GraphError(f"oracle supports at most {_ORACLE_MAX} vertices")
    edges = g.edges
    total = len(edges)
    best = 0

    def extend(i: int, used: int, size: int, free: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + min(total - i, free // 2) <= best:
            return
        for j in range(i, total):
            u, v = edges[j]
            if (used >> u | used >> v) & 1:
                continue
            extend(j + 1, used | (1 << u) | (1 << v), size + 1, free - 2)

    extend(0, 0, 0, g.n)
    return best


def is_maximum_matching(g: Graph, pairs: Iterable[Tuple[int, int]]) -> bool:
    """Berge test: a matching is maximum iff no augmenting path exists.

    Runs an exhaustive backtracking search over simple alternating paths from
    every unsaturated vertex, so it is exact (blossoms cannot hide a path from
    a full search); exponential in the worst case but fine at these sizes.
    """
    matching = normalize_matching(g, pairs)
    mate = {}
    for u, v in matching:
        mate[u] = v
        mate[v] = u

    def augments_from(v: int, visited: set) -> bool:
        # invariant: the next edge on the path must be a non-matching edge
        for w in g.adj[v]:
            if w in visited or mate.get(v) == w:
                continue
            if w not in mate:
                return True
            x = mate[w]
            if x in visited:
                continue
            visited.add(w)
            visited.add(x)
            if augments_from(x, visited):
                return True
            visited.discard(w)
            visited.discard(x)
        return False

    for s in range(g.n):
        if s not in mate and augments_from(s, {s}):
            return False
    return True


def maximum_matchings(g: Graph):
    """Yield every maximum matching of g (sorted edge tuples), in a fixed order."""
    if g.n > _ENUMERATION_MAX:
        raise GraphError(
            f"maximum-matching enumeration supports at most {_ENUMERATION_MAX} vertices")
    target = matching_number(g)
    edges = g.edges
    total = len(edges)

    def extend(i: int, used: int, chosen: List[Tuple[int, int]]):
        if len(chosen) == target:
            yield tuple(chosen)
            return
        if len(chosen) + (total - i) < target:
            return
        for j in range(i, total):
            u, v = edges[j]
            if (used >> u | used >> v) & 1:
                continue
            chosen.append(edges[j])
            yield from extend(j + 1, used | (1 << u) | (1 << v), chosen)
            chosen.pop()

    yield from extend(0, 0, [])


def pendant_unsaturated_witness(g: Graph) -> Optional[Tuple[Matching, int]]:
    """Find a maximum matching together with a pendant vertex it leaves free.

    Preconditions: g connected unicyclic, not a cycle, and n > 2m (no perfect
    matching). Searches all maximum matchings; returns None only if no
    witness exists among them.
    """
    if len(g.edges) != g.n or not is_connected(g):
        raise GraphError("graph is not connected unicyclic")
    pendants = [v for v in range(g.n) if len(g.adj[v]) == 1]
    if not pendants:
        raise GraphError("graph is a cycle; witness search needs a pendant vertex")
    m = matching_number_unicyclic(g)
    if g.n <= 2 * m:
        raise GraphError("graph has a perfect matching; no unsaturated vertex exists")
    for matching in maximum_matchings(g):
        saturated = set()
        for u, v in matching:
            saturated.add(u)
            saturated.add(v)
        for p in pendants:
            if p not in saturated:
                return matching, p
    return None
