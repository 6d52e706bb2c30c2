"""Isomorphism-free generation of unicyclic graphs via canonical codes.

A connected unicyclic graph is its unique cycle plus one rooted pendant tree
per cycle vertex, so an isomorphism class is exactly a cycle length k
together with a k-tuple of rooted-tree codes, up to the dihedral symmetries
of the cycle. Rooted trees use the classic nested-parentheses canonical form
(children sorted); the class label is the lexicographically smallest tuple
over all 2k rotations/reflections, reflection meaning reversal about
position 0, i.e. (t0, t_{k-1}, ..., t1).

Generation simply enumerates all tuples and keeps the dihedrally minimal
ones; the check is cheap at desk scale and the output is deterministic
(ascending cycle length, then lexicographic tuple order). A brute-force
labeled enumerator plus permutation isomorphism gives the independent ground
truth for small n.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

from .graph import Graph, GraphError, is_connected, unique_cycle

LEAF = "()"

_LABELED_ORACLE_MAX = 7


# -- rooted tree codes -------------------------------------------------------

def rooted_tree_code(g: Graph, root: int) -> str:
    """Canonical code of the tree component of ``root`` (children sorted).

    Only the component containing the root matters; a cycle inside it is an
    error.
    """
    visited = {root}

    def code_of(v: int, parent: int) -> str:
        children = []
        for w in g.adj[v]:
            if w == parent:
                continue
            if w in visited:
                raise GraphError("cycle detected; rooted codes need an acyclic component")
            visited.add(w)
            children.append(code_of(w, v))
        children.sort()
        return "(" + "".join(children) + ")"

    return code_of(root, -1)


_CODES_BY_SIZE: List[Tuple[str, ...]] = [(), (LEAF,)]
_ITEMS: List[Tuple[int, str]] = []          # (size, code), sizes ascending
_ITEMS_END_FOR_BUDGET: List[int] = [0, 0]   # first index whose size exceeds the budget
_TABLE_LOCK = threading.Lock()              # memo growth; lookups stay lock-free


def _extend_tables(size: int) -> None:
    if len(_CODES_BY_SIZE) > size:
        return
    with _TABLE_LOCK:
        _extend_tables_locked(size)


def _extend_tables_locked(size: int) -> None:
    while len(_CODES_BY_SIZE) <= size:
        s = len(_CODES_BY_SIZE)
        _ITEMS.extend((s - 1, code) for code in _CODES_BY_SIZE[s - 1])
        _ITEMS_END_FOR_BUDGET.append(len(_ITEMS))
        out: List[str] = []
        chosen: List[str] = []

        def extend(remaining: int, min_index: int) -> None:
            if remaining == 0:
                out.append("(" + "".join(sorted(chosen)) + ")")
                return
            for idx in range(min_index, _ITEMS_END_FOR_BUDGET[remaining + 1]):
                item_size, item_code = _ITEMS[idx]
                chosen.append(item_code)
                extend(remaining - item_size, idx)
                chosen.pop()

        extend(s - 1, 0)
        out.sort()
        _CODES_BY_SIZE.append(tuple(out))


def codes_for_size(size: int) -> Tuple[str, ...]:
    """All rooted-tree codes on ``size`` vertices, one per isomorphism class."""
    if size < 1:
        raise GraphError("rooted trees need at least one vertex")
    _extend_tables(size)
    return _CODES_BY_SIZE[size]


def enumerate_rooted_trees(size: int) -> Iterator[str]:
    return iter(codes_for_size(size))


@lru_cache(maxsize=None)
def split_children(code: str) -> Tuple[str, ...]:
    """Top-level child codes of a rooted-tree code."""
    inner = code[1:-1]
    children = []
    depth = 0
    start = 0
    for i, ch in enumerate(inner):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            children.append(inner[start:i + 1])
            start = i + 1
    return tuple(children)


@lru_cache(maxsize=None)
def tree_stats(code: str) -> Tuple[int, int, int, int, int]:
    """(size, nu, nu_root_free, root_degree, max_non_root_degree) for one code.

    nu is the maximum matching size of the tree; nu_root_free the maximum
    over matchings that leave the root unmatched. Degrees are within the
    tree only (the cycle adds 2 at the root once attached).
    """
    children = split_children(code)
    size = len(code) // 2
    nu_free = 0
    gain = 0  # 1 when matching the root to some child helps
    max_inner = 0
    for child in children:
        c_size, c_nu, c_nu_free, c_root_deg, c_inner = tree_stats(child)
        nu_free += c_nu
        if c_nu == c_nu_free:
            gain = 1
        max_inner = max(max_inner, c_root_deg + 1, c_inner)
    return size, nu_free + gain, nu_free, len(children), max_inner


# -- class labels ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class UnicyclicCode:
    """Isomorphism-class label: cycle length + dihedrally minimal tree tuple."""

    cycle_len: int
    trees: Tuple[str, ...]

    @property
    def order(self) -> int:
        return sum(len(t) // 2 for t in self.trees)

    def text(self) -> str:
        return f"{self.cycle_len}:" + ",".join(self.trees)


def parse_code_text(text: str) -> "UnicyclicCode":
    head, _, body = text.partition(":")
    trees = tuple(body.split(","))
    code = UnicyclicCode(int(head), trees)
    if len(trees) != code.cycle_len or dihedral_min(trees) != trees:
        raise GraphError(f"not a canonical code: {text!r}")
    return code


def dihedral_min(trees: Tuple[str, ...]) -> Tuple[str, ...]:
    """Lexicographic minimum over the 2k rotations/reflections of the tuple."""
    k = len(trees)
    best = trees
    doubled = trees + trees
    for i in range(1, k):
        cand = doubled[i:i + k]
        if cand < best:
            best = cand
    rev = trees[::-1]
    doubled = rev + rev
    for i in range(k):
        cand = doubled[i:i + k]
        if cand < best:
            best = cand
    return best


def _is_dihedral_min(trees: Tuple[str, ...], k: int) -> bool:
    doubled = trees + trees
    for i in range(1, k):
        if doubled[i:i + k] < trees:
            return False
    rev = trees[::-1]
    doubled = rev + rev
    for i in range(k):
        if doubled[i:i + k] < trees:
            return False
    return True


def unicyclic_canonical_code(g: Graph) -> UnicyclicCode:
    """Class label of a connected unicyclic graph; equal labels iff isomorphic."""
    cycle = unique_cycle(g)
    if cycle is None:
        raise GraphError("graph is a tree, not unicyclic")
    k = len(cycle)
    on_cycle = set(cycle)
    trees = []
    for idx, r in enumerate(cycle):
        prev_v = cycle[idx - 1]
        next_v = cycle[(idx + 1) % k]

        def code_of(v: int, parent: int) -> str:
            children = []
            for w in g.adj[v]:
                if w == parent or (v == r and w in (prev_v, next_v)):
                    continue
                children.append(code_of(w, v))
            children.sort()
            return "(" + "".join(children) + ")"

        trees.append(code_of(r, -1))
    return UnicyclicCode(k, dihedral_min(tuple(trees)))


def code_to_graph(code: UnicyclicCode) -> Graph:
    """Deterministic representative of a class: cycle 0..k-1, trees in order."""
    k = code.cycle_len
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k

    def attach(parent: int, child_code: str) -> None:
        nonlocal nxt
        for sub in split_children(child_code):
            v = nxt
            nxt += 1
            edges.append((parent, v))
            attach(v, sub)

    for i in range(k):
        attach(i, code.trees[i])
    return Graph(code.order, edges)


# -- matching/degree filters straight from the code --------------------------

def _segment_best(stats, lo: int, hi: int) -> int:
    """Maximum matching of the path segment stats[lo..hi] with pendant trees.

    Classic two-state DP: vertex i either stays off the path edges (its tree
    contributes nu) or is matched along edge (i-1, i) (both trees contribute
    their root-free optimum).
    """
    if lo > hi:
        return 0
    best_two_back = 0        # optimum for the prefix ending two vertices back
    prev_off = 0             # optimum with previous vertex off the path edges
    prev_on = -1             # optimum with previous vertex matched on the path
    for i in range(lo, hi + 1):
        nu, nu_free = stats[i]
        best_prev = prev_off if prev_off >= prev_on else prev_on
        cur_off = nu + best_prev
        cur_on = 1 + nu_free + stats[i - 1][1] + best_two_back if i > lo else -1
        best_two_back = best_prev
        prev_off, prev_on = cur_off, cur_on
    return max(prev_off, prev_on)


def code_matching_number(k: int, trees: Tuple[str, ...]) -> int:
    """Matching number of the class, from per-tree matching stats plus cycle DP."""
    stats = []
    for t in trees:
        _, nu, nu_free, _, _ = tree_stats(t)
        stats.append((nu, nu_free))
    # vertex 0 not on a cycle edge / edge (0,1) used / edge (0,k-1) used
    best = stats[0][0] + _segment_best(stats, 1, k - 1)
    cand = 1 + stats[0][1] + stats[1][1] + _segment_best(stats, 2, k - 1)
    if cand > best:
        best = cand
    cand = 1 + stats[0][1] + stats[k - 1][1] + _segment_best(stats, 1, k - 2)
    if cand > best:
        best = cand
    return best


def code_max_degree(k: int, trees: Tuple[str, ...]) -> int:
    best = 0
    for t in trees:
        _, _, _, root_deg, inner = tree_stats(t)
        cand = root_deg + 2
        if inner > cand:
            cand = inner
        if cand > best:
            best = cand
    return best


# -- the generator -----------------------------------------------------------

def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_unicyclic(
    n: int,
    *,
    girth: Optional[int] = None,
    matching: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> Iterator[Tuple[UnicyclicCode, Graph]]:
    """Yield one (code, graph) pair per isomorphism class of unicyclic graphs.

    Optional exact filters select by girth, matching number, or maximum
    degree. Output order is deterministic: ascending cycle length, then
    lexicographic tree-tuple order. Graphs are built lazily per yielded
    class.
    """
    if n < 3:
        raise GraphError("unicyclic graphs need at least 3 vertices")
    if girth is not None and not 3 <= girth <= n:
        return
    lengths = (girth,) if girth is not None else range(3, n + 1)
    for k in lengths:
        codes_for_size(n - k + 1)  # warm the memo up front
        survivors: List[Tuple[str, ...]] = []
        for sizes in _compositions(n, k):
            pools = [_CODES_BY_SIZE[s] for s in sizes]
            for combo in product(*pools):
                if min(combo) != combo[0]:
                    continue  # the minimal tuple must start with a minimal code
                if not _is_dihedral_min(combo, k):
                    continue
                if matching is not None and code_matching_number(k, combo) != matching:
                    continue
                if max_degree is not None and code_max_degree(k, combo) != max_degree:
                    continue
                survivors.append(combo)
        survivors.sort()
        for trees in survivors:
            code = UnicyclicCode(k, trees)
            yield code, code_to_graph(code)


def count_unicyclic(n: int, **filters) -> int:
    return sum(1 for _ in enumerate_unicyclic(n, **filters))


# -- brute-force labeled oracle ----------------------------------------------

def _connected_edge_subset(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return components == 1


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking over degree-compatible mappings."""
    n = g1.n
    if n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    deg1 = [len(nb) for nb in g1.adj]
    deg2 = [len(nb) for nb in g2.adj]
    if sorted(deg1) != sorted(deg2):
        return False
    adj2 = [set(nb) for nb in g2.adj]
    order = sorted(range(n), key=lambda v: -deg1[v])
    mapping = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            ok = True
            for j in range(i):
                x = order[j]
                if (x in g1.adj[v]) != (mapping[x] in adj2[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if place(i + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return place(0)


def _oracle_fingerprint(g: Graph) -> tuple:
    rows = []
    for v in range(g.n):
        dist = [-1] * g.n
        dist[v] = 0
        queue = [v]
        for x in queue:
            d = dist[x] + 1
            for w in g.adj[x]:
                if dist[w] < 0:
                    dist[w] = d
                    queue.append(w)
        rows.append((len(g.adj[v]), max(dist), sum(dist)))
    return tuple(sorted(rows))


def labeled_oracle_enumerate(n: int) -> List[Graph]:
    """One representative per isomorphism class, found the slow certain way.

    Scans every n-edge subset of the complete graph's edges, keeps the
    connected ones, and deduplicates with brute-force permutation
    isomorphism (invariant fingerprints only narrow the candidate
    representatives; every merge decision is an explicit isomorphism check).
    """
    if n > _LABELED_ORACLE_MAX:
        raise GraphError(f"labeled oracle supports at most {_LABELED_ORACLE_MAX} vertices")
    all_pairs = list(combinations(range(n), 2))
    reps: List[Graph] = []
    by_fingerprint: Dict[tuple, List[Graph]] = {}
    for subset in combinations(all_pairs, n):
        if not _connected_edge_subset(n, subset):
            continue
        g = Graph(n, subset)
        fp = _oracle_fingerprint(g)
        bucket = by_fingerprint.setdefault(fp, [])
        if any(brute_force_isomorphic(g, rep) for rep in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps


# -- graph6 ------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Encode in the standard graph6 format (header-free, single line)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        raise GraphError("graph6 encoding supports at most 258047 vertices here")
    bits = []
    adj = [set(nb) for nb in g.adj]
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if col in adj[row] else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return head + "".join(chars)


def graph6_decode(line: str) -> Graph:
    line = line.strip()
    if not line:
        raise GraphError("empty graph6 line")
    if line[0] == "~":
        if len(line) < 4:
            raise GraphError("truncated graph6 header")
        n = 0
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    if n < 1:
        raise GraphError("invalid graph6 order")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body length {len(body)}, expected {need}")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphError(f"invalid graph6 character {ch!r}")
        bits.extend((value >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    return Graph(n, edges)
