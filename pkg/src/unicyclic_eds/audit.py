"""Enumeration-backed verification of the audited catalog of extremal claims.

This is the judgment layer: it ranks isomorphism classes by exact EDS,
reproduces the embedded reference tables, replays every theorem- and
lemma-shaped claim on finite ranges, and measures the printed closed forms
against direct computation. Findings never get patched away: misprints are
reported as errata, and a claim that fails stays failed in the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .enumeration import UnicyclicCode, enumerate_unicyclic, unicyclic_canonical_code
from .families import FamilyError, build_family, make_hnk, make_named, make_sun, make_unk, parse_family_spec
from .formulas import FormulaId, Prediction, eval_formula, predicted_extremal
from .graph import (
    Graph,
    bfs_distances,
    delete_vertices,
    eds,
    max_degree,
    unique_cycle,
)
from .matching import matching_number_unicyclic, pendant_unsaturated_witness
from .tables import TableCell, table_cells

Exact = Union[int, Fraction]


class AuditError(ValueError):
    """Invalid audit request (bad identifier or range)."""


# -- ranking -------------------------------------------------------------------

@dataclass(frozen=True)
class RankingRecord:
    """Minimal and second-minimal distinct EDS values over one (n, m) class."""

    n: int
    m: int
    classes_examined: int
    min_value: int
    min_codes: Tuple[UnicyclicCode, ...]
    second_value: Optional[int]
    second_codes: Tuple[UnicyclicCode, ...]


_RANK_CACHE: Dict[Tuple[int, int], RankingRecord] = {}


def rank_classes(n: int, m: int) -> RankingRecord:
    """Rank every unicyclic isomorphism class with matching number m by EDS.

    "Second" means the second smallest distinct value; all attaining classes
    are reported for both values. Results are cached (they are pure).
    """
    key = (n, m)
    if key in _RANK_CACHE:
        return _RANK_CACHE[key]
    if n < 4 or m < 2 or 2 * m > n:
        raise AuditError(f"ranking needs n >= 4 and 2 <= m <= n/2, got n={n} m={m}")
    best: Optional[int] = None
    second: Optional[int] = None
    best_codes: List[UnicyclicCode] = []
    second_codes: List[UnicyclicCode] = []
    count = 0
    for code, g in enumerate_unicyclic(n, matching=m):
        count += 1
        value = eds(g)
        if best is None or value < best:
            if best is not None and (second is None or best < second):
                second, second_codes = best, best_codes
            best, best_codes = value, [code]
        elif value == best:
            best_codes.append(code)
        elif second is None or value < second:
            second, second_codes = value, [code]
        elif value == second:
            second_codes.append(code)
    if best is None:
        raise AuditError(f"no unicyclic graph has n={n} and matching number {m}")
    record = RankingRecord(n, m, count, best, tuple(sorted(best_codes)),
                           second, tuple(sorted(second_codes)))
    _RANK_CACHE[key] = record
    return record


def _family_code(family_text: str) -> UnicyclicCode:
    return unicyclic_canonical_code(build_family(parse_family_spec(family_text)))


def _prediction_codes(prediction: Prediction) -> Tuple[UnicyclicCode, ...]:
    return tuple(sorted(unicyclic_canonical_code(build_family(f))
                        for f in prediction.families))


# -- table reproduction ----------------------------------------------------------

@dataclass(frozen=True)
class CellReport:
    """Outcome of checking one reference-table cell against enumeration."""

    n: int
    m: int
    rank: int
    printed_value: int
    printed_family: str
    computed_value: Optional[int]
    computed_families: Tuple[str, ...]
    status: str        # match | erratum-known | value-mismatch | graph-mismatch
    note: str = ""


def _check_cell(cell: TableCell) -> CellReport:
    record = rank_classes(cell.n, cell.m)
    if cell.rank == 1:
        value, codes = record.min_value, record.min_codes
    else:
        value, codes = record.second_value, record.second_codes
    expected_code = _family_code(cell.family)
    code_texts = tuple(c.text() for c in codes)
    graphs_match = codes == (expected_code,)
    if cell.corrected_value is not None:
        if value == cell.corrected_value and graphs_match:
            status, note = "erratum-known", cell.erratum or ""
        elif value != cell.corrected_value:
            status, note = "value-mismatch", "disagrees with the recorded correction"
        else:
            status, note = "graph-mismatch", "disagrees with the recorded correction"
    elif value != cell.value:
        status, note = "value-mismatch", ""
    elif not graphs_match:
        status, note = "graph-mismatch", ""
    else:
        status, note = "match", ""
    return CellReport(cell.n, cell.m, cell.rank, cell.value, cell.family,
                      value, code_texts, status, note)


def reproduce_tables(n_max: Optional[int] = None,
                     rank: Optional[int] = None) -> List[CellReport]:
    """Check every embedded table cell (optionally capped by n or one rank)."""
    return [_check_cell(cell) for cell in table_cells(rank=rank, n_max=n_max)]


def tables_pass(reports: Sequence[CellReport]) -> bool:
    return all(r.status in ("match", "erratum-known") for r in reports)


# -- theorem checks ---------------------------------------------------------------

THEOREM_IDS = ("3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7")
LEMMA_IDS = ("2.1", "2.3", "2.4", "2.5", "2.6")


@dataclass(frozen=True)
class TheoremCellReport:
    n: int
    m: int
    rank: int
    predicted_value: Optional[int]
    predicted_families: Tuple[str, ...]
    computed_value: Optional[int]
    computed_families: Tuple[str, ...]
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one theorem or lemma sweep."""

    id: str
    passed: bool
    items: Tuple[str, ...]        # one line per checked unit
    failures: Tuple[str, ...]
    findings: Tuple[str, ...]     # expected anomalies (documented errata, gap cases)


def _theorem_cells(tid: str, n_max: int, m_max: int):
    cells = []
    if tid == "3.1":
        cells = [(2 * m, m, 1) for m in range(4, m_max + 1) if 2 * m <= n_max]
    elif tid == "3.2":
        cells = [(2 * m, m, 2) for m in range(5, m_max + 1) if 2 * m <= n_max]
    elif tid == "3.3":
        cells = [(n, 2, 1) for n in range(4, n_max + 1)]
        cells += [(n, 3, 1) for n in range(6, n_max + 1)]
        for m in range(4, m_max + 1):
            cells += [(n, m, 1) for n in range(max(9, 2 * m), n_max + 1)]
    elif tid == "3.4":
        cells = [(n, 2, 2) for n in range(5, n_max + 1)]
    elif tid == "3.5":
        cells = [(n, 3, 2) for n in range(6, n_max + 1)]
    elif tid == "3.6":
        cells = [(n, 4, 2) for n in range(9, n_max + 1)]
    elif tid == "3.7":
        for m in range(5, m_max + 1):
            cells += [(n, m, 2) for n in range(2 * m, n_max + 1)]
    else:
        raise AuditError(f"unknown theorem id {tid!r} (expected one of {THEOREM_IDS})")
    return cells


def check_theorem(tid: str, *, n_max: int = 12,
                  m_max: Optional[int] = None) -> CheckReport:
    """Replay one extremal claim: value and extremal-graph identity per cell.

    Every covered cell must match the enumeration ranking exactly, including
    uniqueness of the attaining class.
    """
    if m_max is None:
        m_max = n_max // 2
    cell_reports = []
    for n, m, rank in _theorem_cells(tid, n_max, m_max):
        cell_reports.append(check_prediction_cell(n, m, rank))
    items = tuple(_describe_theorem_cell(c) for c in cell_reports)
    failures = tuple(_describe_theorem_cell(c) for c in cell_reports if not c.ok)
    return CheckReport(tid, not failures, items, failures, ())


def check_prediction_cell(n: int, m: int, rank: int) -> TheoremCellReport:
    prediction = predicted_extremal(n, m, rank)
    record = rank_classes(n, m)
    if rank == 1:
        value, codes = record.min_value, record.min_codes
    else:
        value, codes = record.second_value, record.second_codes
    computed_families = tuple(c.text() for c in codes)
    if prediction is None:
        return TheoremCellReport(n, m, rank, None, (), value, computed_families,
                                 False, "regime not covered by the catalog")
    expected = _prediction_codes(prediction)
    ok = value == prediction.value and tuple(sorted(codes)) == expected
    return TheoremCellReport(
        n, m, rank, prediction.value,
        tuple(c.text() for c in expected),
        value, computed_families, ok,
        prediction.source)


def _describe_theorem_cell(c: TheoremCellReport) -> str:
    verdict = "ok" if c.ok else "FAIL"
    return (f"(n={c.n}, m={c.m}, rank={c.rank}) predicted {c.predicted_value} "
            f"computed {c.computed_value} attained by {', '.join(c.computed_families) or '-'} "
            f"[{verdict}] {c.note}".rstrip())


# -- pendant bounds (the deletion inequalities) ------------------------------------

@dataclass(frozen=True)
class BoundReport:
    """One instance of a pendant-deletion lower bound on EDS."""

    code: str                 # canonical code of the host graph
    u: int                    # pendant vertex
    v: int                    # its neighbor
    w: Optional[int]          # second vertex of the deleted pair (pair bound only)
    lhs: int
    rhs: int
    holds: bool
    equality: bool
    characterization_consistent: bool
    precondition_gap: bool


def check_pendant_bound(g: Graph, u: int) -> BoundReport:
    """Single-deletion bound: compare eds(g) against its claimed lower bound.

    Needs u pendant and max degree below n-1. The claimed equality condition
    (neighbor eccentricity 2 and eccentricities preserved after deleting u)
    is checked against the observed equality.
    """
    n = g.n
    if len(g.adj[u]) != 1:
        raise AuditError(f"vertex {u} is not pendant")
    if max_degree(g) >= n - 1:
        raise AuditError("bound requires max degree below n-1")
    v = g.adj[u][0]
    ecc = [max(bfs_distances(g, x)) for x in range(n)]
    minus_u, old_to_new = delete_vertices(g, [u])
    preserved = all(max(bfs_distances(minus_u, new)) == ecc[old]
                    for old, new in old_to_new.items())
    closed = set(g.adj[v]) | {v}
    rhs = (eds(minus_u) - 3 * len(g.adj[v]) + 9 * n - 10
           + 2 * sum(ecc[x] for x in g.adj[v] if x != u)
           + 3 * sum(ecc[x] for x in range(n) if x not in closed))
    lhs = eds(g)
    characterization = ecc[v] == 2 and preserved
    return BoundReport(
        code=unicyclic_canonical_code(g).text() if len(g.edges) == n else "",
        u=u, v=v, w=None, lhs=lhs, rhs=rhs,
        holds=lhs >= rhs, equality=lhs == rhs,
        characterization_consistent=(lhs == rhs) == characterization,
        precondition_gap=False)


def check_pendant_pair_bound(g: Graph, u: int) -> BoundReport:
    """Double-deletion bound, for a pendant u whose neighbor v has degree 2.

    When every vertex lies within the closed neighborhood of w (plus u), the
    bound's derivation loses its footing; the report flags that gap instead
    of asserting the inequality.
    """
    n = g.n
    if len(g.adj[u]) != 1:
        raise AuditError(f"vertex {u} is not pendant")
    v = g.adj[u][0]
    if len(g.adj[v]) != 2:
        raise AuditError("pair bound needs the pendant's neighbor to have degree 2")
    if max_degree(g) >= n - 1:
        raise AuditError("bound requires max degree below n-1")
    w = next(x for x in g.adj[v] if x != u)
    ecc = [max(bfs_distances(g, x)) for x in range(n)]
    minus_uv, old_to_new = delete_vertices(g, [u, v])
    preserved = all(max(bfs_distances(minus_uv, new)) == ecc[old]
                    for old, new in old_to_new.items())
    closed_w = set(g.adj[w]) | {w}
    outer = [x for x in range(n) if x not in closed_w and x != u]
    rhs = (eds(minus_uv) - 7 * len(g.adj[w]) + 25 * n - 54
           + 5 * sum(ecc[x] for x in closed_w if x != v)
           + 7 * sum(ecc[x] for x in outer))
    lhs = eds(g)
    characterization = ecc[w] == 2 and preserved
    return BoundReport(
        code=unicyclic_canonical_code(g).text() if len(g.edges) == n else "",
        u=u, v=v, w=w, lhs=lhs, rhs=rhs,
        holds=lhs >= rhs, equality=lhs == rhs,
        characterization_consistent=(lhs == rhs) == characterization,
        precondition_gap=not outer)


# -- lemma sweeps -------------------------------------------------------------------

def _pendant_trees(g: Graph):
    """(root, vertex set) of each pendant tree hanging off the cycle."""
    cycle = unique_cycle(g)
    on_cycle = set(cycle)
    out = []
    for r in cycle:
        component = {r}
        stack = [r]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in component or (x == r and y in on_cycle):
                    continue
                component.add(y)
                stack.append(y)
        out.append((r, component))
    return out


def _check_lemma_21(n_max: int, m_max: int) -> CheckReport:
    # deepest pendants of each pendant tree must sit next to a degree-2 vertex
    items, failures = [], []
    checked = 0
    for m in range(3, m_max + 1):
        if 2 * m > n_max:
            break
        for code, g in enumerate_unicyclic(2 * m, matching=m):
            for r, component in _pendant_trees(g):
                if len(component) == 1:
                    continue
                dist = bfs_distances(g, r)
                depth = max(dist[x] for x in component)
                if depth < 2:
                    continue
                for x in component:
                    if dist[x] == depth and len(g.adj[x]) == 1:
                        checked += 1
                        neighbor = g.adj[x][0]
                        if len(g.adj[neighbor]) != 2:
                            failures.append(
                                f"{code.text()}: deepest pendant {x} has a "
                                f"degree-{len(g.adj[neighbor])} neighbor")
        items.append(f"m={m}: perfect-matching classes on {2*m} vertices swept")
    items.append(f"{checked} deepest pendants checked")
    return CheckReport("2.1", not failures, tuple(items), tuple(failures), ())


def _check_lemma_23(n_max: int) -> CheckReport:
    items, failures = [], []
    for n in range(4, n_max + 1):
        checked = 0
        for code, g in enumerate_unicyclic(n):
            m = matching_number_unicyclic(g)
            if n <= 2 * m or all(len(nb) == 2 for nb in g.adj):
                continue
            checked += 1
            if pendant_unsaturated_witness(g) is None:
                failures.append(f"{code.text()}: every maximum matching saturates "
                                f"every pendant vertex")
        items.append(f"n={n}: {checked} graphs with n > 2m checked")
    return CheckReport("2.3", not failures, tuple(items), tuple(failures), ())


def _check_lemma_24(n_max: int) -> CheckReport:
    items, failures, findings = [], [], []
    single = pair = gap_count = 0
    for n in range(4, n_max + 1):
        for code, g in enumerate_unicyclic(n):
            if max_degree(g) >= n - 1:
                continue
            for u in range(n):
                if len(g.adj[u]) != 1:
                    continue
                report = check_pendant_bound(g, u)
                single += 1
                if not report.holds:
                    failures.append(f"single-deletion bound fails: {code.text()} u={u} "
                                    f"lhs={report.lhs} rhs={report.rhs}")
                if not report.characterization_consistent:
                    failures.append(f"single-deletion equality characterization wrong: "
                                    f"{code.text()} u={u}")
                v = g.adj[u][0]
                if len(g.adj[v]) != 2:
                    continue
                report = check_pendant_pair_bound(g, u)
                pair += 1
                if report.precondition_gap:
                    gap_count += 1
                    verdict = "inequality fails" if not report.holds else "inequality holds"
                    findings.append(f"gap case (everything within reach of w): "
                                    f"{code.text()} u={u} lhs={report.lhs} "
                                    f"rhs={report.rhs}; {verdict}")
                    continue
                if not report.holds:
                    failures.append(f"pair-deletion bound fails: {code.text()} u={u} "
                                    f"lhs={report.lhs} rhs={report.rhs}")
                if not report.characterization_consistent:
                    failures.append(f"pair-deletion equality characterization wrong: "
                                    f"{code.text()} u={u}")
    items.append(f"{single} single-deletion instances checked")
    items.append(f"{pair} pair-deletion instances checked ({gap_count} gap-flagged)")
    return CheckReport("2.4", not failures, tuple(items), tuple(failures), tuple(findings))


def _check_lemma_25(m_max: int) -> CheckReport:
    items, failures = [], []
    for m in range(5, m_max + 1):
        threshold = eval_formula(FormulaId.LEMMA25_THRESHOLD, m=m)
        for k in range(m + 1, 2 * m - 1):
            value = eds(make_unk(2 * m, k))
            if value <= threshold:
                failures.append(f"m={m} k={k}: {value} <= {threshold}")
        items.append(f"m={m}: girths {m+1}..{2*m-2} all exceed {threshold}")
    return CheckReport("2.5", not failures, tuple(items), tuple(failures), ())


def _check_lemma_26(n_max: int, m_max: int) -> CheckReport:
    items, failures = [], []
    # membership sweep: perfect-matching graphs without any pendant-on-degree-2
    for m in range(5, n_max // 2 + 1):
        threshold = eval_formula(FormulaId.LEMMA25_THRESHOLD, m=m)
        swept = 0
        for code, g in enumerate_unicyclic(2 * m, matching=m):
            has_soft_pendant = any(
                len(g.adj[u]) == 1 and len(g.adj[g.adj[u][0]]) == 2
                for u in range(g.n))
            if has_soft_pendant:
                continue
            swept += 1
            if eds(g) <= threshold:
                failures.append(f"m={m}: {code.text()} has EDS {eds(g)} <= {threshold}")
        items.append(f"m={m}: {swept} members checked against threshold {threshold}")
    # the two closed-form case values used along the way
    for m in range(5, m_max + 1):
        fid = FormulaId.SUN_EVEN if m % 2 == 0 else FormulaId.SUN_ODD
        claimed = eval_formula(fid, m=m)
        actual = eds(make_sun(m))
        if claimed != actual:
            failures.append(f"sun value m={m}: claimed {claimed}, computed {actual}")
    items.append(f"sun values m=5..{m_max} checked")
    for m in range(5, min(m_max, 8) + 1):
        claimed = eval_formula(FormulaId.NEAR_HAMILTONIAN, m=m)
        actual = eds(make_hnk(2 * m, 2 * m - 1))
        if claimed != actual:
            failures.append(f"near-hamiltonian value m={m}: claimed {claimed}, "
                            f"computed {actual}")
    items.append(f"near-hamiltonian values m=5..{min(m_max, 8)} checked")
    return CheckReport("2.6", not failures, tuple(items), tuple(failures), ())


def check_lemma(lid: str, *, n_max: int = 10,
                m_max: Optional[int] = None) -> CheckReport:
    """Replay one structural claim on a finite range.

    Gap-flagged pair-bound cases are findings, not failures; everything else
    must hold exactly.
    """
    if lid == "2.1":
        return _check_lemma_21(n_max, m_max if m_max is not None else 5)
    if lid == "2.3":
        return _check_lemma_23(n_max)
    if lid == "2.4":
        return _check_lemma_24(n_max)
    if lid == "2.5":
        return _check_lemma_25(m_max if m_max is not None else 8)
    if lid == "2.6":
        return _check_lemma_26(n_max, m_max if m_max is not None else 10)
    raise AuditError(f"unknown lemma id {lid!r} (expected one of {LEMMA_IDS})")


# -- max-degree bounds ----------------------------------------------------------------

@dataclass(frozen=True)
class DeltaBoundReport:
    """Sweep of the two max-degree bounds and their equality characterizations."""

    n_max: int
    bound_violations: Tuple[str, ...]    # degree above the admissible bound
    hub_mismatches: Tuple[str, ...]      # cells where degree n-m+1 != exactly the hub family
    sibling_missing: Tuple[str, ...]     # named siblings that fail degree n-m
    equality_extras: Tuple[str, ...]     # degree n-m achievers beyond the named siblings

    @property
    def bounds_ok(self) -> bool:
        return not self.bound_violations

    @property
    def hub_characterization_ok(self) -> bool:
        return not self.hub_mismatches

    @property
    def sibling_characterization_ok(self) -> bool:
        return not self.sibling_missing and not self.equality_extras


_SIBLING_TAGS = ("U1", "U2", "Ustar", "U2star", "U3star")


def _named_code(tag: str, n: int, m: int) -> Optional[UnicyclicCode]:
    try:
        return unicyclic_canonical_code(make_named(tag, n, m))
    except FamilyError:
        return None


def check_delta_bounds(n_max: int = 10) -> DeltaBoundReport:
    """Compare observed max-degree extremes with the named-family claims.

    For every (n, m): degree is claimed to top out at n-m+1, exactly on the
    hub family U(n,m); excluding it, at n-m, exactly on the five named
    sibling families. Extras beyond the siblings are reported (they exist;
    see the findings) without hiding them.
    """
    by_cell: Dict[Tuple[int, int], List[Tuple[UnicyclicCode, int]]] = {}
    for n in range(4, n_max + 1):
        for code, g in enumerate_unicyclic(n):
            m = matching_number_unicyclic(g)
            if m < 2:
                continue
            by_cell.setdefault((n, m), []).append((code, max_degree(g)))
    violations: List[str] = []
    hub_mismatches: List[str] = []
    missing: List[str] = []
    extras: List[str] = []
    for (n, m), entries in sorted(by_cell.items()):
        hub = _named_code("U", n, m)
        siblings = {c for tag in _SIBLING_TAGS
                    for c in (_named_code(tag, n, m),) if c is not None}
        siblings.discard(hub)
        at_hub_degree = {c for c, d in entries if d == n - m + 1}
        for c, d in entries:
            limit = n - m + 1 if c == hub else n - m
            if d > limit:
                violations.append(f"(n={n}, m={m}) {c.text()}: degree {d} > {limit}")
        expected_hub = {hub} if hub is not None else set()
        if at_hub_degree != expected_hub:
            hub_mismatches.append(f"(n={n}, m={m}) degree n-m+1 attained by "
                                  f"{sorted(c.text() for c in at_hub_degree)}")
        at_sibling_degree = {c for c, d in entries if d == n - m and c != hub}
        for c in sorted(siblings - at_sibling_degree):
            missing.append(f"(n={n}, m={m}) named sibling {c.text()} misses degree {n-m}")
        for c in sorted(at_sibling_degree - siblings):
            extras.append(f"(n={n}, m={m}) {c.text()} attains degree {n-m} "
                          f"but is not a named sibling")
    return DeltaBoundReport(n_max, tuple(violations), tuple(hub_mismatches),
                            tuple(missing), tuple(extras))


# -- formula audit ---------------------------------------------------------------------

_EQ21_PENDANT_FREE_DELTAS = {3: 5, 4: 8, 5: 13, 6: 15, 7: 25, 8: 24,
                             9: 41, 10: 35, 11: 61, 12: 48, 13: 85, 14: 63}


def documented_eq21_delta(n: int, k: int) -> Optional[int]:
    """Documented printed-minus-computed discrepancy of the girth-k minimal claim.

    Frozen once from direct comparison over 3 <= k <= n <= 14: +1 on every
    odd-girth cell with pendants, +n on every even-girth cell with pendants,
    and the per-cell values above on the pendant-free diagonal k = n.
    Returns None outside the documented range.
    """
    if not 3 <= k <= n <= 14:
        return None
    if k == n:
        return _EQ21_PENDANT_FREE_DELTAS[k]
    return 1 if k % 2 else n


@dataclass(frozen=True)
class FormulaFinding:
    which: str          # "2.1" or "2.2"
    n: int
    k: int
    printed: Exact
    computed: int
    delta: Exact
    documented: bool


def eq21_cell(n: int, k: int) -> FormulaFinding:
    fid = FormulaId.EQ21_EVEN if k % 2 == 0 else FormulaId.EQ21_ODD
    printed = eval_formula(fid, n=n, k=k)
    computed = eds(make_hnk(n, k))
    delta = printed - computed
    return FormulaFinding("2.1", n, k, printed, computed, delta,
                          documented_eq21_delta(n, k) == delta)


def eq22_cell(n: int, k: int) -> FormulaFinding:
    if k == 3:
        printed = eval_formula(FormulaId.EQ22_K3, n=n)
    elif k % 2 == 0:
        printed = eval_formula(FormulaId.EQ22_EVEN, n=n, k=k)
    else:
        printed = eval_formula(FormulaId.EQ22_ODD, n=n, k=k)
    computed = eds(make_unk(n, k))
    delta = printed - computed
    return FormulaFinding("2.2", n, k, printed, computed, delta, delta == 0)


@dataclass(frozen=True)
class FormulaAuditReport:
    n_max: int
    eq21_checked: int
    eq22_checked: int
    eq21_deltas: Tuple[FormulaFinding, ...]
    eq22_deltas: Tuple[FormulaFinding, ...]
    undocumented: Tuple[FormulaFinding, ...]

    @property
    def passed(self) -> bool:
        # expected outcome: every girth-k minimal claim is off by its
        # documented amount, and the second-minimal claim is exact everywhere
        return not self.eq22_deltas and not self.undocumented


def formula_audit(n_max: int = 14) -> FormulaAuditReport:
    """Measure both closed-form families against direct computation."""
    eq21_deltas: List[FormulaFinding] = []
    eq22_deltas: List[FormulaFinding] = []
    undocumented: List[FormulaFinding] = []
    eq21_checked = eq22_checked = 0
    for n in range(3, n_max + 1):
        for k in range(3, n + 1):
            finding = eq21_cell(n, k)
            eq21_checked += 1
            if finding.delta != 0:
                eq21_deltas.append(finding)
            if not finding.documented:
                undocumented.append(finding)
    for n in range(5, n_max + 1):
        for k in range(3, n - 1):
            finding = eq22_cell(n, k)
            eq22_checked += 1
            if finding.delta != 0:
                eq22_deltas.append(finding)
    return FormulaAuditReport(n_max, eq21_checked, eq22_checked,
                              tuple(eq21_deltas), tuple(eq22_deltas),
                              tuple(undocumented))


@dataclass(frozen=True)
class CycleFormulaFinding:
    k: int
    claimed_wiener: Exact
    computed_wiener: int
    claimed_transmission: Exact
    computed_transmission: int

    @property
    def ok(self) -> bool:
        return (self.claimed_wiener == self.computed_wiener
                and self.claimed_transmission == self.computed_transmission)


def eq23_cell(k: int) -> CycleFormulaFinding:
    from .graph import transmission, wiener
    cycle = build_family(parse_family_spec(f"C({k})"))
    return CycleFormulaFinding(
        k,
        eval_formula(FormulaId.EQ23_W, k=k), wiener(cycle),
        eval_formula(FormulaId.EQ23_D, k=k), transmission(cycle, 0))
