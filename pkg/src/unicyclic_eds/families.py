"""Constructors for the named unicyclic families and their text mini-language.

Every family is a cycle of length 3, 4 or 5 with pendant vertices and
"brooms" attached: a broom is a middle vertex joined to a cycle vertex and
carrying t pendant leaves (t = 1 gives a hanging 2-path). Brooms are only
ever attached at one designated cycle position: the first cycle vertex for
triangles, the second one for squares and pentagons.

The mini-language (ASCII, shell-friendly):

    C(n) | Hnk(n,k) | Unk(n,k) | Sun(m)
    | TAG(n,m)        with TAG in {U, U1, U2, Ustar, U2star, U3star}
    | H(n,c;ATT,ATT,ATT)   with ATT = "[1^p 2^r S{t1,t2,...}]"

inside an attachment, "1^p" (mandatory) counts pendants, "2^r" adds r brooms
with one leaf each, and "S{...}" adds one broom per listed leaf count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from .graph import Graph, GraphError
from .matching import matching_number_unicyclic


class FamilyError(ValueError):
    """Semantically invalid family parameters."""


class FamilySyntaxError(FamilyError):
    """Mini-language syntax error; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


NAMED_TAGS = ("U", "U1", "U2", "Ustar", "U2star", "U3star")


@dataclass(frozen=True)
class AttachmentSpec:
    """Pendants plus brooms hanging from one cycle vertex."""

    pendants: int = 0
    brooms: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.pendants < 0:
            raise FamilyError("pendant count must be nonnegative")
        if any(t < 1 for t in self.brooms):
            raise FamilyError("every broom must carry at least one leaf")
        object.__setattr__(self, "brooms", tuple(sorted(self.brooms)))

    @property
    def vertex_count(self) -> int:
        return self.pendants + sum(t + 1 for t in self.brooms)


@dataclass(frozen=True)
class CycleSpec:
    n: int


@dataclass(frozen=True)
class HnkSpec:
    n: int
    k: int


@dataclass(frozen=True)
class UnkSpec:
    n: int
    k: int


@dataclass(frozen=True)
class SunSpec:
    m: int


@dataclass(frozen=True)
class BroomSpec:
    n: int
    cycle_len: int
    attachments: Tuple[AttachmentSpec, AttachmentSpec, AttachmentSpec]


@dataclass(frozen=True)
class NamedSpec:
    tag: str
    n: int
    m: int


FamilySpec = Union[CycleSpec, HnkSpec, UnkSpec, SunSpec, BroomSpec, NamedSpec]


def broom_position(cycle_len: int) -> int:
    """Index of the unique cycle vertex that may carry brooms."""
    return 0 if cycle_len == 3 else 1


# -- constructors ------------------------------------------------------------

def make_cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_hnk(n: int, k: int) -> Graph:
    """Cycle of length k with n-k pendant vertices on one cycle vertex."""
    if not 3 <= k <= n:
        raise FamilyError(f"Hnk needs 3 <= k <= n, got n={n} k={k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges.extend((0, v) for v in range(k, n))
    return Graph(n, edges)


def make_unk(n: int, k: int) -> Graph:
    """Cycle of length k with one pendant on one vertex and n-k-1 on an adjacent one."""
    if not 3 <= k <= n - 2:
        raise FamilyError(f"Unk needs 3 <= k <= n-2, got n={n} k={k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges.append((0, k))
    edges.extend((1, v) for v in range(k + 1, n))
    return Graph(n, edges)


def make_sun(m: int) -> Graph:
    """Cycle of length m with exactly one pendant on every cycle vertex."""
    if m < 3:
        raise FamilyError(f"sun graph needs cycle length at least 3, got {m}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges.extend((i, m + i) for i in range(m))
    return Graph(2 * m, edges)


def make_broom_graph(spec: BroomSpec) -> Graph:
    """Realize H(n, c; att1, att2, att3) with deterministic vertex numbering.

    Cycle vertices come first (0..c-1), then attachments in ascending cycle
    position; within a position, pendants first, then brooms by leaf count
    (each broom: middle vertex, then its leaves).
    """
    c = spec.cycle_len
    if c not in (3, 4, 5):
        raise FamilyError(f"cycle length must be 3, 4 or 5, got {c}")
    allowed = broom_position(c)
    for pos, att in enumerate(spec.attachments):
        if att.brooms and pos != allowed:
            raise FamilyError(
                f"brooms are only allowed at cycle position {allowed} for cycle length {c}")
    total = c + sum(att.vertex_count for att in spec.attachments)
    if total != spec.n:
        raise FamilyError(
            f"vertex budget mismatch: declared n={spec.n}, construction has {total}")
    edges = [(i, (i + 1) % c) for i in range(c)]
    nxt = c
    for pos, att in enumerate(spec.attachments):
        for _ in range(att.pendants):
            edges.append((pos, nxt))
            nxt += 1
        for t in att.brooms:
            mid = nxt
            edges.append((pos, mid))
            nxt += 1
            for _ in range(t):
                edges.append((mid, nxt))
                nxt += 1
    return Graph(spec.n, edges)


def named_broom_spec(tag: str, n: int, m: int) -> BroomSpec:
    """Expand a named family tag to its explicit cycle-plus-attachments form."""
    two = lambda r: (1,) * r  # r brooms with one leaf each
    if tag == "U":
        if m < 2 or n - 2 * m + 1 < 0:
            raise FamilyError(f"U({n},{m}) needs m >= 2 and n >= 2m-1")
        atts = (AttachmentSpec(n - 2 * m + 1, two(m - 2)), AttachmentSpec(), AttachmentSpec())
        return BroomSpec(n, 3, atts)
    if tag == "U1":
        if m < 3 or n - 2 * m + 1 < 0:
            raise FamilyError(f"U1({n},{m}) needs m >= 3 and n >= 2m-1")
        atts = (AttachmentSpec(), AttachmentSpec(n - 2 * m + 1, two(m - 3)), AttachmentSpec())
        return BroomSpec(n, 5, atts)
    if tag == "U2":
        if m < 3 or n - 2 * m + 1 < 0:
            raise FamilyError(f"U2({n},{m}) needs m >= 3 and n >= 2m-1")
        atts = (AttachmentSpec(1), AttachmentSpec(n - 2 * m + 1, two(m - 3)), AttachmentSpec())
        return BroomSpec(n, 4, atts)
    if tag == "Ustar":
        if m < 3 or n - 2 * m + 1 < 0:
            raise FamilyError(f"Ustar({n},{m}) needs m >= 3 and n >= 2m-1")
        atts = (AttachmentSpec(n - 2 * m + 1, two(m - 3)), AttachmentSpec(1), AttachmentSpec(1))
        return BroomSpec(n, 3, atts)
    if tag == "U2star":
        if m < 2 or n - 2 * m < 0:
            raise FamilyError(f"U2star({n},{m}) needs m >= 2 and n >= 2m")
        atts = (AttachmentSpec(), AttachmentSpec(n - 2 * m, two(m - 2)), AttachmentSpec())
        return BroomSpec(n, 4, atts)
    if tag == "U3star":
        if m < 2 or n - 2 * m < 0:
            raise FamilyError(f"U3star({n},{m}) needs m >= 2 and n >= 2m")
        atts = (AttachmentSpec(n - 2 * m, two(m - 2)), AttachmentSpec(1), AttachmentSpec())
        return BroomSpec(n, 3, atts)
    raise FamilyError(f"unknown family tag {tag!r}")


def make_named(tag: str, n: int, m: int) -> Graph:
    """Build a named family member and verify it attains matching number m."""
    g = make_broom_graph(named_broom_spec(tag, n, m))
    attained = matching_number_unicyclic(g)
    if attained != m:
        raise FamilyError(
            f"{tag}({n},{m}) degenerates: matching number is {attained}, not {m}")
    return g


def build_family(spec: FamilySpec) -> Graph:
    if isinstance(spec, CycleSpec):
        return make_cycle(spec.n)
    if isinstance(spec, HnkSpec):
        return make_hnk(spec.n, spec.k)
    if isinstance(spec, UnkSpec):
        return make_unk(spec.n, spec.k)
    if isinstance(spec, SunSpec):
        return make_sun(spec.m)
    if isinstance(spec, BroomSpec):
        return make_broom_graph(spec)
    if isinstance(spec, NamedSpec):
        return make_named(spec.tag, spec.n, spec.m)
    raise FamilyError(f"unknown family spec {spec!r}")


# -- mini-language -----------------------------------------------------------

class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise FamilySyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()):
            self.pos += 1
        if self.pos == start:
            self.fail("expected a family name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])


def _parse_attachment(cur: _Cursor) -> AttachmentSpec:
    cur.expect("[")
    cur.expect("1")
    cur.expect("^")
    pendants = cur.integer()
    brooms = []
    while True:
        cur.skip_ws()
        ch = cur.peek()
        if ch == "]":
            cur.pos += 1
            break
        if ch == "2":
            cur.pos += 1
            cur.expect("^")
            brooms.extend([1] * cur.integer())
        elif ch == "S":
            cur.pos += 1
            cur.expect("{")
            brooms.append(cur.integer())
            while True:
                cur.skip_ws()
                if cur.peek() == ",":
                    cur.pos += 1
                    brooms.append(cur.integer())
                else:
                    break
            cur.expect("}")
        else:
            cur.fail("expected '2^', 'S{' or ']' in attachment")
    return AttachmentSpec(pendants, tuple(brooms))


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the mini-language; syntax errors carry positions, semantic ones reasons."""
    cur = _Cursor(text)
    name = cur.name()
    cur.expect("(")
    if name == "C":
        spec: FamilySpec = CycleSpec(cur.integer())
    elif name == "Hnk":
        n = cur.integer()
        cur.expect(",")
        spec = HnkSpec(n, cur.integer())
    elif name == "Unk":
        n = cur.integer()
        cur.expect(",")
        spec = UnkSpec(n, cur.integer())
    elif name == "Sun":
        spec = SunSpec(cur.integer())
    elif name == "H":
        n = cur.integer()
        cur.expect(",")
        c = cur.integer()
        cur.expect(";")
        atts = [_parse_attachment(cur)]
        cur.expect(",")
        atts.append(_parse_attachment(cur))
        cur.expect(",")
        atts.append(_parse_attachment(cur))
        spec = BroomSpec(n, c, (atts[0], atts[1], atts[2]))
    elif name in NAMED_TAGS:
        n = cur.integer()
        cur.expect(",")
        spec = NamedSpec(name, n, cur.integer())
    else:
        cur.fail(f"unknown family name {name!r}")
    cur.expect(")")
    cur.skip_ws()
    if cur.pos != len(text):
        cur.fail("trailing characters after family spec")
    _validate(spec)
    return spec


def _validate(spec: FamilySpec) -> None:
    """Semantic checks beyond syntax; builds cheap specs eagerly."""
    if isinstance(spec, BroomSpec):
        make_broom_graph(spec)  # budget + broom-position checks
    elif isinstance(spec, NamedSpec):
        named_broom_spec(spec.tag, spec.n, spec.m)
    elif isinstance(spec, CycleSpec):
        if spec.n < 3:
            raise FamilyError(f"cycle needs at least 3 vertices, got {spec.n}")
    elif isinstance(spec, HnkSpec):
        if not 3 <= spec.k <= spec.n:
            raise FamilyError(f"Hnk needs 3 <= k <= n, got n={spec.n} k={spec.k}")
    elif isinstance(spec, UnkSpec):
        if not 3 <= spec.k <= spec.n - 2:
            raise FamilyError(f"Unk needs 3 <= k <= n-2, got n={spec.n} k={spec.k}")
    elif isinstance(spec, SunSpec):
        if spec.m < 3:
            raise FamilyError(f"sun graph needs cycle length at least 3, got {spec.m}")


def _format_attachment(att: AttachmentSpec) -> str:
    parts = [f"1^{att.pendants}"]
    ones = sum(1 for t in att.brooms if t == 1)
    rest = [t for t in att.brooms if t > 1]
    if ones:
        parts.append(f"2^{ones}")
    if rest:
        parts.append("S{%s}" % ",".join(str(t) for t in rest))
    return "[%s]" % " ".join(parts)


def format_family_spec(spec: FamilySpec) -> str:
    """Inverse of :func:`parse_family_spec` (on normalized specs)."""
    if isinstance(spec, CycleSpec):
        return f"C({spec.n})"
    if isinstance(spec, HnkSpec):
        return f"Hnk({spec.n},{spec.k})"
    if isinstance(spec, UnkSpec):
        return f"Unk({spec.n},{spec.k})"
    if isinstance(spec, SunSpec):
        return f"Sun({spec.m})"
    if isinstance(spec, NamedSpec):
        return f"{spec.tag}({spec.n},{spec.m})"
    if isinstance(spec, BroomSpec):
        atts = ",".join(_format_attachment(a) for a in spec.attachments)
        return f"H({spec.n},{spec.cycle_len};{atts})"
    raise FamilyError(f"unknown family spec {spec!r}")
