"""
Planar-diagram (PD) codes of knot diagrams.

A crossing is a 4-tuple of arc labels ``(a, b, c, d)``: ``a`` is the incoming
understrand and the remaining entries follow counterclockwise, so ``c`` is the
outgoing understrand and ``b``, ``d`` belong to the overstrand.  Positions in
a tuple are called *slots*; slot ``(i, j)`` is entry ``j`` of crossing ``i``.

Corner ``(i, j)`` is the region of the plane between slots ``j`` and ``j+1``
of crossing ``i``.  Faces of the projection are cycles of corners.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field


class DiagramError(ValueError):
    """Base class for diagram errors."""


class PDSyntaxError(DiagramError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MalformedCodeError(DiagramError):
    pass


class UnsupportedLinkError(DiagramError):
    pass


class NotApplicableError(DiagramError):
    """A Reidemeister move was requested where it cannot be performed."""


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[tuple[int, int], ...]  # corners (crossing, slot)

    def __len__(self):
        return len(self.boundary)


_CROSSING = re.compile(r"\s*X\s*([\[(])\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*([\])])")
_CLOSERS = {"[": "]", "(": ")"}


@dataclass(frozen=True)
class KnotDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    name: str | None = None
    # slot -> partner slot sharing the same arc label
    _partner: dict = field(init=False, repr=False, compare=False, hash=False)
    # slot -> True when the knot orientation enters the crossing there
    _incoming: dict = field(init=False, repr=False, compare=False, hash=False)
    _faces: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        if not xs:
            raise MalformedCodeError("a diagram needs at least one crossing")
        for i, x in enumerate(xs):
            if len(x) != 4:
                raise MalformedCodeError(f"crossing {i} has {len(x)} entries, expected 4")

        counts = Counter(v for x in xs for v in x)
        bad = sorted(label for label, n in counts.items() if n != 2)
        if bad:
            shown = ", ".join(f"{lab} ({counts[lab]}x)" for lab in bad[:6])
            raise MalformedCodeError(f"arc labels must appear exactly twice: {shown}")
        if sorted(counts) != list(range(1, 2 * len(xs) + 1)):
            raise MalformedCodeError(f"arc labels must be 1..{2 * len(xs)}")

        where = {}
        partner = {}
        for i, x in enumerate(xs):
            for j, label in enumerate(x):
                if label in where:
                    other = where.pop(label)
                    partner[other] = (i, j)
                    partner[(i, j)] = other
                else:
                    where[label] = (i, j)
        object.__setattr__(self, "_partner", partner)

        # Trace the knot, entering crossing 0 along its understrand.
        incoming = {}
        slot = (0, 0)
        while slot not in incoming:
            i, j = slot
            incoming[slot] = True
            out = (i, (j + 2) % 4)
            if out in incoming:
                raise MalformedCodeError(f"crossing {i} is traversed inconsistently")
            incoming[out] = False
            slot = partner[out]
        if len(incoming) != 4 * len(xs):
            raise UnsupportedLinkError("PD code describes a link with more than one component")
        for i in range(len(xs)):
            if not incoming[(i, 0)]:
                raise MalformedCodeError(
                    f"crossing {i}: first entry must be the incoming understrand"
                )
        object.__setattr__(self, "_incoming", incoming)

        fcs = _trace_faces(xs, partner)
        if len(fcs) != len(xs) + 2:
            raise MalformedCodeError(
                f"code is not planar: {len(fcs)} faces, expected {len(xs) + 2}"
            )
        object.__setattr__(self, "_faces", fcs)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def label(self, slot: tuple[int, int]) -> int:
        return self.crossings[slot[0]][slot[1]]

    def partner(self, slot: tuple[int, int]) -> tuple[int, int]:
        """The other slot on the arc leaving ``slot``."""
        return self._partner[slot]

    def is_incoming(self, slot: tuple[int, int]) -> bool:
        return self._incoming[slot]

    def sign(self, i: int) -> int:
        """Writhe contribution of crossing ``i``: +1 when the overstrand runs d -> b."""
        return 1 if self._incoming[(i, 3)] else -1

    @property
    def writhe(self) -> int:
        return sum(self.sign(i) for i in range(len(self.crossings)))

    def to_text(self, style: str = "X") -> str:
        if style == "PD":
            body = ", ".join("X[%d,%d,%d,%d]" % x for x in self.crossings)
            return f"PD[{body}]"
        return " ".join("X(%d,%d,%d,%d)" % x for x in self.crossings)

    def __str__(self):
        return self.to_text()


def parse_pd(text: str, name: str | None = None) -> KnotDiagram:
    """Parse ``X(1,4,2,5) X(3,6,4,1) ...`` or ``PD[X[1,4,2,5], ...]``.

    Lines starting with ``#`` are ignored.
    """
    clean = "\n".join(
        "" if line.lstrip().startswith("#") else line for line in text.splitlines()
    )
    if not clean.strip():
        raise PDSyntaxError("empty PD code", 0)

    pos = 0
    end = len(clean)
    m = re.match(r"\s*PD\s*\[", clean)
    if m:
        pos = m.end()
        close = clean.rstrip()
        if not close.endswith("]"):
            raise PDSyntaxError("unterminated PD[", len(close))
        end = len(close) - 1

    crossings = []
    while True:
        ws = re.match(r"[\s,]*", clean[pos:end])
        pos += ws.end()
        if pos >= end:
            break
        m = _CROSSING.match(clean, pos, end)
        if not m:
            raise PDSyntaxError("expected crossing 'X(a,b,c,d)' or 'X[a,b,c,d]'", pos)
        if _CLOSERS[m.group(1)] != m.group(6):
            raise PDSyntaxError("mismatched brackets", m.end() - 1)
        crossings.append(tuple(int(m.group(k)) for k in range(2, 6)))
        pos = m.end()
    if not crossings:
        raise PDSyntaxError("no crossings found", pos)
    return KnotDiagram(tuple(crossings), name)


def _trace_faces(xs, partner) -> tuple[Face, ...]:
    seen = set()
    faces = []
    for i in range(len(xs)):
        for j in range(4):
            if (i, j) in seen:
                continue
            corner = (i, j)
            boundary = []
            while corner not in seen:
                seen.add(corner)
                boundary.append(corner)
                ci, cj = corner
                corner = partner[(ci, (cj + 1) % 4)]
            faces.append(Face(len(faces), tuple(boundary)))
    return tuple(faces)


def faces(diagram: KnotDiagram) -> tuple[Face, ...]:
    """Faces of the 4-valent projection graph, numbered in order of their first corner."""
    return diagram._faces


def face_of_corner(diagram: KnotDiagram) -> dict[tuple[int, int], int]:
    return {c: f.id for f in diagram._faces for c in f.boundary}


def face_parity(diagram: KnotDiagram) -> list[int]:
    """Proper 2-coloring of the faces with face 0 in class 0.

    Faces meeting along an arc get different classes.  The two corners on
    either side of slot ``(i, j)`` are ``(i, j-1)`` and ``(i, j)``.
    """
    where = face_of_corner(diagram)
    nbrs = {f.id: set() for f in diagram._faces}
    for i in range(diagram.crossing_count):
        for j in range(4):
            a, b = where[(i, (j - 1) % 4)], where[(i, j)]
            if a == b:
                raise MalformedCodeError("a face borders itself; diagram is not checkerboard colorable")
            nbrs[a].add(b)
            nbrs[b].add(a)
    color = {0: 0}
    stack = [0]
    while stack:
        f = stack.pop()
        for h in nbrs[f]:
            if h not in color:
                color[h] = 1 - color[f]
                stack.append(h)
            elif color[h] == color[f]:
                raise MalformedCodeError("faces cannot be 2-colored")
    return [color[f.id] for f in diagram._faces]


def relabel(crossings, start_label: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Renumber arcs ``1..2c`` along the knot orientation.

    Numbering starts at the arc carrying ``start_label`` (default: the
    smallest label) so that labels increase along the strand.
    """
    xs = [list(x) for x in crossings]
    where = {}
    partner = {}
    for i, x in enumerate(xs):
        for j, lab in enumerate(x):
            if lab in where:
                o = where.pop(lab)
                partner[o] = (i, j)
                partner[(i, j)] = o
            else:
                where[lab] = (i, j)
    # Outgoing slot of the start arc: the under-out (slot 2) or the over-out.
    incoming_slots = _incoming_slots(xs, partner)
    if start_label is None:
        start_label = min(v for x in xs for v in x)
    out_slot = next(
        (i, j) for i, x in enumerate(xs) for j, lab in enumerate(x)
        if lab == start_label and not incoming_slots[(i, j)]
    )
    new = [[0] * 4 for _ in xs]
    slot = out_slot
    label = 1
    while True:
        i, j = slot
        if new[i][j]:
            break
        p = partner[slot]
        new[i][j] = label
        new[p[0]][p[1]] = label
        label += 1
        slot = (p[0], (p[1] + 2) % 4)
    return tuple(tuple(x) for x in new)


def _incoming_slots(xs, partner):
    incoming = {}
    slot = (0, 0)
    while slot not in incoming:
        i, j = slot
        incoming[slot] = True
        out = (i, (j + 2) % 4)
        incoming[out] = False
        slot = partner[out]
    return incoming


def canonical_code(diagram: KnotDiagram) -> tuple[tuple[int, ...], ...]:
    """Smallest sorted crossing list over all choices of the starting arc."""
    best = None
    for start in range(1, diagram.arc_count + 1):
        code = tuple(sorted(relabel(diagram.crossings, start)))
        if best is None or code < best:
            best = code
    return best


def isomorphic(d1: KnotDiagram, d2: KnotDiagram) -> bool:
    """Same oriented diagram up to relabeling of arcs and reordering of crossings."""
    if d1.crossing_count != d2.crossing_count:
        return False
    return canonical_code(d1) == canonical_code(d2)


def _triangle_strands(diagram: KnotDiagram, face: Face):
    """For each edge of a triangular face: (internal slots, external slots, over flags)."""
    strands = []
    for corner in face.boundary:
        i, j = corner
        s1 = (i, (j + 1) % 4)  # leaves the corner along the face boundary
        s2 = diagram.partner(s1)
        e1 = (s1[0], (s1[1] + 2) % 4)
        e2 = (s2[0], (s2[1] + 2) % 4)
        strands.append(((s1, s2), (e1, e2), (s1[1] % 2 == 1, s2[1] % 2 == 1)))
    return strands


def reidemeister_3(diagram: KnotDiagram, face_id: int) -> KnotDiagram:
    """Slide the strands of triangular face ``face_id`` across each other.

    Every strand keeps its two crossings and its over/under role at each of
    them; the order of those crossings along the strand is reversed.  In slot
    terms the internal slot at one end takes the external arc of the other
    end, and the two old external slots are joined by the internal arc.
    """
    fcs = faces(diagram)
    if not 0 <= face_id < len(fcs):
        raise NotApplicableError(f"no face with id {face_id}")
    face = fcs[face_id]
    if len(face) != 3:
        raise NotApplicableError(f"face {face_id} has {len(face)} sides, not 3")
    if len({c[0] for c in face.boundary}) != 3:
        raise NotApplicableError(f"face {face_id} does not meet three distinct crossings")

    strands = _triangle_strands(diagram, face)
    patterns = sorted(
        "over" if a and b else "under" if not a and not b else "mixed"
        for _, _, (a, b) in strands
    )
    if patterns != ["mixed", "over", "under"]:
        raise NotApplicableError(
            f"face {face_id}: strands are {', '.join(patterns)}; "
            "R3 needs one strand over at both crossings and one under at both"
        )

    new = [list(x) for x in diagram.crossings]
    for (i1, i2), (e1, e2), _ in strands:
        internal = diagram.label(i1)
        new[i1[0]][i1[1]] = diagram.label(e2)
        new[i2[0]][i2[1]] = diagram.label(e1)
        new[e1[0]][e1[1]] = internal
        new[e2[0]][e2[1]] = internal
    name = f"{diagram.name} (R3 at face {face_id})" if diagram.name else None
    return KnotDiagram(relabel(new), name)


def change_crossings(diagram: KnotDiagram, indices) -> KnotDiagram:
    """Switch over and under at the given crossings.

    Rotating a tuple by one position makes the old overstrand the new
    understrand; the rotation starts at whichever over entry is incoming.
    """
    chosen = set(indices)
    xs = []
    for i, x in enumerate(diagram.crossings):
        if i in chosen:
            start = 3 if diagram.is_incoming((i, 3)) else 1
            x = tuple(x[(start + k) % 4] for k in range(4))
        xs.append(x)
    return KnotDiagram(tuple(xs), diagram.name)


def mirror(diagram: KnotDiagram) -> KnotDiagram:
    out = change_crossings(diagram, range(diagram.crossing_count))
    name = f"{diagram.name} (mirror)" if diagram.name else None
    return KnotDiagram(out.crossings, name)


def triangle_faces(diagram: KnotDiagram) -> list[int]:
    """Ids of faces where :func:`reidemeister_3` applies."""
    ok = []
    for f in faces(diagram):
        try:
            reidemeister_3(diagram, f.id)
        except DiagramError:
            continue
        ok.append(f.id)
    return ok
