"""
Kauffman states and the all-A ribbon graph of a knot diagram.

The A-smoothing of a crossing ``(a, b, c, d)`` joins ``a`` with ``b`` and
``c`` with ``d``: these are the corners not swept when the overstrand is
turned counterclockwise.  The B-smoothing joins ``b`` with ``c`` and ``d``
with ``a``.

The ribbon graph has one vertex per state circle and one edge per crossing.
Each circle is traversed with the shaded faces of a checkerboard coloring on
its right; this is the boundary orientation the Turaev surface induces on the
circle, and the rotation at a vertex is the order in which the traversal
meets the crossings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import KnotDiagram, face_of_corner, face_parity
from .mapcore import CombMap

A, B = "A", "B"

# smoothing segments as (slot, slot) pairs, in the order "corner on the right"
_SEGMENTS = {A: ((0, 1), (2, 3)), B: ((1, 2), (3, 0))}


@dataclass(frozen=True)
class KauffmanState:
    marker: str
    circles: tuple[tuple[tuple[int, int], ...], ...]  # cyclic slot sequences

    @property
    def circle_count(self) -> int:
        return len(self.circles)


def _segment_partner(marker: str, j: int) -> int:
    for p, q in _SEGMENTS[marker]:
        if j == p:
            return q
        if j == q:
            return p
    raise AssertionError(j)


def kauffman_state(diagram: KnotDiagram, marker: str = A) -> KauffmanState:
    """Smooth every crossing the ``marker`` way and trace the circles.

    A circle is listed as the cyclic sequence of slots it passes, beginning at
    the slot holding its smallest arc label; circles are ordered by that label.
    """
    marker = marker.upper()
    if marker not in _SEGMENTS:
        raise ValueError(f"marker must be 'A' or 'B', got {marker!r}")
    seen = set()
    circles = []
    slots = sorted(
        ((i, j) for i in range(diagram.crossing_count) for j in range(4)),
        key=lambda s: (diagram.label(s), s),
    )
    for start in slots:
        if start in seen:
            continue
        circle = []
        slot = start
        while slot not in seen:
            i, j = slot
            other = (i, _segment_partner(marker, j))
            seen.update((slot, other))
            circle.extend((slot, other))
            slot = diagram.partner(other)
        circles.append(tuple(circle))
    return KauffmanState(marker, tuple(circles))


def build_ribbon_graph(diagram: KnotDiagram, marker: str = A) -> CombMap:
    """Ribbon graph of the all-``marker`` state; edge ``i`` is crossing ``i``.

    Dart ``2i`` sits on the segment through slots 0/1 (A) or 1/2 (B) of
    crossing ``i`` and dart ``2i + 1`` on the opposite segment.
    """
    marker = marker.upper()
    if marker not in _SEGMENTS:
        raise ValueError(f"marker must be 'A' or 'B', got {marker!r}")
    parity = face_parity(diagram)
    where = face_of_corner(diagram)
    n = diagram.crossing_count

    # Direction through each segment: enter at `first`, leave at `second`,
    # chosen so the shaded corner between them lies on the right.
    entry_to_exit = {}
    dart_of_slot = {}
    for i in range(n):
        for k, (p, q) in enumerate(_SEGMENTS[marker]):
            dart_of_slot[(i, p)] = dart_of_slot[(i, q)] = 2 * i + k
            shaded = parity[where[(i, p)]] == 1
            first, second = (p, q) if shaded else (q, p)
            entry_to_exit[(i, first)] = (i, second)

    sigma = [0] * (2 * n)
    for entry, exit_ in entry_to_exit.items():
        dart = dart_of_slot[entry]
        nxt = diagram.partner(exit_)
        if nxt not in entry_to_exit:
            raise AssertionError("state circle orientation is inconsistent")
        sigma[dart] = dart_of_slot[nxt]
    return CombMap.from_rotation(sigma, edge_labels=[str(i + 1) for i in range(n)])


def build_all_a_ribbon_graph(diagram: KnotDiagram) -> CombMap:
    return build_ribbon_graph(diagram, A)


def turaev_genus(diagram: KnotDiagram) -> int:
    """Turaev genus of the diagram, ``(c + 2 - s_A - s_B) / 2``."""
    c = diagram.crossing_count
    s_a = kauffman_state(diagram, A).circle_count
    s_b = kauffman_state(diagram, B).circle_count
    twice = c + 2 - s_a - s_b
    if twice < 0 or twice % 2:
        raise AssertionError(f"c + 2 - s_A - s_B = {twice} is not a nonnegative even number")
    return twice // 2

