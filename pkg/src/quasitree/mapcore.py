"""
Orientable ribbon graphs as combinatorial maps.

A map lives on darts ``0 .. 2E-1``.  ``sigma`` sends a dart to the next dart
counterclockwise around its vertex, ``alpha`` sends a dart to the other end
of its edge.  Edges are numbered by their smallest dart; the maps built from
knot diagrams use the pairing ``2i <-> 2i + 1`` so edge ``i`` owns exactly
those two darts.

Subgraphs are spanning: they keep every vertex and a subset of the edges.
The statistics used by the subset expansions (components, rank, nullity,
boundary components, genus) are computed by :func:`subgraph_profile`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class MapError(ValueError):
    """Raised for malformed map data or out-of-range edge subsets."""


def perm_cycles(perm: Sequence[int], domain: Iterable[int] | None = None) -> list[list[int]]:
    """Cycles of ``perm`` restricted to ``domain`` (all points by default).

    Each cycle starts at its smallest element; cycles are ordered by that
    element.
    """
    points = sorted(range(len(perm)) if domain is None else domain)
    seen = set()
    cycles = []
    for start in points:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(cycle)
    return cycles


def _check_perm(perm: Sequence[int], n: int, name: str) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise MapError(f"{name} is not a permutation of 0..{n - 1}")


@dataclass(frozen=True)
class CombMap:
    """Ribbon graph given by a rotation ``sigma`` and an edge involution ``alpha``."""

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    edge_labels: tuple[str, ...] | None = None
    isolated: int = 0  # vertices carrying no darts
    _vertex_of: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _vertices: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_darts: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)
    _edge_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sigma = tuple(int(x) for x in self.sigma)
        alpha = tuple(int(x) for x in self.alpha)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "alpha", alpha)
        n = len(sigma)
        if n % 2:
            raise MapError("dart count must be even")
        if len(alpha) != n:
            raise MapError("sigma and alpha act on different dart sets")
        _check_perm(sigma, n, "sigma")
        _check_perm(alpha, n, "alpha")
        for d in range(n):
            if alpha[d] == d or alpha[alpha[d]] != d:
                raise MapError("alpha must be a fixed-point-free involution")
        if self.isolated < 0:
            raise MapError("isolated vertex count must be nonnegative")
        if self.edge_labels is not None:
            labels = tuple(str(x) for x in self.edge_labels)
            if len(labels) != n // 2:
                raise MapError("need exactly one label per edge")
            object.__setattr__(self, "edge_labels", labels)

        vertices = tuple(tuple(c) for c in perm_cycles(sigma))
        vertex_of = [0] * n
        for v, cyc in enumerate(vertices):
            for d in cyc:
                vertex_of[d] = v
        object.__setattr__(self, "_vertices", vertices)
        object.__setattr__(self, "_vertex_of", tuple(vertex_of))

        edge_darts = tuple((d, alpha[d]) for d in range(n) if d < alpha[d])
        edge_of = [0] * n
        for i, (d0, d1) in enumerate(edge_darts):
            edge_of[d0] = edge_of[d1] = i
        object.__setattr__(self, "_edge_darts", edge_darts)
        object.__setattr__(self, "_edge_of", tuple(edge_of))

    @classmethod
    def from_rotation(cls, sigma, edge_labels=None) -> "CombMap":
        """Build a map whose edges pair darts ``2i`` and ``2i + 1``."""
        n = len(sigma)
        alpha = [d ^ 1 for d in range(n)]
        return cls(tuple(sigma), tuple(alpha), edge_labels)

    @classmethod
    def single_vertex(cls) -> "CombMap":
        """The map with one vertex and no edges.

        A vertex without darts cannot be a sigma-cycle, so it is carried in
        the ``isolated`` count.
        """
        return cls((), (), isolated=1)

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    @property
    def vertex_count(self) -> int:
        return len(self._vertices) + self.isolated

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return self._vertices

    def vertex_of(self, dart: int) -> int:
        return self._vertex_of[dart]

    def edge_darts(self, edge: int) -> tuple[int, int]:
        return self._edge_darts[edge]

    def edge_of(self, dart: int) -> int:
        return self._edge_of[dart]

    def edge_ends(self, edge: int) -> tuple[int, int]:
        d0, d1 = self._edge_darts[edge]
        return self._vertex_of[d0], self._vertex_of[d1]

    def faces(self) -> list[list[int]]:
        """Boundary components of the whole map, as orbits of sigma∘alpha."""
        phi = [self.sigma[self.alpha[d]] for d in range(self.dart_count)]
        return perm_cycles(phi)

    @property
    def face_count(self) -> int:
        return len(self.faces()) + self.isolated

    @property
    def genus(self) -> int:
        return subgraph_profile(self, range(self.edge_count)).g

    def to_text(self) -> str:
        lines = [
            "sigma: " + " ".join(map(str, self.sigma)),
            "alpha: " + " ".join(map(str, self.alpha)),
        ]
        if self.edge_labels is not None:
            lines.append("labels: " + " ".join(self.edge_labels))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CombMap":
        fields = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, rest = line.partition(":")
            key = key.strip().lower()
            if not sep or key not in ("sigma", "alpha", "labels"):
                raise MapError(f"line {lineno}: expected 'sigma:', 'alpha:' or 'labels:'")
            if key in fields:
                raise MapError(f"line {lineno}: duplicate '{key}'")
            fields[key] = rest.split()
        if "sigma" not in fields:
            raise MapError("missing 'sigma:' line")
        try:
            sigma = [int(x) for x in fields["sigma"]]
            alpha = [int(x) for x in fields.get("alpha", [])] or [d ^ 1 for d in range(len(sigma))]
        except ValueError as exc:
            raise MapError(f"non-integer dart: {exc}") from None
        return cls(tuple(sigma), tuple(alpha), fields.get("labels"), isolated=0 if sigma else 1)


@dataclass(frozen=True)
class SubgraphProfile:
    subset: frozenset[int]
    k: int  # connected components
    r: int  # rank, V - k
    n: int  # nullity, |subset| - r
    f: int  # boundary components
    g: int  # genus, summed over components


def _check_subset(m: CombMap, subset) -> frozenset[int]:
    s = frozenset(int(e) for e in subset)
    for e in s:
        if not 0 <= e < m.edge_count:
            raise MapError(f"edge index {e} out of range 0..{m.edge_count - 1}")
    return s


def _component_count(m: CombMap, edges: Iterable[int]) -> int:
    parent = list(range(len(m.vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    k = len(parent)
    for e in edges:
        u, w = m.edge_ends(e)
        a, b = find(u), find(w)
        if a != b:
            parent[a] = b
            k -= 1
    return k + m.isolated


def components(m: CombMap) -> list[list[int]]:
    """Vertex classes of the connected components, found by dart reachability."""
    seen = [False] * len(m.vertices)
    classes = []
    for start in range(len(m.vertices)):
        if seen[start]:
            continue
        seen[start] = True
        stack, cls = [start], []
        while stack:
            v = stack.pop()
            cls.append(v)
            for d in m.vertices[v]:
                w = m.vertex_of(m.alpha[d])
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        classes.append(sorted(cls))
    for _ in range(m.isolated):
        classes.append([len(m.vertices) + len(classes)])
    return classes


def is_connected(m: CombMap) -> bool:
    return len(components(m)) == 1


def boundary_components(m: CombMap, subset) -> int:
    """Number of boundary components of the spanning ribbon subgraph on ``subset``.

    The rotation is restricted to the kept darts by skipping darts of deleted
    edges; every vertex left without edges counts as one disk.
    """
    s = _check_subset(m, subset)
    return _boundary_count(m, s)


def _boundary_count(m: CombMap, s) -> int:
    sigma, alpha = m.sigma, m.alpha
    kept = [False] * m.dart_count
    for e in s:
        d0, d1 = m.edge_darts(e)
        kept[d0] = kept[d1] = True

    f = m.isolated
    for cyc in m.vertices:
        if not any(kept[d] for d in cyc):
            f += 1

    seen = [False] * m.dart_count
    for start in range(m.dart_count):
        if not kept[start] or seen[start]:
            continue
        f += 1
        d = start
        while not seen[d]:
            seen[d] = True
            d = sigma[alpha[d]]
            while not kept[d]:
                d = sigma[d]
    return f


def subgraph_profile(m: CombMap, subset) -> SubgraphProfile:
    s = _check_subset(m, subset)
    return _profile(m, s)


def _profile(m: CombMap, s: frozenset[int]) -> SubgraphProfile:
    v = m.vertex_count
    k = _component_count(m, s)
    f = _boundary_count(m, s)
    r = v - k
    n = len(s) - r
    twice_g = 2 * k - v + len(s) - f
    if twice_g < 0 or twice_g % 2:
        raise MapError(f"Euler relation fails for subset {sorted(s)}: 2g = {twice_g}")
    return SubgraphProfile(s, k, r, n, f, twice_g // 2)
