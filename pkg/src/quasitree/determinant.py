"""
Knot determinant from the Goeritz matrix of a checkerboard coloring.

Shaded faces index the matrix.  A crossing whose shaded corners are the
A-regions (corners 1 and 3, the ones swept by turning the overstrand
counterclockwise) has type +1, otherwise -1.  For shaded faces u != v,
``G[u][v]`` is minus the sum of the types of the crossings joining them;
diagonal entries make every row sum to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import KnotDiagram, face_of_corner, face_parity, faces


@dataclass(frozen=True)
class GoeritzData:
    coloring: tuple[bool, ...]  # shaded flag per face id
    shaded_faces: tuple[int, ...]
    full_matrix: tuple[tuple[int, ...], ...]  # rows/cols follow shaded_faces
    crossing_types: tuple[int, ...]

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Reduced matrix: drop the shaded face with the largest id."""
        return tuple(row[:-1] for row in self.full_matrix[:-1])


def checkerboard(diagram: KnotDiagram, shade_outer: bool = False) -> tuple[bool, ...]:
    """Proper 2-coloring of the faces.

    Face 0 plays the role of the unbounded face and is left unshaded unless
    ``shade_outer`` is set.
    """
    parity = face_parity(diagram)
    return tuple((p == 1) != shade_outer for p in parity)


def goeritz(diagram: KnotDiagram, shade_outer: bool = False) -> GoeritzData:
    coloring = checkerboard(diagram, shade_outer)
    where = face_of_corner(diagram)
    shaded = tuple(f.id for f in faces(diagram) if coloring[f.id])
    index = {f: k for k, f in enumerate(shaded)}
    size = len(shaded)
    G = [[0] * size for _ in range(size)]
    types = []
    for i in range(diagram.crossing_count):
        corners = [j for j in range(4) if coloring[where[(i, j)]]]
        assert len(corners) == 2 and corners[1] - corners[0] == 2
        eta = 1 if corners[0] % 2 == 1 else -1
        types.append(eta)
        u, v = (index[where[(i, j)]] for j in corners)
        if u != v:
            G[u][v] -= eta
            G[v][u] -= eta
            G[u][u] += eta
            G[v][v] += eta
    return GoeritzData(coloring, shaded, tuple(map(tuple, G)), tuple(types))


def bareiss_determinant(matrix) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    M = [list(map(int, row)) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def knot_determinant(diagram: KnotDiagram, shade_outer: bool = False) -> int:
    return abs(bareiss_determinant(goeritz(diagram, shade_outer).matrix))
