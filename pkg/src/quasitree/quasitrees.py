"""
Quasi-trees and the subset-expansion polynomials of a ribbon graph.

A quasi-tree is a spanning ribbon subgraph with a single boundary component.
The quasi-tree polynomial ``q(t) = sum_j a_j t^j`` counts them by genus.  It
is the ``Y = 0`` part of

    q(t, Y) = sum over connected spanning F of t^g(F) * Y^(f(F) - 1),

which in turn is ``C(1, Y, t / Y^2)`` for the Bollobas-Riordan-Tutte
polynomial

    C(X, Y, Z) = sum over F of (X - 1)^(r(E) - r(F)) * Y^n(F) * Z^g(F).

All coefficients are Python integers.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Mapping

from .mapcore import CombMap, MapError, _boundary_count, _profile, components


class DisconnectedMapError(MapError):
    """Quasi-trees are only defined for connected ribbon graphs."""


@dataclass(frozen=True)
class QuasiTreePoly:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coefficients)
        if any(a < 0 for a in coeffs):
            raise ValueError("quasi-tree counts are nonnegative")
        object.__setattr__(self, "coefficients", coeffs)

    def normalized(self) -> "QuasiTreePoly":
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return QuasiTreePoly(tuple(coeffs))

    def __call__(self, t):
        return sum(a * t**j for j, a in enumerate(self.coefficients))

    def __getitem__(self, j: int) -> int:
        return self.coefficients[j] if j < len(self.coefficients) else 0

    def __eq__(self, other):
        if not isinstance(other, QuasiTreePoly):
            return NotImplemented
        return self.normalized().coefficients == other.normalized().coefficients

    def __hash__(self):
        return hash(self.normalized().coefficients)

    def __str__(self):
        return format_poly(self.coefficients, "t")

    def to_machine(self) -> list[list[int]]:
        return [[a, j] for j, a in enumerate(self.coefficients) if a]


def format_poly(coeffs, var: str) -> str:
    """Ascending-power text such as ``21 + 6t``."""
    parts = []
    for j, a in enumerate(coeffs):
        if not a:
            continue
        if j == 0:
            mono = str(abs(a))
        else:
            power = var if j == 1 else f"{var}^{j}"
            mono = power if abs(a) == 1 else f"{abs(a)}{power}"
        if not parts:
            parts.append(mono if a > 0 else f"-{mono}")
        else:
            parts.append(("+ " if a > 0 else "- ") + mono)
    return " ".join(parts) if parts else "0"


def _require_connected(m: CombMap) -> None:
    if len(components(m)) != 1:
        raise DisconnectedMapError("ribbon graph is not connected")


def _subset_sizes(m: CombMap) -> range:
    # |F| = V - 1 + 2g for a quasi-tree of genus g
    v, e = m.vertex_count, m.edge_count
    return range(v - 1, e + 1, 2)


def enumerate_quasi_trees(m: CombMap) -> Iterator[tuple[frozenset[int], int]]:
    """Yield ``(edge subset, genus)`` for every quasi-tree of ``m``."""
    _require_connected(m)
    v = m.vertex_count
    for size in _subset_sizes(m):
        for subset in combinations(range(m.edge_count), size):
            s = frozenset(subset)
            if _boundary_count(m, s) == 1:
                g, rem = divmod(size - v + 1, 2)
                assert rem == 0
                yield s, g


def _tally_chunk(args) -> Counter:
    m, size, start, stop = args
    v = m.vertex_count
    tally = Counter()
    for idx, subset in enumerate(combinations(range(m.edge_count), size)):
        if idx < start:
            continue
        if idx >= stop:
            break
        if _boundary_count(m, subset) == 1:
            tally[(size - v + 1) // 2] += 1
    return tally


def quasi_tree_polynomial(m: CombMap, jobs: int = 1) -> QuasiTreePoly:
    """Count quasi-trees by genus.

    Only subsets of size ``V - 1 + 2j`` can be quasi-trees, so only those
    sizes are scanned.  With ``jobs > 1`` the scan is split into index ranges
    handled by worker processes; the merged counts do not depend on ``jobs``.
    """
    _require_connected(m)
    tally = Counter()
    if jobs <= 1:
        for _, g in enumerate_quasi_trees(m):
            tally[g] += 1
    else:
        tasks = []
        for size in _subset_sizes(m):
            total = comb(m.edge_count, size)
            step = max(1, -(-total // jobs))
            tasks += [(m, size, lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_tally_chunk, tasks):
                tally.update(part)
    top = max(tally, default=0)
    return QuasiTreePoly(tuple(tally.get(j, 0) for j in range(top + 1)))


def quasi_tree_polynomial_full_scan(m: CombMap) -> QuasiTreePoly:
    """Same counts as :func:`quasi_tree_polynomial`, scanning all ``2^E`` subsets."""
    _require_connected(m)
    tally = Counter()
    for size in range(m.edge_count + 1):
        for subset in combinations(range(m.edge_count), size):
            p = _profile(m, frozenset(subset))
            if p.f == 1:
                tally[p.g] += 1
    top = max(tally, default=0)
    return QuasiTreePoly(tuple(tally.get(j, 0) for j in range(top + 1)))


class TriVarPoly:
    """Exact polynomial in X, Y, Z stored as ``{(i, j, k): coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0:
                raise ValueError(f"bad exponent triple {exps}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    def __eq__(self, other):
        return isinstance(other, TriVarPoly) and self.terms == other.terms

    def __repr__(self):
        return f"TriVarPoly({dict(sorted(self.terms.items()))})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (i, j, k), c in sorted(self.terms.items()):
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("X", i), ("Y", j), ("Z", k)) if e
            )
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def evaluate(self, x, y, z):
        return sum(c * x**i * y**j * z**k for (i, j, k), c in self.terms.items())

    def to_machine(self) -> list[list[int]]:
        return [[c, i, j, k] for (i, j, k), c in sorted(self.terms.items())]

    def at_x_equals_one(self) -> dict[tuple[int, int], int]:
        """Coefficients of ``C(1, Y, Z)`` keyed by ``(j, k)``."""
        out = Counter()
        for (i, j, k), c in self.terms.items():
            out[(j, k)] += c
        return {e: c for e, c in out.items() if c}


def brt_polynomial(m: CombMap) -> TriVarPoly:
    """Bollobas-Riordan-Tutte polynomial by expansion over all edge subsets."""
    everything = _profile(m, frozenset(range(m.edge_count)))
    grouped = Counter()
    for size in range(m.edge_count + 1):
        for subset in combinations(range(m.edge_count), size):
            p = _profile(m, frozenset(subset))
            grouped[(everything.r - p.r, p.n, p.g)] += 1
    terms = Counter()
    for (corank, n, g), count in grouped.items():
        # (X - 1)^corank expanded binomially
        for i in range(corank + 1):
            terms[(i, n, g)] += count * comb(corank, i) * (-1) ** (corank - i)
    return TriVarPoly(terms)


def two_variable_q(m: CombMap) -> dict[tuple[int, int], int]:
    """``q(t, Y)`` as ``{(t exponent, Y exponent): coefficient}``."""
    _require_connected(m)
    out = Counter()
    for size in range(m.edge_count + 1):
        for subset in combinations(range(m.edge_count), size):
            p = _profile(m, frozenset(subset))
            if p.k == 1:
                out[(p.g, p.f - 1)] += 1
    return dict(sorted(out.items()))


def q_from_two_variable(tq: Mapping[tuple[int, int], int]) -> QuasiTreePoly:
    """Set ``Y = 0`` in a two-variable ``q``."""
    coeffs = Counter({g: c for (g, y), c in tq.items() if y == 0})
    top = max(coeffs, default=0)
    return QuasiTreePoly(tuple(coeffs.get(j, 0) for j in range(top + 1)))


def substitute_brt(poly: TriVarPoly) -> dict[tuple[int, int], int]:
    """Put ``X = 1`` and ``Z = t Y^-2`` in ``C``; keys are ``(t exponent, Y exponent)``.

    Y exponents may come out negative here; for a connected map they do not.
    """
    out = Counter()
    for (j, k), c in poly.at_x_equals_one().items():
        out[(k, j - 2 * k)] += c
    return {e: c for e, c in sorted(out.items()) if c}
