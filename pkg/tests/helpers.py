"""Random maps and brute-force oracles that do not reuse library internals."""

import itertools
import random

import networkx as nx
import sympy
from sympy.combinatorics import Permutation

from quasitree.mapcore import CombMap, components


def random_map(rng: random.Random, edges: int) -> CombMap:
    sigma = list(range(2 * edges))
    rng.shuffle(sigma)
    return CombMap.from_rotation(sigma)


def random_maps(seed: int, count: int, max_edges: int, connected=False, min_edges=0):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = random_map(rng, rng.randint(min_edges, max_edges))
        if m.edge_count == 0:
            m = CombMap.single_vertex()
        if connected and len(components(m)) != 1:
            continue
        out.append(m)
    return out


def all_subsets(n):
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)


def oracle_boundary(m: CombMap, subset) -> int:
    """Orbits of an explicitly assembled sigma_F * alpha_F, counted by sympy."""
    kept = set()
    for e in subset:
        kept.update(m.edge_darts(e))
    # splice deleted darts out of every vertex cycle
    sigma_f = {}
    isolated = m.isolated
    for cyc in m.vertices:
        rest = [d for d in cyc if d in kept]
        if not rest:
            isolated += 1
        for a, b in zip(rest, rest[1:] + rest[:1]):
            sigma_f[a] = b
    if not kept:
        return isolated
    darts = sorted(kept)
    pos = {d: i for i, d in enumerate(darts)}
    phi = [pos[sigma_f[m.alpha[d]]] for d in darts]
    return Permutation(phi).cycles + isolated


def underlying_graph(m: CombMap, subset=None) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(m.vertex_count))
    for e in range(m.edge_count) if subset is None else subset:
        g.add_edge(*m.edge_ends(e))
    return g


def oracle_profile(m: CombMap, subset):
    """(k, r, n, f, g) with components from networkx and genus summed per component."""
    g = underlying_graph(m, subset)
    f = oracle_boundary(m, subset)
    k = nx.number_connected_components(g)
    r = m.vertex_count - k
    n = len(subset) - r
    # V - E + f = 2k - 2g over the whole spanning subgraph
    genus2 = 2 * k - m.vertex_count + len(subset) - f
    return k, r, n, f, genus2 // 2


def oracle_spanning_trees(m: CombMap) -> int:
    """Matrix-tree theorem on the underlying multigraph, loops dropped."""
    v = m.vertex_count
    if v == 1:
        return 1
    L = sympy.zeros(v, v)
    for e in range(m.edge_count):
        a, b = m.edge_ends(e)
        if a != b:
            L[a, a] += 1
            L[b, b] += 1
            L[a, b] -= 1
            L[b, a] -= 1
    return int(L[1:, 1:].det())


def oracle_quasi_tree_counts(m: CombMap) -> dict:
    counts = {}
    for s in all_subsets(m.edge_count):
        if oracle_boundary(m, s) == 1:
            g = oracle_profile(m, s)[4]
            counts[g] = counts.get(g, 0) + 1
    return counts
