"""Independent brute-force references used across the test suite.

None of these import the search or group code under test; they work from
definitions only.
"""

from __future__ import annotations

import itertools
from collections import Counter

import networkx as nx


def brute_bases(n: int, independent) -> set[int]:
    """Maximal sets accepted by ``independent`` (a predicate on id tuples)."""
    for r in range(n, -1, -1):
        found = {sum(1 << i for i in c) for c in itertools.combinations(range(n), r) if independent(c)}
        if found:
            return found
    return {0}


def brute_automorphisms(n: int, bases: set[int]) -> list[tuple[int, ...]]:
    """Every permutation of range(n) that maps the basis family to itself."""
    out = []
    for p in itertools.permutations(range(n)):
        if all(sum(1 << p[i] for i in range(n) if b >> i & 1) in bases for b in bases):
            out.append(p)
    return out


def brute_fix(perms: list[tuple[int, ...]], n: int) -> int:
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            if sum(1 for p in perms if all(p[x] == x for x in s)) == 1:
                return k
    raise AssertionError


def brute_circuits(n: int, bases: set[int]) -> set[int]:
    def indep(mask):
        return any(mask & b == mask for b in bases)

    out = set()
    for mask in range(1, 1 << n):
        if not indep(mask) and all(indep(mask & ~(1 << i)) for i in range(n) if mask >> i & 1):
            out.add(mask)
    return out


def incidence_graph(n: int, circuits) -> nx.Graph:
    """Element/circuit incidence graph, coloured by side."""
    G = nx.Graph()
    G.add_nodes_from((("e", i) for i in range(n)), side=0)
    for j, c in enumerate(circuits):
        G.add_node(("c", j), side=1)
        for i in range(n):
            if c >> i & 1:
                G.add_edge(("e", i), ("c", j))
    return G


def vf2_aut_order(n: int, circuits) -> int:
    """Automorphisms of the circuit hypergraph counted by VF2 (elements determine them)."""
    G = incidence_graph(n, circuits)
    gm = nx.algorithms.isomorphism.GraphMatcher(G, G, node_match=lambda a, b: a["side"] == b["side"])
    seen = set()
    for mapping in gm.isomorphisms_iter():
        seen.add(tuple(mapping[("e", i)][1] for i in range(n)))
    return len(seen)


def spanning_tree_count(verts, edges) -> int:
    """Deletion-contraction on a multigraph edge list."""
    verts = frozenset(verts)
    edges = [e for e in edges if e[0] != e[1]]
    if len(verts) <= 1:
        return 1
    g = nx.MultiGraph()
    g.add_nodes_from(verts)
    g.add_edges_from(edges)
    if not nx.is_connected(g):
        return 0
    (u, v), rest = edges[0], edges[1:]
    merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
    return spanning_tree_count(verts, rest) + spanning_tree_count(verts - {v}, merged)


def _components_after(nv: int, edges, keep: int) -> list[tuple[int, int]]:
    """(vertex count, edge count) of each component of the kept edge set."""
    g = nx.Graph()
    g.add_nodes_from(range(nv))
    g.add_edges_from(edges[i] for i in range(len(edges)) if keep >> i & 1)
    return [(len(c), g.subgraph(c).number_of_edges()) for c in nx.connected_components(g)]


def graphic_rank(nv: int, edges, mask: int) -> int:
    return nv - len(_components_after(nv, edges, mask))


def bicircular_rank(nv: int, edges, mask: int) -> int:
    # a component is a tree exactly when it has one fewer edge than vertices
    return sum(v if e >= v else v - 1 for v, e in _components_after(nv, edges, mask))


def minimal_rank_drops(n: int, rank) -> set[int]:
    """Minimal sets whose removal lowers the rank of the whole ground set: the cocircuits."""
    full = (1 << n) - 1
    r = rank(full)
    drops = [m for m in range(1, 1 << n) if rank(full & ~m) < r]
    drops.sort(key=int.bit_count)
    out: list[int] = []
    for m in drops:
        if not any(c & m == c for c in out):
            out.append(m)
    return set(out)


def minimal_edge_cuts(nv: int, edges) -> set[int]:
    """Minimal edge sets whose removal increases the number of components."""
    base = len(_components_after(nv, edges, (1 << len(edges)) - 1))
    m = len(edges)
    cuts = sorted((c for c in range(1, 1 << m)
                   if len(_components_after(nv, edges, ((1 << m) - 1) & ~c)) > base), key=int.bit_count)
    out: list[int] = []
    for c in cuts:
        if not any(d & c == d for d in out):
            out.append(c)
    return set(out)


def hall_independent(adj: list[set[str]], subset) -> bool:
    """Hall's condition: every subfamily has at least as many neighbours as members."""
    subset = list(subset)
    for k in range(1, len(subset) + 1):
        for T in itertools.combinations(subset, k):
            if len(set().union(*(adj[x] for x in T))) < k:
                return False
    return True


def orbit_sizes(perms, n) -> list[int]:
    seen, sizes = set(), []
    for x in range(n):
        if x in seen:
            continue
        orb = {p[x] for p in perms}
        seen |= orb
        sizes.append(len(orb))
    return sorted(sizes)


def multiset(xs) -> Counter:
    return Counter(xs)
