"""Simple graphs with labelled edges, their automorphisms, and the cycle and
bicircular matroids on their edge sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import BadParams, MatroidError, NotAGroup, TooLarge
from .groups import DEFAULT_CAP, PermGroup
from .matroid import MAX_ELEMENTS, GroundSet, Matroid
from .search import search_automorphisms

MAX_VERTICES = 20


class TooManyEdges(TooLarge):
    pass


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    edge_labels: tuple[str, ...]

    def __post_init__(self):
        nv = len(self.vertices)
        if len(set(self.vertices)) != nv:
            raise BadParams("duplicate vertex labels")
        if len(set(self.edge_labels)) != len(self.edge_labels):
            raise BadParams("duplicate edge labels")
        if len(self.edge_labels) != len(self.edges):
            raise BadParams("one label per edge required")
        seen = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < nv and 0 <= v < nv):
                raise BadParams(f"bad edge ({u}, {v}): graphs are simple")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise BadParams(f"parallel edge between {self.vertices[u]} and {self.vertices[v]}")
            seen.add(key)

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable[Sequence]) -> "Graph":
        """Edges are ``(u, v)`` or ``(u, v, label)``; default label is ``"u-v"``."""
        vertices = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(vertices)}
        pairs, labels = [], []
        for e in edges:
            u, v = str(e[0]), str(e[1])
            if u not in index or v not in index:
                raise BadParams(f"edge {e} uses an unknown vertex")
            pairs.append((index[u], index[v]))
            labels.append(str(e[2]) if len(e) > 2 else f"{u}-{v}")
        return cls(vertices, tuple(pairs), tuple(labels))

    @property
    def nv(self) -> int:
        return len(self.vertices)

    @property
    def ne(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> list[set[int]]:
        nb = [set() for _ in range(self.nv)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return nb

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, (u, v) in enumerate(self.edges):
            out[(u, v)] = out[(v, u)] = i
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edge_ground(self) -> GroundSet:
        if self.ne > MAX_ELEMENTS:
            raise TooManyEdges(f"{self.ne} edges exceeds the matroid limit of {MAX_ELEMENTS}")
        return GroundSet(self.edge_labels)

    def edge_tuples(self) -> list[tuple[str, str, str]]:
        return [(self.vertices[u], self.vertices[v], lab)
                for (u, v), lab in zip(self.edges, self.edge_labels)]


# structure -------------------------------------------------------------------

def components(G: Graph, removed: Iterable[int] = (), edges: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components after deleting vertices ``removed``, optionally on an edge subset."""
    gone = set(removed)
    parent = {v: v for v in range(G.nv) if v not in gone}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in (range(G.ne) if edges is None else edges):
        u, v = G.edges[i]
        if u in gone or v in gone:
            continue
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_connected_graph(G: Graph) -> bool:
    return len(components(G)) <= 1


def is_k_connected(G: Graph, k: int) -> bool:
    """More than k vertices and no set of fewer than k vertices disconnects G."""
    if k < 1:
        raise BadParams("k must be positive")
    if G.nv <= k:
        return False
    for size in range(k):
        for cut in itertools.combinations(range(G.nv), size):
            if len(components(G, cut)) > 1:
                return False
    return True


def min_degree(G: Graph) -> int:
    return min((G.degree(v) for v in range(G.nv)), default=0)


def is_cycle_graph(G: Graph) -> bool:
    return G.nv >= 3 and is_connected_graph(G) and all(G.degree(v) == 2 for v in range(G.nv))


# matroids --------------------------------------------------------------------

def _forest_test(G: Graph, subset: Sequence[int]) -> bool:
    parent = list(range(G.nv))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in subset:
        u, v = G.edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _pseudoforest_test(G: Graph, subset: Sequence[int]) -> bool:
    """Every component spanned by ``subset`` has at most one cycle."""
    parent = list(range(G.nv))
    cyclic = [False] * G.nv

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in subset:
        u, v = G.edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            if cyclic[ru]:
                return False
            cyclic[ru] = True
        else:
            if cyclic[ru] and cyclic[rv]:
                return False
            parent[ru] = rv
            cyclic[rv] = cyclic[rv] or cyclic[ru]
    return True


def _greedy_rank(G: Graph, test) -> int:
    chosen: list[int] = []
    for i in range(G.ne):
        if test(G, chosen + [i]):
            chosen.append(i)
    return len(chosen)


def _matroid_from_test(G: Graph, test) -> Matroid:
    ground = G.edge_ground()
    r = _greedy_rank(G, test)
    bases = [sum(1 << i for i in c) for c in itertools.combinations(range(G.ne), r) if test(G, c)]
    return Matroid(ground, bases, validate=False)


def cycle_matroid(G: Graph) -> Matroid:
    """M(G): bases are the spanning forests."""
    return _matroid_from_test(G, _forest_test)


def bicircular_matroid(G: Graph) -> Matroid:
    """B(G): independent sets are edge sets with at most one cycle per component."""
    return _matroid_from_test(G, _pseudoforest_test)


# automorphisms ---------------------------------------------------------------

def _edge_preserved(G: Graph):
    edge_set = G.edge_index

    def accept(perm):
        return all((perm[u], perm[v]) in edge_set for u, v in G.edges)

    return accept


@lru_cache(maxsize=64)
def _graph_search(G: Graph, cap: int):
    if G.nv > MAX_VERTICES:
        raise TooLarge(f"{G.nv} vertices exceeds {MAX_VERTICES}")
    colors = [G.degree(v) for v in range(G.nv)]
    return search_automorphisms(G.nv, G.edges, _edge_preserved(G), colors=colors, cap=cap)


def graph_automorphisms(G: Graph, cap: int = DEFAULT_CAP) -> PermGroup:
    """Vertex automorphism group of G."""
    return _graph_search(G, cap).group


@dataclass(frozen=True)
class EdgeAction:
    source: PermGroup
    group: PermGroup
    injective: bool


def edge_action(G: Graph, H: PermGroup | None = None) -> EdgeAction:
    """Permutations of edge ids induced by a group of vertex automorphisms."""
    if H is None:
        H = graph_automorphisms(G)
    if H.n != G.nv:
        raise NotAGroup("vertex group degree does not match the graph")
    table = np.full((G.nv, G.nv), -1, dtype=np.int16)
    for (u, v), i in G.edge_index.items():
        table[u, v] = i
    us = np.array([u for u, _ in G.edges], dtype=np.intp)
    vs = np.array([v for _, v in G.edges], dtype=np.intp)
    els = H.elements.astype(np.intp)
    img = table[els[:, us], els[:, vs]] if G.ne else np.zeros((H.order, 0), dtype=np.int16)
    if (img < 0).any():
        raise NotAGroup("a vertex permutation does not preserve adjacency")
    group = PermGroup(G.ne, img) if G.ne else PermGroup.trivial(0)
    return EdgeAction(H, group, group.order == H.order)


def graph_fixing_number(G: Graph, cap: int = DEFAULT_CAP) -> tuple[int, list[int]]:
    """Fixing number of G on its vertices and a witness (vertex ids)."""
    from .symmetry import minimum_fixing_set

    return minimum_fixing_set(graph_automorphisms(G, cap))


# catalogue -------------------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("K_n needs n >= 1")
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(vs, itertools.combinations(vs, 2))


def complete_bipartite(m: int, n: int) -> Graph:
    V = [f"v{i}" for i in range(1, m + 1)]
    W = [f"w{j}" for j in range(1, n + 1)]
    return Graph.from_edges(V + W, [(v, w) for v in V for w in W])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    """W_n: hub h, rim r1..rn; rim edge a_i = r_i r_(i+1), spoke b_i = h r_i."""
    if n < 3:
        raise BadParams("a wheel needs at least 3 rim vertices")
    rim = [f"r{i}" for i in range(1, n + 1)]
    edges = [(rim[i], rim[(i + 1) % n], f"a{i + 1}") for i in range(n)]
    edges += [("h", rim[i], f"b{i + 1}") for i in range(n)]
    return Graph.from_edges(["h"] + rim, edges)


def theta() -> Graph:
    """Two vertices u, w joined by two three-edge paths and one direct edge."""
    G = Graph.from_edges(
        ["u", "w", "p1", "p2", "q1", "q2"],
        [("u", "p1", "x1"), ("p1", "p2", "x2"), ("p2", "w", "x3"),
         ("u", "q1", "y1"), ("q1", "q2", "y2"), ("q2", "w", "y3"),
         ("u", "w", "z")],
    )
    _check_theta(G)
    return G


def k4_minus_e() -> Graph:
    return Graph.from_edges(["v", "w", "a1", "a2"],
                            [("v", "a1"), ("v", "a2"), ("w", "a1"), ("w", "a2"), ("a1", "a2")])


def two_k4e() -> Graph:
    """2-sum of two copies of K4 - e along the missing edge vw (which is then absent)."""
    G = Graph.from_edges(
        ["v", "w", "a1", "a2", "b1", "b2"],
        [("v", "a1"), ("v", "a2"), ("w", "a1"), ("w", "a2"), ("a1", "a2"),
         ("v", "b1"), ("v", "b2"), ("w", "b1"), ("w", "b2"), ("b1", "b2")],
    )
    _check_two_k4e(G)
    return G


def icosahedron() -> Graph:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    pts = np.array(pts)
    labels = [f"i{k}" for k in range(12)]
    edges = [(labels[a], labels[b]) for a, b in itertools.combinations(range(12), 2)
             if abs(np.sum((pts[a] - pts[b]) ** 2) - 4.0) < 1e-9]
    return Graph.from_edges(labels, edges)


def dodecahedron() -> Graph:
    """Planar dual of the icosahedron; each edge is labelled ``*e`` for the icosahedron edge it crosses."""
    ico = icosahedron()
    faces = [f for f in itertools.combinations(range(ico.nv), 3)
             if all(b in ico.neighbors[a] for a, b in itertools.combinations(f, 2))]
    names = ["f" + "_".join(ico.vertices[i][1:] for i in f) for f in faces]
    edges = []
    for (u, v), lab in zip(ico.edges, ico.edge_labels):
        sides = [k for k, f in enumerate(faces) if u in f and v in f]
        edges.append((names[sides[0]], names[sides[1]], "*" + lab))
    return Graph.from_edges(names, edges)


@lru_cache(maxsize=None)
def _theta_invariants(G: Graph) -> tuple:
    from .symmetry import clone_classes

    B = bicircular_matroid(G)
    from math import comb

    b_uniform = B.rank == 6 and B.n == 7 and len(B.bases) == comb(7, 6)
    sizes = tuple(sorted(len(c) for c in clone_classes(cycle_matroid(G))))
    return b_uniform, graph_automorphisms(G).order, sizes


def _check_theta(G: Graph) -> None:
    if _theta_invariants(G) != (True, 4, (1, 3, 3)):
        raise MatroidError(f"theta reconstruction drifted: {_theta_invariants(G)}")


@lru_cache(maxsize=None)
def _two_k4e_invariants(G: Graph) -> tuple:
    from .symmetry import automorphism_group

    return graph_automorphisms(G).order, automorphism_group(bicircular_matroid(G)).order


def _check_two_k4e(G: Graph) -> None:
    # |Aut(M(G))| is 32 for this graph; 128 would contradict fix(M(G)) = 2 on 10 edges
    if _two_k4e_invariants(G) != (16, 16):
        raise MatroidError(f"two_k4e reconstruction drifted: {_two_k4e_invariants(G)}")
