"""Individualisation-refinement search for automorphism groups of set systems.

The structure is a family of hyperedges on ``range(n)`` (circuits of a
matroid, edges of a graph) that every automorphism must permute. Ordered
partitions are refined by hyperedge colour counting; a first path of
individualisations yields a base ``b_1..b_k`` of the group. Working from the
deepest level up, for each point ``c`` of the target cell not yet in the
known orbit of ``b_i``, the subtree rooted at ``b_i -> c`` is searched for a
single leaf that passes the caller's acceptance test. The generators found
form a strong generating set; the group is enumerated from the transversals.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .groups import DEFAULT_CAP, PermGroup

Partition = list[list[int]]


class _Refiner:
    def __init__(self, n: int, hyperedges: Sequence[Sequence[int]]):
        self.n = n
        self.incident: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
        for h in hyperedges:
            h = tuple(h)
            for x in h:
                self.incident[x].append(h)

    def refine(self, cells: Partition) -> tuple[Partition, tuple]:
        """Split cells until stable; return the partition and an invariant trace."""
        n = self.n
        cell_of = [0] * n
        while True:
            for idx, cell in enumerate(cells):
                for x in cell:
                    cell_of[x] = idx
            keys = [None] * n
            for x in range(n):
                keys[x] = tuple(sorted(
                    (len(h), tuple(sorted(cell_of[y] for y in h if y != x)))
                    for h in self.incident[x]
                ))
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict = {}
                for x in cell:
                    groups.setdefault(keys[x], []).append(x)
                for k in sorted(groups):
                    new_cells.append(groups[k])
            if len(new_cells) == len(cells):
                trace = tuple((len(c), keys[c[0]]) for c in new_cells)
                return new_cells, trace
            cells = new_cells


def _individualize(cells: Partition, idx: int, x: int) -> Partition:
    cell = cells[idx]
    rest = [y for y in cell if y != x]
    return cells[:idx] + [[x], rest] + cells[idx + 1:]


def _target(cells: Partition) -> int:
    """Index of the first smallest non-singleton cell."""
    best = -1
    for i, c in enumerate(cells):
        if len(c) > 1 and (best < 0 or len(c) < len(cells[best])):
            best = i
    return best


class SearchResult:
    def __init__(self, base, generators, transversals, group):
        self.base: list[int] = base
        self.generators: list[tuple[int, ...]] = generators
        self.transversals: list[list[tuple[int, ...]]] = transversals
        self.group: PermGroup = group

    @property
    def order(self) -> int:
        return self.group.order


def search_automorphisms(
    n: int,
    hyperedges: Sequence[Sequence[int]],
    accept: Callable[[tuple[int, ...]], bool],
    colors: Sequence | None = None,
    cap: int = DEFAULT_CAP,
) -> SearchResult:
    """Full automorphism group of the structure, filtered by ``accept``.

    ``accept`` receives a candidate permutation and must return True exactly
    for genuine automorphisms; ``colors`` is an optional invariant initial
    colouring (equal colours for elements an automorphism may swap).
    """
    ref = _Refiner(n, hyperedges)
    if colors is None:
        start = [list(range(n))] if n else []
    else:
        by: dict = {}
        for x in range(n):
            by.setdefault(colors[x], []).append(x)
        start = [by[k] for k in sorted(by)]
    root, root_trace = ref.refine(start)

    path = [root]
    traces = [root_trace]
    base: list[int] = []
    targets: list[int] = []
    while (t := _target(path[-1])) >= 0:
        b = min(path[-1][t])
        base.append(b)
        targets.append(t)
        cells, tr = ref.refine(_individualize(path[-1], t, b))
        path.append(cells)
        traces.append(tr)
    leaf0 = [c[0] for c in path[-1]]
    depth = len(base)

    def leaf_perm(cells):
        perm = [0] * n
        for src, cell in zip(leaf0, cells):
            perm[src] = cell[0]
        return tuple(perm)

    def explore(cells, level):
        # cells has been refined at `level` and its trace matched the first path
        if level == depth:
            perm = leaf_perm(cells)
            return perm if accept(perm) else None
        t = targets[level]
        for x in sorted(cells[t]):
            nxt, tr = ref.refine(_individualize(cells, t, x))
            if tr != traces[level + 1]:
                continue
            found = explore(nxt, level + 1)
            if found is not None:
                return found
        return None

    gens: list[tuple[int, tuple[int, ...]]] = []  # (level found, permutation)
    transversals: list[list[tuple[int, ...]]] = [None] * depth
    for level in range(depth - 1, -1, -1):
        b = base[level]
        t = targets[level]
        level_gens = [g for lv, g in gens if lv >= level]
        reps = _orbit_reps(n, b, level_gens)
        for c in sorted(path[level][t]):
            if c in reps:
                continue
            cells, tr = ref.refine(_individualize(path[level], t, c))
            if tr != traces[level + 1]:
                continue
            g = explore(cells, level + 1)
            if g is not None:
                gens.append((level, g))
                level_gens.append(g)
                reps = _orbit_reps(n, b, level_gens)
        transversals[level] = [reps[p] for p in sorted(reps)]

    group = PermGroup.from_transversals(n, transversals, cap=cap)
    return SearchResult(base, [g for _, g in gens], transversals, group)


def _orbit_reps(n: int, b: int, gens: Sequence[tuple[int, ...]]) -> dict[int, tuple[int, ...]]:
    """Map each point of the orbit of ``b`` to a group element sending b there."""
    reps = {b: tuple(range(n))}
    queue = [b]
    while queue:
        p = queue.pop()
        rp = reps[p]
        for g in gens:
            q = g[p]
            if q not in reps:
                reps[q] = tuple(g[i] for i in rp)
                queue.append(q)
    return reps
