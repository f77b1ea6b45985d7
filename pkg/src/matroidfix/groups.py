"""Permutation groups held as explicit element arrays.

A permutation of ``range(n)`` is a sequence ``p`` with ``p[i]`` the image of
``i``. Composition ``p * q`` means "apply q, then p", i.e. ``p[q]``.
Groups are stored as an ``(order, n)`` integer array, identity first, rows in
lexicographic order, so every query below is a vectorised filter.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, DegreeMismatch, NotAGroup

DEFAULT_CAP = 1_000_000

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """``p * q``: apply ``q`` first."""
    return tuple(p[i] for i in q)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def transposition(n: int, x: int, y: int) -> Perm:
    p = list(range(n))
    p[x], p[y] = y, x
    return tuple(p)


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Non-trivial cycles of ``p``."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def _dtype(n: int):
    return np.int8 if n <= 127 else np.int16


def row_keys(arr: np.ndarray) -> np.ndarray:
    """One opaque, exactly comparable key per row."""
    arr = np.ascontiguousarray(arr)
    return arr.view(np.dtype((np.void, arr.dtype.itemsize * arr.shape[1]))).ravel()


def _canonical_rows(arr: np.ndarray) -> np.ndarray:
    arr = np.unique(arr, axis=0)  # unique sorts rows lexicographically
    return np.ascontiguousarray(arr)


class PermGroup:
    """A permutation group of degree ``n`` with its full element list."""

    def __init__(self, n: int, elements: np.ndarray, *, check: bool = False):
        elements = np.asarray(elements, dtype=_dtype(n))
        # degree 0 has exactly one (empty) permutation
        elements = elements.reshape(1, 0) if n == 0 else elements.reshape(-1, n)
        self.n = n
        self.elements = _canonical_rows(elements) if len(elements) else elements
        if len(self.elements) == 0 or not np.array_equal(self.elements[0], np.arange(n)):
            raise NotAGroup("element list does not contain the identity")
        if check:
            self.verify()

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, np.arange(n)[None, :])

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]], cap: int = DEFAULT_CAP) -> "PermGroup":
        """Closure of ``gens`` by breadth-first multiplication."""
        dt = _dtype(n)
        gens = [np.asarray(g, dtype=dt) for g in gens]
        for g in gens:
            if g.shape != (n,) or not is_perm(g.tolist()):
                raise DegreeMismatch(f"generator {g.tolist()} is not a permutation of degree {n}")
        known = np.arange(n, dtype=dt)[None, :]
        keys = set(row_keys(known).tolist())
        frontier = known
        while len(frontier):
            fresh = []
            for g in gens:
                prod = g[frontier]
                for row, key in zip(prod, row_keys(prod).tolist()):
                    if key not in keys:
                        keys.add(key)
                        fresh.append(row)
            if len(keys) > cap:
                raise CapExceeded(cap, len(keys))
            frontier = np.array(fresh, dtype=dt).reshape(-1, n)
            known = np.vstack([known, frontier])
        return cls(n, known)

    @classmethod
    def from_transversals(
        cls, n: int, transversals: Sequence[Sequence[Sequence[int]]], cap: int = DEFAULT_CAP
    ) -> "PermGroup":
        """Enumerate ``U_0 U_1 ... U_k`` from coset representatives of a stabiliser chain."""
        order = math.prod(len(u) for u in transversals)
        if order > cap:
            raise CapExceeded(cap, order)
        dt = _dtype(n)
        acc = np.arange(n, dtype=dt)[None, :]
        for reps in reversed(transversals):
            reps = np.asarray(reps, dtype=dt).reshape(-1, n)
            acc = reps[:, acc].reshape(-1, n)
        return cls(n, acc)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __iter__(self):
        return (tuple(int(x) for x in row) for row in self.elements)

    def __contains__(self, perm) -> bool:
        p = np.asarray(perm, dtype=self.elements.dtype).reshape(1, self.n)
        return bool(np.isin(row_keys(p), self._keys)[0])

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.elements, other.elements)

    def __repr__(self):
        return f"<PermGroup degree={self.n} order={self.order}>"

    @property
    def _keys(self) -> np.ndarray:
        if not hasattr(self, "_key_cache"):
            self._key_cache = row_keys(self.elements)
        return self._key_cache

    def is_trivial(self) -> bool:
        return self.order == 1

    def stabilizer(self, points: Iterable[int]) -> "PermGroup":
        """Pointwise stabiliser of ``points``."""
        pts = np.fromiter(points, dtype=np.intp)
        if pts.size == 0:
            return self
        keep = (self.elements[:, pts] == pts).all(axis=1)
        sub = PermGroup.__new__(PermGroup)
        sub.n = self.n
        sub.elements = self.elements[keep]
        return sub

    def stabilizer_order(self, points: Iterable[int]) -> int:
        pts = np.fromiter(points, dtype=np.intp)
        if pts.size == 0:
            return self.order
        return int((self.elements[:, pts] == pts).all(axis=1).sum())

    def orbit(self, x: int) -> list[int]:
        return sorted(set(self.elements[:, x].tolist()))

    def orbits(self) -> list[list[int]]:
        """Orbit partition, each orbit ascending, orbits ordered by least member."""
        seen = set()
        out = []
        for x in range(self.n):
            if x in seen:
                continue
            orb = self.orbit(x)
            seen.update(orb)
            out.append(orb)
        return out

    def max_orbit_size(self) -> int:
        return max((len(o) for o in self.orbits()), default=0)

    def verify(self, samples: int = 10_000, exhaustive_limit: int = 10_000, seed: int = 0) -> None:
        """Check identity, inverses and closure; raise NotAGroup on failure.

        Closure is checked on every pair when the order is at most
        ``exhaustive_limit`` and on ``samples`` random pairs otherwise.
        """
        els = self.elements
        keys = np.sort(self._keys)
        if not np.array_equal(els[0], np.arange(self.n)):
            raise NotAGroup("identity missing")
        if not all(is_perm(row.tolist()) for row in els[: min(len(els), 1000)]):
            raise NotAGroup("row is not a permutation")
        inv = np.argsort(els, axis=1).astype(els.dtype)
        if not np.isin(row_keys(inv), keys).all():
            raise NotAGroup("not closed under inverses")
        if self.order <= exhaustive_limit:
            for g in els:
                if not np.isin(row_keys(g[els]), keys).all():
                    raise NotAGroup("not closed under composition")
        else:
            rng = np.random.default_rng(seed)
            a = els[rng.integers(0, self.order, samples)]
            b = els[rng.integers(0, self.order, samples)]
            prod = np.take_along_axis(a, b.astype(np.intp), axis=1)
            if not np.isin(row_keys(prod), keys).all():
                raise NotAGroup("not closed under composition")
