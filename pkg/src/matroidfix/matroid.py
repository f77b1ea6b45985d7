"""Matroids on at most 22 labelled elements, stored by their family of bases.

Every subset of the ground set is a bit mask: element ``i`` is bit ``1 << i``.
All constructors normalise to a sorted tuple of basis masks, so two matroids
are equal exactly when their labels and basis families coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CircuitContainment,
    EmptyCircuit,
    EmptyFamily,
    ExchangeViolation,
    LabelCollision,
    TooLarge,
    TooSmall,
    UnequalCardinality,
    UnknownElement,
)

MAX_ELEMENTS = 22


def bits(mask: int) -> list[int]:
    """Element ids present in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def _canonical_key(mask: int):
    return (mask.bit_count(), bits(mask))


def _drop_bit(mask: int, x: int) -> int:
    low = (1 << x) - 1
    return (mask & low) | ((mask >> 1) & ~low)


@dataclass(frozen=True)
class GroundSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) > MAX_ELEMENTS:
            raise TooLarge(f"ground set has {len(labels)} elements, limit is {MAX_ELEMENTS}")
        if len(set(labels)) != len(labels):
            raise LabelCollision(f"duplicate labels in {labels}")

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """Labels a, b, c, ... (then e22-style names past z)."""
        if n <= 26:
            return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:n]))
        return cls(tuple(f"e{i}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def id_of(self, label) -> int:
        """Element id for a label; plain ints are taken as ids already."""
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < self.n:
                return int(label)
            raise UnknownElement(f"element id {label} out of range for n={self.n}")
        try:
            return self.index[str(label)]
        except KeyError:
            raise UnknownElement(f"no element labelled {label!r}") from None

    def mask(self, labels: Iterable) -> int:
        return mask_of(self.id_of(x) for x in labels)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated, canonically ordered family of subsets of ``range(n)``."""

    n: int
    members: tuple[int, ...]

    @classmethod
    def of(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        full = (1 << n) - 1
        uniq = set(masks)
        for m in uniq:
            if m & ~full or m < 0:
                raise UnknownElement(f"subset {m:#x} is not inside a {n}-element ground set")
        return cls(n, tuple(sorted(uniq, key=_canonical_key)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return mask in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.members)

    def sizes(self) -> list[int]:
        return [m.bit_count() for m in self.members]

    def as_labels(self, ground: GroundSet) -> list[list[str]]:
        return [ground.names(m) for m in self.members]


class Matroid:
    """A matroid given by its bases.

    Instances are treated as immutable. Derived structures (independent
    sets, circuits, ...) are computed on first use and cached.
    """

    def __init__(self, ground: GroundSet, bases: Iterable[int], *, validate: bool = True):
        fam = SetFamily.of(ground.n, bases)
        if not fam.members:
            raise EmptyFamily("a matroid needs at least one basis")
        sizes = set(fam.sizes())
        if len(sizes) != 1:
            raise UnequalCardinality(f"bases have different sizes {sorted(sizes)}")
        self.ground = ground
        self.bases: tuple[int, ...] = fam.members
        self.rank: int = sizes.pop()
        if validate:
            _check_exchange(self.bases, ground.n)

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.ground.labels

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.labels == other.labels and self.bases == other.bases

    def __hash__(self):
        return hash((self.labels, self.bases))

    def __repr__(self):
        return f"<Matroid n={self.n} rank={self.rank} bases={len(self.bases)}>"

    @cached_property
    def basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @cached_property
    def basis_array(self) -> np.ndarray:
        return np.array(self.bases, dtype=np.uint32)

    @cached_property
    def independent_layers(self) -> list[frozenset[int]]:
        """Independent sets grouped by size; ``layers[k]`` holds the k-sets."""
        layers = [frozenset()] * (self.rank + 1)
        layers[self.rank] = self.basis_set
        for k in range(self.rank, 0, -1):
            below = set()
            for m in layers[k]:
                rest = m
                while rest:
                    low = rest & -rest
                    below.add(m ^ low)
                    rest ^= low
            layers[k - 1] = frozenset(below)
        return layers

    @cached_property
    def independent_sets(self) -> frozenset[int]:
        return frozenset().union(*self.independent_layers)

    def is_independent(self, mask: int) -> bool:
        k = mask.bit_count()
        return k <= self.rank and mask in self.independent_layers[k]

    def max_independent(self, mask: int) -> int:
        """Greedy maximal independent subset of ``mask`` (any one suffices)."""
        ind = 0
        for i in bits(mask):
            if self.is_independent(ind | (1 << i)):
                ind |= 1 << i
        return ind

    def rank_of(self, mask: int) -> int:
        return self.max_independent(mask).bit_count()

    def closure(self, mask: int) -> int:
        ind = self.max_independent(mask)
        cl = mask
        for y in range(self.n):
            if not mask >> y & 1 and not self.is_independent(ind | (1 << y)):
                cl |= 1 << y
        return cl

    @cached_property
    def circuits(self) -> SetFamily:
        layers = self.independent_layers
        found = []
        for k in range(1, self.rank + 2):
            for ind in layers[k - 1]:
                top = ind.bit_length()
                for y in range(top, self.n):
                    cand = ind | (1 << y)
                    if k <= self.rank and cand in layers[k]:
                        continue
                    if all((cand ^ (1 << x)) in layers[k - 1] for x in bits(ind)):
                        found.append(cand)
        return SetFamily.of(self.n, found)

    @cached_property
    def loops(self) -> int:
        return self.full & ~_union(self.bases)

    @cached_property
    def coloops(self) -> int:
        inter = self.full
        for b in self.bases:
            inter &= b
        return inter

    def names(self, mask: int) -> list[str]:
        return self.ground.names(mask)

    def mask(self, labels: Iterable) -> int:
        return self.ground.mask(labels)


def _union(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


def _check_exchange(bases: Sequence[int], n: int) -> None:
    arr = np.array(bases, dtype=np.uint32)
    lookup = set(bases)
    for b1 in bases:
        outside = [y for y in range(n) if not b1 >> y & 1]
        for x in bits(b1):
            stem = b1 ^ (1 << x)
            reach = 0
            for y in outside:
                if stem | (1 << y) in lookup:
                    reach |= 1 << y
            # every B2 avoiding x must offer some y in B2 - B1 reachable from B1 - x
            need = (arr >> np.uint32(x) & np.uint32(1)) == 0
            ok = (arr & np.uint32(~b1 & ((1 << n) - 1)) & np.uint32(reach)) != 0
            bad = np.nonzero(need & ~ok)[0]
            if bad.size:
                b2 = int(arr[bad[0]])
                raise ExchangeViolation(
                    f"no exchange for x={x} between bases {bits(b1)} and {bits(b2)}",
                    witness=(b1, b2, x),
                )


def _as_ground(ground) -> GroundSet:
    if isinstance(ground, GroundSet):
        return ground
    if isinstance(ground, int):
        return GroundSet.of_size(ground)
    return GroundSet(tuple(ground))


def _as_masks(ground: GroundSet, family) -> list[int]:
    if isinstance(family, SetFamily):
        return list(family.members)
    out = []
    for s in family:
        out.append(s if isinstance(s, int) else ground.mask(s))
    return out


def from_bases(ground, bases, *, validate: bool = True) -> Matroid:
    """Build a matroid from its bases.

    ``ground`` may be a GroundSet, a label sequence or an element count;
    ``bases`` may hold masks or label collections.
    """
    g = _as_ground(ground)
    return Matroid(g, _as_masks(g, bases), validate=validate)


def from_circuits(ground, circuits, *, validate: bool = True) -> Matroid:
    g = _as_ground(ground)
    circ = sorted(set(_as_masks(g, circuits)), key=_canonical_key)
    for c in circ:
        if c == 0:
            raise EmptyCircuit("the empty set cannot be a circuit")
    for i, c in enumerate(circ):
        for d in circ[i + 1:]:
            if c & d == c:
                raise CircuitContainment(f"circuit {g.names(c)} lies inside {g.names(d)}")
    by_elem = [[c for c in circ if c >> i & 1] for i in range(g.n)]
    maximal = []
    stack = [0]
    while stack:
        ind = stack.pop()
        grew = False
        for y in range(g.n):
            if ind >> y & 1:
                continue
            cand = ind | (1 << y)
            if any(c & cand == c for c in by_elem[y]):
                continue
            grew = True
            if y > (ind.bit_length() - 1):
                stack.append(cand)
        if not grew:
            maximal.append(ind)
    return Matroid(g, maximal, validate=validate)


def rank_of(M: Matroid, subset) -> int:
    mask = subset if isinstance(subset, int) else M.mask(subset)
    return M.rank_of(mask)


def circuits_of(M: Matroid) -> SetFamily:
    return M.circuits


def cocircuits_of(M: Matroid) -> SetFamily:
    return dual(M).circuits


def dual(M: Matroid) -> Matroid:
    full = M.full
    return Matroid(M.ground, [full & ~b for b in M.bases], validate=False)


def _minor_ground(M: Matroid, x: int) -> GroundSet:
    return GroundSet(M.labels[:x] + M.labels[x + 1:])


def delete(M: Matroid, x) -> Matroid:
    x = M.ground.id_of(x)
    bit = 1 << x
    if M.coloops & bit:
        kept = [b ^ bit for b in M.bases]
    else:
        kept = [b for b in M.bases if not b & bit]
    return Matroid(_minor_ground(M, x), [_drop_bit(b, x) for b in kept], validate=False)


def contract(M: Matroid, x) -> Matroid:
    x = M.ground.id_of(x)
    bit = 1 << x
    if M.loops & bit:
        return delete(M, x)
    kept = [b ^ bit for b in M.bases if b & bit]
    return Matroid(_minor_ground(M, x), [_drop_bit(b, x) for b in kept], validate=False)


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    clash = set(M1.labels) & set(M2.labels)
    if clash:
        raise LabelCollision(f"labels used by both summands: {sorted(clash)}")
    g = GroundSet(M1.labels + M2.labels)
    shift = M1.n
    return Matroid(g, [b1 | (b2 << shift) for b1 in M1.bases for b2 in M2.bases], validate=False)


def free_extension(M: Matroid, label: str | None = None) -> Matroid:
    """Add one element in general position without raising the rank."""
    if M.rank < 1:
        raise TooSmall("free extension needs rank at least 1")
    if label is None:
        label = "p"
        while label in M.ground.index:
            label += "'"
    g = GroundSet(M.labels + (label,))
    p = 1 << M.n
    bases = list(M.bases) + [i | p for i in M.independent_layers[M.rank - 1]]
    return Matroid(g, bases, validate=False)


def is_connected(M: Matroid) -> bool:
    """True when every pair of elements lies on a common circuit."""
    if M.n < 2:
        raise TooSmall("connectivity is defined here for n >= 2")
    parent = list(range(M.n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for c in M.circuits:
        ids = bits(c)
        root = find(ids[0])
        for j in ids[1:]:
            parent[find(j)] = root
    return len({find(i) for i in range(M.n)}) == 1


def cyclic_flats(M: Matroid) -> SetFamily:
    """Flats that are unions of circuits; the bottom one is the set of loops."""
    gens = {M.closure(c) for c in M.circuits}
    start = M.loops
    seen = {start}
    queue = [start]
    while queue:
        z = queue.pop()
        for g in gens:
            if g & z == g:
                continue
            nxt = M.closure(z | g)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return SetFamily.of(M.n, seen)


def relabel(M: Matroid, labels: Sequence[str]) -> Matroid:
    return Matroid(GroundSet(tuple(labels)), M.bases, validate=False)


def is_uniform(M: Matroid) -> bool:
    from math import comb

    return len(M.bases) == comb(M.n, M.rank)
