"""Automorphism groups, fixing numbers and clone classes of matroids."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DegreeMismatch, NotABasis, NotTransitive, TooLarge
from .groups import DEFAULT_CAP, PermGroup, is_perm, transposition
from .matroid import Matroid, bits, cyclic_flats, mask_of
from .search import search_automorphisms


def image_masks(perm: Sequence[int], masks: np.ndarray) -> np.ndarray:
    """Apply ``perm`` to every subset in an array of bit masks."""
    out = np.zeros_like(masks)
    one = masks.dtype.type(1)
    for i, j in enumerate(perm):
        out |= ((masks >> masks.dtype.type(i)) & one) << masks.dtype.type(j)
    return out


def is_automorphism(M: Matroid, perm: Sequence[int]) -> bool:
    """True when ``perm`` maps the basis family of ``M`` onto itself."""
    if len(perm) != M.n or not is_perm(list(perm)):
        raise DegreeMismatch(f"expected a permutation of {M.n} elements")
    img = image_masks(perm, M.basis_array)
    return bool(np.isin(img, M.basis_array).all())


def _structure(M: Matroid):
    """Smaller of the circuit and cocircuit families; both are preserved."""
    from .matroid import dual

    circ = M.circuits
    if len(circ) > 64:
        cocirc = dual(M).circuits
        if len(cocirc) < len(circ):
            return cocirc
    return circ


@lru_cache(maxsize=256)
def _aut_search(M: Matroid, cap: int):
    hyper = [bits(c) for c in _structure(M)]
    return search_automorphisms(M.n, hyper, lambda p: is_automorphism(M, p), cap=cap)


def automorphism_group(M: Matroid, cap: int = DEFAULT_CAP) -> PermGroup:
    """The full automorphism group of ``M`` as an explicit element list."""
    return _aut_search(M, cap).group


def stabilizer(group: PermGroup, points) -> PermGroup:
    return group.stabilizer(points)


def orbits(group: PermGroup) -> list[list[int]]:
    return group.orbits()


def max_orbit_size(group: PermGroup) -> int:
    return group.max_orbit_size()


def stabilizer_chain(group: PermGroup, seq: Sequence[int]) -> list[int]:
    """Orders of the pointwise stabilisers of every prefix of ``seq``."""
    return [group.stabilizer_order(seq[:i]) for i in range(len(seq) + 1)]


def clone_classes(M: Matroid) -> list[list[int]]:
    """Classes of the relation "swapping x and y is an automorphism"."""
    n = M.n
    related = {(x, y) for x, y in itertools.combinations(range(n), 2)
               if is_automorphism(M, transposition(n, x, y))}
    classes = _classes_from_pairs(n, related)
    for cls in classes:
        for x, y in itertools.combinations(cls, 2):
            if (x, y) not in related:
                raise NotTransitive(f"clones fail transitivity at {M.labels[x]}, {M.labels[y]}")
    return classes


def _classes_from_pairs(n, pairs) -> list[list[int]]:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x, y in pairs:
        parent[find(y)] = find(x)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def clone_classes_via_cyclic_flats(M: Matroid) -> list[list[int]]:
    """Group elements lying in exactly the same cyclic flats."""
    if M.n > 16:
        raise TooLarge("cyclic-flat clone test is limited to 16 elements")
    flats = cyclic_flats(M).members
    groups: dict[tuple, list[int]] = {}
    for x in range(M.n):
        key = tuple(i for i, f in enumerate(flats) if f >> x & 1)
        groups.setdefault(key, []).append(x)
    return sorted(groups.values())


# fixing numbers -------------------------------------------------------------

def _min_points_needed(order: int, max_orbit: int) -> int:
    # each fixed point shrinks the group by at most the largest orbit size
    if order <= 1:
        return 0
    t, reach = 0, 1
    while reach < order:
        reach *= max_orbit
        t += 1
    return t


def greedy_fixing_set(group: PermGroup) -> list[int]:
    """Repeatedly fix the least point of a largest orbit of the current stabiliser."""
    chosen: list[int] = []
    els = group.elements
    while len(els) > 1:
        best = None
        for x in range(group.n):
            if x in chosen:
                continue
            size = len(np.unique(els[:, x]))
            if size > 1 and (best is None or size > best[0]):
                best = (size, x)
        x = best[1]
        chosen.append(x)
        els = els[els[:, x] == x]
    return chosen


def _exists_fixing_set(els: np.ndarray, n: int, k: int, chosen: list[int]):
    """Depth-first search over orbit representatives for a fixing set of size k."""
    if len(els) == 1:
        return list(chosen)
    if k == 0:
        return None
    reps = []
    seen = 0
    top = 0
    for x in range(n):
        if seen >> x & 1:
            continue
        orb = np.unique(els[:, x])
        seen |= mask_of(orb.tolist())
        if len(orb) > 1:
            reps.append(x)
            top = max(top, len(orb))
    if _min_points_needed(len(els), top) > k:
        return None
    for x in reps:
        chosen.append(x)
        found = _exists_fixing_set(els[els[:, x] == x], n, k - 1, chosen)
        chosen.pop()
        if found is not None:
            return found
    return None


def minimum_fixing_set(group: PermGroup, lower: int = 0) -> tuple[int, list[int]]:
    """Exact base size of ``group`` with a deterministic witness.

    Sizes are tried in increasing order from ``lower`` (a caller-supplied
    valid lower bound) up to the greedy upper bound.
    """
    if group.is_trivial():
        return 0, []
    greedy = greedy_fixing_set(group)
    start = max(lower, _min_points_needed(group.order, group.max_orbit_size()), 1)
    for k in range(start, len(greedy)):
        found = _exists_fixing_set(group.elements, group.n, k, [])
        if found is not None:
            return k, found
    return len(greedy), greedy


def naive_fixing_number(group: PermGroup) -> tuple[int, list[int]]:
    """Reference oracle: scan all subsets in order of size."""
    for k in range(group.n + 1):
        for sub in itertools.combinations(range(group.n), k):
            if group.stabilizer_order(sub) == 1:
                return k, list(sub)
    raise AssertionError("the full ground set always fixes a faithful group")


@dataclass
class Bounds:
    n: int
    k: int
    s: int
    aut_order: int
    n_falling_k: int
    s_pow_k: int
    two_pow_k: int
    falling_ok: bool
    orbit_ok: bool
    lower_ok: bool
    clone_bound: int | None = None
    clone_ok: bool | None = None

    @property
    def all_hold(self) -> bool:
        checks = [self.falling_ok, self.orbit_ok, self.lower_ok]
        if self.clone_ok is not None:
            checks.append(self.clone_ok)
        return all(checks)


def evaluate_bounds(n: int, k: int, s: int, aut_order: int, clone_count: int | None = None) -> Bounds:
    falling = math.perm(n, k)
    b = Bounds(
        n=n, k=k, s=s, aut_order=aut_order,
        n_falling_k=falling, s_pow_k=s**k, two_pow_k=2**k,
        falling_ok=aut_order <= falling,
        orbit_ok=aut_order <= s**k,
        lower_ok=2**k <= aut_order,
    )
    if clone_count is not None:
        b.clone_bound = n - clone_count
        b.clone_ok = k >= n - clone_count
    return b


@dataclass
class FixReport:
    """Invariants of a symmetry computation; element ids refer to ``labels``."""

    labels: tuple[str, ...]
    fix: int
    witness: list[int]
    aut_order: int
    orbits: list[list[int]]
    max_orbit: int
    clone_classes: list[list[int]] | None
    bounds: Bounds
    chain: list[int] = field(default_factory=list)
    greedy: list[int] = field(default_factory=list)

    def names(self, ids) -> list[str]:
        return [self.labels[i] for i in ids]


def fixing_number(target, labels: Sequence[str] | None = None, cap: int = DEFAULT_CAP) -> FixReport:
    """Fixing number of a matroid, or base size of a supplied group.

    For a matroid the clone bound seeds the search; for a bare group
    (e.g. an induced edge action) only orbit-size bounds are used.
    """
    if isinstance(target, Matroid):
        group = automorphism_group(target, cap=cap)
        classes = clone_classes(target)
        labels = target.labels
        lower = target.n - len(classes)
    else:
        group = target
        classes = None
        lower = 0
        if labels is None:
            labels = tuple(str(i) for i in range(group.n))
    k, witness = minimum_fixing_set(group, lower)
    s = group.max_orbit_size()
    bounds = evaluate_bounds(group.n, k, s, group.order, None if classes is None else len(classes))
    return FixReport(
        labels=tuple(labels),
        fix=k,
        witness=witness,
        aut_order=group.order,
        orbits=group.orbits(),
        max_orbit=s,
        clone_classes=classes,
        bounds=bounds,
        chain=stabilizer_chain(group, witness),
        greedy=greedy_fixing_set(group),
    )


def bounds_report(M: Matroid, cap: int = DEFAULT_CAP) -> Bounds:
    return fixing_number(M, cap=cap).bounds


def binary_basis_fixing_check(M: Matroid, basis, group: PermGroup | None = None) -> bool:
    """Whether the basis ``basis`` is a fixing set of ``M``."""
    b = basis if isinstance(basis, int) else M.mask(basis)
    if b not in M.basis_set:
        raise NotABasis(f"{M.names(b)} is not a basis")
    group = group if group is not None else automorphism_group(M)
    return group.stabilizer_order(bits(b)) == 1
