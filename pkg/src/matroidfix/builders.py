"""Constructors for the matroids used throughout: uniform, binary, Vamos,
P6, transversal matroids and the named catalogue."""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .errors import BadParams, MatroidError, RankDeficient, TooLarge, UnknownName
from .matroid import MAX_ELEMENTS, GroundSet, Matroid, from_bases

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def uniform(r: int, n: int, labels: Sequence[str] | None = None) -> Matroid:
    if not 0 <= r <= n <= MAX_ELEMENTS:
        raise BadParams(f"need 0 <= r <= n <= {MAX_ELEMENTS}, got r={r}, n={n}")
    g = GroundSet(tuple(labels)) if labels is not None else GroundSet.of_size(n)
    bases = [sum(1 << i for i in c) for c in itertools.combinations(range(n), r)]
    return Matroid(g, bases, validate=False)


# binary matroids -------------------------------------------------------------

@dataclass(frozen=True)
class BinaryMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise BadParams("matrix needs at least one row")
        if len({len(r) for r in rows}) != 1:
            raise BadParams("ragged matrix")
        if any(v not in (0, 1) for r in rows for v in r):
            raise BadParams("entries must be 0 or 1")
        if len(rows) > MAX_ELEMENTS or len(rows[0]) > MAX_ELEMENTS:
            raise TooLarge("matrix dimensions are limited to 22")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def columns(self) -> list[int]:
        """Columns as integers; bit i is the entry in row i."""
        r, n = self.shape
        return [sum(self.rows[i][j] << i for i in range(r)) for j in range(n)]

    def is_simple(self) -> bool:
        cols = self.columns()
        return 0 not in cols and len(set(cols)) == len(cols)


def gf2_rank(vectors: Sequence[int]) -> int:
    basis: list[int] = []  # kept reduced by leading bit
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def from_binary(matrix, labels: Sequence[str] | None = None) -> Matroid:
    """Column matroid of a 0/1 matrix over GF(2)."""
    if not isinstance(matrix, BinaryMatrix):
        matrix = BinaryMatrix(tuple(map(tuple, matrix)))
    cols = matrix.columns()
    n = len(cols)
    r = gf2_rank(cols)
    g = GroundSet(tuple(labels)) if labels is not None else GroundSet.of_size(n)
    bases = [sum(1 << i for i in c) for c in itertools.combinations(range(n), r)
             if gf2_rank([cols[i] for i in c]) == r]
    return Matroid(g, bases, validate=False)


def projective_geometry(r: int) -> Matroid:
    """PG(r-1, 2): all nonzero vectors of GF(2)^r, in integer order."""
    n = 2**r - 1
    if n > MAX_ELEMENTS:
        raise TooLarge(f"PG({r - 1},2) has {n} points")
    rows = [[(v >> i) & 1 for v in range(1, n + 1)] for i in range(r)]
    labels = [str(v) for v in range(1, n + 1)] if r > 3 else None
    return from_binary(rows, labels)


def fano() -> Matroid:
    return projective_geometry(3)


# small named matroids ---------------------------------------------------------

VAMOS_CIRCUITS = ("abef", "bcfg", "cdgh", "adeh", "bdfh")


def vamos() -> Matroid:
    g = GroundSet(tuple("abcdefgh"))
    bad = {g.mask(c) for c in VAMOS_CIRCUITS}
    bases = [g.mask(c) for c in itertools.combinations("abcdefgh", 4) if g.mask(c) not in bad]
    return Matroid(g, bases)


# transversal matroids ---------------------------------------------------------

@dataclass(frozen=True)
class TransversalPresentation:
    """Bipartite presentation: element ``x`` may be matched to any y in ``R[x]``."""

    X: tuple[str, ...]
    Y: tuple[str, ...]
    R: Mapping[str, frozenset[str]]

    def __post_init__(self):
        X = tuple(str(x) for x in self.X)
        Y = tuple(str(y) for y in self.Y)
        R = {str(x): frozenset(str(y) for y in self.R.get(x, ())) for x in X}
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "R", R)
        if len(set(X)) != len(X) or len(set(Y)) != len(Y):
            raise BadParams("duplicate labels in presentation")
        unknown = set().union(*R.values()) - set(Y) if R else set()
        if unknown:
            raise BadParams(f"R mentions unknown targets {sorted(unknown)}")
        extra = set(self.R) - set(X) if isinstance(self.R, dict) else set()
        if extra:
            raise BadParams(f"R mentions unknown elements {sorted(extra)}")

    @classmethod
    def from_sets(cls, X, Y, R) -> "TransversalPresentation":
        return cls(tuple(X), tuple(Y), {x: frozenset(R[x]) for x in R})

    def adjacency(self) -> list[list[int]]:
        yi = {y: j for j, y in enumerate(self.Y)}
        return [sorted(yi[y] for y in self.R[x]) for x in self.X]

    def with_edge(self, x: str, y: str) -> "TransversalPresentation":
        R = dict(self.R)
        R[x] = R[x] | {y}
        return TransversalPresentation(self.X, self.Y, R)

    def edge_count(self) -> int:
        return sum(len(v) for v in self.R.values())


def _augment(adj, match_y, x, seen) -> bool:
    for y in adj[x]:
        if seen[y]:
            continue
        seen[y] = True
        if match_y[y] < 0 or _augment(adj, match_y, match_y[y], seen):
            match_y[y] = x
            return True
    return False


def max_matching(adj: Sequence[Sequence[int]], m: int, elements: Sequence[int]) -> int:
    """Size of a maximum matching of ``elements`` into ``range(m)``."""
    match_y = [-1] * m
    return sum(_augment(adj, match_y, x, [False] * m) for x in elements)


def transversal_bases(P: TransversalPresentation) -> tuple[int, list[int]]:
    """Rank and bases of the transversal matroid, by incremental matching."""
    adj = P.adjacency()
    n, m = len(P.X), len(P.Y)
    rank = max_matching(adj, m, range(n))
    bases: list[int] = []

    def grow(last, mask, size, match_y):
        if size == rank:
            bases.append(mask)
            return
        for x in range(last + 1, n - (rank - size) + 1):
            trial = list(match_y)
            if _augment(adj, trial, x, [False] * m):
                grow(x, mask | (1 << x), size + 1, trial)

    grow(-1, 0, 0, [-1] * m)
    return rank, bases


def transversal(P: TransversalPresentation) -> Matroid:
    """Matroid on X whose independent sets are the sets matchable into Y.

    Warns with RankDeficient when fewer than |Y| elements can be matched.
    """
    if len(P.X) > MAX_ELEMENTS:
        raise TooLarge(f"{len(P.X)} elements exceeds {MAX_ELEMENTS}")
    rank, bases = transversal_bases(P)
    if rank < len(P.Y):
        warnings.warn(f"presentation has |Y|={len(P.Y)} but rank {rank}", RankDeficient, stacklevel=2)
    return Matroid(GroundSet(P.X), bases, validate=False)


def maximal_presentation(P: TransversalPresentation) -> TransversalPresentation:
    """Add edges in label order while the matroid stays the same."""
    target = transversal_bases(P)
    current = P
    changed = True
    while changed:
        changed = False
        for x in current.X:
            for y in current.Y:
                if y in current.R[x]:
                    continue
                trial = current.with_edge(x, y)
                if transversal_bases(trial) == target:
                    current = trial
                    changed = True
    return current


def is_maximal_presentation(P: TransversalPresentation) -> bool:
    return maximal_presentation(P) == P


P6_PRESENTATION = TransversalPresentation(
    tuple("abcdef"), ("1", "2", "3"),
    {"a": frozenset("12"), "b": frozenset("12"), "c": frozenset("12"),
     "d": frozenset("123"), "e": frozenset("123"), "f": frozenset("123")},
)


def p6() -> Matroid:
    """P6: rank 3 on a..f with the single three-point line {a, b, c}."""
    M = transversal(P6_PRESENTATION)
    g = GroundSet(tuple("abcdef"))
    line = g.mask("abc")
    direct = [g.mask(c) for c in itertools.combinations("abcdef", 3) if g.mask(c) != line]
    if M != Matroid(g, direct):
        raise MatroidError("P6 transversal construction disagrees with its basis list")
    return M


def mnk_presentation(n: int, k: int) -> TransversalPresentation:
    if not 1 <= k <= n:
        raise BadParams(f"need 1 <= k <= n, got n={n}, k={k}")
    if comb(n, k) > MAX_ELEMENTS:
        raise TooLarge(f"C({n},{k}) = {comb(n, k)} elements exceeds {MAX_ELEMENTS}")
    Y = tuple(str(i) for i in range(1, n + 1))
    subsets = list(itertools.combinations(Y, k))
    X = tuple("".join(s) if n < 10 else "_".join(s) for s in subsets)
    return TransversalPresentation(X, Y, {x: frozenset(s) for x, s in zip(X, subsets)})


def m_n_k(n: int, k: int) -> Matroid:
    """Transversal matroid of the family of all k-subsets of [n]."""
    P = mnk_presentation(n, k)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RankDeficient)
        return transversal(P)


# catalogue -------------------------------------------------------------------

GRAPH_NAMES = ("theta", "wheel", "complete", "complete_bipartite", "icosahedron",
               "dodecahedron", "two_k4e", "k4_minus_e", "cycle", "path")
MATROID_NAMES = ("fano", "pg32", "vamos", "p6", "u", "mnk", "pg")


def _parse_name(name: str) -> tuple[str, list[int]]:
    name = name.strip().lower()
    m = re.fullmatch(r"u_(\d+)_(\d+)", name)
    if m:
        return "u", [int(m.group(1)), int(m.group(2))]
    m = re.fullmatch(r"([a-z_0-9]+?)(?:\((.*)\)|:(.*))?", name)
    if not m:
        raise UnknownName(f"cannot parse catalogue name {name!r}")
    base = m.group(1)
    raw = m.group(2) if m.group(2) is not None else m.group(3)
    args = [int(a) for a in re.split(r"[,\s]+", raw.strip()) if a] if raw else []
    if base == "u_r_n":
        base = "u"
    return base, args


def named(name: str):
    """Catalogue lookup; graph names return a Graph, the rest a Matroid.

    Accepted forms include ``fano``, ``u_2_4``, ``u_r_n(2,4)``, ``wheel(6)``,
    ``complete:5`` and ``complete_bipartite(3,4)``.
    """
    from . import graphs

    base, args = _parse_name(name)
    try:
        if base == "fano":
            return fano()
        if base == "pg32":
            return projective_geometry(4)
        if base == "pg":
            return projective_geometry(args[0] + 1)
        if base == "vamos":
            return vamos()
        if base == "p6":
            return p6()
        if base == "u":
            return uniform(*args)
        if base == "mnk":
            return m_n_k(*args)
        if base == "theta":
            return graphs.theta()
        if base == "two_k4e":
            return graphs.two_k4e()
        if base == "k4_minus_e":
            return graphs.k4_minus_e()
        if base == "icosahedron":
            return graphs.icosahedron()
        if base == "dodecahedron":
            return graphs.dodecahedron()
        if base == "wheel":
            return graphs.wheel(*args)
        if base == "complete":
            return graphs.complete(*args)
        if base == "complete_bipartite":
            return graphs.complete_bipartite(*args)
        if base == "cycle":
            return graphs.cycle(*args)
        if base == "path":
            return graphs.path(*args)
    except TypeError as exc:
        raise UnknownName(f"bad arguments for {name!r}: {exc}") from None
    raise UnknownName(f"no catalogue entry named {name!r}")
