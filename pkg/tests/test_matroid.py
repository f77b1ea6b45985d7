import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidfix import builders as bd
from matroidfix.errors import (CircuitContainment, EmptyCircuit, EmptyFamily, ExchangeViolation,
                               LabelCollision, TooSmall, UnequalCardinality, UnknownElement)
from matroidfix.matroid import (GroundSet, SetFamily, bits, circuits_of, cocircuits_of, contract,
                                cyclic_flats, delete, direct_sum, dual, free_extension, from_bases,
                                from_circuits, is_connected, is_uniform, mask_of, rank_of, relabel)

from oracles import brute_circuits


@st.composite
def binary_matroids(draw, max_rows=4, max_cols=7):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    mat = draw(st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return bd.from_binary(bd.BinaryMatrix(tuple(map(tuple, mat))))


class TestGroundSet:
    def test_default_labels(self):
        assert GroundSet.of_size(4).labels == ("a", "b", "c", "d")

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            GroundSet(("a", "a"))

    def test_ids_and_labels(self):
        g = GroundSet(("x", "y", "z"))
        assert g.id_of("y") == 1
        assert g.id_of(2) == 2
        assert g.mask(["x", "z"]) == 0b101
        assert g.names(0b110) == ["y", "z"]
        with pytest.raises(UnknownElement):
            g.id_of("w")


def test_bits_roundtrip():
    assert bits(0b10110) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110


def test_setfamily_is_canonical():
    fam = SetFamily.of(4, [0b1100, 0b0011, 0b0011, 0b0001])
    assert fam.members == (0b0001, 0b0011, 0b1100)


class TestConstruction:
    def test_from_bases_validates_cardinality(self):
        with pytest.raises(UnequalCardinality):
            from_bases("abc", [["a"], ["a", "b"]])

    def test_empty_family(self):
        with pytest.raises(EmptyFamily):
            from_bases("abc", [])

    def test_exchange_violation_has_witness(self):
        with pytest.raises(ExchangeViolation) as info:
            from_bases("abcd", [["a", "b"], ["c", "d"]])
        assert info.value.witness is not None

    def test_from_circuits_rejects_nesting(self):
        with pytest.raises(CircuitContainment):
            from_circuits("abc", [["a", "b"], ["a", "b", "c"]])
        with pytest.raises(EmptyCircuit):
            from_circuits("abc", [[]])

    def test_from_circuits_fano_lines(self):
        F = bd.fano()
        again = from_circuits(F.labels, [F.names(c) for c in F.circuits])
        assert again == F

    def test_uniform_counts(self):
        U = bd.uniform(2, 5)
        assert len(U.bases) == 10 and U.rank == 2
        assert is_uniform(U)
        assert len(U.circuits) == comb(5, 3)


class TestDerived:
    def test_circuits_match_brute_force(self):
        for M in (bd.fano(), bd.vamos(), bd.p6(), bd.uniform(2, 4)):
            assert set(M.circuits) == brute_circuits(M.n, set(M.bases))

    def test_fano_structure(self):
        F = bd.fano()
        assert F.rank == 3
        assert [c.bit_count() for c in F.circuits].count(3) == 7
        assert len(cocircuits_of(F)) == 7
        assert all(c.bit_count() == 4 for c in cocircuits_of(F))

    def test_rank_and_closure(self):
        V = bd.vamos()
        assert rank_of(V, "abef") == 3
        assert rank_of(V, "abcd") == 4
        assert V.closure(V.mask("abe")) == V.mask("abef")
        assert V.closure(V.mask("abc")) == V.mask("abc")  # on none of the five planes

    def test_loops_and_coloops(self):
        M = direct_sum(bd.uniform(0, 1, ["x"]), bd.uniform(1, 1, ["y"]))
        assert M.names(M.loops) == ["x"] and M.names(M.coloops) == ["y"]

    def test_cyclic_flats_of_vamos(self):
        V = bd.vamos()
        flats = cyclic_flats(V)
        sizes = sorted(f.bit_count() for f in flats)
        # empty set, the five 4-point planes, whole ground set
        assert sizes == [0, 4, 4, 4, 4, 4, 8]


class TestOperations:
    def test_dual_is_involution(self):
        for M in (bd.fano(), bd.p6(), bd.vamos()):
            assert dual(dual(M)) == M
            assert dual(M).rank == M.n - M.rank

    def test_delete_contract_duality(self):
        F = bd.fano()
        for x in F.labels:
            assert dual(delete(F, x)) == contract(dual(F), x)

    def test_delete_coloop_and_contract_loop(self):
        M = direct_sum(bd.uniform(1, 2, ["a", "b"]), bd.uniform(1, 1, ["c"]))
        assert delete(M, "c").rank == 1
        L = direct_sum(bd.uniform(1, 2, ["a", "b"]), bd.uniform(0, 1, ["z"]))
        assert contract(L, "z") == delete(L, "z")

    def test_direct_sum(self):
        S = direct_sum(bd.uniform(1, 2, ["a", "b"]), bd.uniform(1, 2, ["c", "d"]))
        assert S.rank == 2 and len(S.bases) == 4
        assert not is_connected(S)
        with pytest.raises(LabelCollision):
            direct_sum(bd.fano(), bd.fano())

    def test_free_extension(self):
        E = free_extension(bd.uniform(2, 3))
        assert E.labels[-1] == "p"
        assert is_uniform(E) and E.rank == 2
        E2 = free_extension(bd.fano())
        assert E2.rank == 3 and E2.n == 8
        # the new point lies on no 3-point line
        assert all(c.bit_count() == 4 for c in E2.circuits if c >> 7 & 1)

    def test_connectivity(self):
        assert is_connected(bd.fano())
        with pytest.raises(TooSmall):
            is_connected(bd.uniform(1, 1))

    def test_relabel(self):
        R = relabel(bd.uniform(1, 2), ["p", "q"])
        assert R.labels == ("p", "q")


@settings(max_examples=40, deadline=None)
@given(binary_matroids())
def test_rank_axioms(M):
    n = M.n
    full = (1 << n) - 1
    rng = np.random.default_rng(M.n)
    for _ in range(20):
        a, b = (int(x) for x in rng.integers(0, full + 1, size=2))
        assert M.rank_of(a | b) + M.rank_of(a & b) <= M.rank_of(a) + M.rank_of(b)
        assert 0 <= M.rank_of(a) <= a.bit_count()
    assert M.rank_of(full) == M.rank


@settings(max_examples=40, deadline=None)
@given(binary_matroids())
def test_dual_and_circuits_properties(M):
    D = dual(M)
    assert dual(D) == M
    assert set(D.circuits) == set(cocircuits_of(M))
    # a circuit and a cocircuit never meet in exactly one element
    for c, d in itertools.product(circuits_of(M), cocircuits_of(M)):
        assert (c & d).bit_count() != 1


@settings(max_examples=30, deadline=None)
@given(binary_matroids(max_cols=6))
def test_circuits_against_oracle(M):
    assert set(M.circuits) == brute_circuits(M.n, set(M.bases))
