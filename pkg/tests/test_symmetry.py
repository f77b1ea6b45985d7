import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidfix import builders as bd
from matroidfix.errors import CapExceeded, DegreeMismatch, NotABasis, TooLarge
from matroidfix.groups import PermGroup
from matroidfix.matroid import bits, direct_sum, dual, relabel
from matroidfix.symmetry import (automorphism_group, binary_basis_fixing_check, clone_classes,
                                 clone_classes_via_cyclic_flats, evaluate_bounds, fixing_number,
                                 greedy_fixing_set, is_automorphism, minimum_fixing_set,
                                 naive_fixing_number, stabilizer_chain)

from oracles import brute_automorphisms, brute_fix, vf2_aut_order
from test_matroid import binary_matroids

SMALL = {
    "fano": bd.fano,
    "p6": bd.p6,
    "u24": lambda: bd.uniform(2, 4),
    "u36": lambda: bd.uniform(3, 6),
    "pg22": lambda: bd.projective_geometry(2),
}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_group_matches_brute_force(name):
    M = SMALL[name]()
    perms = brute_automorphisms(M.n, set(M.bases))
    G = automorphism_group(M)
    assert G == PermGroup.from_generators(M.n, perms)
    assert fixing_number(M).fix == brute_fix(perms, M.n)


@pytest.mark.parametrize("build", [bd.vamos, bd.fano, bd.p6])
def test_group_order_matches_vf2(build):
    M = build()
    assert automorphism_group(M).order == vf2_aut_order(M.n, M.circuits)


class TestWorkedValues:
    def test_fano(self):
        rep = fixing_number(bd.fano())
        assert (rep.fix, rep.aut_order) == (3, 168)
        b = rep.bounds
        assert (b.n_falling_k, b.s_pow_k, b.two_pow_k) == (210, 343, 8)
        assert b.all_hold

    def test_vamos_chain_and_clones(self):
        V = bd.vamos()
        G = automorphism_group(V)
        assert stabilizer_chain(G, bits(V.mask("abcd"))) == [64, 16, 4, 2, 1]
        assert [V.names(sum(1 << i for i in c)) for c in clone_classes(V)] == [
            ["a", "e"], ["b", "f"], ["c", "g"], ["d", "h"]]
        assert fixing_number(V).fix == 4

    def test_p6(self):
        rep = fixing_number(bd.p6())
        assert (rep.fix, rep.aut_order) == (4, 36)
        assert rep.clone_classes == [[0, 1, 2], [3, 4, 5]]

    @pytest.mark.parametrize("r,n", [(1, 3), (2, 4), (2, 5), (3, 6), (4, 6)])
    def test_uniform(self, r, n):
        assert fixing_number(bd.uniform(r, n)).fix == n - 1

    def test_pg32(self):
        M = bd.projective_geometry(4)
        rep = fixing_number(M)
        # |GL(4,2)| = (16-1)(16-2)(16-4)(16-8)
        assert (rep.fix, rep.aut_order) == (4, 15 * 14 * 12 * 8)
        G = automorphism_group(M)
        assert all(is_automorphism(M, tuple(p)) for p in G.elements[::97])
        G.verify(samples=2000)


def test_is_automorphism_checks_degree():
    with pytest.raises(DegreeMismatch):
        is_automorphism(bd.fano(), (0, 1, 2))


def test_trivial_group_has_empty_witness():
    # a coloop next to a loop: nothing can move
    M = direct_sum(bd.uniform(1, 1, ["c"]), bd.uniform(0, 1, ["z"]))
    rep = fixing_number(M)
    assert (rep.aut_order, rep.fix, rep.witness, rep.chain) == (1, 0, [], [1])


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        automorphism_group(bd.uniform(3, 8), cap=1000)


def test_clone_methods_agree_and_limits():
    for M in (bd.fano(), bd.vamos(), bd.p6(), bd.uniform(2, 5)):
        assert clone_classes(M) == clone_classes_via_cyclic_flats(M)
    with pytest.raises(TooLarge):
        clone_classes_via_cyclic_flats(bd.uniform(1, 17))


def test_binary_bases_fix():
    F = bd.fano()
    assert all(binary_basis_fixing_check(F, b) for b in F.bases)
    with pytest.raises(NotABasis):
        binary_basis_fixing_check(F, F.circuits.members[0])


def test_direct_sum_additivity():
    F, V = bd.fano(), bd.vamos()
    S = direct_sum(F, relabel(V, [x.upper() for x in V.labels]))
    assert fixing_number(S).fix == 7
    FF = direct_sum(F, relabel(F, [x.upper() for x in F.labels]))
    rep = fixing_number(FF)
    assert rep.fix == 6 and rep.aut_order == 2 * 168 ** 2


def test_bounds_arithmetic():
    b = evaluate_bounds(7, 3, 7, 168, clone_count=7)
    assert (b.n_falling_k, b.s_pow_k, b.two_pow_k, b.clone_bound) == (210, 343, 8, 0)
    assert b.all_hold
    assert not evaluate_bounds(4, 1, 4, 24).all_hold


@settings(max_examples=60, deadline=None)
@given(binary_matroids(max_rows=3, max_cols=6))
def test_random_binary_against_oracles(M):
    perms = brute_automorphisms(M.n, set(M.bases))
    G = automorphism_group(M)
    assert G.order == len(perms)
    assert all(tuple(p) in G for p in perms)
    rep = fixing_number(M)
    assert rep.fix == brute_fix(perms, M.n) == naive_fixing_number(G)[0]
    assert G.stabilizer_order(rep.witness) == 1
    assert rep.bounds.all_hold
    assert fixing_number(dual(M)).fix == rep.fix
    assert len(greedy_fixing_set(G)) >= rep.fix


@settings(max_examples=40, deadline=None)
@given(st.lists(st.permutations(range(6)), min_size=1, max_size=2))
def test_pruned_search_equals_naive(gens):
    G = PermGroup.from_generators(6, [tuple(g) for g in gens])
    k, witness = minimum_fixing_set(G)
    assert k == naive_fixing_number(G)[0]
    assert G.stabilizer_order(witness) == 1 and len(witness) == k
