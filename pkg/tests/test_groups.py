import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidfix.errors import CapExceeded, DegreeMismatch, NotAGroup
from matroidfix.groups import PermGroup, compose, cycles, identity, inverse, transposition


def symmetric(n):
    return PermGroup.from_generators(n, [transposition(n, 0, 1), tuple(range(1, n)) + (0,)])


def test_compose_and_inverse():
    p, q = (1, 2, 0), (0, 2, 1)
    assert compose(p, q) == tuple(p[i] for i in q)
    assert compose(p, inverse(p)) == identity(3)
    assert cycles((1, 0, 3, 2, 4)) == [(0, 1), (2, 3)]


def test_symmetric_group_order():
    for n in range(1, 6):
        G = symmetric(n) if n > 1 else PermGroup.trivial(1)
        assert G.order == [1, 2, 6, 24, 120][n - 1]


def test_canonical_element_order():
    G = symmetric(4)
    assert tuple(G.elements[0]) == identity(4)
    rows = [tuple(r) for r in G.elements]
    assert rows == sorted(rows)


def test_membership_and_equality():
    G = symmetric(4)
    assert (1, 0, 2, 3) in G
    cyc = PermGroup.from_generators(4, [(1, 2, 3, 0)])
    assert cyc.order == 4 and (1, 0, 2, 3) not in cyc
    assert PermGroup.from_generators(4, [(3, 0, 1, 2)]) == cyc
    assert cyc != G


def test_orbits_and_stabilisers():
    G = PermGroup.from_generators(5, [(1, 0, 2, 3, 4), (0, 1, 3, 4, 2)])
    assert G.orbits() == [[0, 1], [2, 3, 4]]
    assert G.order == 6
    assert G.stabilizer([2]).order == 2
    assert G.stabilizer_order([0, 2]) == 1
    assert G.max_orbit_size() == 3


def test_orbit_stabilizer_theorem():
    G = symmetric(5)
    for x in range(5):
        assert len(G.orbit(x)) * G.stabilizer([x]).order == G.order


def test_cap():
    with pytest.raises(CapExceeded):
        PermGroup.from_generators(6, [transposition(6, 0, 1), (1, 2, 3, 4, 5, 0)], cap=100)


def test_bad_generator():
    with pytest.raises(DegreeMismatch):
        PermGroup.from_generators(3, [(0, 0, 1)])


def test_verify_rejects_non_groups():
    G = symmetric(3)
    G.verify()
    broken = PermGroup(3, np.array([identity(3), (1, 2, 0)], dtype=np.int8))
    with pytest.raises(NotAGroup):
        broken.verify()
    with pytest.raises(NotAGroup):
        PermGroup(3, np.array([(1, 0, 2)], dtype=np.int8), check=True)


def test_from_transversals_matches_closure():
    # S3 via the chain S3 > S2 > 1
    t0 = [identity(3), (1, 0, 2), (2, 1, 0)]
    t1 = [identity(3), (0, 2, 1)]
    assert PermGroup.from_transversals(3, [t0, t1]) == symmetric(3)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_generated_group_is_closed(gens):
    G = PermGroup.from_generators(5, [tuple(g) for g in gens])
    G.verify()
    assert 120 % G.order == 0
    els = [tuple(r) for r in G.elements]
    for a, b in itertools.product(els[:10], els[:10]):
        assert compose(a, b) in G
