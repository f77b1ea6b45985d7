import pytest

from matroidfix import builders as bd
from matroidfix import graphs as gr
from matroidfix import theorems as th
from matroidfix.matroid import bits
from matroidfix.symmetry import automorphism_group


class TestSamefix:
    def test_k5(self):
        rep = th.check_samefix(gr.complete(5))
        assert rep.status == "PASS"
        assert (rep.data["fix_M"], rep.data["fix_B"]) == (3, 3)

    def test_theta_is_skipped_with_data(self):
        rep = th.check_samefix(gr.theta())
        assert rep.status == "SKIP"
        assert (rep.data["fix_M"], rep.data["fix_B"]) == (4, 6)

    def test_two_k4e_equal_despite_hypotheses(self):
        rep = th.check_samefix(gr.two_k4e())
        assert rep.status == "SKIP"
        assert rep.data["fix_M"] == rep.data["fix_B"] == 2

    def test_both_routes_agree_on_k5(self):
        rep = th.check_samefix(gr.complete(5), engine="both")
        assert rep.data["routes_M"] == {"generic": 3, "edge-action": 3}
        assert rep.status == "PASS"


class TestAutgps:
    def test_k4_cycle(self):
        rep = th.check_autogps(gr.complete(4), "cycle")
        assert rep.status == "PASS" and rep.data["aut_matroid"] == 24

    def test_wheel6_bicircular(self):
        rep = th.check_autogps(gr.wheel(6), "bicircular")
        assert rep.status == "PASS" and rep.data["aut_matroid"] == 12

    def test_two_k4e_cycle_skipped(self):
        rep = th.check_autogps(gr.two_k4e(), "cycle")
        assert rep.status == "SKIP"
        assert rep.data["edge_action_order"] == 16
        assert rep.data["aut_matroid"] == 32


@pytest.mark.parametrize("n", range(4, 9))
def test_wheels(n):
    rep = th.check_wheels(n)
    assert rep.status == "PASS"
    assert rep.data["aut_order"] == 2 * n and rep.data["size3_cocircuits"] == n


def test_wheel_out_of_range_skips():
    assert th.check_wheels(3).status == "SKIP"


@pytest.mark.parametrize("n,fm,fb", [(3, 2, 2), (4, 2, 5), (5, 3, 3), (6, 4, 4), (7, 4, 4)])
def test_complete_graphs(n, fm, fb):
    rep = th.check_complete_graphs(n)
    assert rep.status == "PASS"
    assert rep.data["fix_M"] == fm and rep.data["fix_B"] == fb


def test_complete_graph_generic_cross_check():
    rep = th.check_complete_graphs(5)
    assert rep.data["fix_M_generic"] == rep.data["fix_M_edge_action"] == 3


class TestCompleteBipartite:
    @pytest.mark.parametrize("m,n,fix", [(3, 3, 3), (3, 4, 3), (3, 5, 4), (2, 2, 3), (1, 3, 2)])
    def test_values_that_hold(self, m, n, fix):
        rep = th.check_complete_bipartite(m, n)
        assert rep.status == "PASS"
        assert rep.data["fix_M"] == rep.data["fix_B"] == fix

    @pytest.mark.parametrize("m,n,fm,fb", [(2, 3, 3, 5), (2, 4, 4, 4)])
    def test_m_equal_two_disagrees_with_formula(self, m, n, fm, fb):
        # K_{2,n} has series pairs, so its cycle matroid has n disjoint clone pairs
        rep = th.check_complete_bipartite(m, n)
        assert rep.status == "FAIL"
        assert (rep.data["fix_M"], rep.data["fix_B"]) == (fm, fb)

    def test_lemma_witness_shape(self):
        edges = th.lemma_witness(3, 5)
        assert len(edges) == 4
        assert {u for u, _ in edges} == {"v1", "v2", "v3"}
        assert {w for _, w in edges} == {"w1", "w2", "w3", "w4"}

    def test_lemma_witness_fixes_b(self):
        K = gr.complete_bipartite(3, 4)
        B = gr.bicircular_matroid(K)
        labels = [f"{u}-{v}" for u, v in th.lemma_witness(3, 4)]
        assert automorphism_group(B).stabilizer_order(bits(B.mask(labels))) == 1


class TestDuality:
    @pytest.mark.parametrize("build,fix", [(bd.fano, 3), (lambda: bd.uniform(2, 5), 4),
                                           (lambda: gr.cycle_matroid(gr.complete(4)), 2)])
    def test_matroids(self, build, fix):
        rep = th.check_planar_duality(build())
        assert rep.status == "PASS" and rep.data["fix"] == rep.data["fix_dual"] == fix

    def test_platonic(self):
        rep = th.check_platonic_duality()
        assert rep.status == "PASS"
        assert rep.data["same_edge_group"]


class TestMatthews:
    def test_wheel(self):
        rep = th.check_matthews(gr.wheel(4))
        assert rep.status == "PASS" and rep.data["B_connected"]

    def test_pendant_edge(self):
        G = gr.Graph.from_edges("abcd", [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
        rep = th.check_matthews(G)
        assert rep.status == "PASS" and not rep.data["B_connected"]

    def test_cycle_is_out_of_scope(self):
        assert th.check_matthews(gr.cycle(5)).status == "SKIP"


def test_mnk_uniformity():
    rep = th.check_mnk_uniformity(22)
    assert rep.status == "PASS"
    rows = {(r["n"], r["k"]): r for r in rep.data["cases"]}
    assert rows[(4, 2)]["uniform"] and rows[(5, 4)]["uniform"]
    assert not rows[(5, 2)]["uniform"]
    witness = rows[(5, 2)]["non_basis"]
    M = bd.m_n_k(5, 2)
    assert len(witness) == 5 and M.mask(witness) not in M.basis_set


def test_reports_serialise():
    rep = th.check_samefix(gr.complete(5))
    d = rep.as_dict()
    assert d["status"] == "PASS" and d["hypotheses"]["3-connected"]


def test_corpus_filter():
    reports = th.run_corpus("wheels")
    assert [r.subject for r in reports] == [f"wheel({n})" for n in range(4, 9)]
