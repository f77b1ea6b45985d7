"""Cycle versus bicircular matroids of the same graph.

For 3-connected graphs both matroids have the graph's own symmetry, so their
fixing numbers agree. The theta graph shows how badly that can fail without
the connectivity hypothesis.
"""

from matroidfix import graphs as gr
from matroidfix.symmetry import fixing_number
from matroidfix.theorems import check_autogps, check_samefix

subjects = [("K5", gr.complete(5)), ("wheel(6)", gr.wheel(6)), ("K3,3", gr.complete_bipartite(3, 3)),
            ("theta", gr.theta()), ("2-sum of K4-e", gr.two_k4e())]

print(f"{'graph':>14} {'|Aut G|':>8} {'|Aut M|':>8} {'|Aut B|':>8} {'fix M':>6} {'fix B':>6}  samefix")
for name, G in subjects:
    m = fixing_number(gr.cycle_matroid(G))
    b = fixing_number(gr.bicircular_matroid(G))
    status = check_samefix(G).status
    print(f"{name:>14} {gr.graph_automorphisms(G).order:>8} {m.aut_order:>8} {b.aut_order:>8}"
          f" {m.fix:>6} {b.fix:>6}  {status}")

# The induced edge action equals the matroid group exactly when the hypotheses hold.
for name, G in subjects:
    rep = check_autogps(G, "cycle")
    print(f"{name}: edge action {rep.data['edge_action_order']} vs Aut(M) {rep.data['aut_matroid']} -> {rep.status}")
