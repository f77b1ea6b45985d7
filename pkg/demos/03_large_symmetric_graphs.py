"""Graphs too large for the generic matroid engine.

The icosahedron and dodecahedron have 30 edges each. Their cycle matroids are
handled through the edge action of the graph automorphism group, which is the
full matroid group for 3-connected graphs. Complete graphs up to K7 follow
the floor(2n/3) pattern.
"""

from matroidfix import graphs as gr
from matroidfix.symmetry import fixing_number
from matroidfix.theorems import check_complete_graphs

for name, G in [("icosahedron", gr.icosahedron()), ("dodecahedron", gr.dodecahedron())]:
    act = gr.edge_action(G)
    rep = fixing_number(act.group, labels=G.edge_labels)
    print(f"{name}: |Aut| = {act.source.order}, fix(M) = {rep.fix}, e.g. fix {rep.names(rep.witness)}")

for n in range(3, 8):
    d = check_complete_graphs(n).data
    print(f"K{n}: fix(M) = {d['fix_M']}, fix(B) = {d['fix_B']}, floor(2n/3) = {d['formula']}")
