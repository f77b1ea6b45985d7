"""Symmetry of a few classical small matroids.

Builds the Fano plane, the Vamos matroid and the transversal matroid P6,
then prints automorphism group orders, fixing numbers, clone classes and
the stabiliser chain that shows why four points are needed for V8.
"""

from matroidfix import automorphism_group, fano, fixing_number, p6, stabilizer_chain, vamos
from matroidfix.matroid import bits

for name, M in [("F7", fano()), ("V8", vamos()), ("P6", p6())]:
    rep = fixing_number(M)
    clones = [rep.names(c) for c in rep.clone_classes if len(c) > 1]
    print(f"{name}: |Aut| = {rep.aut_order}, fix = {rep.fix}, witness = {rep.names(rep.witness)}")
    print(f"    nontrivial clone classes: {clones or 'none'}")
    b = rep.bounds
    print(f"    2^k = {b.two_pow_k} <= |Aut| <= min((n)_k = {b.n_falling_k}, s^k = {b.s_pow_k})")

# Fixing a, b, c, d of V8 one at a time; each clone pair halves what is left.
V = vamos()
print("V8 chain on a,b,c,d:", stabilizer_chain(automorphism_group(V), bits(V.mask("abcd"))))
