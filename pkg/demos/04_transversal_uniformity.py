"""Which of the matroids M_(n,k) are uniform?

M_(n,k) is the transversal matroid of k-subsets of an n-set, each matched to
one of its members. The table lists every case with at most 22 elements and
prints a non-basis witness whenever the matroid is not uniform.
"""

from matroidfix.theorems import check_mnk_uniformity

rep = check_mnk_uniformity(22)
for row in rep.data["cases"]:
    tag = "uniform" if row["uniform"] else f"not uniform, e.g. {' '.join(row['non_basis'])}"
    print(f"M_({row['n']},{row['k']}): rank {row['rank']}, {row['bases']} bases, {tag}")
print("prediction k == 1 or n - k <= 2 holds everywhere:", rep.status == "PASS")
