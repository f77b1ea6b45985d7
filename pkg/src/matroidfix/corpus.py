"""The acceptance corpus: every worked value, checked as exact integers."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import graphs as gr
from . import theorems as th
from .builders import (P6_PRESENTATION, fano, is_maximal_presentation, named, p6,
                       projective_geometry, uniform, vamos)
from .matroid import Matroid, bits, direct_sum, dual, relabel
from .symmetry import (automorphism_group, clone_classes, clone_classes_via_cyclic_flats,
                       fixing_number, naive_fixing_number, stabilizer_chain)


@dataclass
class Check:
    name: str
    expected: Any
    observed: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def expect(self, name: str, expected, observed) -> None:
        self.checks.append(Check(name, expected, observed))

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        bad = [c for c in self.checks if not c.ok]
        tail = "; ".join(f"{c.name}: expected {c.expected}, got {c.observed}" for c in bad)
        return f"[{tag}] {self.number:2d} {self.title} ({self.seconds:.1f}s)" + (f" -- {tail}" if tail else "")

    def as_dict(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "checks": [{"name": c.name, "expected": c.expected, "observed": c.observed, "ok": c.ok}
                       for c in self.checks],
        }


def _named_classes(M: Matroid, classes) -> list[list[str]]:
    return sorted(sorted(M.labels[i] for i in c) for c in classes)


def c1_fano(r: CriterionResult) -> None:
    rep = fixing_number(fano())
    r.expect("fix", 3, rep.fix)
    r.expect("|Aut|", 168, rep.aut_order)
    b = rep.bounds
    r.expect("bounds", (210, 343, 8, True), (b.n_falling_k, b.s_pow_k, b.two_pow_k, b.all_hold))


def c2_vamos(r: CriterionResult) -> None:
    V = vamos()
    rep = fixing_number(V)
    r.expect("fix", 4, rep.fix)
    r.expect("|Aut|", 64, rep.aut_order)
    r.expect("chain a,b,c,d", [64, 16, 4, 2, 1], stabilizer_chain(automorphism_group(V), bits(V.mask("abcd"))))
    r.expect("clones", [["a", "e"], ["b", "f"], ["c", "g"], ["d", "h"]], _named_classes(V, rep.clone_classes))


def c3_p6(r: CriterionResult) -> None:
    P = p6()
    rep = fixing_number(P)
    r.expect("fix", 4, rep.fix)
    r.expect("|Aut|", 36, rep.aut_order)
    r.expect("clones", [["a", "b", "c"], ["d", "e", "f"]], _named_classes(P, rep.clone_classes))
    r.expect("maximal presentation", True, is_maximal_presentation(P6_PRESENTATION))


def c4_uniform(r: CriterionResult) -> None:
    for rk, n in [(1, 3), (2, 4), (2, 5), (3, 6), (4, 6)]:
        r.expect(f"fix(U_{rk},{n})", n - 1, fixing_number(uniform(rk, n)).fix)


def c5_theta(r: CriterionResult) -> None:
    G = gr.theta()
    M, B = gr.cycle_matroid(G), gr.bicircular_matroid(G)
    fm, fb = fixing_number(M), fixing_number(B)
    r.expect("fix(M)", 4, fm.fix)
    r.expect("fix(B)", 6, fb.fix)
    r.expect("|Aut(M)|", 72, fm.aut_order)
    r.expect("|Aut(B)|", 5040, fb.aut_order)
    r.expect("|Aut(G)|", 4, gr.graph_automorphisms(G).order)


def c6_wheels(r: CriterionResult) -> None:
    for n in (4, 5, 6):
        rep = th.check_wheels(n)
        r.expect(f"|Aut(B(W_{n}))|", 2 * n, rep.data["aut_order"])
        r.expect(f"fix(B(W_{n}))", 2, rep.data["fix"])
        r.expect(f"size-3 cocircuits W_{n}", n, rep.data["size3_cocircuits"])
        r.expect(f"wheel({n}) report", "PASS", rep.status)


def c7_complete(r: CriterionResult) -> None:
    for n in range(4, 8):
        rep = th.check_complete_graphs(n)
        r.expect(f"fix(M(K_{n}))", (2 * n) // 3, rep.data["fix_M"])
        if n == 4:
            r.expect("fix(B(K_4))", 5, rep.data["fix_B"])
        elif n <= 6:
            r.expect(f"fix(B(K_{n}))", (2 * n) // 3, rep.data["fix_B"])
        if "fix_M_generic" in rep.data:
            r.expect(f"K_{n} generic = edge action", rep.data["fix_M_edge_action"], rep.data["fix_M_generic"])


def c8_bipartite(r: CriterionResult) -> None:
    for m, n, want in [(2, 3, 2), (2, 4, 3), (3, 4, 3), (3, 3, 3), (2, 2, 3)]:
        rep = th.check_complete_bipartite(m, n)
        r.expect(f"fix(M(K_{m},{n}))", want, rep.data["fix_M"])
        r.expect(f"fix(B(K_{m},{n}))", want, rep.data["fix_B"])


def c9_two_k4e(r: CriterionResult) -> None:
    G = gr.two_k4e()
    M, B = gr.cycle_matroid(G), gr.bicircular_matroid(G)
    fm, fb = fixing_number(M), fixing_number(B)
    r.expect("|Aut(G)|", 16, gr.graph_automorphisms(G).order)
    r.expect("|Aut(B)|", 16, fb.aut_order)
    r.expect("|Aut(M)|", 128, fm.aut_order)
    r.expect("fix(M)", 2, fm.fix)
    r.expect("fix(B)", 2, fb.fix)
    r.expect("graph fixing number", 3, gr.graph_fixing_number(G)[0])


def c10_mnk(r: CriterionResult) -> None:
    rep = th.check_mnk_uniformity(22)
    for row in rep.data["cases"]:
        n, k = row["n"], row["k"]
        r.expect(f"M_{n},{k} uniform", k == 1 or n - k <= 2, row["uniform"])


def c11_binary(r: CriterionResult) -> None:
    for name, M in [("F7", fano()), ("PG(3,2)", projective_geometry(4))]:
        G = automorphism_group(M)
        moving = sum(1 for b in M.bases if G.stabilizer_order(bits(b)) != 1)
        r.expect(f"bases of {name} with nontrivial stabiliser", 0, moving)
    r.expect("fix(PG(3,2))", 4, fixing_number(projective_geometry(4)).fix)


def c12_platonic(r: CriterionResult) -> None:
    for name, G in [("icosahedron", gr.icosahedron()), ("dodecahedron", gr.dodecahedron())]:
        act = gr.edge_action(G)
        r.expect(f"|Aut({name})|", 120, act.source.order)
        r.expect(f"fix(M({name})) by edge action", 2, fixing_number(act.group).fix)
    r.expect("duality report", "PASS", th.check_platonic_duality().status)


# property suites --------------------------------------------------------------

def catalog_matroids() -> list[tuple[str, Matroid]]:
    """Matroids of the shipped catalog small enough for the generic engine."""
    out = [("fano", fano()), ("vamos", vamos()), ("p6", p6()), ("pg32", projective_geometry(4))]
    out += [(f"u_{a}_{b}", uniform(a, b)) for a, b in [(1, 3), (2, 4), (2, 5), (3, 6), (4, 6), (0, 2), (3, 3)]]
    for gname, G in [("theta", gr.theta()), ("two_k4e", gr.two_k4e()), ("complete(4)", gr.complete(4)),
                     ("complete(5)", gr.complete(5)), ("wheel(4)", gr.wheel(4)), ("wheel(5)", gr.wheel(5)),
                     ("complete_bipartite(2,3)", gr.complete_bipartite(2, 3)),
                     ("complete_bipartite(3,3)", gr.complete_bipartite(3, 3))]:
        out.append((f"M({gname})", gr.cycle_matroid(G)))
        out.append((f"B({gname})", gr.bicircular_matroid(G)))
    return out


SUM_PAIRS = [("fano", "vamos"), ("u_2_4", "fano"), ("p6", "u_1_3"), ("fano", "fano"), ("M(complete(4))", "u_2_5")]


def corpus_graphs() -> list[tuple[str, gr.Graph]]:
    return [(name, named(name))
            for name in th.SAMEFIX_GRAPHS + ("theta", "two_k4e", "complete(4)", "complete(7)",
                                              "complete_bipartite(2,3)", "complete_bipartite(3,5)")]


def c13_properties(r: CriterionResult) -> None:
    cat = catalog_matroids()
    by_name = dict(cat)
    reports = {}
    for name, M in cat:
        rep = fixing_number(M)
        reports[name] = rep
        r.expect(f"fix({name}) = fix(dual)", rep.fix, fixing_number(dual(M)).fix)
        r.expect(f"bounds hold for {name}", True, rep.bounds.all_hold)
        if M.n <= 16:
            r.expect(f"clone methods agree on {name}", rep.clone_classes, clone_classes_via_cyclic_flats(M))
        if M.n <= 8:
            r.expect(f"pruned = naive on {name}", rep.fix, naive_fixing_number(automorphism_group(M))[0])
    for a, b in SUM_PAIRS:
        A, B = by_name[a], by_name[b]
        B = relabel(B, [x + "'" for x in B.labels])
        r.expect(f"fix({a} + {b})", reports[a].fix + reports[b].fix, fixing_number(direct_sum(A, B)).fix)
    for name, G in corpus_graphs():
        if gr.is_k_connected(G, 3) and G.nv >= 5:
            r.expect(f"samefix on {name}", "PASS", th.check_samefix(G, subject=name).status)


CRITERIA: list[tuple[int, str, Callable[[CriterionResult], None]]] = [
    (1, "Fano: fix, |Aut| and bounds", c1_fano),
    (2, "Vamos: fix, |Aut|, chain and clones", c2_vamos),
    (3, "P6: fix, |Aut|, clones and maximal presentation", c3_p6),
    (4, "uniform matroids have fix n-1", c4_uniform),
    (5, "theta graph groups and fixing numbers", c5_theta),
    (6, "wheels n=4..6", c6_wheels),
    (7, "complete graphs n=4..7", c7_complete),
    (8, "complete bipartite graphs", c8_bipartite),
    (9, "2-sum of two copies of K4-e", c9_two_k4e),
    (10, "M_(n,k) uniformity", c10_mnk),
    (11, "binary matroids: bases fix, fix(PG(3,2))", c11_binary),
    (12, "icosahedron and dodecahedron", c12_platonic),
    (13, "property suites", c13_properties),
]


def run_criterion(number: int) -> CriterionResult:
    num, title, fn = CRITERIA[number - 1]
    res = CriterionResult(num, title)
    t0 = time.perf_counter()
    fn(res)
    res.seconds = time.perf_counter() - t0
    return res


def run_all() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]
