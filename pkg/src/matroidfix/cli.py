"""Command-line front end.

Subjects are described in JSON (``--input FILE``) or by catalogue name
(``--named NAME``)::

    matroidfix fix --named fano
    matroidfix chain --named vamos --elements a,b,c,d
    matroidfix theorems --only samefix --named complete:5
    matroidfix corpus --format json
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import graphs as gr
from . import theorems as th
from .builders import BinaryMatrix, TransversalPresentation, from_binary, named, transversal, uniform
from .errors import CapExceeded, MatroidError, NotTransitive
from .groups import DEFAULT_CAP, PermGroup, transposition
from .matroid import (MAX_ELEMENTS, Matroid, bits, contract, delete, direct_sum, dual,
                      free_extension, from_bases, from_circuits)
from .symmetry import automorphism_group, fixing_number, stabilizer_chain

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE, EXIT_FAIL = 0, 1, 2, 3


class InputSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line, self.column = line, column


class SchemaError(ValueError):
    def __init__(self, field_name: str, reason: str):
        super().__init__(f"{field_name}: {reason}")
        self.field, self.reason = field_name, reason


class LimitError(ValueError):
    pass


# input -------------------------------------------------------------------------

@dataclass(frozen=True)
class InputSpec:
    """A validated subject description; ``data`` is its canonical JSON form."""

    kind: str
    data: dict = field(hash=False)

    def to_json(self) -> dict:
        return self.data


TYPES = ("uniform", "bases", "circuits", "binary", "transversal", "graph", "named", "derived")
DERIVED_OPS = ("dual", "delete", "contract", "free_extension", "direct_sum")


def _need(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise SchemaError(f"{where}.{key}", "missing")
    val = obj[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise SchemaError(f"{where}.{key}", "expected an integer")
    if kind is list and not isinstance(val, list):
        raise SchemaError(f"{where}.{key}", "expected an array")
    if kind is str and not isinstance(val, str):
        raise SchemaError(f"{where}.{key}", "expected a string")
    if kind is dict and not isinstance(val, dict):
        raise SchemaError(f"{where}.{key}", "expected an object")
    return val


def _labels(val: list, where: str) -> list[str]:
    if not all(isinstance(x, str) for x in val):
        raise SchemaError(where, "labels must be strings")
    if len(set(val)) != len(val):
        raise SchemaError(where, "labels must be unique")
    if len(val) > MAX_ELEMENTS:
        raise LimitError(f"{where}: {len(val)} elements exceeds the limit of {MAX_ELEMENTS}")
    return list(val)


def _sets(val: list, labels: list[str], where: str) -> list[list[str]]:
    known = set(labels)
    out = []
    for i, s in enumerate(val):
        if not isinstance(s, list) or not all(isinstance(x, str) for x in s):
            raise SchemaError(f"{where}[{i}]", "expected an array of labels")
        bad = [x for x in s if x not in known]
        if bad:
            raise SchemaError(f"{where}[{i}]", f"unknown labels {bad}")
        out.append(list(s))
    return out


def _validate(obj: Any, where: str = "$") -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(where, "expected an object")
    kind = _need(obj, "type", str, where)
    if kind not in TYPES:
        raise SchemaError(f"{where}.type", f"unknown type {kind!r}")
    out: dict[str, Any] = {"type": kind}
    if kind == "uniform":
        r, n = _need(obj, "r", int, where), _need(obj, "n", int, where)
        if n > MAX_ELEMENTS:
            raise LimitError(f"n = {n} exceeds the limit of {MAX_ELEMENTS}")
        if n < 0 or r < 0:
            raise SchemaError(f"{where}.r", "r and n must be non-negative")
        if r > n:
            raise SchemaError(f"{where}.r", "r > n")
        out.update(r=r, n=n)
    elif kind in ("bases", "circuits"):
        labels = _labels(_need(obj, "labels", list, where), f"{where}.labels")
        out.update(labels=labels, sets=_sets(_need(obj, "sets", list, where), labels, f"{where}.sets"))
    elif kind == "binary":
        mat = _need(obj, "matrix", list, where)
        if not mat or not all(isinstance(row, list) for row in mat):
            raise SchemaError(f"{where}.matrix", "expected a non-empty array of rows")
        if len({len(row) for row in mat}) != 1:
            raise SchemaError(f"{where}.matrix", "rows differ in length")
        if any(v not in (0, 1) or isinstance(v, bool) for row in mat for v in row):
            raise SchemaError(f"{where}.matrix", "entries must be 0 or 1")
        if len(mat[0]) > MAX_ELEMENTS:
            raise LimitError(f"{len(mat[0])} columns exceeds the limit of {MAX_ELEMENTS}")
        out["matrix"] = [list(row) for row in mat]
        if "labels" in obj:
            labels = _labels(_need(obj, "labels", list, where), f"{where}.labels")
            if len(labels) != len(mat[0]):
                raise SchemaError(f"{where}.labels", "one label per column required")
            out["labels"] = labels
    elif kind == "transversal":
        X = _labels(_need(obj, "X", list, where), f"{where}.X")
        Y = _need(obj, "Y", list, where)
        if not all(isinstance(y, str) for y in Y) or len(set(Y)) != len(Y):
            raise SchemaError(f"{where}.Y", "labels must be unique strings")
        R = _need(obj, "R", dict, where)
        for x, ys in R.items():
            if x not in X:
                raise SchemaError(f"{where}.R", f"unknown element {x!r}")
            if not isinstance(ys, list) or any(y not in Y for y in ys):
                raise SchemaError(f"{where}.R.{x}", "expected an array of Y labels")
        out.update(X=X, Y=list(Y), R={x: list(R[x]) for x in X if x in R})
    elif kind == "graph":
        verts = _need(obj, "vertices", list, where)
        if not all(isinstance(v, str) for v in verts) or len(set(verts)) != len(verts):
            raise SchemaError(f"{where}.vertices", "labels must be unique strings")
        if len(verts) > gr.MAX_VERTICES:
            raise LimitError(f"{len(verts)} vertices exceeds the limit of {gr.MAX_VERTICES}")
        edges = []
        for i, e in enumerate(_need(obj, "edges", list, where)):
            if not isinstance(e, list) or len(e) not in (2, 3) or not all(isinstance(t, str) for t in e):
                raise SchemaError(f"{where}.edges[{i}]", "expected [u, v] or [u, v, label]")
            edges.append(list(e))
        interp = obj.get("interpretation", "cycle")
        if interp not in ("cycle", "bicircular"):
            raise SchemaError(f"{where}.interpretation", "expected cycle or bicircular")
        out.update(vertices=list(verts), edges=edges, interpretation=interp)
    elif kind == "named":
        out["name"] = _need(obj, "name", str, where)
        if "interpretation" in obj:
            if obj["interpretation"] not in ("cycle", "bicircular"):
                raise SchemaError(f"{where}.interpretation", "expected cycle or bicircular")
            out["interpretation"] = obj["interpretation"]
    else:
        op = _need(obj, "op", str, where)
        if op not in DERIVED_OPS:
            raise SchemaError(f"{where}.op", f"unknown op {op!r}")
        args = _need(obj, "args", list, where)
        want = {"dual": (1, 1), "delete": (2, 2), "contract": (2, 2), "free_extension": (1, 2), "direct_sum": (2, 2)}[op]
        if not want[0] <= len(args) <= want[1]:
            raise SchemaError(f"{where}.args", f"{op} takes {want[0]}..{want[1]} arguments")
        parsed: list[Any] = [_validate(args[0], f"{where}.args[0]")]
        if len(args) == 2:
            if op == "direct_sum":
                parsed.append(_validate(args[1], f"{where}.args[1]"))
            elif not isinstance(args[1], str):
                raise SchemaError(f"{where}.args[1]", "expected an element label")
            else:
                parsed.append(args[1])
        out.update(op=op, args=parsed)
    return out


def parse_input(text: str) -> InputSpec:
    """Parse and validate a JSON subject description."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    data = _validate(obj)
    return InputSpec(data["type"], data)


def named_spec(name: str, interpretation: str | None = None) -> InputSpec:
    data = {"type": "named", "name": name}
    if interpretation:
        data["interpretation"] = interpretation
    return InputSpec("named", data)


# subjects ----------------------------------------------------------------------

@dataclass
class Subject:
    """Either a matroid, or a graph read through one of its matroids."""

    matroid: Matroid | None = None
    graph: gr.Graph | None = None
    interpretation: str = "cycle"

    def as_matroid(self) -> Matroid:
        if self.matroid is None:
            if self.graph.ne > MAX_ELEMENTS:
                raise LimitError(f"graph has {self.graph.ne} edges; matroids are limited to {MAX_ELEMENTS}")
            fn = gr.cycle_matroid if self.interpretation == "cycle" else gr.bicircular_matroid
            self.matroid = fn(self.graph)
        return self.matroid

    @property
    def labels(self) -> tuple[str, ...]:
        return self.graph.edge_labels if self.graph is not None else self.matroid.labels


def build(data: dict) -> Subject:
    kind = data["type"]
    if kind == "uniform":
        return Subject(uniform(data["r"], data["n"]))
    if kind == "bases":
        return Subject(from_bases(data["labels"], data["sets"]))
    if kind == "circuits":
        return Subject(from_circuits(data["labels"], data["sets"]))
    if kind == "binary":
        return Subject(from_binary(BinaryMatrix(tuple(map(tuple, data["matrix"]))), data.get("labels")))
    if kind == "transversal":
        return Subject(transversal(TransversalPresentation.from_sets(data["X"], data["Y"], data["R"])))
    if kind == "graph":
        G = gr.Graph.from_edges(data["vertices"], data["edges"])
        return Subject(graph=G, interpretation=data["interpretation"])
    if kind == "named":
        obj = named(data["name"])
        if isinstance(obj, gr.Graph):
            return Subject(graph=obj, interpretation=data.get("interpretation", "cycle"))
        return Subject(obj)
    op, args = data["op"], data["args"]
    M = build(args[0]).as_matroid()
    if op == "dual":
        return Subject(dual(M))
    if op == "delete":
        return Subject(delete(M, args[1]))
    if op == "contract":
        return Subject(contract(M, args[1]))
    if op == "free_extension":
        return Subject(free_extension(M, args[1] if len(args) > 1 else None))
    return Subject(direct_sum(M, build(args[1]).as_matroid()))


# reports -----------------------------------------------------------------------

def resolve_routes(subject: Subject, engine: str) -> list[str]:
    if subject.graph is None:
        if engine == "edge-action":
            raise LimitError("the edge-action route needs a graph subject")
        return ["generic"]
    ne = subject.graph.ne
    if engine == "both":
        return ["generic", "edge-action"] if ne <= MAX_ELEMENTS else ["edge-action"]
    if engine == "generic":
        return ["generic"]
    if engine == "edge-action":
        return ["edge-action"]
    return ["generic" if ne <= th.GENERIC_LIMIT else "edge-action"]


def _group_clones(group: PermGroup) -> list[list[int]]:
    from .symmetry import _classes_from_pairs

    n = group.n
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n) if transposition(n, x, y) in group]
    return _classes_from_pairs(n, pairs)


def _route_report(subject: Subject, route: str, cap: int):
    if route == "generic":
        M = subject.as_matroid()
        return fixing_number(M, cap=cap), automorphism_group(M, cap=cap)
    group = gr.edge_action(subject.graph, gr.graph_automorphisms(subject.graph, cap=cap)).group
    rep = fixing_number(group, labels=subject.graph.edge_labels, cap=cap)
    rep.clone_classes = _group_clones(group)
    from .symmetry import evaluate_bounds

    rep.bounds = evaluate_bounds(group.n, rep.fix, rep.max_orbit, rep.aut_order, len(rep.clone_classes))
    return rep, group


def compute_report(spec: InputSpec, engine: str = "auto", cap: int = DEFAULT_CAP,
                   chain_elements: list[str] | None = None) -> dict:
    """Compute the JSON report for a subject."""
    t0 = time.perf_counter()
    subject = build(spec.data)
    routes = resolve_routes(subject, engine)
    results = [_route_report(subject, r, cap) for r in routes]
    rep, group = results[0]
    names = rep.names
    out: dict[str, Any] = {
        "input": spec.to_json(),
        "fix": rep.fix,
        "witness": names(rep.witness),
        "aut_order": rep.aut_order,
        "orbits": [names(o) for o in rep.orbits],
        "clones": [names(c) for c in rep.clone_classes],
        "bounds": {
            "n_falling_k": rep.bounds.n_falling_k,
            "s_pow_k": rep.bounds.s_pow_k,
            "two_pow_k": rep.bounds.two_pow_k,
            "all_hold": rep.bounds.all_hold,
        },
        "engine": "+".join(routes),
    }
    if chain_elements is not None:
        index = {lab: i for i, lab in enumerate(rep.labels)}
        missing = [e for e in chain_elements if e not in index]
        if missing:
            raise SchemaError("--elements", f"unknown elements {missing}")
        out["chain"] = stabilizer_chain(group, [index[e] for e in chain_elements])
    else:
        out["chain"] = rep.chain
    if len(results) > 1:
        out["routes"] = {r: {"fix": res.fix, "aut_order": res.aut_order} for r, (res, _) in zip(routes, results)}
    out["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return out


def _fmt_set(labels: list[str]) -> str:
    return "{" + ", ".join(labels) + "}"


def render_text(report: dict, command: str = "fix") -> str:
    lines = []
    b = report["bounds"]
    k, order = report["fix"], report["aut_order"]
    fix_line = f"fix = {k}" + (" (empty witness)" if k == 0 else "")
    if command in ("fix", "aut", "clones", "bounds"):
        lines.append(f"engine: {report['engine']}")
    if command == "fix":
        lines.append(fix_line)
        if k:
            lines.append("witness: " + ", ".join(report["witness"]))
    if command in ("fix", "aut"):
        lines.append(f"|Aut| = {order}")
        lines.append("orbit sizes: " + " ".join(str(len(o)) for o in report["orbits"]))
        if command == "aut":
            lines.append("orbits: " + " ".join(_fmt_set(o) for o in report["orbits"]))
    if command in ("fix", "clones"):
        lines.append("clone classes: " + " ".join(_fmt_set(c) for c in report["clones"]))
    if command in ("fix", "bounds"):
        if command == "bounds":
            lines.append(fix_line)
        n = sum(len(o) for o in report["orbits"])
        lines.append(f"falling factorial: |Aut| = {order} <= ({n})_{k} = {b['n_falling_k']}")
        lines.append(f"orbit power: |Aut| = {order} <= s^{k} = {b['s_pow_k']}")
        lines.append(f"lower bound: 2^{k} = {b['two_pow_k']} <= |Aut| = {order}")
        lines.append("all bounds hold" if b["all_hold"] else "BOUND VIOLATED")
    if command in ("fix", "chain"):
        lines.append("chain: " + " ".join(str(c) for c in report["chain"]))
    if "routes" in report:
        for r, v in report["routes"].items():
            lines.append(f"route {r}: fix = {v['fix']}, |Aut| = {v['aut_order']}")
    if "timing_ms" in report:
        lines.append(f"time: {report['timing_ms']:.1f} ms")
    return "\n".join(lines)


def emit_report(report: dict, fmt: str = "text", command: str = "fix") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    return render_text(report, command)


# theorems ----------------------------------------------------------------------

def theorem_reports(subject: Subject | None, only: str | None) -> list[th.TheoremReport]:
    if subject is None:
        return th.run_corpus(only)
    reports = []
    if subject.graph is not None:
        G = subject.graph
        wanted = {"samefix": lambda: th.check_samefix(G),
                  "autogps-cycle": lambda: th.check_autogps(G, "cycle"),
                  "autogps-bicircular": lambda: th.check_autogps(G, "bicircular"),
                  "matthews": lambda: th.check_matthews(G)}
        if G.ne <= MAX_ELEMENTS:
            wanted["planar-duality"] = lambda: th.check_planar_duality(subject.as_matroid())
    else:
        wanted = {"planar-duality": lambda: th.check_planar_duality(subject.matroid)}
    for tid, job in wanted.items():
        if only is None or tid == only or tid.startswith(only + "-"):
            reports.append(job())
    if only is not None and not reports:
        raise LimitError(f"theorem {only!r} does not apply to this subject")
    return reports


# entry point -------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroidfix", description="Exact matroid symmetry computations.")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=None, help="group size cap (overrides MATROIDFIX_CAP)")
    common.add_argument("--no-timing", action="store_true", help="omit timing fields")
    subject = argparse.ArgumentParser(add_help=False)
    src = subject.add_mutually_exclusive_group()
    src.add_argument("--input", help="JSON description file, or - for stdin")
    src.add_argument("--named", help="catalogue name such as fano, wheel(6) or complete:5")
    subject.add_argument("--interpretation", choices=("cycle", "bicircular"), default=None)
    subject.add_argument("--engine", choices=("auto", "generic", "edge-action", "both"), default="auto")
    for name in ("fix", "aut", "clones", "bounds"):
        sub.add_parser(name, parents=[common, subject])
    ch = sub.add_parser("chain", parents=[common, subject])
    ch.add_argument("--elements", required=True, help="comma-separated element labels")
    tp = sub.add_parser("theorems", parents=[common, subject])
    tp.add_argument("--only", choices=th.THEOREM_IDS, default=None)
    sub.add_parser("corpus", parents=[common])
    return p


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("MATROIDFIX_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise LimitError(f"MATROIDFIX_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def _spec_from_args(args) -> InputSpec | None:
    if args.input:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
        spec = parse_input(text)
        if args.interpretation and spec.kind in ("graph", "named"):
            spec.data["interpretation"] = args.interpretation
        return spec
    if args.named:
        return named_spec(args.named, args.interpretation)
    return None


def _run(args, out) -> int:
    if args.command == "corpus":
        from .corpus import run_all

        results = run_all()
        if args.format == "json":
            out.write(json.dumps([r.as_dict() for r in results], sort_keys=True, indent=2) + "\n")
        else:
            for r in results:
                out.write(r.line() + "\n")
        return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL

    spec = _spec_from_args(args)
    if args.command == "theorems":
        subject = build(spec.data) if spec is not None else None
        reports = theorem_reports(subject, args.only)
        if args.format == "json":
            payload = [r.as_dict() | ({} if args.no_timing else {"timing_ms": round(r.seconds * 1000, 3)})
                       for r in reports]
            out.write(json.dumps(payload, sort_keys=True, indent=2, default=str) + "\n")
        else:
            for r in reports:
                out.write(f"{r.status} {r.theorem} {r.subject}\n")
        return EXIT_FAIL if any(r.status == "FAIL" for r in reports) else EXIT_OK

    if spec is None:
        raise LimitError("a subject is required: use --input or --named")
    elements = None
    if args.command == "chain":
        elements = [e.strip() for e in args.elements.split(",") if e.strip()]
    report = compute_report(spec, args.engine, _cap(args), elements)
    if args.no_timing:
        report.pop("timing_ms", None)
    out.write(emit_report(report, args.format, args.command) + "\n")
    return EXIT_OK


def run_command(argv: list[str] | None = None, out=None, err=None) -> int:
    """Run one invocation; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _run(args, out)
    except (InputSyntaxError, SchemaError, LimitError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (MatroidError, CapExceeded, NotTransitive) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_COMPUTE


def main() -> None:
    sys.exit(run_command())


__all__ = ["InputSpec", "parse_input", "compute_report", "emit_report", "run_command", "main",
           "InputSyntaxError", "SchemaError", "LimitError", "bits"]
