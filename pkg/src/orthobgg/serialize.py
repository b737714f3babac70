"""Text, JSON and DOT forms of weights and graphs."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Mapping

from .liealg import AlgebraError, AlgebraSpec, Weight, format_fraction
from .parabolic import Arrow, LabeledGraph, ParabolicSpec


def parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise AlgebraError("empty coordinate")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise AlgebraError(f"cannot read {text!r} as a rational number") from None


def parse_weight(text: str, ps: ParabolicSpec) -> Weight:
    """
    Read "a1,...,ak|b1,...,bn"; the bar must sit after the k-th entry.

    >>> ps = ParabolicSpec.of("D", 4, 1)
    >>> format_weight(parse_weight("-5/2|1/2,1/2,1/2", ps), ps)
    '-5/2|1/2,1/2,1/2'
    """
    text = text.strip().strip("[]")
    if text.count("|") != 1:
        raise AlgebraError(f"weight {text!r} needs exactly one '|'")
    left, right = text.split("|")
    a = [parse_fraction(x) for x in left.split(",")] if left.strip() else []
    b = [parse_fraction(x) for x in right.split(",")] if right.strip() else []
    if len(a) != ps.k:
        raise AlgebraError(f"the bar must follow entry {ps.k}, found {len(a)} entries before it")
    if len(a) + len(b) != ps.rank:
        raise AlgebraError(f"weight has {len(a) + len(b)} entries, expected {ps.rank}")
    if any((2 * c).denominator != 1 for c in a + b):
        raise AlgebraError("weights must have integer or half-integer entries")
    return Weight(a + b)


def format_weight(w: Weight, ps: ParabolicSpec) -> str:
    c = [format_fraction(x) for x in w.coords]
    return ",".join(c[: ps.k]) + "|" + ",".join(c[ps.k :])


# ---------------------------------------------------------------------------
# graph documents


def graph_to_json(g: LabeledGraph) -> dict:
    ids = {v: t for t, v in enumerate(g.vertices)}
    return {
        "algebra": str(g.ps.algebra),
        "sigma": [g.ps.k],
        "lambda": None if g.lam is None else [format_fraction(x) for x in g.lam.coords],
        "title": g.title,
        "vertices": [
            {"id": ids[v], "weight": [format_fraction(x) for x in v.coords], "label": g.label(v)}
            for v in g.vertices
        ],
        "edges": [
            {
                "from": ids[a.src],
                "to": ids[a.dst],
                "order": None if a.order is None else format_fraction(a.order),
                "kind": a.kind,
            }
            for a in g.arrows
        ],
    }


def _read_algebra(text: str) -> AlgebraSpec:
    text = text.strip()
    if len(text) < 2 or text[0] not in "BD" or not text[1:].isdigit():
        raise AlgebraError(f"unrecognized algebra {text!r}")
    return AlgebraSpec(text[0], int(text[1:]))


def graph_from_json(doc: Mapping) -> LabeledGraph:
    spec = _read_algebra(doc["algebra"])
    sigma = list(doc["sigma"])
    if len(sigma) != 1:
        raise AlgebraError("exactly one crossed node is supported")
    ps = ParabolicSpec(spec, int(sigma[0]))
    by_id = {}
    vertices: List[Weight] = []
    labels = {}
    for v in doc["vertices"]:
        w = Weight([parse_fraction(x) for x in v["weight"]])
        if v["id"] in by_id:
            raise AlgebraError(f"duplicate vertex id {v['id']}")
        by_id[v["id"]] = w
        vertices.append(w)
        labels[w] = v.get("label", "")
    arrows = []
    for e in doc["edges"]:
        if e["from"] not in by_id or e["to"] not in by_id:
            raise AlgebraError(f"edge {e} references a missing vertex")
        order = None if e.get("order") is None else parse_fraction(e["order"])
        arrows.append(Arrow(by_id[e["from"]], by_id[e["to"]], order, e["kind"]))
    lam = doc.get("lambda")
    lam = None if lam is None else Weight([parse_fraction(x) for x in lam])
    return LabeledGraph(ps, vertices, arrows, labels, lam, doc.get("title", ""))


def dumps_graph(g: LabeledGraph) -> str:
    return json.dumps(graph_to_json(g), indent=2)


def loads_graph(text: str) -> LabeledGraph:
    return graph_from_json(json.loads(text))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: LabeledGraph, name: str = "G") -> str:
    ids = {v: t for t, v in enumerate(g.vertices)}
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
    for v in g.vertices:
        lines.append(f"  v{ids[v]} [label={_dot_quote(g.label(v))}];")
    for a in g.arrows:
        order = "?" if a.order is None else format_fraction(a.order)
        style = ', style="dashed"' if a.kind == "conjectural" else ""
        label = _dot_quote(f"{order} ({a.kind})")
        lines.append(f"  v{ids[a.src]} -> v{ids[a.dst]} [label={label}{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_text(g: LabeledGraph) -> str:
    ids = {v: t for t, v in enumerate(g.vertices)}
    head = f"{g.title or 'graph'}: {g.ps.algebra}, cross {g.ps.k}"
    if g.lam is not None:
        head += f", lambda = [{format_weight(g.lam, g.ps)}]"
    lines = [head, f"{len(g.vertices)} vertices, {len(g.arrows)} arrows"]
    for v in g.vertices:
        lines.append(f"  v{ids[v]}: {g.label(v)}")
    for a in g.arrows:
        order = "?" if a.order is None else format_fraction(a.order)
        lines.append(f"  v{ids[a.src]} -> v{ids[a.dst]}  order {order}  {a.kind}")
    return "\n".join(lines) + "\n"


def render_graph(g: LabeledGraph, fmt: str) -> str:
    if fmt == "json":
        return dumps_graph(g) + "\n"
    if fmt == "dot":
        return graph_to_dot(g)
    if fmt == "text":
        return graph_to_text(g)
    raise ValueError(f"unknown format {fmt!r}")
