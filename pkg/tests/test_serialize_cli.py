import json

import pydot
import pytest
from hypothesis import given, strategies as st

from orthobgg.cli import main
from orthobgg.liealg import AlgebraError, Weight
from orthobgg.parabolic import ParabolicSpec, bgg_graph, regular_hasse_graph, singular_hasse_graph
from orthobgg.serialize import (
    dumps_graph,
    format_weight,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    loads_graph,
    parse_weight,
)

from helpers import odd_chain, s2_chain

DIRAC = "-5/2|1/2,1/2,1/2"


@st.composite
def parabolic_weights(draw):
    series = draw(st.sampled_from("BD"))
    rank = draw(st.integers(3, 6))
    k = draw(st.integers(1, rank if series == "B" else rank - 2))
    ps = ParabolicSpec.of(series, rank, k)
    twice = draw(st.lists(st.integers(-15, 15), min_size=rank, max_size=rank))
    return ps, Weight.from_twice(twice)


@given(parabolic_weights())
def test_weight_text_round_trip(pw):
    ps, w = pw
    text = format_weight(w, ps)
    assert parse_weight(text, ps) == w
    assert parse_weight(f" [{text}] ", ps) == w
    assert "." not in text


def test_weight_parse_errors():
    ps = ParabolicSpec.of("D", 4, 1)
    for bad in ["-5/2,1/2|1/2,1/2", "-5/2|1/2,1/2", "-5/2 1/2,1/2,1/2", "-1/3|0,0,0", "a|0,0,0", "-5/2||1,1,1", "1|0,,0"]:
        with pytest.raises(AlgebraError):
            parse_weight(bad, ps)
    assert parse_weight("-3|0,1,2/2", ps) == Weight([-3, 0, 1, 1])


def graphs():
    ps, chain = s2_chain(2)
    psb, chb = odd_chain(2)
    d4 = ParabolicSpec.of("D", 4, 1)
    return [
        regular_hasse_graph(d4),
        singular_hasse_graph(d4, Weight.half([-5, 1, 1, 1])),
        bgg_graph(ps, chain[0]),
        bgg_graph(ps, chain[0], confirm_with_extremal=True),
        bgg_graph(psb, chb[0]),
        regular_hasse_graph(ParabolicSpec.of("B", 3, 2)),
    ]


GRAPHS = graphs()


def same_graph(a, b):
    return (
        a.ps == b.ps
        and a.vertices == b.vertices
        and a.arrows == b.arrows
        and all(a.label(v) == b.label(v) for v in a.vertices)
        and a.lam == b.lam
        and a.title == b.title
    )


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: f"{g.title}-{g.ps}")
def test_graph_json_round_trip(g):
    back = loads_graph(dumps_graph(g))
    assert same_graph(g, back)
    doc = graph_to_json(g)
    ids = [v["id"] for v in doc["vertices"]]
    assert len(ids) == len(set(ids))
    assert all(e["from"] in ids and e["to"] in ids for e in doc["edges"])


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: f"{g.title}-{g.ps}")
def test_dot_is_valid(g):
    parsed = pydot.graph_from_dot_data(graph_to_dot(g))
    assert parsed and len(parsed) == 1
    dot = parsed[0]
    assert dot.get_type() == "digraph"
    assert len(dot.get_edges()) == len(g.arrows)
    assert len([n for n in dot.get_nodes() if n.get_name().startswith("v")]) == len(g.vertices)


def test_graph_document_errors():
    doc = graph_to_json(GRAPHS[1])
    broken = json.loads(json.dumps(doc))
    broken["edges"][0]["to"] = 99
    with pytest.raises(AlgebraError):
        graph_from_json(broken)
    dup = json.loads(json.dumps(doc))
    dup["vertices"][1]["id"] = dup["vertices"][0]["id"]
    with pytest.raises(AlgebraError):
        graph_from_json(dup)
    bad = dict(doc, algebra="E8")
    with pytest.raises(AlgebraError):
        graph_from_json(bad)


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_hasse_regular_json(capsys):
    code, out, _ = run(capsys, "hasse", "--algebra", "D", "--rank", "4", "--cross", "1", "--regular", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["vertices"]) == 8 and len(doc["edges"]) == 8


def test_cli_hasse_singular_text(capsys):
    code, out, _ = run(capsys, "hasse", "--algebra", "D", "--rank", "4", "--cross", "1", "--singular",
                       "--lambda", DIRAC, "--format", "text")
    assert code == 0
    assert "2 vertices, 1 arrows" in out
    assert "v0 -> v1  order 1" in out


@pytest.mark.parametrize("cross", ["", "1,2", "x"])
def test_cli_bad_cross(capsys, cross):
    code, _, err = run(capsys, "hasse", "--algebra", "D", "--rank", "4", "--cross", cross, "--regular")
    assert code == 2 and "error" in err


def test_cli_usage_errors(capsys):
    assert run(capsys, "hasse", "--algebra", "D", "--rank", "4", "--cross", "1", "--singular")[0] == 2
    assert run(capsys, "hasse", "--algebra", "D", "--rank", "4", "--cross", "1", "--singular",
               "--lambda", "-5/2,1/2|1/2,1/2")[0] == 2
    assert run(capsys, "hasse", "--algebra", "E", "--rank", "4", "--cross", "1", "--regular")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "extremal", "--algebra", "D", "--rank", "4", "--cross", "1",
               "--lambda", "-5/2|1/2,3/2,1/2", "--mu", DIRAC)[0] == 2


def test_cli_guard(capsys):
    code, _, err = run(capsys, "hasse", "--algebra", "B", "--rank", "12", "--cross", "6", "--regular")
    assert code == 3 and "guard" in err
    assert run(capsys, "dirac", "--n", "9", "--degree", "2")[0] == 3


def test_cli_bgg(capsys, tmp_path):
    code, out, _ = run(capsys, "bgg", "--algebra", "D", "--rank", "4", "--cross", "1", "--lambda", DIRAC,
                       "--format", "json")
    assert code == 0
    assert [e["kind"] for e in json.loads(out)["edges"]] == ["standard"]
    _, chain = s2_chain(2)
    ps = ParabolicSpec.of("D", 4, 2)
    lam = format_weight(chain[0], ps)
    target = tmp_path / "s2.dot"
    args = ["bgg", "--algebra", "D", "--rank", "4", "--cross", "2", "--lambda", lam, "--format", "json"]
    assert run(capsys, *args, "--out", str(target))[0] == 0
    kinds = [e["kind"] for e in json.loads(target.read_text())["edges"]]
    assert kinds == ["standard", "conjectural", "standard"]
    code, out, _ = run(capsys, *args, "--confirm-extremal")
    assert [e["kind"] for e in json.loads(out)["edges"]] == ["standard", "nonstandard", "standard"]
    code, out, _ = run(capsys, *args[:-1], "dot")
    assert 'style="dashed"' in out and pydot.graph_from_dot_data(out)


def test_cli_extremal(capsys):
    base = ["extremal", "--algebra", "D", "--rank", "4", "--cross", "1", "--lambda", DIRAC]
    code, out, _ = run(capsys, *base, "--mu", "-7/2|1/2,1/2,-1/2")
    assert code == 0
    assert out == "dim 1\ny[5,1] v - y[3,1]*Y[5,3] v - y[2,1]*Y[5,2] v\n"
    assert run(capsys, *base, "--mu", DIRAC)[1] == "dim 1\nv\n"
    assert run(capsys, *base, "--mu", "-9/2|1/2,1/2,1/2")[1] == "dim 0\n"
    code, out, _ = run(capsys, *base, "--mu", "-7/2|1/2,1/2,-1/2", "--format", "json")
    doc = json.loads(out)
    assert doc["dim"] == 1 and doc["basis"][0]["terms"][0]["mono"] == [[5, 1]]


def test_cli_complex(capsys):
    ps, chain = s2_chain(2)
    ws = [format_weight(w, ps) for w in chain]
    base = ["complex", "--algebra", "D", "--rank", "4", "--cross", "2", "--chain"]
    code, out, _ = run(capsys, *base, *ws)
    assert code == 0
    assert out.count("dim 1") == 3
    assert "composition 1+2: zero" in out and "composition 2+3: zero" in out
    code, out, _ = run(capsys, *base, *ws[:2])
    assert code == 0 and "no compositions to check" in out
    code, out, _ = run(capsys, *base, ws[0], ws[2])
    assert code == 1 and "dim 0" in out and "skipped" not in out
    assert run(capsys, *base, ws[0])[0] == 2


def test_cli_dirac(capsys):
    code, out, _ = run(capsys, "dirac", "--n", "2", "--degree", "0")
    assert code == 0 and "nonzero_inputs: 0" in out and "ok: True" in out
    code, out, _ = run(capsys, "dirac", "--n", "2", "--degree", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["nonzero_inputs"] > 0
    assert run(capsys, "dirac", "--n", "2", "--degree", "3", "--mutate-sign")[0] == 1
    assert run(capsys, "dirac", "--n", "2", "--degree", "3", "--alternative")[0] == 0
    assert run(capsys, "dirac", "--n", "2", "--degree", "3", "--alternative", "--literal-third")[0] == 1
    assert run(capsys, "dirac", "--n", "2", "--degree", "3", "--mode", "random", "--trials", "5")[0] == 0
