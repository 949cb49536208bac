import pytest

from factor_forge.criteria import DegreeSpec
from factor_forge.families import complete_graph, gstar, random_regular
from factor_forge.graph import Factor
from factor_forge.instance import (
    InstanceError,
    format_factor,
    format_instance,
    gstar_comments,
    parse_gstar_comments,
    parse_instance,
)


def test_parse_basic():
    text = "c a triangle\np factor 3 3\ne 1 2\ne 2 3\ne 1 3\nh * 1 2\nh 2 0\n"
    inst = parse_instance(text)
    assert inst.graph.edges == ((0, 1), (1, 2), (0, 2))
    assert inst.spec.allowed[0] == {1, 2}
    assert inst.spec.allowed[1] == {0}
    assert inst.comments == ["a triangle"]


def test_no_spec():
    inst = parse_instance("p factor 2 1\ne 1 2\n")
    assert inst.spec is None


@pytest.mark.parametrize(
    "text",
    [
        "",
        "e 1 2\n",
        "p factor 2 2\ne 1 2\n",
        "p factor 2 1\ne 1 3\n",
        "p factor 2 1\ne 1 1\n",
        "p factor 2 1\ne 1 x\n",
        "p factor 3 1\ne 1 2\nh 1 1\n",
        "p factor 2 1\ne 1 2\nh 5 1\n",
        "p factor 2 1\ne 1 2\nq\n",
        "p graph 2 1\ne 1 2\n",
    ],
)
def test_malformed(text):
    with pytest.raises(InstanceError):
        parse_instance(text)


def test_round_trip():
    for G in (complete_graph(5), random_regular(4, 11, 2), gstar(6).graph):
        spec = DegreeSpec([{v % 3, 1} for v in range(G.n)])
        back = parse_instance(format_instance(G, spec))
        assert back.graph.edges == G.edges
        assert back.spec.allowed == spec.allowed


def test_header():
    assert format_instance(complete_graph(4)).splitlines()[0] == "p factor 4 6"
    text = format_instance(gstar(6).graph)
    assert text.splitlines()[0] == "p factor 44 132"


def test_gstar_annotations():
    L = gstar(6)
    lines = gstar_comments(L)
    assert lines[0] == "gstar r=6"
    assert lines[1] == f"hub u={L.u + 1} v={L.v + 1}"
    assert lines[2] == f"copy 1 a={L.copies[0].a + 1} b={L.copies[0].b + 1}"
    inst = parse_instance(format_instance(L.graph, comments=lines))
    info = parse_gstar_comments(inst.comments)
    assert info["r"] == 6 and info["hubs"] == (L.u, L.v)
    assert len(info["copies"]) == 6


def test_factor_lines():
    G = complete_graph(3)
    text = format_factor(Factor(G, [0]))
    assert text.splitlines() == ["f 1 2", "d 1 1", "d 2 1", "d 3 0"]
