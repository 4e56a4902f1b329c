import json
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurtrees.errors import LimitExceeded
from schurtrees.graph import (
    PathPair,
    down_image,
    down_preimages,
    edges,
    export_dot,
    export_jsonl,
    k_bound,
    paths_N,
    paths_S_tilde,
    up_edge_degree,
    up_predecessors,
    up_successors,
    up_successors_by_filter,
)
from schurtrees.trees import EMPTY, Tree, detach_chain, removal_chain, trees_up_to

from strategies import trees


def parse_all(*texts):
    return {Tree.parse(t) for t in texts}


def test_degree_three_successors_of_a_single_node():
    assert set(up_successors(Tree.parse("{0}"), 3, "U")) == parse_all(
        "{0,1,11,111}", "{0,1,11,2}", "{0,1,2,21}", "{0,2,21,211}")


def test_mirror_family_successors_of_a_single_node():
    assert set(up_successors(Tree.parse("{0}"), 2, "U'")) == parse_all(
        "{0,1,12}", "{0,1,2}", "{0,2,22}")


def test_successors_of_the_empty_tree():
    assert up_successors(EMPTY, 3, "U") == (Tree.parse("{0,1,11}"),)
    assert up_successors(EMPTY, 3, "U'") == (Tree.parse("{0,2,22}"),)
    assert up_successors(EMPTY, 0, "U") == (EMPTY,)


@pytest.mark.parametrize("family", ["U", "U'"])
@pytest.mark.parametrize("i", range(4))
def test_constructive_successors_match_filter(family, i):
    for t in trees_up_to(5):
        assert up_successors(t, i, family) == up_successors_by_filter(t, i, family)


@given(trees(6), st.integers(0, 4), st.sampled_from(["U", "U'"]))
def test_successor_count_is_a_weak_composition_count(t, i, family):
    # i new nodes spread over the |T|+1 empty slots
    assert len(up_successors(t, i, family)) == comb(i + len(t), i)


@given(trees(6), st.integers(0, 3), st.sampled_from(["U", "U'"]))
def test_up_edge_degree_agrees_with_successors(t, i, family):
    for u in up_successors(t, i, family):
        assert up_edge_degree(family, t, u) == i
        assert t in up_predecessors(u, i, family)


def test_up_edge_degree_rejects_non_edges():
    assert up_edge_degree("U", Tree.parse("{0}"), Tree.parse("{0,2,22}")) is None
    assert up_edge_degree("U'", Tree.parse("{0}"), Tree.parse("{0,2,22}")) == 2
    assert up_edge_degree("U", Tree.parse("{0,1}"), Tree.parse("{0,2}")) is None


def test_degree_one_graphs_coincide():
    assert edges("U", 1, 6) == edges("U'", 1, 6)
    assert edges("U", 2, 5) != edges("U'", 2, 5)


@given(trees(7), st.integers(0, 4))
def test_down_image(t, i):
    chain = removal_chain(t)
    if i > len(chain):
        assert down_image(t, i) is None
    else:
        assert down_image(t, i) == detach_chain(t, i)


def test_down_examples():
    assert down_image(Tree.parse("{0,1,12}"), 1) == Tree.parse("{0,2}")
    assert down_image(Tree.parse("{0}"), 2) is None
    assert down_image(EMPTY, 0) == EMPTY


@pytest.mark.parametrize("t", list(trees_up_to(4)))
def test_down_preimages_invert_down_image(t):
    for i in range(3):
        for u in down_preimages(t, i):
            assert down_image(u, i) == t


def test_k_bound():
    assert k_bound("U", 3, 2) == 2
    assert k_bound("U'", 3, 2) == 1
    assert k_bound("U'", 0, 2) == 0


def test_path_pairs_validate():
    t = Tree.parse("{0}")
    n = paths_N(t, t, 1, 1, "U")
    assert {p.mid for p in n} == parse_all("{0,1}", "{0,2}")
    assert all(p.is_valid() for p in n)
    assert paths_N(t, Tree.parse("{0,1}"), 1, 1, "U") == []
    assert not PathPair("N", "U", t, Tree.parse("{0,2,22}"), t, 2, 2).is_valid()
    tagged = paths_S_tilde(t, t, 1, 1, "U")
    assert [k for k, _ in tagged] == [0, 1]
    for k, s in tagged:
        assert s.is_valid()
        assert (s.up_degree, s.down_degree) == (1 - k, 1 - k)


def test_dot_export_of_degree_one_down_graph():
    dot = export_dot("D", 1, 3)
    lines = dot.splitlines()
    assert lines[0] == 'digraph "G_D_1" {'
    assert lines[-1] == "}"
    vertices = [ln for ln in lines[1:-1] if "->" not in ln]
    assert len(vertices) == 1 + 1 + 2 + 5
    # D-edges point from the larger tree to the smaller one
    assert '  "{0,1,12}" -> "{0,2}" [label="1"];' in lines
    assert export_dot("D", 1, 3) == dot


def test_dot_export_smallest_up_graph():
    assert export_dot("U", 1, 1) == 'digraph "G_U_1" {\n  "{}";\n  "{0}";\n  "{}" -> "{0}" [label="1"];\n}\n'


def test_jsonl_export():
    rows = [json.loads(line) for line in export_jsonl("U'", 2, 3).splitlines()]
    assert rows and all(r["family"] == "U'" and r["degree"] == 2 for r in rows)
    assert {"from": "{0}", "to": "{0,2,22}", "family": "U'", "degree": 2} in rows


def test_export_guard():
    with pytest.raises(LimitExceeded):
        export_dot("U", 1, 9)
    with pytest.raises(LimitExceeded):
        export_jsonl("D", 1, 9)


def test_unknown_family():
    with pytest.raises(ValueError):
        up_successors(EMPTY, 1, "V")
