import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurtrees import correspondence
from schurtrees.correspondence import check_bijection, forward, inverse, inverse_by_search, trace
from schurtrees.errors import NoPreimage
from schurtrees.graph import PathPair, down_image, paths_N, paths_S_tilde, up_successors
from schurtrees.trees import EMPTY, Tree, insert_all, removal_chain, trees_up_to

from strategies import trees

ONE = Tree.parse("{0}")


def test_forward_on_small_paths():
    # {0} -U_1-> {0,1} -D_1-> {0}: D_1 removes the root, which is already in the chain of T
    n = PathPair("N", "U", ONE, Tree.parse("{0,1}"), ONE, 1, 1)
    k, s = forward("U", n)
    assert k == 0
    assert (s.mid, s.up_degree, s.down_degree) == (EMPTY, 1, 1)
    # {0} -U_1-> {0,2} -D_1-> {0}: the removed node 2 is new
    n = PathPair("N", "U", ONE, Tree.parse("{0,2}"), ONE, 1, 1)
    k, s = forward("U", n)
    assert k == 1
    assert (s.mid, s.up_degree, s.down_degree) == (ONE, 0, 0)
    assert inverse("U", k, s) == n


def test_forward_rejects_invalid_input():
    with pytest.raises(ValueError):
        forward("U", PathPair("N", "U", ONE, ONE, ONE, 1, 1))
    with pytest.raises(ValueError):
        forward("D", PathPair("N", "U", ONE, ONE, ONE, 0, 0))


def test_inverse_rejects_out_of_range_tag():
    s = PathPair("S", "U'", ONE, ONE, ONE, 0, 0)
    with pytest.raises(NoPreimage):
        inverse("U'", 2, s)
    with pytest.raises(NoPreimage):
        inverse("U", 1, PathPair("S", "U", ONE, EMPTY, ONE, 0, 0))


@pytest.mark.parametrize("family", ["U", "U'"])
def test_bijection_at_small_bounds(family):
    report = check_bijection(family, 4, 2)
    assert report.ok, report.counterexamples
    assert report.checked == 23 ** 2 * 9


@pytest.mark.parametrize("family", ["U", "U'"])
@given(t=trees(5), i=st.integers(0, 3), j=st.integers(0, 3), data=st.data())
def test_round_trip_on_random_paths(family, t, i, j, data):
    mids = [m for m in up_successors(t, i, family) if down_image(m, j) is not None]
    if not mids:
        return
    mid = data.draw(st.sampled_from(mids))
    n = PathPair("N", family, t, mid, down_image(mid, j), i, j)
    k, s = forward(family, n)
    assert (k, s) in paths_S_tilde(t, n.end, j, i, family)
    assert inverse(family, k, s) == n
    assert inverse_by_search(family, k, s) == n


@pytest.mark.parametrize("family", ["U", "U'"])
@pytest.mark.parametrize("t", list(trees_up_to(5)))
def test_new_chain_keeps_a_prefix_of_the_old_one(family, t):
    # the chain of T'' is a prefix of the chain of T continued by added nodes
    chain = removal_chain(t)
    for i in range(4):
        for mid in up_successors(t, i, family):
            grown = removal_chain(mid)
            a = 0
            while a < min(len(chain), len(grown)) and grown[a] == chain[a]:
                a += 1
            assert all(w not in t for w in grown[a:])


@pytest.mark.parametrize("family", ["U", "U'"])
@pytest.mark.parametrize("t", list(trees_up_to(4)))
def test_removed_words_are_kept_chain_then_tail(family, t):
    chain = removal_chain(t)
    for i in range(4):
        for j in range(4):
            for mid in up_successors(t, i, family):
                end = down_image(mid, j)
                if end is None:
                    continue
                k, s = forward(family, PathPair("N", family, t, mid, end, i, j))
                kept = j - k
                partial = insert_all(end, chain[:kept])
                tail = correspondence._tail(family, t, kept, k, partial)
                assert removal_chain(mid)[:j] == chain[:kept] + tuple(tail)


def test_wrong_tail_is_caught(monkeypatch):
    real = correspondence._tail

    def swapped(family, *args):
        return real("U'" if family == "U" else "U", *args)

    monkeypatch.setattr(correspondence, "_tail", swapped)
    report = check_bijection("U", 3, 2)
    assert not report.ok
    assert any("reconstruction failed" in str(c.get("problem", "")) for c in report.counterexamples)


def test_oracle_finds_every_preimage_in_a_cell():
    t, end = Tree.parse("{0,1}"), Tree.parse("{0,1}")
    n_set = paths_N(t, end, 2, 2, "U")
    s_set = paths_S_tilde(t, end, 2, 2, "U")
    assert len(n_set) == len(s_set) > 0
    assert {inverse_by_search("U", k, s) for k, s in s_set} == set(n_set)


def test_trace_records():
    rows = list(trace("U", 2, 1))
    assert rows
    assert {"T", "T'", "i", "j", "via", "k", "mid"} <= set(rows[0])
    assert all(len(Tree.parse(r["T'"])) <= 2 for r in rows)
