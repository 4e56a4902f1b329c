import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schurtrees.errors import InvalidLabelling, MalformedPath, ParseError
from schurtrees.labelling import (
    Kind,
    Labelling,
    Path,
    enumerate_labellings,
    labelling_to_path,
    path_to_labelling,
    validate_labelling,
    validate_labelling_local,
    weight,
)
from schurtrees.trees import EMPTY, Tree, trees_up_to

from strategies import trees

T9 = Tree.parse("{0,1,11,2,21,211,22,221,2211}")


def lab(tree, kind, mapping, m=None):
    words = {("" if w == "0" else w): x for w, x in mapping.items()}
    return Labelling.from_map(tree, kind, words, m)


RIGHT_STRICT_T9 = lab(T9, Kind.RIGHT_STRICT,
                      {"0": 1, "1": 1, "11": 2, "2": 2, "21": 3, "211": 4, "22": 3, "221": 3, "2211": 3})
LEFT_STRICT_T9 = lab(T9, Kind.LEFT_STRICT,
                     {"0": 1, "2": 1, "22": 2, "1": 2, "21": 2, "221": 3, "11": 4, "211": 3, "2211": 4})
BINARY_SEARCH_T9 = lab(T9, Kind.BINARY_SEARCH,
                       {"0": 2, "1": 1, "11": 1, "2": 4, "21": 3, "211": 3, "22": 5, "221": 5, "2211": 5})


@pytest.mark.parametrize("labelling", [RIGHT_STRICT_T9, LEFT_STRICT_T9, BINARY_SEARCH_T9])
def test_worked_labellings_are_valid(labelling):
    assert validate_labelling(labelling)
    assert labelling in enumerate_labellings(T9, labelling.kind, labelling.m)


def test_right_strict_weight():
    assert weight(RIGHT_STRICT_T9, 4) == (2, 2, 4, 1)
    with pytest.raises(ValueError):
        weight(RIGHT_STRICT_T9, 3)


def test_binary_search_path():
    path = labelling_to_path(BINARY_SEARCH_T9)
    assert path.kind == "D"
    assert [str(t) for t in path.trees] == [
        "{}", "{0,1}", "{0,1,11}", "{0,1,2,11,21}", "{0,1,2,11,21,211}", str(T9)]
    assert path_to_labelling(path) == BINARY_SEARCH_T9


def test_subtree_condition_is_not_local_for_binary_search():
    # 12 is below the root's left child but carries a label above the root's
    witness = lab(Tree.parse("{0,1,12}"), Kind.BINARY_SEARCH, {"0": 2, "1": 1, "12": 3})
    assert validate_labelling_local(witness)
    assert not validate_labelling(witness)
    with pytest.raises(InvalidLabelling):
        labelling_to_path(witness)


@pytest.mark.parametrize("kind", [Kind.RIGHT_STRICT, Kind.LEFT_STRICT])
def test_local_check_suffices_for_strict_kinds(kind):
    for t in trees_up_to(4):
        for values in itertools.product(range(1, 4), repeat=len(t)):
            candidate = Labelling(t, kind, values, 3)
            assert validate_labelling(candidate) == validate_labelling_local(candidate)


@pytest.mark.parametrize("kind", list(Kind))
def test_enumeration_matches_brute_force(kind):
    for t in trees_up_to(4):
        brute = [Labelling(t, kind, v, 3) for v in itertools.product(range(1, 4), repeat=len(t))]
        assert enumerate_labellings(t, kind, 3) == [x for x in brute if validate_labelling(x)]


@pytest.mark.parametrize("kind", list(Kind))
def test_labelling_path_round_trip(kind):
    for t in trees_up_to(5):
        for m in range(4):
            for x in enumerate_labellings(t, kind, m):
                path = labelling_to_path(x)
                path.validate()
                assert path.end == t and path.length == m
                assert path.kind == kind.path_kind
                assert path_to_labelling(path) == x


@given(trees(6), st.sampled_from(list(Kind)), st.integers(0, 3))
def test_step_degrees_equal_label_counts(t, kind, m):
    for x in enumerate_labellings(t, kind, m)[:20]:
        assert labelling_to_path(x).degrees() == weight(x, m)


def test_empty_tree_has_one_labelling_for_every_m():
    for kind in Kind:
        assert [x.values for x in enumerate_labellings(EMPTY, kind, 3)] == [()]
        assert labelling_to_path(enumerate_labellings(EMPTY, kind, 3)[0]).trees == (EMPTY,) * 4


def test_text_form_round_trip():
    text = str(RIGHT_STRICT_T9)
    assert text.startswith("right-strict; {0:1, 1:1, 2:2")
    assert Labelling.parse(text) == RIGHT_STRICT_T9


@pytest.mark.parametrize("bad", ["right-strict {0:1}", "sideways; {0:1}", "left-strict; 0:1", "binary-search; {1:1}"])
def test_text_form_rejects(bad):
    with pytest.raises((ParseError, ValueError)):
        Labelling.parse(bad)


def test_labelling_value_checks():
    t = Tree.parse("{0,1}")
    with pytest.raises(InvalidLabelling):
        Labelling(t, Kind.RIGHT_STRICT, (1,), 2)
    with pytest.raises(InvalidLabelling):
        Labelling(t, Kind.RIGHT_STRICT, (1, 3), 2)
    with pytest.raises(InvalidLabelling):
        Labelling.from_map(t, Kind.RIGHT_STRICT, {"": 1})


def test_malformed_paths():
    with pytest.raises(MalformedPath):
        Path("U", (Tree.parse("{0}"),)).validate()
    with pytest.raises(MalformedPath) as info:
        Path("U", (EMPTY, Tree.parse("{0}"), Tree.parse("{0,2,22}"))).validate()
    assert info.value.step == 2
    with pytest.raises(MalformedPath):
        Path("D", (EMPTY, Tree.parse("{0,1}"), Tree.parse("{0}"))).validate()
