from __future__ import annotations

import pytest

from cominuscule.posets import cominuscule_nodes
from cominuscule.roots import (
    DynkinType,
    build_root_system,
    is_longest_word,
    is_reduced,
    longest_word,
    roots_from_word,
    separating_element,
)

UNSPLIT_C3_WORD = (3, 2, 3, 2, 1, 2, 3, 2, 1)
UNSPLIT_C3_ORDER = [
    (0, 0, 1), (0, 1, 1), (0, 2, 1), (0, 1, 0), (1, 2, 1),
    (1, 1, 1), (2, 2, 1), (1, 1, 0), (1, 0, 0),
]


@pytest.mark.parametrize("name,nodes", [
    ("A1", {1}), ("A4", {1, 2, 3, 4}), ("A7", set(range(1, 8))),
    ("B2", {1}), ("B5", {1}), ("C3", {3}), ("C6", {6}),
    ("D4", {1, 3, 4}), ("D7", {1, 6, 7}),
    ("E6", {1, 5}), ("E7", {6}), ("E8", set()), ("F4", set()), ("G2", set()),
])
def test_cominuscule_classification(name, nodes):
    assert cominuscule_nodes(build_root_system(name)) == nodes


@pytest.mark.parametrize("name,count", [
    ("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6),
])
def test_positive_root_counts(name, count):
    assert len(build_root_system(name).positive_roots) == count


def test_c3_highest_root_and_roots():
    rs = build_root_system("C3")
    assert rs.highest_root == (2, 2, 1)
    assert set(rs.positive_roots) == set(UNSPLIT_C3_ORDER)


def test_parse():
    assert str(DynkinType.parse("C", 3)) == "C3"
    assert DynkinType.parse("e6").rank == 6
    with pytest.raises(ValueError):
        DynkinType.parse("D3")
    with pytest.raises(ValueError):
        DynkinType.parse("E9")


def test_symmetrized_form():
    for name in ("B3", "C4", "F4", "G2", "E6"):
        rs = build_root_system(name)
        b = rs.bilinear
        assert (b == b.T).all()


def test_reflections():
    rs = build_root_system("A2")
    assert rs.reflect(1, (1, 0)) == (-1, 0)
    assert rs.reflect(1, (0, 1)) == (1, 1)
    assert rs.apply_word((), (3, 4)) == (3, 4)


def test_roots_from_word():
    rs = build_root_system("C3")
    betas, reduced = roots_from_word(rs, UNSPLIT_C3_WORD)
    assert reduced and betas == UNSPLIT_C3_ORDER
    assert roots_from_word(build_root_system("A2"), (1, 2, 1)) == ([(1, 0), (1, 1), (0, 1)], True)
    assert not is_reduced(build_root_system("A2"), (1, 1))


@pytest.mark.parametrize("name", ["A1", "A2", "B3", "C3", "D5", "E6", "E7", "E8", "F4", "G2"])
def test_longest_word(name):
    rs = build_root_system(name)
    w = longest_word(rs)
    assert len(w) == len(rs.positive_roots)
    assert is_longest_word(rs, w)


def test_longest_word_lengths():
    assert longest_word(build_root_system("A1")) == (1,)
    assert len(longest_word(build_root_system("C3"))) == len(UNSPLIT_C3_WORD)


def test_separating_element():
    rs = build_root_system("C3")
    w = UNSPLIT_C3_WORD
    assert separating_element(rs, w, 1) == ()
    assert separating_element(rs, w, 3) == (2, 3)
    betas, _ = roots_from_word(rs, w)
    for j in (1, 3, 5, len(w) + 1):
        u = separating_element(rs, w, j)
        signs = [sum(rs.apply_word(u, b)) < 0 for b in betas]
        assert signs == [k < j - 1 for k in range(len(w))]
