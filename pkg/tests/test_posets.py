from __future__ import annotations

import pytest

from cominuscule.posets import (
    BoxEmbedding,
    ParabolicError,
    all_cominuscule,
    box_embedding,
    canonical_order,
    canonical_is_convex,
    check_lines_lemma,
    cominuscule_nodes,
    lines,
    lines_table,
    no_radical_sums,
    parabolic,
    partial_leq,
    radical_poset,
    xi_SB,
)
from cominuscule.roots import build_root_system


# ---------------------------------------------------------------------------
# root notation used in the explicit poset descriptions
# ---------------------------------------------------------------------------

def _vec(r, coeffs):
    v = [0] * r
    for k, c in coeffs:
        v[k - 1] += c
    return tuple(v)


def span(r, i, j):
    """alpha_{i,j} = alpha_i + ... + alpha_j."""
    return _vec(r, [(k, 1) for k in range(i, j + 1)])


def b_prime(r, i, j):
    return _vec(r, [(k, 1) for k in range(i, j)] + [(k, 2) for k in range(j, r + 1)])


def c_prime(r, i, j):
    return _vec(r, [(k, 1) for k in range(i, j)] + [(k, 2) for k in range(j, r)] + [(r, 1)])


def d_prime(r, i, j):
    return _vec(r, [(k, 1) for k in range(i, j)] + [(k, 2) for k in range(j, r - 1)]
                + [(r - 1, 1), (r, 1)])


def d_prime1(r, i):
    return _vec(r, [(k, 1) for k in range(i, r - 1)] + [(r, 1)])


def edge_set(nodes, edges):
    """Figure edges (undirected, by node number) oriented upwards by height."""
    out = set()
    for a, b, lab in edges:
        x, y = nodes[a - 1], nodes[b - 1]
        if sum(x) > sum(y):
            x, y = y, x
        out.add((x, y, lab))
    return out


def cover_set(poset):
    return set(poset.covers)


# ---------------------------------------------------------------------------
# fixtures transcribed from the published posets
# ---------------------------------------------------------------------------

B3_NODES = [span(3, 1, 1), span(3, 1, 2), span(3, 1, 3), b_prime(3, 1, 3), b_prime(3, 1, 2)]
B3_EDGES = [(1, 2, 2), (2, 3, 3), (3, 4, 3), (4, 5, 2)]

C5_NODES = (
    [span(5, i, 5) for i in (5, 4, 3, 2, 1)]
    + [c_prime(5, i, 4) for i in (4, 3, 2, 1)]
    + [c_prime(5, i, 3) for i in (3, 2, 1)]
    + [c_prime(5, i, 2) for i in (2, 1)]
    + [c_prime(5, 1, 1)]
)
C5_EDGES = [
    (1, 2, 4), (2, 3, 3), (3, 4, 2), (4, 5, 1),
    (6, 7, 3), (7, 8, 2), (8, 9, 1),
    (10, 11, 2), (11, 12, 1),
    (13, 14, 1),
    (2, 6, 4), (3, 7, 4), (4, 8, 4), (5, 9, 4),
    (7, 10, 3), (8, 11, 3), (9, 12, 3),
    (11, 13, 2), (12, 14, 2),
    (14, 15, 1),
]

D5_NODES = [span(5, 1, 1), span(5, 1, 2), span(5, 1, 3), span(5, 1, 4),
            d_prime1(5, 1), d_prime(5, 1, 4), d_prime(5, 1, 3), d_prime(5, 1, 2)]
D5_EDGES = [(1, 2, 2), (2, 3, 3), (3, 4, 4), (5, 6, 4), (6, 7, 3), (7, 8, 2), (3, 5, 5), (4, 6, 5)]

D6_NODES = (
    [d_prime1(6, i) for i in (5, 4, 3, 2, 1)]
    + [d_prime(6, i, 5) for i in (4, 3, 2, 1)]
    + [d_prime(6, i, 4) for i in (3, 2, 1)]
    + [d_prime(6, i, 3) for i in (2, 1)]
    + [d_prime(6, 1, 2)]
)
D6_EDGES = [
    (1, 2, 4), (2, 3, 3), (3, 4, 2), (4, 5, 1),
    (6, 7, 3), (7, 8, 2), (8, 9, 1),
    (10, 11, 2), (11, 12, 1),
    (13, 14, 1),
    (2, 6, 5), (3, 7, 5), (4, 8, 5), (5, 9, 5),
    (7, 10, 4), (8, 11, 4), (9, 12, 4),
    (11, 13, 3), (12, 14, 3),
    (14, 15, 2),
]

E6_NODES = [
    span(6, 5, 5), span(6, 4, 5), span(6, 3, 5), span(6, 2, 5), span(6, 1, 5),
    span(6, 3, 6), span(6, 2, 6), span(6, 1, 6),
    (0, 1, 2, 1, 1, 1), (1, 1, 2, 1, 1, 1), (1, 2, 2, 1, 1, 1),
    (0, 1, 2, 2, 1, 1), (1, 1, 2, 2, 1, 1), (1, 2, 2, 2, 1, 1),
    (1, 2, 3, 2, 1, 1), (1, 2, 3, 2, 1, 2),
]
# by displayed label; the drawing swaps the internal names of three vertices
E6_EDGES = [
    (1, 2, 4), (2, 3, 3), (3, 4, 2), (4, 5, 1),
    (6, 7, 2), (7, 8, 1),
    (9, 10, 1), (10, 11, 2),
    (12, 13, 1), (13, 14, 2), (14, 15, 3), (15, 16, 6),
    (3, 6, 6), (4, 7, 6), (5, 8, 6),
    (7, 9, 3), (8, 10, 3),
    (9, 12, 4), (10, 13, 4), (11, 14, 4),
]

E7_NODES = [
    span(7, 6, 6), span(7, 5, 6), span(7, 4, 6), span(7, 3, 6), span(7, 2, 6), span(7, 1, 6),
    span(7, 3, 7), span(7, 2, 7), span(7, 1, 7),
    (0, 1, 2, 1, 1, 1, 1), (1, 1, 2, 1, 1, 1, 1), (1, 2, 2, 1, 1, 1, 1),
    (0, 1, 2, 2, 1, 1, 1), (1, 1, 2, 2, 1, 1, 1), (1, 2, 2, 2, 1, 1, 1),
    (1, 2, 3, 2, 1, 1, 1), (1, 2, 3, 2, 1, 1, 2), (0, 1, 2, 2, 2, 1, 1),
    (1, 1, 2, 2, 2, 1, 1), (1, 2, 2, 2, 2, 1, 1), (1, 2, 3, 2, 2, 1, 1),
    (1, 2, 3, 2, 2, 1, 2), (1, 2, 3, 3, 2, 1, 1), (1, 2, 3, 3, 2, 1, 2),
    (1, 2, 4, 3, 2, 1, 2), (1, 3, 4, 3, 2, 1, 2), (2, 3, 4, 3, 2, 1, 2),
]
E7_EDGES = [
    (1, 2, 5), (2, 3, 4), (3, 4, 3), (4, 5, 2), (5, 6, 1),
    (7, 8, 2), (8, 9, 1),
    (10, 11, 1), (11, 12, 2),
    (13, 14, 1), (14, 15, 2), (15, 16, 3), (16, 17, 7),
    (18, 19, 1), (19, 20, 2), (20, 21, 3), (21, 22, 7),
    (23, 24, 7),
    (4, 7, 7), (5, 8, 7), (6, 9, 7),
    (8, 10, 3), (9, 11, 3),
    (10, 13, 4), (11, 14, 4), (12, 15, 4),
    (13, 18, 5), (14, 19, 5), (15, 20, 5), (16, 21, 5), (17, 22, 5),
    (21, 23, 4), (22, 24, 4),
    (24, 25, 3), (25, 26, 2), (26, 27, 1),
]

FIXTURES = {
    "B3": ("B3", 1, B3_NODES, B3_EDGES),
    "C5": ("C5", 5, C5_NODES, C5_EDGES),
    "D5-first": ("D5", 1, D5_NODES, D5_EDGES),
    "D6-second": ("D6", 6, D6_NODES, D6_EDGES),
    "E6": ("E6", 5, E6_NODES, E6_EDGES),
    "E7": ("E7", 6, E7_NODES, E7_EDGES),
}


@pytest.mark.parametrize("name", list(FIXTURES))
def test_poset_matches_published(name):
    type_, t, nodes, edges = FIXTURES[name]
    poset = radical_poset(parabolic(type_, t))
    assert len(set(nodes)) == len(nodes)
    assert set(poset.elements) == set(nodes)
    assert cover_set(poset) == edge_set(nodes, edges)


def test_fixture_sizes():
    assert len(C5_NODES) == 15 and len(C5_EDGES) == 20
    assert len(E6_NODES) == 16 and len(E6_EDGES) == 20
    assert len(E7_NODES) == 27


def test_a5_grid():
    poset = radical_poset(parabolic("A5", 2))
    nodes = [span(5, 2, j) for j in range(2, 6)] + [span(5, 1, j) for j in range(2, 6)]
    assert set(poset.elements) == set(nodes)
    emb = box_embedding(poset)
    assert (emb.A, emb.B) == (4, 2)
    assert len(emb.coords) == emb.A * emb.B


def test_radical_roots_contain_node_once():
    for p in all_cominuscule(7):
        assert all(x[p.t - 1] == 1 for x in p.radical_roots), p.label
        rs = p.root_system
        assert len(p.radical_roots) + len(p.levi_positive_roots) == len(rs.positive_roots)


def test_non_cominuscule_node_rejected():
    with pytest.raises(ParabolicError):
        parabolic("C3", 1)
    with pytest.raises(ParabolicError):
        parabolic("E8", 1)


def test_partial_order_examples():
    assert partial_leq((1, 0, 1), (1, 0, 1))
    x, y = span(5, 1, 5), c_prime(5, 4, 4)
    assert not partial_leq(x, y) and not partial_leq(y, x)


# ---------------------------------------------------------------------------
# box embeddings and lines
# ---------------------------------------------------------------------------

def test_c5_embedding_shape():
    emb = box_embedding(radical_poset(parabolic("C5", 5)))
    assert emb.A == 5
    assert emb.F == (1, 1, 1, 1, 1)
    assert emb.L == (1, 2, 3, 4, 5)


def test_b3_single_diagonal():
    emb = box_embedding(radical_poset(parabolic("B3", 1)))
    assert emb.A == 1 and emb.B == 5
    assert emb.d_labels == (2, 3, 3, 2)
    assert lines(emb) == {}


def _table(type_, t):
    emb = box_embedding(radical_poset(parabolic(type_, t)))
    return emb, [(a, set(ls)) for a, ls in lines_table(emb)]


@pytest.mark.parametrize("r", [3, 4, 5, 6, 7])
def test_lines_c_series(r):
    emb, table = _table(f"C{r}", r)
    assert list(emb.a_labels) == list(range(r - 1, 0, -1))
    assert table == [(k, set(range(k + 1, r))) for k in range(r - 1, 0, -1)]


@pytest.mark.parametrize("r", [4, 5, 6, 7])
def test_lines_d_series_second_case(r):
    emb, table = _table(f"D{r}", r)
    assert list(emb.a_labels) == list(range(r - 2, 0, -1))
    assert table == [(k, set(range(k + 2, r))) for k in range(r - 2, 0, -1)]


@pytest.mark.parametrize("r,t", [(3, 1), (4, 2), (5, 2), (5, 3), (6, 4)])
def test_lines_a_series(r, t):
    emb, table = _table(f"A{r}", t)
    assert list(emb.a_labels) == list(range(t + 1, r + 1))
    sets = {frozenset(s) for _, s in table}
    # one common line, drawn from alpha_1..alpha_t and disjoint from the a-labels
    assert len(sets) == 1
    (common,) = sets
    assert common <= set(range(1, t + 1))
    assert not common & set(emb.a_labels)


def test_lines_single_or_two_diagonals():
    emb = box_embedding(radical_poset(parabolic("B5", 1)))
    assert emb.A == 1
    emb = box_embedding(radical_poset(parabolic("D6", 1)))
    assert emb.A == 2


def _nonempty(table):
    return [(a, s) for a, s in table if s]


def test_lines_e6():
    _, table = _table("E6", 5)
    assert _nonempty(table) == [(6, {1, 2}), (3, {1}), (4, {1, 2})]


def test_lines_e7():
    _, table = _table("E7", 6)
    assert _nonempty(table) == [(7, {1, 2}), (3, {1}), (4, {1, 2}), (5, {1, 2, 3, 7}), (4, {7})]


def test_lines_lemma_all_cominuscule():
    for p in all_cominuscule(8):
        emb = box_embedding(radical_poset(p))
        assert check_lines_lemma(emb), p.label


def test_lines_lemma_detects_violation():
    # relabel the second diagonal step with a label that occurs in the first line
    e3 = box_embedding(radical_poset(parabolic("C4", 4)))
    assert check_lines_lemma(e3)
    fake = BoxEmbedding(e3.poset, e3.coords, (e3.a_labels[0], e3.d_labels[0], *e3.a_labels[2:]), e3.d_labels)
    assert not check_lines_lemma(fake)


def test_grid_comparability_exhaustive():
    for p in all_cominuscule(7):
        emb = box_embedding(radical_poset(p))
        for x, (a, b) in emb.coords.items():
            for y, (c, d) in emb.coords.items():
                assert partial_leq(x, y) == (a <= c and b <= d), (p.label, x, y)


def test_embedding_covers_every_root_once():
    for p in all_cominuscule(7):
        emb = box_embedding(radical_poset(p))
        assert sorted(emb.coords) == sorted(p.radical_roots)
        assert len(set(emb.coords.values())) == len(emb.coords)


# ---------------------------------------------------------------------------
# canonical order and auxiliary roots
# ---------------------------------------------------------------------------

def test_c3_canonical_order():
    emb = box_embedding(radical_poset(parabolic("C3", 3)))
    order = canonical_order(emb)
    assert order[:6] == [(0, 0, 1), (0, 1, 1), (0, 2, 1), (1, 1, 1), (1, 2, 1), (2, 2, 1)]
    assert len(order) == 9


def test_b3_canonical_order_is_the_chain():
    emb = box_embedding(radical_poset(parabolic("B3", 1)))
    assert canonical_order(emb)[:5] == B3_NODES


def test_canonical_orders_convex():
    for p in all_cominuscule(7):
        assert canonical_is_convex(p), p.label


def test_no_radical_sums():
    for p in all_cominuscule(7):
        assert no_radical_sums(p), p.label


def test_xi_sb_c3():
    emb = box_embedding(radical_poset(parabolic("C3", 3)))
    aux = xi_SB(emb, 3, 2)
    assert aux.xi_S == (1, 1, 1)
    assert aux.xi_B == (0, 0, 1)
    # last diagonal has no xi_S
    assert xi_SB(emb, 6, 4).xi_S is None


def test_xi_sb_bounds_hold():
    """xi_S lies below every later root not above xi_i; xi_B dually."""
    for p in all_cominuscule(7):
        emb = box_embedding(radical_poset(p))
        order = emb.ordered()
        n = len(order)
        for i in range(2, n + 1):
            for j in range(1, i):
                aux = xi_SB(emb, i, j)
                xi, xj = order[i - 1], order[j - 1]
                later = [x for x in order[i:] if not partial_leq(xi, x)]
                earlier = [x for x in order[: j - 1] if not partial_leq(x, xj)]
                if later:
                    assert aux.xi_S is not None
                    assert all(partial_leq(aux.xi_S, x) for x in later), (p.label, i, j)
                if earlier:
                    assert aux.xi_B is not None
                    assert all(partial_leq(x, aux.xi_B) for x in earlier), (p.label, i, j)


def test_type_classification_round_trip():
    assert cominuscule_nodes(build_root_system("D5")) == {1, 4, 5}
