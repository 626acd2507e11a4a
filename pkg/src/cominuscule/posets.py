"""Cominuscule parabolics: radical roots, their poset, and the box embedding.

The radical poset is always computed from root data.  The box embedding
places each radical root at a grid vertex v_{i,j} so that moving down a row
(i -> i+1) adds the simple root a_i and moving along a diagonal (j -> j+1)
adds d_j.  On top of it sit the canonical total order and the auxiliary
roots used by the vanishing argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .convex import is_convex, order_to_word, word_to_order
from .roots import Root, RootSystem, Word, build_root_system, height, longest_word


class ParabolicError(ValueError):
    pass


# ---------------------------------------------------------------------------
# classification and the radical / Levi split
# ---------------------------------------------------------------------------

def cominuscule_nodes(rs: RootSystem) -> set[int]:
    """Nodes t with coefficient 1 in the highest root."""
    return {k + 1 for k, c in enumerate(rs.highest_root) if c == 1}


@dataclass(frozen=True)
class ParabolicData:
    root_system: RootSystem
    t: int
    radical_roots: tuple[Root, ...]
    levi_positive_roots: tuple[Root, ...]

    @property
    def S(self) -> frozenset[int]:
        return frozenset(range(1, self.root_system.rank + 1)) - {self.t}

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def label(self) -> str:
        return f"{self.root_system.type}, t={self.t}"

    def is_radical(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._radical_set

    @cached_property
    def _radical_set(self) -> frozenset[Root]:
        return frozenset(self.radical_roots)


def split_roots(rs: RootSystem, t: int) -> ParabolicData:
    if t not in cominuscule_nodes(rs):
        raise ParabolicError(f"node {t} is not cominuscule for {rs.type}")
    rad = tuple(b for b in rs.positive_roots if b[t - 1] > 0)
    levi = tuple(b for b in rs.positive_roots if b[t - 1] == 0)
    assert all(b[t - 1] == 1 for b in rad)
    return ParabolicData(rs, t, rad, levi)


def parabolic(type_: str, t: int, rank: int | None = None) -> ParabolicData:
    """Shorthand: ``parabolic('C3', 3)``."""
    return split_roots(build_root_system(type_, rank), t)


def all_cominuscule(max_rank: int = 7) -> Iterator[ParabolicData]:
    """Every cominuscule (type, node) up to the given rank, in a fixed order."""
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        for r in range(lo, max_rank + 1):
            rs = build_root_system(f"{fam}{r}")
            for t in sorted(cominuscule_nodes(rs)):
                yield split_roots(rs, t)
    for r in (6, 7, 8):
        if r <= max_rank:
            rs = build_root_system(f"E{r}")
            for t in sorted(cominuscule_nodes(rs)):
                yield split_roots(rs, t)


def partial_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """x <= y in the root order: y - x is a nonnegative combination of simple roots."""
    return all(b - a >= 0 for a, b in zip(x, y))


def _diff(x: Sequence[int], y: Sequence[int]) -> Root:
    return tuple(a - b for a, b in zip(x, y))


def _simple_index(v: Sequence[int]) -> int | None:
    nz = [k for k, c in enumerate(v) if c]
    if len(nz) == 1 and v[nz[0]] == 1:
        return nz[0] + 1
    return None


# ---------------------------------------------------------------------------
# radical poset
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadicalPoset:
    elements: tuple[Root, ...]
    covers: tuple[tuple[Root, Root, int], ...]
    parabolic: ParabolicData | None = field(default=None, compare=False, repr=False)

    @cached_property
    def lower_covers(self) -> dict[Root, list[tuple[Root, int]]]:
        out: dict[Root, list[tuple[Root, int]]] = {x: [] for x in self.elements}
        for lo, hi, lab in self.covers:
            out[hi].append((lo, lab))
        return out

    @cached_property
    def upper_covers(self) -> dict[Root, list[tuple[Root, int]]]:
        out: dict[Root, list[tuple[Root, int]]] = {x: [] for x in self.elements}
        for lo, hi, lab in self.covers:
            out[lo].append((hi, lab))
        return out

    @property
    def minimum(self) -> Root:
        return min(self.elements, key=height)

    @property
    def maximum(self) -> Root:
        return max(self.elements, key=height)


def radical_poset(p: ParabolicData) -> RadicalPoset:
    elems = tuple(sorted(p.radical_roots, key=lambda b: (height(b), b)))
    covers = []
    for x in elems:
        for y in elems:
            k = _simple_index(_diff(y, x))
            if k is not None:
                covers.append((x, y, k))
    return RadicalPoset(elems, tuple(covers), p)


# ---------------------------------------------------------------------------
# box embedding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxEmbedding:
    poset: RadicalPoset = field(repr=False)
    coords: dict[Root, tuple[int, int]] = field(repr=False)
    a_labels: tuple[int, ...]
    d_labels: tuple[int, ...]

    @property
    def A(self) -> int:
        return len(self.a_labels) + 1

    @property
    def B(self) -> int:
        return len(self.d_labels) + 1

    @cached_property
    def vertex(self) -> dict[tuple[int, int], Root]:
        return {c: x for x, c in self.coords.items()}

    def a(self, i: int) -> int:
        return self.a_labels[i - 1]

    def d(self, j: int) -> int:
        return self.d_labels[j - 1]

    def first(self, i: int) -> int:
        return min(j for (a, j) in self.vertex if a == i)

    def last(self, i: int) -> int:
        return max(j for (a, j) in self.vertex if a == i)

    @cached_property
    def F(self) -> tuple[int, ...]:
        """F[i-1] = first occupied column of diagonal i."""
        return tuple(self.first(i) for i in range(1, self.A + 1))

    @cached_property
    def L(self) -> tuple[int, ...]:
        return tuple(self.last(i) for i in range(1, self.A + 1))

    def at(self, i: int, j: int) -> Root:
        return self.vertex[(i, j)]

    def ordered(self) -> list[Root]:
        """Radical roots by (diagonal, column)."""
        return [self.vertex[c] for c in sorted(self.vertex)]


def _unit(rank: int, k: int) -> Root:
    return tuple(int(m == k - 1) for m in range(rank))


def embedding_violations(emb: BoxEmbedding) -> list[str]:
    """Every box-embedding invariant that fails; empty means valid."""
    poset = emb.poset
    bad: list[str] = []
    elems = set(poset.elements)
    if set(emb.coords) != elems:
        bad.append("coordinates do not cover the poset exactly")
        return bad
    if len(emb.vertex) != len(emb.coords):
        bad.append("two roots share a vertex")
        return bad
    rank = len(poset.elements[0])
    if any(i < 1 or j < 1 or i > emb.A or j > emb.B for i, j in emb.vertex):
        bad.append("vertex outside the A x B box")
    if emb.vertex.get((1, 1)) != poset.minimum:
        bad.append("v_{1,1} is not the minimal radical root")
    if emb.vertex.get((emb.A, emb.B)) != poset.maximum:
        bad.append("v_{A,B} is not the highest root")
    for (i, j), x in emb.vertex.items():
        below = emb.vertex.get((i + 1, j))
        if below is not None and (i > len(emb.a_labels) or _diff(below, x) != _unit(rank, emb.a(i))):
            bad.append(f"row step at v_({i},{j}) does not add a_{i}")
        right = emb.vertex.get((i, j + 1))
        if right is not None and (j > len(emb.d_labels) or _diff(right, x) != _unit(rank, emb.d(j))):
            bad.append(f"diagonal step at v_({i},{j}) does not add d_{j}")
    rows = {i for i, _ in emb.vertex}
    if rows != set(range(1, emb.A + 1)):
        bad.append("empty diagonal")
        return bad
    for i in range(1, emb.A + 1):
        cols = sorted(j for a, j in emb.vertex if a == i)
        if cols != list(range(cols[0], cols[-1] + 1)):
            bad.append(f"diagonal {i} is not contiguous")
    F, L = emb.F, emb.L
    if any(F[k] > F[k + 1] for k in range(len(F) - 1)):
        bad.append("F is not weakly increasing")
    if any(L[k] > L[k + 1] for k in range(len(L) - 1)):
        bad.append("L is not weakly increasing")
    for x, (a, b) in emb.coords.items():
        for y, (c, d) in emb.coords.items():
            if partial_leq(x, y) != (a <= c and b <= d):
                bad.append(f"comparability of {x} and {y} disagrees with the grid")
    return bad


def _search_embeddings(poset: RadicalPoset) -> Iterator[BoxEmbedding]:
    elems = sorted(poset.elements, key=lambda b: (height(b), b))
    low = poset.lower_covers
    coords: dict[Root, tuple[int, int]] = {elems[0]: (1, 1)}
    occupied = {(1, 1)}
    a_lab: dict[int, int] = {}
    d_lab: dict[int, int] = {}

    def candidates(x):
        lc = low[x]
        if len(lc) == 1:
            (y, _), = lc
            i, j = coords[y]
            return [(i + 1, j), (i, j + 1)]
        if len(lc) == 2:
            (p1, _), (p2, _) = lc
            (i1, j1), (i2, j2) = coords[p1], coords[p2]
            i, j = max(i1, i2), max(j1, j2)
            if {(i1, j1), (i2, j2)} == {(i - 1, j), (i, j - 1)}:
                return [(i, j)]
        return []

    def place(k):
        if k == len(elems):
            A = max(i for i, _ in coords.values())
            B = max(j for _, j in coords.values())
            if any(i not in a_lab for i in range(1, A)) or any(j not in d_lab for j in range(1, B)):
                return
            yield BoxEmbedding(
                poset, dict(coords),
                tuple(a_lab[i] for i in range(1, A)),
                tuple(d_lab[j] for j in range(1, B)),
            )
            return
        x = elems[k]
        for (i, j) in candidates(x):
            if (i, j) in occupied:
                continue
            ok = True
            for z, (zi, zj) in coords.items():
                if partial_leq(z, x) != (zi <= i and zj <= j) or (zi >= i and zj >= j):
                    ok = False
                    break
            if not ok:
                continue
            new_a, new_d = [], []
            for y, lab in low[x]:
                yi, yj = coords[y]
                table, idx, fresh = (a_lab, yi, new_a) if yi == i - 1 else (d_lab, yj, new_d)
                if idx in table:
                    if table[idx] != lab:
                        ok = False
                else:
                    table[idx] = lab
                    fresh.append(idx)
            if ok:
                coords[x] = (i, j)
                occupied.add((i, j))
                yield from place(k + 1)
                del coords[x]
                occupied.discard((i, j))
            for idx in new_a:
                del a_lab[idx]
            for idx in new_d:
                del d_lab[idx]

    yield from place(1) if len(elems) > 1 else iter([BoxEmbedding(poset, dict(coords), (), ())])


def all_box_embeddings(poset: RadicalPoset) -> list[BoxEmbedding]:
    """Every valid box embedding of the poset."""
    return [e for e in _search_embeddings(poset) if not embedding_violations(e)]


def _preferred(emb: BoxEmbedding, p: ParabolicData | None) -> bool:
    """Orientation used by the per-family label tables."""
    if p is None:
        return False
    fam, r, t = p.root_system.type.family, p.rank, p.t
    a = emb.a_labels
    if fam == "A":
        return a == tuple(range(t + 1, r + 1))
    if fam == "B":
        return emb.A == 1
    if fam == "C":
        return a == tuple(range(r - 1, 0, -1)) and set(emb.F) == {1}
    if fam == "D":
        if t == 1:
            return emb.A == 2
        return a == tuple(range(r - 2, 0, -1))
    if fam == "E":
        return a == _E_ROWS.get((r, t))
    return False


# a-labels of the exceptional orientations; t=1 in E6 is the diagram image of t=5
_E_ROWS = {(6, 5): (6, 3, 4), (6, 1): (6, 3, 2), (7, 6): (7, 3, 4, 5, 4)}


def _chain_embeddings(poset: RadicalPoset) -> list[BoxEmbedding] | None:
    """Row and column embeddings of a totally ordered poset (None otherwise)."""
    elems = sorted(poset.elements, key=lambda b: (height(b), b))
    labels = []
    for lo, hi in zip(elems, elems[1:]):
        lab = [l for x, y, l in poset.covers if x == lo and y == hi]
        if len(lab) != 1:
            return None
        labels.append(lab[0])
    if len(poset.covers) != len(labels):
        return None
    n = len(elems)
    row = BoxEmbedding(poset, {x: (1, k + 1) for k, x in enumerate(elems)}, (), tuple(labels))
    col = BoxEmbedding(poset, {x: (k + 1, 1) for k, x in enumerate(elems)}, tuple(labels), ())
    return [row, col] if n > 1 else [row]


def _order_key(emb: BoxEmbedding) -> tuple:
    return tuple(emb.coords[x] for x in emb.poset.elements)


def box_embedding(poset: RadicalPoset) -> BoxEmbedding:
    """The grid embedding, oriented as in the family tables; else smallest A."""
    found = _chain_embeddings(poset) or all_box_embeddings(poset)
    if not found:
        raise ParabolicError("no consistent box embedding: not a cominuscule radical poset")
    return min(found, key=lambda e: (not _preferred(e, poset.parabolic), e.A, _order_key(e)))


def lines(emb: BoxEmbedding) -> dict[int, list[int]]:
    """L_i = [d_{F(i+1)}, ..., d_{L(i)-1}] for each diagonal i < A (a multiset of labels)."""
    out = {}
    for i in range(1, emb.A):
        out[i] = [emb.d(k) for k in range(emb.F[i], emb.L[i - 1])]
    return out


def lines_table(emb: BoxEmbedding) -> list[tuple[int, list[int]]]:
    """(a_i, L_i) rows in increasing i."""
    ls = lines(emb)
    return [(emb.a(i), ls[i]) for i in range(1, emb.A)]


def check_lines_lemma(emb: BoxEmbedding) -> bool:
    """a_i in L_j only when i < j."""
    ls = lines(emb)
    for i in range(1, emb.A):
        for j, lab in ls.items():
            if emb.a(i) in lab and not i < j:
                return False
    return True


# ---------------------------------------------------------------------------
# canonical order and the auxiliary roots
# ---------------------------------------------------------------------------

def levi_order(p: ParabolicData) -> list[Root]:
    rs = p.root_system
    if not p.levi_positive_roots:
        return []
    return word_to_order(rs, longest_word(rs, p.S))


def canonical_order(emb: BoxEmbedding, levi_tail: Sequence[Root] | None = None) -> list[Root]:
    """Radical roots by (diagonal, column), then the Levi tail."""
    p = emb.poset.parabolic
    if levi_tail is None:
        if p is None:
            raise ParabolicError("a Levi tail is needed when the poset carries no parabolic data")
        levi_tail = levi_order(p)
    return emb.ordered() + [tuple(b) for b in levi_tail]


def canonical_word(p: ParabolicData) -> Word:
    emb = box_embedding(radical_poset(p))
    order = canonical_order(emb)
    return order_to_word(p.root_system, order, ambient=p.root_system.positive_roots)


@dataclass(frozen=True)
class AuxRoots:
    xi_S: Root | None
    xi_B: Root | None
    chi_S: Root
    chi_B: Root
    row_i: int
    row_j: int


def xi_SB(emb: BoxEmbedding, i_pos: int, j_pos: int) -> AuxRoots:
    """Auxiliary roots for the pair xi_i = v_{a,b}, xi_j = v_{c,d} (1-based radical positions).

    xi_S = v_{a+1,F(a+1)} (absent on the last diagonal), xi_B = v_{c-1,L(c-1)}
    (absent on the first), chi_B = v_{a,L(a)}, chi_S = v_{c,F(c)}.
    """
    order = emb.ordered()
    n = len(order)
    if not (1 <= j_pos < i_pos <= n):
        raise ValueError(f"need 1 <= j_pos < i_pos <= {n}, got ({i_pos}, {j_pos})")
    a, _ = emb.coords[order[i_pos - 1]]
    c, _ = emb.coords[order[j_pos - 1]]
    xs = emb.at(a + 1, emb.F[a]) if a < emb.A else None
    xb = emb.at(c - 1, emb.L[c - 2]) if c > 1 else None
    return AuxRoots(xs, xb, emb.at(c, emb.F[c - 1]), emb.at(a, emb.L[a - 1]), a, c)


def no_radical_sums(p: ParabolicData) -> bool:
    """No two radical roots add up to a root."""
    rs = p.root_system
    for x in p.radical_roots:
        for y in p.radical_roots:
            if rs.is_root(tuple(a + b for a, b in zip(x, y))):
                return False
    return True


def canonical_is_convex(p: ParabolicData) -> bool:
    emb = box_embedding(radical_poset(p))
    return is_convex(p.root_system, canonical_order(emb))
