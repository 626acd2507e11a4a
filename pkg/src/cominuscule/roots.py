"""Cartan data, positive roots and Weyl group words.

Node numbering follows the cominuscule classification diagrams: B_r has its
short simple root at node r, C_r its long one at node r, D_r forks at node
r-2 into r-1 and r, and the E-types are a chain 1-2-...-(r-1) with node r
attached to node 3.  Roots are integer tuples over the simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

Root = tuple[int, ...]
Word = tuple[int, ...]

_FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        fam, r = self.family.upper(), self.rank
        object.__setattr__(self, "family", fam)
        if fam not in _FAMILIES:
            raise ValueError(f"unsupported family {self.family!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[fam]
        if not ok:
            raise ValueError(f"unsupported rank {r} for family {fam}")

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "DynkinType":
        """Accept 'C3', 'E6', or a bare family letter plus an explicit rank."""
        text = text.strip().upper().replace("_", "")
        fam, rest = text[0], text[1:]
        if rest:
            r = int(rest)
            if rank is not None and rank != r:
                raise ValueError(f"rank {rank} conflicts with type {text}")
        elif rank is None:
            raise ValueError(f"type {text!r} needs a rank")
        else:
            r = rank
        return cls(fam, r)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(t: DynkinType) -> np.ndarray:
    """a_ij = <alpha_j, alpha_i^vee> in the node labeling described above."""
    r = t.rank
    a = 2 * np.eye(r, dtype=int)

    def link(i, j, aij=-1, aji=-1):
        a[i - 1, j - 1] = aij
        a[j - 1, i - 1] = aji

    fam = t.family
    if fam in "ABC":
        for i in range(1, r):
            link(i, i + 1)
        if fam == "B":
            # alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
            link(r - 1, r, aij=-1, aji=-2)
        elif fam == "C":
            link(r - 1, r, aij=-2, aji=-1)
    elif fam == "D":
        for i in range(1, r - 1):
            link(i, i + 1)
        link(r - 2, r)
    elif fam == "E":
        for i in range(1, r - 1):
            link(i, i + 1)
        link(3, r)
    elif fam == "F":
        link(1, 2)
        link(2, 3, aij=-1, aji=-2)
        link(3, 4)
    elif fam == "G":
        link(1, 2, aij=-3, aji=-1)
    return a


def _symmetrizers(a: np.ndarray) -> tuple[int, ...]:
    """Minimal positive integers d_i with d_i a_ij = d_j a_ji."""
    from fractions import Fraction
    from math import gcd, lcm

    r = a.shape[0]
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and a[i, j] != 0 and d[j] is None:
                d[j] = d[i] * int(a[i, j]) / int(a[j, i])
                stack.append(j)
    den = lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RootSystem:
    """Root data for a finite Dynkin type (see :func:`build_root_system`)."""

    type: DynkinType
    cartan: np.ndarray = field(repr=False, compare=False)
    symmetrizers: tuple[int, ...]
    positive_roots: tuple[Root, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def bilinear(self) -> np.ndarray:
        """(alpha_i, alpha_j) = d_i a_ij; short roots have (alpha, alpha) = 2."""
        return np.diag(self.symmetrizers) @ self.cartan

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    @cached_property
    def index(self) -> dict[Root, int]:
        return {b: k for k, b in enumerate(self.positive_roots)}

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=height)

    def simple_root(self, i: int) -> Root:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def form(self, x: Sequence[int], y: Sequence[int]) -> int:
        return int(np.asarray(x) @ self.bilinear @ np.asarray(y))

    def pairing(self, v: Sequence[int], i: int) -> int:
        """<v, alpha_i^vee>."""
        return int(self.cartan[i - 1] @ np.asarray(v))

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(int(x) for x in v)
        return v in self.root_set or tuple(-x for x in v) in self.root_set

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(int(x) for x in v) in self.root_set

    def reflect(self, i: int, v: Sequence[int]) -> Root:
        c = self.pairing(v, i)
        out = list(int(x) for x in v)
        out[i - 1] -= c
        return tuple(out)

    def apply_word(self, w: Iterable[int], v: Sequence[int]) -> Root:
        """s_{w_1} ... s_{w_n}(v): the rightmost letter acts first."""
        out = tuple(int(x) for x in v)
        for i in reversed(tuple(w)):
            out = self.reflect(i, out)
        return out

    def sub_positive_roots(self, subset: Iterable[int]) -> tuple[Root, ...]:
        """Positive roots supported on the given simple indices."""
        allowed = set(subset)
        return tuple(
            b for b in self.positive_roots
            if all(c == 0 or (k + 1) in allowed for k, c in enumerate(b))
        )


def height(v: Sequence[int]) -> int:
    return int(sum(v))


def is_positive(v: Sequence[int]) -> bool:
    return any(v) and all(x >= 0 for x in v)


def is_negative(v: Sequence[int]) -> bool:
    return any(v) and all(x <= 0 for x in v)


def _closure(cartan: np.ndarray) -> tuple[Root, ...]:
    """Positive roots by root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0."""
    r = cartan.shape[0]
    simple = [tuple(int(k == i) for k in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i in range(r):
                p = 0
                down = list(b)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - int(cartan[i] @ np.asarray(b)) > 0:
                    up = list(b)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(found, key=lambda v: (height(v), tuple(-x for x in v))))


_CACHE: dict[DynkinType, RootSystem] = {}

_EXPECTED_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


def build_root_system(t: DynkinType | str, rank: int | None = None) -> RootSystem:
    if isinstance(t, str):
        t = DynkinType.parse(t, rank)
    if t in _CACHE:
        return _CACHE[t]
    a = cartan_matrix(t)
    pos = _closure(a)
    if len(pos) != _EXPECTED_COUNT[t.family](t.rank):
        raise RuntimeError(f"root closure for {t} produced {len(pos)} roots")
    rs = RootSystem(t, a, _symmetrizers(a), pos)
    _CACHE[t] = rs
    return rs


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def apply_word(rs: RootSystem, w: Iterable[int], v: Sequence[int]) -> Root:
    return rs.apply_word(w, v)


def roots_from_word(rs: RootSystem, w: Sequence[int]) -> tuple[list[Root], bool]:
    """beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}), and whether w is reduced."""
    w = tuple(w)
    betas = []
    for k, i in enumerate(w):
        betas.append(rs.apply_word(w[:k], rs.simple_root(i)))
    reduced = all(is_positive(b) for b in betas) and len(set(betas)) == len(betas)
    return betas, reduced


def is_reduced(rs: RootSystem, w: Sequence[int]) -> bool:
    return roots_from_word(rs, w)[1]


def is_longest_word(rs: RootSystem, w: Sequence[int]) -> bool:
    return len(w) == len(rs.positive_roots) and is_reduced(rs, w)


def generic_functional(rank: int) -> tuple[int, ...]:
    """Weights whose slope f(b)/ht(b) separates all positive roots up to rank 8."""
    return tuple(1000 ** k for k in range(rank))


def slope_order(rs: RootSystem, roots: Iterable[Root]) -> list[Root]:
    """Sort roots by f(b)/ht(b); a mediant lies strictly between, so this is convex."""
    from fractions import Fraction

    f = generic_functional(rs.rank)
    return sorted(roots, key=lambda b: Fraction(sum(c * x for c, x in zip(f, b)), height(b)))


def longest_word(rs: RootSystem, subset: Iterable[int] | None = None) -> Word:
    """A reduced word for w0 (of the sub-system on ``subset`` when given).

    The positive roots are sorted by slope against a generic functional,
    which is a convex order, and the order is converted into a word.
    """
    from .convex import order_to_word

    if subset is None:
        roots = rs.positive_roots
    else:
        roots = rs.sub_positive_roots(subset)
    return order_to_word(rs, slope_order(rs, roots), ambient=roots)


def reduced_words(rs: RootSystem, subset: Iterable[int] | None = None) -> Iterator[Word]:
    """Every reduced word of w0 (of the sub-system on ``subset`` when given), lexicographically."""
    letters = sorted(range(1, rs.rank + 1) if subset is None else set(subset))
    target = len(rs.positive_roots if subset is None else rs.sub_positive_roots(letters))
    word: list[int] = []

    def extend() -> Iterator[Word]:
        if len(word) == target:
            yield tuple(word)
            return
        for i in letters:
            # appending s_i is length-increasing iff w(alpha_i) > 0
            if is_positive(rs.apply_word(word, rs.simple_root(i))):
                word.append(i)
                yield from extend()
                word.pop()

    yield from extend()


def separating_element(rs: RootSystem, w: Sequence[int], j: int) -> Word:
    """Word for (s_{i_1} ... s_{i_{j-1}})^{-1}; it sends beta_k negative exactly for k < j."""
    w = tuple(w)
    if not 1 <= j <= len(w) + 1:
        raise ValueError(f"position {j} out of range 1..{len(w) + 1}")
    return tuple(reversed(w[: j - 1]))
