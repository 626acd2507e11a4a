"""Convex orders on positive roots and their reduced words."""

from __future__ import annotations

import enum
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from .roots import Root, RootSystem, Word, is_negative, reduced_words, roots_from_word

if TYPE_CHECKING:
    from .posets import ParabolicData


class ConvexityError(ValueError):
    """The order is not convex, or not an order on the expected roots."""


class LeviSplit(str, enum.Enum):
    RADICAL_FIRST = "radical_first"
    LEVI_FIRST = "levi_first"
    UNSPLIT = "unsplit"


def _check_multiset(order: Sequence[Root], ambient: Iterable[Root]) -> None:
    amb = set(ambient)
    if len(order) != len(set(order)):
        raise ConvexityError("order repeats a root")
    if set(order) != amb:
        missing = sorted(amb - set(order))
        extra = sorted(set(order) - amb)
        raise ConvexityError(f"order is not on the expected roots (missing {missing}, extra {extra})")


def is_convex(rs: RootSystem, order: Sequence[Root], ambient: Iterable[Root] | None = None) -> bool:
    """alpha < beta with alpha + beta a root forces alpha < alpha + beta < beta."""
    order = [tuple(b) for b in order]
    ambient = rs.positive_roots if ambient is None else tuple(ambient)
    _check_multiset(order, ambient)
    pos = {b: k for k, b in enumerate(order)}
    for a in order:
        for b in order:
            if pos[a] >= pos[b]:
                continue
            s = tuple(x + y for x, y in zip(a, b))
            if s in pos and not pos[a] < pos[s] < pos[b]:
                return False
    return True


def order_to_word(rs: RootSystem, order: Sequence[Root], ambient: Iterable[Root] | None = None) -> Word:
    """Inverse of roots_from_word: alpha_{i_k} = s_{i_{k-1}} ... s_{i_1}(beta_k) must be simple."""
    order = [tuple(b) for b in order]
    if ambient is not None:
        _check_multiset(order, ambient)
    word: list[int] = []
    for k, beta in enumerate(order):
        v = rs.apply_word(reversed(word), beta)
        nz = [m for m, c in enumerate(v) if c]
        if len(nz) != 1 or v[nz[0]] != 1:
            raise ConvexityError(f"order is not convex at position {k + 1}: {beta} reduces to {v}")
        word.append(nz[0] + 1)
    return tuple(word)


def word_to_order(rs: RootSystem, word: Sequence[int]) -> list[Root]:
    betas, reduced = roots_from_word(rs, word)
    if not reduced:
        raise ConvexityError(f"word {tuple(word)} is not reduced")
    return betas


def check_levi_split(order: Sequence[Root], p: "ParabolicData") -> LeviSplit:
    rad = set(p.radical_roots)
    flags = [tuple(b) in rad for b in order]
    n = sum(flags)
    if all(flags[:n]):
        return LeviSplit.RADICAL_FIRST
    if all(flags[len(flags) - n:]):
        return LeviSplit.LEVI_FIRST
    return LeviSplit.UNSPLIT


def reverse_order(order: Sequence[Root]) -> list[Root]:
    return list(reversed(order))


class SplitOrderStream:
    """Deterministic stream of radical-first convex orders.

    Yields every linear extension of the radical poset (lexicographic in the
    grid coordinates of the box embedding) followed by a Levi tail.  The tail
    is fixed unless ``all_levi`` is set, in which case every convex order of
    the Levi roots is used in turn.  After iteration, ``truncated`` tells
    whether ``budget`` cut the stream.
    """

    def __init__(self, p: "ParabolicData", levi_tail: Sequence[Root] | None = None,
                 budget: int | None = None, all_levi: bool = False):
        from .posets import box_embedding, levi_order, radical_poset

        if all_levi and levi_tail is not None:
            raise ValueError("pass either a Levi tail or all_levi, not both")
        self.parabolic = p
        rs = p.root_system
        if all_levi:
            tails = [roots_from_word(rs, w)[0] for w in reduced_words(rs, p.S)] if p.S else [[]]
        else:
            tails = [levi_order(p) if levi_tail is None else levi_tail]
        self.levi_tails = [[tuple(b) for b in t] for t in tails]
        for t in self.levi_tails:
            _check_multiset(t, p.levi_positive_roots)
            if not is_convex(rs, t, p.levi_positive_roots):
                raise ConvexityError("Levi tail is not convex")
        self.budget = budget
        self.truncated = False
        self.emitted = 0
        poset = radical_poset(p)
        emb = box_embedding(poset)
        self._key = {x: emb.coords[x] for x in poset.elements}
        self._below = {x: set() for x in poset.elements}
        for lo, hi, _ in poset.covers:
            self._below[hi].add(lo)

    @property
    def levi_tail(self) -> list[Root]:
        return self.levi_tails[0]

    def _extensions(self, placed: list[Root], remaining: set[Root]) -> Iterator[list[Root]]:
        if not remaining:
            yield list(placed)
            return
        done = set(placed)
        avail = sorted((x for x in remaining if self._below[x] <= done), key=self._key.__getitem__)
        for x in avail:
            placed.append(x)
            remaining.remove(x)
            yield from self._extensions(placed, remaining)
            remaining.add(x)
            placed.pop()

    def __iter__(self) -> Iterator[list[Root]]:
        for ext in self._extensions([], set(self._key)):
            for tail in self.levi_tails:
                if self.budget is not None and self.emitted >= self.budget:
                    self.truncated = True
                    return
                self.emitted += 1
                yield ext + tail


def enumerate_split_orders(p: "ParabolicData", levi_tail: Sequence[Root] | None = None,
                           budget: int | None = None, all_levi: bool = False) -> SplitOrderStream:
    return SplitOrderStream(p, levi_tail, budget, all_levi)


def negative_after(rs: RootSystem, w: Sequence[int], betas: Sequence[Root]) -> list[bool]:
    """Which of the betas the word w sends to negative roots."""
    return [is_negative(rs.apply_word(w, b)) for b in betas]
