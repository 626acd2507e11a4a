"""Canonical forms via the quantum shuffle algebra.

The map sending a word i_1...i_n to the quantum shuffle product of its
letters has kernel exactly the ideal generated by the q-Serre relations (for
generic q).  Applying it to both the F-word and the E-word of every
triangular monomial gives a representation in which equality in U_q(g) is
equality of dictionaries.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from ..qarith import LaurentPoly, RatFunc
from .algebra import Element, Key, UqAlgebra

ShuffleVec = dict[tuple[int, ...], LaurentPoly]


def _image_cache(alg: UqAlgebra) -> dict[tuple[int, ...], ShuffleVec]:
    cache = getattr(alg, "_shuffle_cache", None)
    if cache is None:
        cache = {(): {(): LaurentPoly.const(1)}}
        alg._shuffle_cache = cache
    return cache


def shuffle_image(alg: UqAlgebra, word: tuple[int, ...]) -> ShuffleVec:
    """Image of a word: ((i_1 * i_2) * i_3) * ... with u * i = sum_p q^{(a_i, wt u_{>p})} u_{<=p} i u_{>p}."""
    cache = _image_cache(alg)
    hit = cache.get(word)
    if hit is not None:
        return hit
    prev = shuffle_image(alg, word[:-1])
    i = word[-1]
    row = alg.form[i - 1]
    out: dict[tuple[int, ...], dict[int, int]] = {}
    for u, c in prev.items():
        tail = 0
        # walk insertion points from the right so the exponent accumulates
        for p in range(len(u), -1, -1):
            if p < len(u):
                tail += row[u[p] - 1]
            w = u[:p] + (i,) + u[p:]
            slot = out.setdefault(w, {})
            for e, a in c.terms.items():
                slot[e + tail] = slot.get(e + tail, 0) + a
    res = {}
    for w, t in out.items():
        lp = LaurentPoly(t)
        if not lp.is_zero():
            res[w] = lp
    cache[word] = res
    return res


def canonical(x: Element) -> dict[Key, RatFunc]:
    """Serre-reduced form: keys are (F shuffle word, K, E shuffle word)."""
    alg = x.alg
    # collapse the E side first, per (F-word, K)
    stage: dict[tuple, dict[tuple[int, ...], RatFunc]] = {}
    for (f, k, e), c in x.terms.items():
        slot = stage.setdefault((f, k), {})
        for u, lp in shuffle_image(alg, e).items():
            v = c * RatFunc._raw(lp, RatFunc.one.den)
            w = slot.get(u)
            slot[u] = v if w is None else w + v
    out: dict[Key, RatFunc] = {}
    for (f, k), slot in stage.items():
        fimg = shuffle_image(alg, f)
        for u, c in slot.items():
            if not c:
                continue
            for v, lp in fimg.items():
                key = (v, k, u)
                val = c * RatFunc._raw(lp, RatFunc.one.den)
                w = out.get(key)
                out[key] = val if w is None else w + val
    return {k: v for k, v in out.items() if v}


def is_zero(x: Element) -> bool:
    return not canonical(x)


def equal(x: Element, y: Element) -> bool:
    return is_zero(x - y)


def support(x: Element) -> list[Key]:
    """Keys of the canonical form; weights of these are the true weight support."""
    return sorted(canonical(x))


def canonical_weights(x: Element) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    alg = x.alg
    return {(alg.word_weight(f), alg.word_weight(e)) for f, _, e in canonical(x)}


def in_levi(x: Element, S: Iterable[int]) -> bool:
    """Membership in the subalgebra generated by all K and E_j, F_j with j in S.

    By the triangular decomposition this holds iff every surviving canonical
    monomial has F- and E-weights supported on S.  Only the monomials whose
    literal weights leave S need to be reduced.
    """
    alg = x.alg
    allowed = set(S)
    outside = [k for k in range(alg.rank) if (k + 1) not in allowed]

    def leaves(w):
        return any(w[k] for k in outside)

    suspect = {key: c for key, c in x.terms.items()
               if leaves(alg.word_weight(key[0])) or leaves(alg.word_weight(key[2]))}
    if not suspect:
        return True
    return is_zero(Element(alg, suspect))


def is_pure_positive(x: Element) -> bool:
    """Canonically a combination of E-words only."""
    return all(not f and not any(k) for f, k, _ in canonical(x))
