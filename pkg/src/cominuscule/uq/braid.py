"""Lusztig's braid automorphisms, quantum root vectors and the Levi check.

``lusztig_T(i, x, "fwd")`` is the automorphism with

    E_i -> -F_i K_i,   F_i -> -K_i^{-1} E_i,   K_lam -> K_{s_i lam},
    E_j -> sum_s (-1)^s q_i^{-s} E_i^{(r-s)} E_j E_i^{(s)},
    F_j -> sum_s (-1)^s q_i^{s}  F_i^{(s)} F_j F_i^{(r-s)},       r = -a_ij,

and ``"inv"`` is its inverse.  Both versions can be used to build root
vectors; the Levi membership of commutators does not depend on the choice.
"""

from __future__ import annotations

import enum
import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from ..qarith import LaurentPoly, RatFunc
from ..roots import Root, is_reduced, roots_from_word
from .algebra import Element, Key, UqAlgebra, commutator, omega, qpow
from .shuffle import canonical, canonical_weights, equal, in_levi, is_pure_positive, is_zero

CACHE_FORMAT = "uq-rootvec-v1"


class Direction(str, enum.Enum):
    FWD = "fwd"
    INV = "inv"


def _direction(d) -> Direction:
    return d if isinstance(d, Direction) else Direction(d)


# ---------------------------------------------------------------------------
# images of generators
# ---------------------------------------------------------------------------

def _t_gen_cache(alg: UqAlgebra) -> dict:
    c = getattr(alg, "_t_gen", None)
    if c is None:
        c = {}
        alg._t_gen = c
    return c


def t_generator(alg: UqAlgebra, i: int, kind: str, j: int, direction="fwd") -> Element:
    """Image of E_j or F_j (kind 'E' / 'F') under T_i in the given direction."""
    direction = _direction(direction)
    cache = _t_gen_cache(alg)
    key = (i, kind, j, direction)
    if key in cache:
        return cache[key]
    d = alg.d[i - 1]
    ai = alg.unit(i)
    mai = alg.unit(i, -1)
    fwd = direction is Direction.FWD
    if j == i:
        if kind == "E":
            # fwd: -F_i K_i ; inv: -K_i^{-1} F_i = -q^{(a_i,a_i)} F_i K_i^{-1}
            out = alg.element({((i,), ai if fwd else mai, ()):
                               -RatFunc.one if fwd else -qpow(2 * d)})
        else:
            # fwd: -K_i^{-1} E_i ; inv: -E_i K_i = -q^{-(a_i,a_i)} K_i E_i
            out = alg.element({((), mai if fwd else ai, (i,)):
                               -RatFunc.one if fwd else -qpow(-2 * d)})
    else:
        r = -int(alg.rs.cartan[i - 1, j - 1])
        out = alg.element()
        for s in range(r + 1):
            sign = -1 if s % 2 else 1
            if kind == "E":
                c = qpow(-d * s) * sign
                if fwd:
                    term = alg.E_div(i, r - s) * alg.E(j) * alg.E_div(i, s)
                else:
                    term = alg.E_div(i, s) * alg.E(j) * alg.E_div(i, r - s)
            else:
                c = qpow(d * s) * sign
                if fwd:
                    term = alg.F_div(i, s) * alg.F(j) * alg.F_div(i, r - s)
                else:
                    term = alg.F_div(i, r - s) * alg.F(j) * alg.F_div(i, s)
            out = out + term.scale(c)
    cache[key] = out
    return out


def reflect_weight(alg: UqAlgebra, i: int, lam: Sequence[int]) -> Root:
    return alg.rs.reflect(i, lam)


def _t_word(alg: UqAlgebra, i: int, kind: str, word: tuple[int, ...], direction: Direction) -> Element:
    cache = _t_gen_cache(alg)
    key = ("w", i, kind, word, direction)
    if key in cache:
        return cache[key]
    if not word:
        out = alg.one()
    elif len(word) == 1:
        out = t_generator(alg, i, kind, word[0], direction)
    else:
        out = _t_word(alg, i, kind, word[:-1], direction) * t_generator(alg, i, kind, word[-1], direction)
    cache[key] = out
    return out


def lusztig_T(i: int, x: Element, direction="fwd") -> Element:
    """Apply the braid automorphism T_i (``"fwd"``) or its inverse (``"inv"``)."""
    direction = _direction(direction)
    alg = x.alg
    out = alg.element()
    for (f, k, e), c in x.terms.items():
        kk = alg.K(reflect_weight(alg, i, k))
        term = _t_word(alg, i, "F", f, direction) * kk * _t_word(alg, i, "E", e, direction)
        out = out + term.scale(c)
    return out


# ---------------------------------------------------------------------------
# root vectors
# ---------------------------------------------------------------------------

def _coeff_to_json(c: RatFunc) -> list:
    return [sorted(c.num.terms.items()), sorted(c.den.terms.items())]


def _coeff_from_json(obj) -> RatFunc:
    num, den = obj
    return RatFunc._make(LaurentPoly({int(e): int(a) for e, a in num}),
                         LaurentPoly({int(e): int(a) for e, a in den}))


def element_to_json(x: Element) -> list:
    return [[list(f), list(k), list(e), _coeff_to_json(c)] for (f, k, e), c in x.sorted_terms()]


def element_from_json(alg: UqAlgebra, data: list) -> Element:
    return Element(alg, {(tuple(f), tuple(k), tuple(e)): _coeff_from_json(c) for f, k, e, c in data})


class RootVectorCache:
    """Root vectors keyed by (type, word prefix, direction); optionally mirrored on disk."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self.memory: dict[tuple, Element] = {}
        self.directory = Path(directory) if directory else None
        if self.directory:
            self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, key: tuple) -> Path:
        h = hashlib.sha256(json.dumps([CACHE_FORMAT, *map(str, key)]).encode()).hexdigest()[:32]
        return self.directory / f"{h}.json"

    def get(self, alg: UqAlgebra, key: tuple) -> Element | None:
        if key in self.memory:
            return self.memory[key]
        if self.directory:
            p = self._path(key)
            if p.exists():
                data = json.loads(p.read_text())
                if data.get("format") == CACHE_FORMAT and data.get("key") == list(map(str, key)):
                    x = element_from_json(alg, data["element"])
                    self.memory[key] = x
                    return x
        return None

    def put(self, key: tuple, x: Element) -> None:
        self.memory[key] = x
        if self.directory:
            p = self._path(key)
            tmp = p.with_suffix(".tmp")
            tmp.write_text(json.dumps({"format": CACHE_FORMAT, "key": list(map(str, key)),
                                       "element": element_to_json(x)}))
            tmp.replace(p)


_DEFAULT_CACHE = RootVectorCache()


def clear_caches() -> None:
    """Forget every algebra, straightening table and in-memory root vector."""
    UqAlgebra._instances.clear()
    _DEFAULT_CACHE.memory.clear()


def _positive_root_vector(alg: UqAlgebra, prefix: tuple[int, ...], direction: Direction,
                          cache: RootVectorCache) -> Element:
    key = (str(alg.rs.type), prefix, direction.value)
    hit = cache.get(alg, key)
    if hit is not None:
        return hit
    x = alg.E(prefix[-1])
    for i in reversed(prefix[:-1]):
        x = lusztig_T(i, x, direction)
    cache.put(key, x)
    return x


def root_vector(alg: UqAlgebra, word: Sequence[int], k: int, sign: str = "E",
                direction="fwd", cache: RootVectorCache | None = None) -> Element:
    """E_{beta_k} = T_{i_1} ... T_{i_{k-1}}(E_{i_k}); the F version is its Omega image."""
    word = tuple(word)
    direction = _direction(direction)
    if not is_reduced(alg.rs, word):
        raise ValueError(f"word {word} is not reduced")
    if not 1 <= k <= len(word):
        raise ValueError(f"index {k} out of range 1..{len(word)}")
    x = _positive_root_vector(alg, word[:k], direction, cache or _DEFAULT_CACHE)
    if sign == "E":
        return x
    if sign == "F":
        return omega(x)
    raise ValueError("sign must be 'E' or 'F'")


def root_vector_by_T(alg: UqAlgebra, word: Sequence[int], k: int, direction="fwd") -> Element:
    """F_{beta_k} computed directly as T_{i_1} ... T_{i_{k-1}}(F_{i_k})."""
    direction = _direction(direction)
    x = alg.F(word[k - 1])
    for i in reversed(tuple(word[: k - 1])):
        x = lusztig_T(i, x, direction)
    return x


def cartan_check(alg: UqAlgebra, word: Sequence[int], k: int, direction="fwd") -> bool:
    """[E_{beta_k}, F_{beta_k}] == (K_beta - K_beta^{-1}) / (q_{i_k} - q_{i_k}^{-1})."""
    word = tuple(word)
    betas, _ = roots_from_word(alg.rs, word)
    e = root_vector(alg, word, k, "E", direction)
    f = root_vector(alg, word, k, "F", direction)
    target = alg.cartan_element(betas[k - 1], alg.d[word[k - 1] - 1])
    return equal(commutator(e, f), target)


# ---------------------------------------------------------------------------
# the theorem
# ---------------------------------------------------------------------------

def decomposes(target: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Is target a nonnegative integer combination of the (positive) gens?"""
    target = tuple(target)
    gens = [tuple(g) for g in gens if any(g)]
    memo: dict[tuple[tuple[int, ...], int], bool] = {}

    def rec(t: tuple[int, ...], start: int) -> bool:
        if not any(t):
            return True
        if any(x < 0 for x in t) or start == len(gens):
            return False
        key = (t, start)
        if key not in memo:
            g = gens[start]
            memo[key] = rec(tuple(a - b for a, b in zip(t, g)), start) or rec(t, start + 1)
        return memo[key]

    return rec(target, 0)


@dataclass
class PairResult:
    i: int
    j: int
    xi_i: Root
    xi_j: Root
    in_levi: bool
    support_ok: bool | None

    def to_dict(self) -> dict[str, Any]:
        return {"i": self.i, "j": self.j, "xi_i": list(self.xi_i), "xi_j": list(self.xi_j),
                "in_levi": self.in_levi, "support_ok": self.support_ok}


@dataclass
class TheoremReport:
    label: str
    word: tuple[int, ...]
    direction: str
    pairs: list[PairResult] = field(default_factory=list)

    @property
    def all_in_levi(self) -> bool:
        return all(p.in_levi for p in self.pairs)

    @property
    def failures(self) -> list[PairResult]:
        return [p for p in self.pairs if not p.in_levi]

    @property
    def support_ok(self) -> bool:
        return all(p.support_ok is not False for p in self.pairs)

    def result(self, i: int, j: int) -> PairResult:
        for p in self.pairs:
            if (p.i, p.j) == (i, j):
                return p
        raise KeyError((i, j))

    def symmetric(self) -> bool:
        """Membership of (i, j) agrees with (j, i) for every computed pair."""
        seen = {(p.i, p.j): p.in_levi for p in self.pairs}
        return all(seen[(j, i)] == v for (i, j), v in seen.items() if (j, i) in seen)

    def to_dict(self) -> dict[str, Any]:
        return {
            "parabolic": self.label,
            "word": list(self.word),
            "direction": self.direction,
            "pairs": len(self.pairs),
            "in_levi": sum(p.in_levi for p in self.pairs),
            "support_ok": self.support_ok,
            "results": [p.to_dict() for p in self.pairs],
        }


def support_consistent(x: Element, betas: Sequence[Root], i: int, j: int) -> bool:
    """Every canonical monomial of [E_{beta_i}, F_{beta_j}] (i > j) has F-weight in
    the cone of beta_k, k < j, and E-weight in the cone of beta_k, k > i."""
    before = betas[: j - 1]
    after = betas[i:]
    for fw, ew in canonical_weights(x):
        if not decomposes(fw, before) or not decomposes(ew, after):
            return False
    return True


def commutator_for(alg: UqAlgebra, word: Sequence[int], i: int, j: int, direction="fwd") -> Element:
    return commutator(root_vector(alg, word, i, "E", direction), root_vector(alg, word, j, "F", direction))


def verify_theorem(p, word: Sequence[int], direction="fwd", pairs: Iterable[tuple[int, int]] | None = None,
                   check_support: bool = True) -> TheoremReport:
    """Levi membership of [E_{xi_i}, F_{xi_j}] for every ordered pair of radical positions."""
    rs = p.root_system
    word = tuple(word)
    if len(word) != len(rs.positive_roots) or not is_reduced(rs, word):
        raise ValueError(f"{word} is not a reduced word for the longest element")
    alg = UqAlgebra.of(rs)
    betas, _ = roots_from_word(rs, word)
    rad = [k + 1 for k, b in enumerate(betas) if p.is_radical(b)]
    if pairs is None:
        pairs = [(i, j) for i in rad for j in rad]
    rep = TheoremReport(p.label, word, _direction(direction).value)
    for i, j in pairs:
        x = commutator_for(alg, word, i, j, direction)
        sup = support_consistent(x, betas, i, j) if (check_support and i > j) else None
        rep.pairs.append(PairResult(i, j, betas[i - 1], betas[j - 1], in_levi(x, p.S), sup))
    return rep


# ---------------------------------------------------------------------------
# relation checks
# ---------------------------------------------------------------------------

def serre_element(alg: UqAlgebra, i: int, j: int, kind: str = "E") -> Element:
    """sum_s (-1)^s X_i^{(1-a_ij-s)} X_j X_i^{(s)}, which vanishes in U_q(g)."""
    n = 1 - int(alg.rs.cartan[i - 1, j - 1])
    div, gen = (alg.E_div, alg.E) if kind == "E" else (alg.F_div, alg.F)
    out = alg.element()
    for s in range(n + 1):
        term = div(i, n - s) * gen(j) * div(i, s)
        out = out + (term if s % 2 == 0 else -term)
    return out


def serre_commutes(alg: UqAlgebra, i: int, j: int) -> bool:
    """The E-Serre element commutes with every F_k already before Serre reduction."""
    u = serre_element(alg, i, j, "E")
    return all(commutator(u, alg.F(k)).is_literally_zero() for k in range(1, alg.rank + 1))


def bootstrap(alg: UqAlgebra, direction="fwd") -> dict[str, bool]:
    """Checks that pin down the automorphism formulas; all must be True."""
    r = alg.rank
    gens = ([("E", j, alg.E(j)) for j in range(1, r + 1)] + [("F", j, alg.F(j)) for j in range(1, r + 1)]
            + [("K", j, alg.Ki(j)) for j in range(1, r + 1)])
    other = "inv" if _direction(direction) is Direction.FWD else "fwd"
    res = {"k_reflection": True, "weight_reflection": True, "inverse": True,
           "relations": True, "serre": True, "omega": True}
    for i in range(1, r + 1):
        for kind, j, g in gens:
            y = lusztig_T(i, g, direction)
            if kind == "K":
                res["k_reflection"] &= y.terms == {((), alg.rs.reflect(i, alg.unit(j)), ()): RatFunc.one}
            else:
                w = alg.unit(j) if kind == "E" else alg.unit(j, -1)
                target = alg.rs.reflect(i, w)
                res["weight_reflection"] &= all(
                    tuple(b - a for a, b in zip(fw, ew)) == target for fw, ew in canonical_weights(y))
            res["inverse"] &= equal(lusztig_T(i, y, other), g)
            res["omega"] &= equal(omega(y), lusztig_T(i, omega(g), direction))
        for j in range(1, r + 1):
            # E_j F_k - F_k E_j = delta (K_j - K_j^{-1}) / (q_j - q_j^{-1}) after T_i
            for k in range(1, r + 1):
                lhs = commutator(lusztig_T(i, alg.E(j), direction), lusztig_T(i, alg.F(k), direction))
                rhs = lusztig_T(i, alg.cartan_element(alg.unit(j), alg.d[j - 1]), direction) if j == k else alg.element()
                res["relations"] &= equal(lhs, rhs)
            if j != i and alg.rs.cartan[i - 1, j - 1] != 0:
                for a, b in ((i, j), (j, i)):
                    for kind in ("E", "F"):
                        res["serre"] &= is_zero(lusztig_T(i, serre_element(alg, a, b, kind), direction))
    return res
