"""Elements of U_q(g) in triangular form F-word . K_lambda . E-word.

Products are straightened with the EF and K relations only.  Serre
relations are not applied during multiplication; they are accounted for by
:mod:`.shuffle`, which maps every element to a canonical form in which two
elements agree exactly when they are equal in U_q(g).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from ..qarith import LaurentPoly, RatFunc, q_factorial
from ..roots import Root, RootSystem, build_root_system

Key = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


@lru_cache(maxsize=None)
def qpow(n: int) -> RatFunc:
    return RatFunc._raw(LaurentPoly.monomial(n), RatFunc.one.den)


class UqAlgebra:
    """U_q(g) for one root system; owns the straightening cache.

    K_i stands for K_{alpha_i}, so K_lambda E_j = q^{(lambda, alpha_j)} E_j K_lambda
    and q_i = q^{d_i}.
    """

    _instances: dict[str, "UqAlgebra"] = {}

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        self.form = [[int(x) for x in row] for row in rs.bilinear]
        self.d = rs.symmetrizers
        self._straight: dict[tuple[tuple[int, ...], tuple[int, ...]], dict[Key, RatFunc]] = {}
        self.zero_k = (0,) * self.rank

    @classmethod
    def of(cls, rs: RootSystem | str) -> "UqAlgebra":
        if isinstance(rs, str):
            rs = build_root_system(rs)
        name = str(rs.type)
        if name not in cls._instances:
            cls._instances[name] = cls(rs)
        return cls._instances[name]

    # -- lattice helpers -------------------------------------------------------
    def pair(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        f = self.form
        return sum(lam[a] * f[a][b] * mu[b] for a in range(self.rank) if lam[a]
                   for b in range(self.rank) if mu[b])

    def word_weight(self, w: Iterable[int]) -> Root:
        out = [0] * self.rank
        for i in w:
            out[i - 1] += 1
        return tuple(out)

    def unit(self, i: int, c: int = 1) -> Root:
        return tuple(c if k == i - 1 else 0 for k in range(self.rank))

    # -- generators --------------------------------------------------------------
    def element(self, terms: Mapping[Key, RatFunc] | None = None) -> "Element":
        return Element(self, terms or {})

    def scalar(self, c) -> "Element":
        c = RatFunc(c) if not isinstance(c, RatFunc) else c
        return Element(self, {((), self.zero_k, ()): c})

    def one(self) -> "Element":
        return self.scalar(1)

    def E(self, *word: int) -> "Element":
        return Element(self, {((), self.zero_k, tuple(word)): RatFunc.one})

    def F(self, *word: int) -> "Element":
        return Element(self, {(tuple(word), self.zero_k, ()): RatFunc.one})

    def K(self, lam: Sequence[int]) -> "Element":
        return Element(self, {((), tuple(int(x) for x in lam), ()): RatFunc.one})

    def Ki(self, i: int, power: int = 1) -> "Element":
        return self.K(self.unit(i, power))

    def E_div(self, i: int, n: int) -> "Element":
        """Divided power E_i^(n) = E_i^n / [n]_{q_i}!."""
        return Element(self, {((), self.zero_k, (i,) * n): RatFunc.one / q_factorial(n, self.d[i - 1])})

    def F_div(self, i: int, n: int) -> "Element":
        return Element(self, {((i,) * n, self.zero_k, ()): RatFunc.one / q_factorial(n, self.d[i - 1])})

    def cartan_element(self, lam: Sequence[int], d: int) -> "Element":
        """(K_lambda - K_lambda^{-1}) / (q^d - q^{-d})."""
        den = RatFunc(LaurentPoly({d: 1, -d: -1}))
        lam = tuple(lam)
        neg = tuple(-x for x in lam)
        return Element(self, {((), lam, ()): RatFunc.one / den, ((), neg, ()): -RatFunc.one / den})

    # -- straightening -----------------------------------------------------------
    def straighten(self, e: tuple[int, ...], f: tuple[int, ...]) -> dict[Key, RatFunc]:
        """E_e F_f as a sum of F-word K E-word monomials."""
        if not e or not f:
            return {(f, self.zero_k, e): RatFunc.one}
        key = (e, f)
        hit = self._straight.get(key)
        if hit is not None:
            return hit
        i = e[-1]
        head = e[:-1]
        out: dict[Key, RatFunc] = {}

        def acc(k: Key, c: RatFunc):
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)

        # E_head (F_f E_i)
        for (f2, k2, e2), c in self.straighten(head, f).items():
            acc((f2, k2, e2 + (i,)), c)
        # E_head F_{f minus p} (q^{-x} K_i - q^{x} K_i^{-1}) / (q_i - q_i^{-1})
        d = self.d[i - 1]
        inv = RatFunc.one / RatFunc(LaurentPoly({d: 1, -d: -1}))
        ai = self.unit(i)
        for p, letter in enumerate(f):
            if letter != i:
                continue
            x = self.pair(ai, self.word_weight(f[p + 1:]))
            rest = f[:p] + f[p + 1:]
            for (f2, k2, e2), c in self.straighten(head, rest).items():
                # move K_i^{+-1} left past E_{e2}: E_w K = q^{-(lambda, wt w)} K E_w
                y = self.pair(ai, self.word_weight(e2))
                kp = tuple(a + b for a, b in zip(k2, ai))
                km = tuple(a - b for a, b in zip(k2, ai))
                acc((f2, kp, e2), c * inv * qpow(-x - y))
                acc((f2, km, e2), -c * inv * qpow(x + y))
        self._straight[key] = out
        return out

    def mul_monomials(self, a: Key, b: Key) -> Iterator[tuple[Key, RatFunc]]:
        f1, k1, e1 = a
        f2, k2, e2 = b
        for (f, k, e), c in self.straighten(e1, f2).items():
            # K_{k1} F_f = q^{-(k1, wt f)} F_f K_{k1};  E_e K_{k2} = q^{-(k2, wt e)} K_{k2} E_e
            s = -self.pair(k1, self.word_weight(f)) - self.pair(k2, self.word_weight(e))
            kk = tuple(x + y + z for x, y, z in zip(k1, k, k2))
            yield (f1 + f, kk, e + e2), (c * qpow(s) if s else c)


class Element:
    """Immutable sum of triangular monomials with coefficients in Q(q)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: UqAlgebra, terms: Mapping[Key, RatFunc]):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if v}

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise ValueError("elements of different algebras")
            return other
        return self.alg.scalar(other)

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            out[k] = v if w is None else w + v
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) - self

    def scale(self, c) -> "Element":
        c = RatFunc(c) if not isinstance(c, RatFunc) else c
        return Element(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "Element":
        if not isinstance(other, Element):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Key, RatFunc] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                cab = ca * cb
                for k, c in self.alg.mul_monomials(ka, kb):
                    v = cab * c
                    w = out.get(k)
                    out[k] = v if w is None else w + v
        return Element(self.alg, out)

    def __rmul__(self, other) -> "Element":
        return self.scale(other)

    def __pow__(self, n: int) -> "Element":
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    # -- inspection -------------------------------------------------------------
    def is_literally_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[Key, RatFunc]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][2]), kv[0]))

    def literal_equal(self, other: "Element") -> bool:
        """Equality as free words; see :func:`.shuffle.equal` for equality in U_q(g)."""
        return (self - other).is_literally_zero()

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (f, k, e), c in self.sorted_terms():
            mono = []
            if f:
                mono.append("F" + ".".join(map(str, f)))
            if any(k):
                mono.append("K" + str(list(k)))
            if e:
                mono.append("E" + ".".join(map(str, e)))
            parts.append(f"({c})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)


def weight(x: Element) -> set[tuple[Root, Root]]:
    """(F-weight, E-weight) of every monomial; the degree is E-weight minus F-weight."""
    alg = x.alg
    return {(alg.word_weight(f), alg.word_weight(e)) for f, _, e in x.terms}


def total_weights(x: Element) -> set[Root]:
    return {tuple(b - a for a, b in zip(fw, ew)) for fw, ew in weight(x)}


def omega(x: Element) -> Element:
    """Anti-automorphism E_i <-> F_i, K -> K^{-1}, q -> 1/q.

    Omega(F_w K_lam E_u) = F_{rev u} K_{-lam} E_{rev w}: the image of the
    reversed product E_{rev w}... lands already in triangular order.
    """
    out = {}
    for (f, k, e), c in x.terms.items():
        out[(tuple(reversed(e)), tuple(-a for a in k), tuple(reversed(f)))] = c.invert_q()
    return Element(x.alg, out)


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x
