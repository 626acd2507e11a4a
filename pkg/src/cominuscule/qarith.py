"""Exact arithmetic in q: Laurent polynomials, their fraction field, q-integers.

Everything here is an immutable value.  ``q`` is a formal variable; no
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "AlgebraError",
    "Q",
    "laurent_ops",
    "ratfunc_ops",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "q_combinatorics",
]


class AlgebraError(ArithmeticError):
    """An invalid algebraic step, e.g. division by zero."""


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (index = degree, no trailing zeros)
# ---------------------------------------------------------------------------

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content(p: list[int]) -> int:
    return gcd(*p) if p else 0


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over the integers."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * c for c in a]
        for k, c in enumerate(b):
            a[k + shift] -= la * c
        _trim(a)
    return a


def _primitive(p: list[int]) -> list[int]:
    c = _content(p)
    if c in (0, 1):
        return p
    return [x // c for x in p]


def _pgcd(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[q] of two nonzero dense polynomials, positive leading coefficient."""
    if len(a) == 1 or len(b) == 1:
        return [gcd(_content(a), _content(b))]
    c = gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
        if len(b) == 1:
            return [c]
    if a[-1] < 0:
        a = [-x for x in a]
    return [c * x for x in a]


def _pexact_div(a: list[int], b: list[int]) -> list[int]:
    """a / b in Z[q]; b must divide a exactly."""
    if len(b) == 1:
        d = b[0]
        out = []
        for x in a:
            qt, rm = divmod(x, d)
            if rm:
                raise AlgebraError("inexact polynomial division")
            out.append(qt)
        return out
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - db)
    while a and len(a) - 1 >= db:
        qt, rm = divmod(a[-1], lb)
        if rm:
            raise AlgebraError("inexact polynomial division")
        shift = len(a) - 1 - db
        out[shift] = qt
        for k, c in enumerate(b):
            a[k + shift] -= qt * c
        _trim(a)
    if a:
        raise AlgebraError("inexact polynomial division")
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Finite sum of c_n q^n with integer c_n, stored without zero terms."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({e: c} if c else {})

    @classmethod
    def _from_dense(cls, p: list[int], shift: int = 0) -> "LaurentPoly":
        return cls._raw({k + shift: c for k, c in enumerate(p) if c})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def low(self) -> int:
        return min(self._terms)

    def high(self) -> int:
        return max(self._terms)

    def leading_coefficient(self) -> int:
        return self._terms[self.high()]

    def _dense(self) -> tuple[list[int], int]:
        lo, hi = self.low(), self.high()
        p = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            p[e - lo] = c
        return p, lo

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        t = dict(self._terms)
        for e, c in other._terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentPoly._raw(dict(sorted(t.items())))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly._raw({})
        t: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in sorted(t.items()) if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise AlgebraError("only monomials are invertible Laurent polynomials")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise AlgebraError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly.monomial(e * n, c ** -n)
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert_q(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        return LaurentPoly._raw({-e: c for e, c in sorted(self._terms.items(), reverse=True)})

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x ** e for e, c in self._terms.items()), Fraction(0))

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


Q = LaurentPoly.monomial(1)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

Scalar = Union[int, Fraction, LaurentPoly, "RatFunc"]


class RatFunc:
    """Element of Q(q) kept in canonical form num/den.

    Canonical form: num and den are coprime in Z[q, 1/q], den is an ordinary
    polynomial with nonzero constant term, and den has positive leading
    coefficient.  Two RatFuncs are equal iff their stored parts are equal.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Scalar = 0, den: Scalar = 1):
        n, d = _split(num)
        n2, d2 = _split(den)
        n, d = n * d2, d * n2
        if d.is_zero():
            raise AlgebraError("zero denominator")
        self.num, self.den = _normalize(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        if den.is_zero():
            raise AlgebraError("zero denominator")
        return cls._raw(*_normalize(num, den))

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == _ONE_L

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise AlgebraError(f"{self} is not a Laurent polynomial")
        return self.num

    def evaluate(self, x) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise AlgebraError("denominator vanishes at evaluation point")
        return self.num.evaluate(x) / d

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            if self.den == _ONE_L:
                return RatFunc._raw(self.num + o.num, _ONE_L)
            return RatFunc._make(self.num + o.num, self.den)
        return RatFunc._make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return _ZERO
        if self.den == _ONE_L and o.den == _ONE_L:
            return RatFunc._raw(self.num * o.num, _ONE_L)
        if o.num.is_monomial() and o.den == _ONE_L and abs(next(iter(o.num._terms.values()))) == 1:
            return RatFunc._raw(self.num * o.num, self.den)
        if self.num.is_monomial() and self.den == _ONE_L and abs(next(iter(self.num._terms.values()))) == 1:
            return RatFunc._raw(self.num * o.num, o.den)
        return RatFunc._make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise AlgebraError("division by zero")
        return RatFunc._make(self.den, self.num)

    def __truediv__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert_q(self) -> "RatFunc":
        """Substitute q -> 1/q."""
        return RatFunc._make(self.num.invert_q(), self.den.invert_q())

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.den == _ONE_L:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _split(x) -> tuple[LaurentPoly, LaurentPoly]:
    if isinstance(x, RatFunc):
        return x.num, x.den
    if isinstance(x, LaurentPoly):
        return x, _ONE_L
    if isinstance(x, int):
        return LaurentPoly.const(x), _ONE_L
    if isinstance(x, Fraction):
        return LaurentPoly.const(x.numerator), LaurentPoly.const(x.denominator)
    raise TypeError(f"cannot interpret {x!r} as a rational function of q")


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, LaurentPoly, Fraction)):
        n, d = _split(x)
        return RatFunc._make(n, d)
    return NotImplemented


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, _ONE_L
    pn, en = num._dense()
    pd, ed = den._dense()
    if len(pd) == 1:
        c = pd[0]
        g = gcd(_content(pn), c)
        if c < 0:
            g = -g
        if g != 1:
            pn = [x // g for x in pn]
        return LaurentPoly._from_dense(pn, en - ed), LaurentPoly.const(c // g)
    g = _pgcd(pn, pd)
    if pd[-1] < 0:
        g = [-x for x in g]
    if g != [1]:
        pn = _pexact_div(pn, g)
        pd = _pexact_div(pd, g)
    return LaurentPoly._from_dense(pn, en - ed), LaurentPoly._from_dense(pd)


_ONE_L = LaurentPoly.const(1)
_ZERO = RatFunc._raw(LaurentPoly.const(0), _ONE_L)
_ONE = RatFunc._raw(_ONE_L, _ONE_L)
RatFunc.zero = _ZERO
RatFunc.one = _ONE
RatFunc.q = RatFunc._raw(Q, _ONE_L)


# ---------------------------------------------------------------------------
# dispatchers and q-combinatorics
# ---------------------------------------------------------------------------

def laurent_ops(a: LaurentPoly, b: LaurentPoly | None, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "invert_q":
        return a.invert_q()
    raise ValueError(f"unknown Laurent operation {op!r}")


def ratfunc_ops(a: RatFunc, b: RatFunc, op: str):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown rational-function operation {op!r}")


_QINT_CACHE: dict[tuple[int, int], RatFunc] = {}


def q_integer(n: int, d: int = 1) -> RatFunc:
    """Balanced q-integer [n] at q^d: (q^{dn} - q^{-dn}) / (q^d - q^{-d})."""
    if n < 0:
        raise ValueError("q-integers are defined here for n >= 0 only")
    key = (n, d)
    if key not in _QINT_CACHE:
        terms = {d * (n - 1 - 2 * k): 1 for k in range(n)}
        _QINT_CACHE[key] = RatFunc._raw(LaurentPoly(terms), _ONE_L)
    return _QINT_CACHE[key]


def q_factorial(n: int, d: int = 1) -> RatFunc:
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    out = _ONE
    for m in range(2, n + 1):
        out = out * q_integer(m, d)
    return out


def q_binomial(n: int, k: int, d: int = 1) -> RatFunc:
    if n < 0:
        raise ValueError("q-binomial with negative n")
    if not 0 <= k <= n:
        raise ValueError("q-binomial needs 0 <= k <= n")
    out = q_factorial(n, d) / (q_factorial(k, d) * q_factorial(n - k, d))
    assert out.is_laurent(), "q-binomial failed to be a Laurent polynomial"
    return out


def q_combinatorics(n: int, d: int, kind: str, k: int | None = None) -> RatFunc:
    if kind == "integer":
        return q_integer(n, d)
    if kind == "factorial":
        return q_factorial(n, d)
    if kind == "binomial":
        if k is None:
            raise ValueError("binomial needs k")
        return q_binomial(n, k, d)
    raise ValueError(f"unknown kind {kind!r}")
