"""Exact arithmetic in Z[q].

QPoly is a sparse integer polynomial in q. QFactorRatio tracks signed
monomial multiples of products/quotients of cyclotomic-style factors
(1 - q^k) symbolically, so quotients stay exact until they are proven to be
polynomials.
"""

from __future__ import annotations

import functools
from collections import Counter


class IntegralityError(ArithmeticError):
    """Raised when a symbolic quotient fails to be a polynomial over Z."""


class QPoly:
    """Sparse polynomial in q with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for k, c in coeffs.items() if isinstance(coeffs, dict) else coeffs:
                k, c = int(k), int(c)
                if k < 0:
                    raise ValueError("exponents must be nonnegative")
                if c:
                    data[k] = data.get(k, 0) + c
                    if not data[k]:
                        del data[k]
        object.__setattr__(self, "coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def q(cls, power=1):
        return cls({power: 1})

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def coefficient(self, k):
        return self.coeffs.get(k, 0)

    def constant_term(self):
        """Value at q = 0."""
        return self.coeffs.get(0, 0)

    def at_one(self):
        """Value at q = 1 (exact integer)."""
        return sum(self.coeffs.values())

    def coefficient_list(self):
        """Dense [c_0, c_1, ..., c_deg]; empty list for zero."""
        d = self.degree()
        return [self.coeffs.get(k, 0) for k in range(d + 1)] if d >= 0 else []

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __neg__(self):
        return QPoly({k: -c for k, c in self.coeffs.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        data = dict(self.coeffs)
        for k, c in other.coeffs.items():
            data[k] = data.get(k, 0) + c
            if not data[k]:
                del data[k]
        return QPoly(data)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({k: c * other for k, c in self.coeffs.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        data = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                data[k] = data.get(k, 0) + c1 * c2
        return QPoly(data)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = QPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divide_exact(self, divisor):
        """Exact quotient self / divisor in Z[q]; IntegralityError otherwise."""
        if isinstance(divisor, int):
            divisor = QPoly.const(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.coeffs)
        quot = {}
        dd = divisor.degree()
        dc = divisor.coeffs[dd]
        while rem:
            rd = max(rem)
            if rd < dd:
                raise IntegralityError("nonzero remainder in exact division")
            lead, r = divmod(rem[rd], dc)
            if r:
                raise IntegralityError("leading coefficient not divisible")
            shift = rd - dd
            quot[shift] = lead
            for k, c in divisor.coeffs.items():
                kk = k + shift
                rem[kk] = rem.get(kk, 0) - lead * c
                if not rem[kk]:
                    del rem[kk]
        return QPoly(quot)

    def __str__(self):
        """Canonical ascending rendering, e.g. '1 + 2q^2 - q^3'."""
        if not self.coeffs:
            return "0"
        pieces = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else "q^%d" % k
                body = var if mag == 1 else "%d%s" % (mag, var)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return "QPoly(%r)" % (dict(sorted(self.coeffs.items())),)


def one_minus_q(k):
    """1 - q^k (the k = 0 factor is identically zero)."""
    if k == 0:
        return QPoly.zero()
    return QPoly({0: 1, k: -1})


def q_int(m):
    """[m]_q = 1 + q + ... + q^{m-1}; zero for m <= 0."""
    if m <= 0:
        return QPoly.zero()
    return QPoly({k: 1 for k in range(m)})


@functools.cache
def q_binomial(n, r):
    """Gaussian binomial [n r]_q via the Pascal recursion.

    Zero unless n, r, n - r are all nonnegative.
    """
    if r < 0 or n < 0 or n - r < 0:
        return QPoly.zero()
    if r == 0 or r == n:
        return QPoly.one()
    return q_binomial(n - 1, r - 1) + QPoly.q(r) * q_binomial(n - 1, r)


@functools.cache
def q_pochhammer(m):
    """(q; q)_m = prod_{i=1}^m (1 - q^i)."""
    if m < 0:
        raise ValueError("q-Pochhammer index must be nonnegative")
    if m == 0:
        return QPoly.one()
    return q_pochhammer(m - 1) * one_minus_q(m)


def grade_shift(p, s):
    """Multiply by q^s (shift all grades up by s >= 0)."""
    if s < 0:
        raise ValueError("grade shift must be nonnegative")
    if not isinstance(p, QPoly):
        raise TypeError("grade_shift expects a QPoly")
    return QPoly({k + s: c for k, c in p.coeffs.items()})


class QFactorRatio:
    """Symbolic sign * q^power * prod(1-q^a) / prod(1-q^b).

    num and den are multisets of positive integers k standing for factors
    (1 - q^k). Products stay symbolic; to_qpoly performs the division and
    insists the result is an honest polynomial.
    """

    __slots__ = ("sign", "qpower", "num", "den")

    def __init__(self, num=(), den=(), sign=1, qpower=0):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if qpower < 0:
            raise ValueError("qpower must be nonnegative")
        num = self._multiset(num)
        den = self._multiset(den)
        if any(k < 1 for k in num) or any(k < 1 for k in den):
            raise ValueError("factor indices must be positive")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "qpower", int(qpower))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def _multiset(source):
        # a dict/Counter carries multiplicities; a plain iterable lists factors
        if isinstance(source, dict):
            out = Counter()
            for k, v in source.items():
                k, v = int(k), int(v)
                if v < 0:
                    raise ValueError("factor multiplicities must be nonnegative")
                if v:
                    out[k] = v
            return out
        return Counter(int(k) for k in source)

    def __setattr__(self, name, value):
        raise AttributeError("QFactorRatio is immutable")

    @classmethod
    def identity(cls):
        return cls()

    def __mul__(self, other):
        if not isinstance(other, QFactorRatio):
            return NotImplemented
        return QFactorRatio(
            self.num + other.num,
            self.den + other.den,
            self.sign * other.sign,
            self.qpower + other.qpower,
        )

    def __truediv__(self, other):
        if not isinstance(other, QFactorRatio):
            return NotImplemented
        if other.qpower:
            raise ValueError("cannot divide by a ratio carrying a q-power")
        return QFactorRatio(
            self.num + other.den,
            self.den + other.num,
            self.sign * other.sign,
            self.qpower,
        )

    def reduce(self):
        """Cancel common (1-q^k) factors; idempotent."""
        common = self.num & self.den
        return QFactorRatio(
            self.num - common, self.den - common, self.sign, self.qpower
        )

    def to_qpoly(self):
        """Evaluate as an element of Z[q]; IntegralityError if not polynomial."""
        r = self.reduce()
        out = QPoly({r.qpower: r.sign})
        for k, mult in sorted(r.num.items()):
            for _ in range(mult):
                out = out * one_minus_q(k)
        for k, mult in sorted(r.den.items()):
            for _ in range(mult):
                out = out.divide_exact(one_minus_q(k))
        return out

    def __eq__(self, other):
        if not isinstance(other, QFactorRatio):
            return NotImplemented
        a, b = self.reduce(), other.reduce()
        return (
            a.sign == b.sign
            and a.qpower == b.qpower
            and a.num == b.num
            and a.den == b.den
        )

    def __hash__(self):
        r = self.reduce()
        return hash(
            (r.sign, r.qpower, frozenset(r.num.items()), frozenset(r.den.items()))
        )

    def __repr__(self):
        return "QFactorRatio(num=%r, den=%r, sign=%d, qpower=%d)" % (
            sorted(self.num.elements()),
            sorted(self.den.elements()),
            self.sign,
            self.qpower,
        )
