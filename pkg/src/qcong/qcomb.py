"""q-combinatorial objects built on the integer polynomial kernel.

Notation used throughout the package:

    [n]        = 1 + q + ... + q^(n-1)          (q-integer; [0] = 0)
    [n]!       = [n][n-1]...[1]                 ([0]! = 1)
    gauss(n,k) = Gaussian binomial coefficient, the q-analogue of C(n,k),
                 zero whenever k < 0, k > n, or n < 0
    (x;q)_k    = (1-x)(1-xq)...(1-xq^(k-1))     (q-Pochhammer; empty = 1)

``q_binomial`` computes gauss(n,k) by the product formula

    prod_{i=0}^{k-1} (1 - q^(n-i))  /  prod_{i=1}^{k} (1 - q^i)

with exact polynomial division.  ``q_binomial_oracle`` computes the same
value by a structurally unrelated route (the Pascal-style recurrence
gauss(n,k) = gauss(n-1,k-1) + q^k * gauss(n-1,k)) and exists purely as a
cross-check; the two must agree everywhere.

``LaurentPoly`` extends the kernel with negative powers of q for identities
whose natural exponents dip below zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InternalError, NotDivisibleError
from .poly import ONE, ZERO, IntPoly, _format_terms


def q_int(n):
    """[n] = 1 + q + ... + q^(n-1); requires n >= 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0, got %d" % n)
    return IntPoly._make([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n):
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0, got %d" % n)
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


def q_binomial(n, k):
    """Gaussian binomial via the product formula; zero out of range."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    num = ONE
    den = ONE
    for i in range(k):
        num = num * _one_minus_q_pow(n - i)
        den = den * _one_minus_q_pow(i + 1)
    try:
        return num.exact_div(den)
    except NotDivisibleError as exc:  # mathematically impossible
        raise InternalError("Gaussian binomial product not divisible "
                            "for n=%d k=%d" % (n, k)) from exc


def _one_minus_q_pow(j):
    return IntPoly._make([1] + [0] * (j - 1) + [-1])


def q_binomial_oracle(n, k):
    """Gaussian binomial via the Pascal-style recurrence; cross-check only.

    Shares no code with ``q_binomial``: the value is assembled bottom-up from
    gauss(i,j) = gauss(i-1,j-1) + q^j * gauss(i-1,j) with gauss(0,0) = 1.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    row = [ONE] + [ZERO] * k  # row[j] = gauss(i, j) as i advances
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = row[j - 1] + row[j].shift(j)
    return row[k]


def q_pochhammer_eval(x, q, k):
    """(x;q)_k evaluated at exact rationals: prod_{i<k} (1 - x*q^i)."""
    if k < 0:
        raise ValueError("q_pochhammer_eval needs k >= 0, got %d" % k)
    x = Fraction(x)
    q = Fraction(q)
    out = Fraction(1)
    for i in range(k):
        out *= 1 - x * q ** i
    return out


class QBinomialCache:
    """Bounded memo for Gaussian binomials keyed by (n, k).

    Eviction is insertion-ordered (oldest entry first).  Cached values are
    immutable, so a hit is indistinguishable from a fresh computation.
    """

    __slots__ = ("max_entries", "_table")

    def __init__(self, max_entries=4096):
        if max_entries < 1:
            raise ValueError("max_entries must be positive")
        self.max_entries = max_entries
        self._table = {}

    def binomial(self, n, k):
        key = (n, k)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        value = q_binomial(n, k)
        if len(self._table) >= self.max_entries:
            self._table.pop(next(iter(self._table)))
        self._table[key] = value
        return value

    def __len__(self):
        return len(self._table)

    def clear(self):
        self._table.clear()


class LaurentPoly:
    """Polynomial in q and q^-1: q^offset times an IntPoly body.

    Canonical form: the zero value has offset 0 and zero body; otherwise the
    body has a nonzero constant term (the offset is as large as possible).
    """

    __slots__ = ("_offset", "_body")

    def __init__(self, body=ZERO, offset=0):
        if isinstance(body, int):
            body = IntPoly._make([body])
        if not isinstance(body, IntPoly):
            raise TypeError("body must be IntPoly or int")
        if body.is_zero:
            offset = 0
        else:
            coeffs = body.coeffs
            lead_zeros = 0
            while coeffs[lead_zeros] == 0:
                lead_zeros += 1
            if lead_zeros:
                body = IntPoly._make(list(coeffs[lead_zeros:]))
                offset += lead_zeros
        self._offset = offset
        self._body = body

    @classmethod
    def from_poly(cls, p):
        return cls(p, 0)

    @classmethod
    def q_power(cls, e):
        """q^e for any integer e."""
        return cls(ONE, e)

    @property
    def offset(self):
        return self._offset

    @property
    def body(self):
        return self._body

    @property
    def is_zero(self):
        return self._body.is_zero

    def as_poly(self):
        """Convert back to IntPoly; fails if a negative power survives."""
        if self._body.is_zero:
            return ZERO
        if self._offset < 0:
            raise ValueError("value has negative powers of q")
        return self._body.shift(self._offset)

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (IntPoly, int)):
            return LaurentPoly(other if isinstance(other, IntPoly)
                               else IntPoly._make([other]))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        base = min(self._offset, other._offset)
        a = self._body.shift(self._offset - base)
        b = other._body.shift(other._offset - base)
        return LaurentPoly(a + b, base)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self._body, self._offset)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(self._body * other._body, self._offset + other._offset)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._offset == other._offset and self._body == other._body

    def __hash__(self):
        return hash((self._offset, self._body))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        return _format_terms([(i + self._offset, c)
                              for i, c in enumerate(self._body.coeffs) if c])

    def __repr__(self):
        return "LaurentPoly(%r, offset=%d)" % (list(self._body.coeffs), self._offset)
