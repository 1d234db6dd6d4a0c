"""Dense univariate polynomials over Python's arbitrary-precision integers.

A polynomial in q is stored as a tuple of coefficients, entry i holding the
coefficient of q^i.  The representation is canonical: the zero polynomial is
the empty tuple, and otherwise the last entry is nonzero.  Values are
immutable after construction and therefore safe to share across threads and
to pickle into worker processes.

Multiplication is schoolbook convolution up to ``KARATSUBA_THRESHOLD``
coefficients and Karatsuba above it; both paths produce identical results
and the threshold only affects speed.

Exact rational scalars are ``BigRat``, an alias of ``fractions.Fraction``
(always reduced, denominator >= 1), used for polynomial evaluation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LeadingCoeffNotUnitError, NotDivisibleError

BigRat = Fraction

NEG_INFINITY = float("-inf")  # degree of the zero polynomial

# Coefficient count at or below which multiplication stays schoolbook.
# Build-level knob: correctness never depends on it (see the kernel tests,
# which rerun the multiplier at several thresholds).
KARATSUBA_THRESHOLD = 32


def _strip(coeffs):
    """Drop trailing zeros in place; return the same list."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _add_lists(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _strip(out)


def _sub_lists(a, b):
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i, v in enumerate(b):
        out[i] -= v
    return _strip(out)


def _mul_schoolbook(a, b):
    """Plain convolution; the inner loop runs as one slice comprehension."""
    if not a or not b:
        return []
    if len(b) > len(a):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    la = len(a)
    for i, bi in enumerate(b):
        if bi:
            out[i:i + la] = [x + bi * aj for x, aj in zip(out[i:i + la], a)]
    return out


def _acc_into(out, part, k):
    for i, v in enumerate(part):
        if v:
            out[k + i] += v


def _mul_lists(a, b, threshold=KARATSUBA_THRESHOLD):
    """Multiply coefficient lists, recursing with Karatsuba above the threshold."""
    if not a or not b:
        return []
    if min(len(a), len(b)) <= threshold:
        return _mul_schoolbook(a, b)
    m = max(len(a), len(b)) // 2
    a0, a1 = _strip(list(a[:m])), a[m:]
    b0, b1 = _strip(list(b[:m])), b[m:]
    z0 = _mul_lists(a0, b0, threshold)
    z2 = _mul_lists(a1, b1, threshold)
    z1 = _sub_lists(
        _sub_lists(_mul_lists(_add_lists(a0, a1), _add_lists(b0, b1), threshold), z0),
        z2,
    )
    out = [0] * (len(a) + len(b) - 1)
    _acc_into(out, z0, 0)
    _acc_into(out, z1, m)
    _acc_into(out, z2, 2 * m)
    return out


def _divrem_lists(a, b, exact):
    """Long division of coefficient lists over the integers.

    With ``exact=True`` the division insists on an integer quotient and zero
    remainder, raising NotDivisibleError (carrying the remainder it was left
    with) as soon as either fails.  Otherwise the divisor's leading
    coefficient must be a unit and (quotient, remainder) is returned with
    deg(remainder) < deg(divisor).
    """
    if not a:
        return [], []
    la, lb = len(a), len(b)
    blead = b[-1]
    if la < lb:
        if exact:
            raise NotDivisibleError("dividend degree below divisor degree",
                                    IntPoly._make(list(a)))
        return [], list(a)
    rem = list(a)
    quot = [0] * (la - lb + 1)
    body = b[:-1]
    lbody = lb - 1
    for i in range(la - lb, -1, -1):
        lead = rem[i + lbody]
        if lead:
            c, r = divmod(lead, blead)
            if r:
                if not exact:  # unreachable when blead is a unit
                    raise AssertionError("non-unit leading coefficient slipped through")
                raise NotDivisibleError(
                    "leading coefficient %d not divisible by %d" % (lead, blead),
                    IntPoly._make(_strip(rem)))
            quot[i] = c
            rem[i + lbody] = 0
            if c:
                rem[i:i + lbody] = [x - c * bj for x, bj in zip(rem[i:i + lbody], body)]
    _strip(rem)
    if exact and rem:
        raise NotDivisibleError("nonzero remainder", IntPoly._make(rem))
    return _strip(quot), rem


def _format_terms(terms):
    """Render (exponent, coefficient) pairs, ascending, as '1 + q + 2*q^2'."""
    if not terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else "q^%d" % e
            body = power if mag == 1 else "%d*%s" % (mag, power)
        if idx == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class IntPoly:
    """Immutable dense polynomial in q with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError("coefficients must be int, got %r" % type(c).__name__)
        self._coeffs = tuple(_strip(coeffs))

    @classmethod
    def _make(cls, coeffs):
        """Trusted constructor: takes a list of ints, canonicalizes, skips checks."""
        p = object.__new__(cls)
        p._coeffs = tuple(_strip(coeffs))
        return p

    @property
    def coeffs(self):
        """Coefficient tuple, constant term first; empty for zero."""
        return self._coeffs

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def is_zero(self):
        return not self._coeffs

    def coefficient(self, i):
        """Coefficient of q^i (zero beyond the stored range)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly._make([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly._make(_add_lists(self._coeffs, other._coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly._make(_sub_lists(self._coeffs, other._coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return IntPoly._make([-c for c in self._coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly._make(_mul_lists(self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by q^k, k >= 0."""
        if k < 0:
            raise ValueError("negative shift; use LaurentPoly for negative powers")
        if not self._coeffs or k == 0:
            return self
        return IntPoly._make([0] * k + list(self._coeffs))

    def evaluate(self, x):
        """Horner evaluation at an exact scalar (int or BigRat)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def divrem(self, other):
        """Quotient and remainder for a divisor with unit leading coefficient.

        Raises LeadingCoeffNotUnitError otherwise, ZeroDivisionError for a
        zero divisor.  Satisfies self == quot*other + rem with
        deg(rem) < deg(other).
        """
        other = self._coerce(other)
        if other is None:
            raise TypeError("divisor must be IntPoly or int")
        if not other._coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        if other._coeffs[-1] not in (1, -1):
            raise LeadingCoeffNotUnitError(
                "leading coefficient %d is not a unit" % other._coeffs[-1])
        quot, rem = _divrem_lists(self._coeffs, other._coeffs, exact=False)
        return IntPoly._make(quot), IntPoly._make(rem)

    def exact_div(self, other):
        """Exact quotient self/other over the integers.

        Raises NotDivisibleError (with the failing remainder attached) when
        other does not divide self, ZeroDivisionError for a zero divisor.
        """
        other = self._coerce(other)
        if other is None:
            raise TypeError("divisor must be IntPoly or int")
        if not other._coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        quot, _ = _divrem_lists(self._coeffs, other._coeffs, exact=True)
        return IntPoly._make(quot)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        return _format_terms([(i, c) for i, c in enumerate(self._coeffs) if c])

    def __repr__(self):
        return "IntPoly(%r)" % (list(self._coeffs),)


ZERO = IntPoly()
ONE = IntPoly((1,))
