"""Checkers for the Gaussian-binomial congruence family and its support identities.

All claims below use the notation of :mod:`qcong.qcomb` ([n], [n]!,
gauss(n,k), (x;q)_k) plus C(n,k) for ordinary binomials.  Everything is
exact: a check passes only when the stated divisibility or identity holds
on the nose in the ring of integer (or Laurent) polynomials.

The claims, by claim id:

thm1
    [a1+...+am+1]! / ([a1]!...[am]!) * sum_{h=0}^{n-1} q^h * prod_i gauss(h, a_i)
    is divisible by [n], for every n >= 1 and nonempty list of a_i >= 0.

q1
    The q = 1 shadow of thm1, checked purely with integers:
    (a1+...+am+1)!/(a1)!...(am)! * sum_{h<n} prod_i C(h, a_i) == 0 (mod n).

thm2
    For p prime, p > max(a,b):
    [a+b+1]!/([a]![b]!) * sum_{h<p} q^h gauss(h,a) gauss(h,b)
        == (-1)^(a-b) * q^(ab - C(a,2) - C(b,2)) * [p]   (mod [p]^2),
    the right side's exponent reduced into [0, p-1]; the reduction is
    legitimate because (q^p - 1)[p] = (q - 1)[p]^2.  The checker also runs
    the denominator-clearing variant (multiply both sides by q^|e| when the
    raw exponent e is negative) and insists the two verdicts agree.

sum_lemma
    sum_{h=0}^{n-1} q^h gauss(h,a) = gauss(n, a+1) * q^a.

chu_vandermonde
    sum_{k=0}^{n} gauss(a,k) gauss(b,n-k) q^(k(b-n+k)) = gauss(a+b, n),
    checked in Laurent form since the exponent may drop below zero.

p_minus_one
    For p prime and 0 <= j <= p-1:
    q^C(j+1,2) * gauss(p-1, j) == (-1)^j  (mod [p]).

residue_identity
    sum_{k=0}^{b} gauss(a+b+1, b-k) gauss(a+k, a) gauss(a+k, b)
        * (-1)^k q^(k(a-b+k) + a + k - C(a+k+1,2))
    = (-1)^b q^(ab - C(a,2) - C(b,2)),    a Laurent identity.

symmetric_identity
    sum_{k=a}^{a+b} gauss(k,a) gauss(k,b) gauss(a+b+1, k+1)
        * (-1)^k q^(C(k+1,2) + C(a+1,2) + C(b+1,2) - (k+1)(a+b))
    = (-1)^(a-b),    a Laurent identity, symmetric under a <-> b.

qpfaff
    The terminating balanced 3phi2 summation at exact rational points:
    sum_{k=0}^{n} (x;q)_k (y;q)_k (q^-n;q)_k q^k
                  / ((q;q)_k (z;q)_k (xy q^(1-n)/z;q)_k)
    = (z/x;q)_n (z/y;q)_n / ((z;q)_n (z/(xy);q)_n).
    Specializations that zero a denominator are reported skipped.

The quotient polynomial sum_quotient(n, a_list), the thm1 product divided
by [n], has a closed base case and a contiguous recurrence:

    sum_quotient(n, (a,))  = gauss(n-1, a) * q^a
    sum_quotient(n, (a_1..a_m)) =
        sum_{k=0}^{a_m} gauss(a_1+...+a_m+1, a_m-k)
                        * gauss(a_{m-1}+k, a_m) * gauss(a_{m-1}+k, a_{m-1})
                        * q^(k(a_{m-1}-a_m+k))
                        * sum_quotient(n, (a_1..a_{m-2}, a_{m-1}+k))

computed here by ``sum_quotient_recurrence`` with memoization keyed on the
exact ordered tuple (the recurrence is only stated for ordered lists, so no
sorting is ever applied to memo keys).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .congruence import (
    FAIL,
    PASS,
    SKIPPED,
    Witness,
    congruence_witness,
    divides,
    identity_witness,
    is_prime,
    make_report,
    normalize_exponent_mod_p,
    residue_equal_mod,
)
from .errors import (
    InternalError,
    InvalidParamsError,
    NotDivisibleError,
    SingularSpecialization,
)
from .poly import ONE, ZERO, IntPoly
from .qcomb import LaurentPoly, q_binomial, q_factorial, q_int, q_pochhammer_eval

VANISHING_SUM = "vanishing-sum"


@dataclass(frozen=True)
class ThmParams:
    """Validated parameter bundle: modulus index n, exponent list, optional prime p."""

    n: int
    a_list: tuple
    p: int | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParamsError("n must be an integer >= 1, got %r" % (self.n,))
        if not self.a_list:
            raise InvalidParamsError("a_list must be nonempty")
        for a in self.a_list:
            if not isinstance(a, int) or a < 0:
                raise InvalidParamsError("a_list entries must be integers >= 0")
        if self.p is not None:
            if not is_prime(self.p):
                raise InvalidParamsError("p must be prime, got %r" % (self.p,))
            if self.p <= max(self.a_list):
                raise InvalidParamsError("p must exceed every a_i")


def _ms(t0):
    return max(0, round((time.perf_counter() - t0) * 1000))


def _sign(e):
    return 1 if e % 2 == 0 else -1


def _a_params(n_name, n, a_list):
    params = {n_name: n}
    for i, a in enumerate(a_list):
        params["a%d" % (i + 1)] = a
    return params


# --- the weighted sum and its prefactor ------------------------------------------

def multinom_factor(a_list):
    """[a1+...+am+1]! / ([a1]! ... [am]!), an exact polynomial quotient."""
    params = ThmParams(1, tuple(a_list))
    return _multinom_factor_cached(params.a_list)


@lru_cache(maxsize=4096)
def _multinom_factor_cached(a_tuple):
    out = q_factorial(sum(a_tuple) + 1)
    for a in sorted(a_tuple, reverse=True):  # biggest divisor first, cheapest order
        try:
            out = out.exact_div(q_factorial(a))
        except NotDivisibleError as exc:
            raise InternalError("factorial quotient not exact for %r" % (a_tuple,)) from exc
    return out


# Bounded memo of prod_i gauss(h, a_i) keyed by (h, sorted a-multiset); the
# product is permutation-invariant, so the sorted key is safe.
_PRODUCT_CACHE = {}
_PRODUCT_CACHE_MAX = 1 << 15


def _binomial_product(h, a_sorted, binom):
    # built tail-recursively off the (h, prefix) entry so distinct a-tuples
    # sharing a sorted prefix pay for each extension only once
    key = (h, a_sorted)
    hit = _PRODUCT_CACHE.get(key)
    if hit is not None:
        return hit
    if not a_sorted:
        out = ONE
    else:
        factor = binom(h, a_sorted[-1])
        if factor.is_zero:
            out = ZERO
        else:
            prefix = _binomial_product(h, a_sorted[:-1], binom)
            out = ZERO if prefix.is_zero else prefix * factor
    if len(_PRODUCT_CACHE) >= _PRODUCT_CACHE_MAX:
        _PRODUCT_CACHE.pop(next(iter(_PRODUCT_CACHE)))
    _PRODUCT_CACHE[key] = out
    return out


def weighted_sum(n, a_list, cache=None):
    """sum_{h=0}^{n-1} q^h * prod_i gauss(h, a_i).

    Terms with h below max(a_i) vanish through the out-of-range binomial
    convention, so the loop starts there.
    """
    params = ThmParams(n, tuple(a_list))
    binom = cache.binomial if cache is not None else q_binomial
    a_sorted = tuple(sorted(params.a_list))
    total = []
    for h in range(a_sorted[-1], n):
        part = _binomial_product(h, a_sorted, binom)
        if part.is_zero:
            continue
        coeffs = part.coeffs
        end = h + len(coeffs)
        if len(total) < end:
            total.extend([0] * (end - len(total)))
        total[h:end] = [x + c for x, c in zip(total[h:end], coeffs)]
    return IntPoly._make(total)


def check_thm1(n, a_list, cache=None):
    """Divisibility of the prefactored weighted sum by [n] (claim id thm1)."""
    t0 = time.perf_counter()
    w = weighted_sum(n, a_list, cache=cache)
    product = multinom_factor(a_list) * w
    modulus = q_int(n)
    params = _a_params("n", n, a_list)
    note = VANISHING_SUM if w.is_zero else None
    if divides(modulus, product):
        return make_report("thm1", params, PASS, elapsed_ms=_ms(t0), note=note)
    return make_report("thm1", params, FAIL,
                       witness=congruence_witness(product, ZERO, modulus),
                       elapsed_ms=_ms(t0))


def q1_check(n, a_list):
    """The q = 1 congruence of thm1, in pure integer arithmetic (claim id q1)."""
    t0 = time.perf_counter()
    params_t = ThmParams(n, tuple(a_list))
    s = sum(params_t.a_list) + 1
    numer = math.factorial(s)
    denom = 1
    for a in params_t.a_list:
        denom *= math.factorial(a)
    factor, rem = divmod(numer, denom)
    if rem:
        raise InternalError("integer multinomial quotient not exact")
    total = 0
    for h in range(n):
        term = 1
        for a in params_t.a_list:
            term *= math.comb(h, a)
            if term == 0:
                break
        total += term
    value = factor * total
    params = _a_params("n", n, a_list)
    note = VANISHING_SUM if total == 0 else None
    if value % n == 0:
        return make_report("q1", params, PASS, elapsed_ms=_ms(t0), note=note)
    return make_report("q1", params, FAIL,
                       witness=Witness(str(value), "0", str(value % n)),
                       elapsed_ms=_ms(t0))


# --- the quotient polynomial: two independent routes -------------------------------

def sum_quotient_direct(n, a_list, cache=None):
    """multinom_factor * weighted_sum divided exactly by [n].

    A NotDivisibleError here is a genuine counterexample to thm1 and is
    allowed to propagate.
    """
    product = multinom_factor(a_list) * weighted_sum(n, a_list, cache=cache)
    return product.exact_div(q_int(n))


def sum_quotient_recurrence(n, a_list, cache=None):
    """The same quotient by the closed base case plus contiguous recurrence.

    Memoized on the exact ordered tuple of remaining exponents; the
    recurrence consumes the list from the right.
    """
    params = ThmParams(n, tuple(a_list))
    binom = cache.binomial if cache is not None else q_binomial
    memo = {}

    def rec(a_tuple):
        hit = memo.get(a_tuple)
        if hit is not None:
            return hit
        if len(a_tuple) == 1:
            a = a_tuple[0]
            out = binom(n - 1, a).shift(a)
        else:
            head = a_tuple[:-2]
            prev, last = a_tuple[-2], a_tuple[-1]
            total = sum(a_tuple) + 1
            out = ZERO
            for k in range(last + 1):
                c1 = binom(total, last - k)
                c2 = binom(prev + k, last)
                c3 = binom(prev + k, prev)
                if c1.is_zero or c2.is_zero or c3.is_zero:
                    continue
                e = k * (prev - last + k)
                if e < 0:  # impossible when c2 is nonzero
                    raise InternalError("negative shift in nonvanishing branch")
                out = out + (c1 * c2 * c3).shift(e) * rec(head + (prev + k,))
        memo[a_tuple] = out
        return out

    return rec(params.a_list)


# --- support identities -------------------------------------------------------------

def check_sum_lemma(n, a):
    """sum_{h<n} q^h gauss(h,a) = gauss(n, a+1) q^a (claim id sum_lemma)."""
    t0 = time.perf_counter()
    if n < 1 or a < 0:
        raise InvalidParamsError("need n >= 1 and a >= 0")
    lhs = ZERO
    for h in range(n):
        lhs = lhs + q_binomial(h, a).shift(h)
    rhs = q_binomial(n, a + 1).shift(a)
    params = {"n": n, "a": a}
    if lhs == rhs:
        return make_report("sum_lemma", params, PASS, elapsed_ms=_ms(t0))
    return make_report("sum_lemma", params, FAIL,
                       witness=identity_witness(lhs, rhs), elapsed_ms=_ms(t0))


def check_chu_vandermonde(a, b, n):
    """The q-Chu-Vandermonde convolution, in Laurent form (claim id chu_vandermonde)."""
    t0 = time.perf_counter()
    if a < 0 or b < 0 or n < 0:
        raise InvalidParamsError("need a, b, n >= 0")
    lhs = LaurentPoly()
    for k in range(n + 1):
        coeff = q_binomial(a, k) * q_binomial(b, n - k)
        if coeff.is_zero:
            continue
        lhs = lhs + LaurentPoly(coeff, k * (b - n + k))
    rhs = LaurentPoly.from_poly(q_binomial(a + b, n))
    params = {"a": a, "b": b, "n": n}
    if lhs == rhs:
        return make_report("chu_vandermonde", params, PASS, elapsed_ms=_ms(t0))
    return make_report("chu_vandermonde", params, FAIL,
                       witness=identity_witness(lhs, rhs), elapsed_ms=_ms(t0))


def check_p_minus_one_lemma(p, j):
    """q^C(j+1,2) gauss(p-1, j) == (-1)^j (mod [p]) (claim id p_minus_one)."""
    t0 = time.perf_counter()
    if not is_prime(p):
        raise InvalidParamsError("p must be prime, got %r" % (p,))
    if not 0 <= j <= p - 1:
        raise InvalidParamsError("need 0 <= j <= p-1")
    modulus = q_int(p)
    lhs = q_binomial(p - 1, j).shift(math.comb(j + 1, 2))
    rhs = _sign(j) * ONE
    params = {"p": p, "j": j}
    if residue_equal_mod(lhs, rhs, modulus):
        return make_report("p_minus_one", params, PASS, elapsed_ms=_ms(t0))
    return make_report("p_minus_one", params, FAIL,
                       witness=congruence_witness(lhs, rhs, modulus), elapsed_ms=_ms(t0))


def check_residue_identity(a, b):
    """The alternating triple-product sum equal to (-1)^b q^(ab - C(a,2) - C(b,2))."""
    t0 = time.perf_counter()
    if a < 0 or b < 0:
        raise InvalidParamsError("need a, b >= 0")
    lhs = LaurentPoly()
    for k in range(b + 1):
        coeff = (q_binomial(a + b + 1, b - k) * q_binomial(a + k, a)
                 * q_binomial(a + k, b))
        if coeff.is_zero:
            continue
        e = k * (a - b + k) + a + k - math.comb(a + k + 1, 2)
        lhs = lhs + LaurentPoly(_sign(k) * coeff, e)
    rhs = LaurentPoly(_sign(b) * ONE,
                      a * b - math.comb(a, 2) - math.comb(b, 2))
    params = {"a": a, "b": b}
    if lhs == rhs:
        return make_report("residue_identity", params, PASS, elapsed_ms=_ms(t0))
    return make_report("residue_identity", params, FAIL,
                       witness=identity_witness(lhs, rhs), elapsed_ms=_ms(t0))


def check_symmetric_identity(a, b):
    """The a<->b symmetric alternating sum equal to (-1)^(a-b)."""
    t0 = time.perf_counter()
    if a < 0 or b < 0:
        raise InvalidParamsError("need a, b >= 0")
    lhs = LaurentPoly()
    base = math.comb(a + 1, 2) + math.comb(b + 1, 2)
    for k in range(a, a + b + 1):
        coeff = (q_binomial(k, a) * q_binomial(k, b)
                 * q_binomial(a + b + 1, k + 1))
        if coeff.is_zero:
            continue
        e = math.comb(k + 1, 2) + base - (k + 1) * (a + b)
        lhs = lhs + LaurentPoly(_sign(k) * coeff, e)
    rhs = LaurentPoly(_sign(a - b) * ONE, 0)
    params = {"a": a, "b": b}
    if lhs == rhs:
        return make_report("symmetric_identity", params, PASS, elapsed_ms=_ms(t0))
    return make_report("symmetric_identity", params, FAIL,
                       witness=identity_witness(lhs, rhs), elapsed_ms=_ms(t0))


# --- the prime-squared refinement ----------------------------------------------------

def check_thm2(p, a, b, cache=None):
    """The mod [p]^2 refinement for pairs (claim id thm2).

    Verifies the congruence with the right-hand exponent normalized into
    [0, p-1] and, independently, with denominators cleared by q^|e|; the two
    routes must agree (anything else is an InternalError).
    """
    t0 = time.perf_counter()
    ThmParams(p, (a, b), p=p)  # validates primality and p > max(a, b)
    mod_p = q_int(p)
    mod_p2 = mod_p * mod_p
    lhs = multinom_factor((a, b)) * weighted_sum(p, (a, b), cache=cache)
    sign = _sign(a - b)
    e = a * b - math.comb(a, 2) - math.comb(b, 2)
    rhs_norm = (sign * ONE).shift(normalize_exponent_mod_p(e, p)) * mod_p
    ok_norm = residue_equal_mod(lhs, rhs_norm, mod_p2)
    if e >= 0:
        ok_clear = residue_equal_mod(lhs, (sign * ONE).shift(e) * mod_p, mod_p2)
    else:
        ok_clear = residue_equal_mod(lhs.shift(-e), sign * mod_p, mod_p2)
    if ok_norm != ok_clear:
        raise InternalError(
            "normalized and cleared checks disagree at p=%d a=%d b=%d" % (p, a, b))
    params = {"p": p, "a": a, "b": b}
    if ok_norm:
        return make_report("thm2", params, PASS, elapsed_ms=_ms(t0))
    return make_report("thm2", params, FAIL,
                       witness=congruence_witness(lhs, rhs_norm, mod_p2),
                       elapsed_ms=_ms(t0))


# --- the balanced 3phi2 summation at rational points ---------------------------------

def check_pfaff_saalschutz(x, y, z, q, n):
    """Terminating balanced summation at exact rationals (claim id qpfaff)."""
    t0 = time.perf_counter()
    if not isinstance(n, int) or n < 0:
        raise InvalidParamsError("n must be an integer >= 0")
    x, y, z, q = Fraction(x), Fraction(y), Fraction(z), Fraction(q)
    params = {
        "x_num": x.numerator, "x_den": x.denominator,
        "y_num": y.numerator, "y_den": y.denominator,
        "z_num": z.numerator, "z_den": z.denominator,
        "q_num": q.numerator, "q_den": q.denominator,
        "n": n,
    }
    try:
        lhs, rhs = _pfaff_sides(x, y, z, q, n)
    except SingularSpecialization as exc:
        return make_report("qpfaff", params, SKIPPED,
                           elapsed_ms=_ms(t0), note=str(exc))
    if lhs == rhs:
        return make_report("qpfaff", params, PASS, elapsed_ms=_ms(t0))
    return make_report("qpfaff", params, FAIL,
                       witness=Witness(str(lhs), str(rhs), str(lhs - rhs)),
                       elapsed_ms=_ms(t0))


def _pfaff_sides(x, y, z, q, n):
    if q in (0, 1, -1):
        raise SingularSpecialization("q in {0, 1, -1}")
    if x == 0 or y == 0 or z == 0:
        raise SingularSpecialization("x, y, z must be nonzero")
    w = x * y * q ** (1 - n) / z
    # A zero factor persists in every later Pochhammer, so vanishing of any
    # (t;q)_k with k <= n is equivalent to vanishing of (t;q)_n.
    if q_pochhammer_eval(z, q, n) == 0:
        raise SingularSpecialization("(z;q)_n vanishes")
    if q_pochhammer_eval(w, q, n) == 0:
        raise SingularSpecialization("(xy q^(1-n)/z;q)_n vanishes")
    if q_pochhammer_eval(z / (x * y), q, n) == 0:
        raise SingularSpecialization("(z/(xy);q)_n vanishes")
    if q_pochhammer_eval(q, q, n) == 0:  # unreachable for rational q outside {0,+-1}
        raise SingularSpecialization("(q;q)_n vanishes")
    lhs = Fraction(0)
    for k in range(n + 1):
        numer = (q_pochhammer_eval(x, q, k) * q_pochhammer_eval(y, q, k)
                 * q_pochhammer_eval(q ** -n, q, k) * q ** k)
        denom = (q_pochhammer_eval(q, q, k) * q_pochhammer_eval(z, q, k)
                 * q_pochhammer_eval(w, q, k))
        lhs += numer / denom
    rhs = (q_pochhammer_eval(z / x, q, n) * q_pochhammer_eval(z / y, q, n)
           / (q_pochhammer_eval(z, q, n) * q_pochhammer_eval(z / (x * y), q, n)))
    return lhs, rhs
