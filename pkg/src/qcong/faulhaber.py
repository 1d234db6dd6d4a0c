"""Integer power-sum congruences and the open binomial-power conjecture.

Everything here is plain (arbitrary-precision) integer arithmetic:

faulhaber (claim id)
    (2m+2)! * sum_{h=0}^{n-1} h^(2m+1)  ==  0   (mod n^2)
    for all n >= 1, m >= 1; a classical consequence of the polynomial
    structure of odd power sums.

conjecture (claim id)
    ((2k+1)(2m+1)+1)! / ((2k+1)!)^(2m+1)
        * sum_{h=0}^{n-1} C(h, 2k+1)^(2m+1)  ==  0   (mod n^2)
    for m >= k >= 1, n >= 1.  This is open: a failing instance is a
    counterexample discovery, not a bug, and is reported with a full
    integer witness.  A passing sweep is evidence only, never proof.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .congruence import FAIL, PASS, Witness, make_report
from .errors import InternalError, InvalidParamsError


@dataclass(frozen=True)
class ConjectureInstance:
    """One conjecture instance: sum bound n, outer power index m, inner index k."""

    n: int
    m: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)
                and isinstance(self.k, int)):
            raise InvalidParamsError("n, m, k must be integers")
        if self.n < 1 or self.k < 1 or self.m < self.k:
            raise InvalidParamsError("need n >= 1 and m >= k >= 1")


def power_sum(n, e):
    """sum_{h=0}^{n-1} h^e with the 0^0 = 1 convention."""
    if n < 0 or e < 0:
        raise ValueError("need n >= 0 and e >= 0")
    return sum(h ** e for h in range(n))


def check_faulhaber_cong(n, m):
    """(2m+2)! * power_sum(n, 2m+1) == 0 (mod n^2) (claim id faulhaber)."""
    t0 = time.perf_counter()
    if n < 1 or m < 1:
        raise InvalidParamsError("need n >= 1 and m >= 1")
    value = math.factorial(2 * m + 2) * power_sum(n, 2 * m + 1)
    modulus = n * n
    params = {"n": n, "m": m}
    if value % modulus == 0:
        return make_report("faulhaber", params, PASS,
                           elapsed_ms=_ms(t0))
    return make_report("faulhaber", params, FAIL,
                       witness=Witness(str(value), "0", str(value % modulus)),
                       elapsed_ms=_ms(t0))


def conjecture_coefficient(m, k):
    """((2k+1)(2m+1)+1)! / ((2k+1)!)^(2m+1), an exact positive integer."""
    if k < 1 or m < k:
        raise InvalidParamsError("need m >= k >= 1")
    numer = math.factorial((2 * k + 1) * (2 * m + 1) + 1)
    denom = math.factorial(2 * k + 1) ** (2 * m + 1)
    coeff, rem = divmod(numer, denom)
    if rem:  # the quotient is (N+1) * a multinomial, so this cannot happen
        raise InternalError("conjecture coefficient not an integer for m=%d k=%d" % (m, k))
    return coeff


def check_conjecture(inst):
    """Divisibility by n^2 of the prefactored binomial power sum (claim id conjecture).

    The sum is sum_{h<n} C(h, 2k+1)^(2m+1).  When 2k+1 > n-1 every term
    vanishes and the instance passes trivially; such reports carry the
    vanishing-sum note so sweep output stays interpretable.
    """
    t0 = time.perf_counter()
    if not isinstance(inst, ConjectureInstance):
        inst = ConjectureInstance(*inst)
    coeff = conjecture_coefficient(inst.m, inst.k)
    power = 2 * inst.m + 1
    lower = 2 * inst.k + 1
    total = sum(math.comb(h, lower) ** power for h in range(inst.n))
    value = coeff * total
    modulus = inst.n * inst.n
    params = {"n": inst.n, "m": inst.m, "k": inst.k}
    note = "vanishing-sum" if total == 0 else None
    if value % modulus == 0:
        return make_report("conjecture", params, PASS, elapsed_ms=_ms(t0), note=note)
    return make_report("conjecture", params, FAIL,
                       witness=Witness(str(value), "0", str(value % modulus)),
                       elapsed_ms=_ms(t0))


def _ms(t0):
    return max(0, round((time.perf_counter() - t0) * 1000))
