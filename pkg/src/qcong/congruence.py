"""Exact congruence predicates over the polynomial ring, plus check reports.

A congruence a == b (mod m) here always means that m divides a - b exactly
in the ring of integer polynomials; nothing is ever tested numerically.

``CongruenceReport`` is the single result record every checker produces.
Its JSON form has exactly the fields claim_id, params, status, witness,
elapsed_ms; the optional ``note`` (e.g. the vanishing-sum marker on
trivially-true instances) only appears in the human-readable text rendering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LeadingCoeffNotUnitError, NotDivisibleError
from .poly import IntPoly

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
_STATUSES = (PASS, FAIL, SKIPPED)


def divides(d, a):
    """True iff d divides a exactly; d must be nonzero."""
    if d.is_zero:
        raise ZeroDivisionError("zero divisor")
    if a.is_zero:
        return True
    try:
        a.exact_div(d)
        return True
    except NotDivisibleError:
        return False


def rem_mod(a, m):
    """Euclidean remainder of a modulo m (m unit-leading)."""
    _, rem = a.divrem(m)
    return rem


def residue_equal_mod(a, b, m):
    """True iff a == b (mod m), i.e. m divides a - b; m unit-leading."""
    if m.is_zero:
        raise ZeroDivisionError("zero modulus")
    if m.coeffs[-1] not in (1, -1):
        raise LeadingCoeffNotUnitError("modulus must have unit leading coefficient")
    return divides(m, a - b)


def normalize_exponent_mod_p(e, p):
    """Reduce an exponent of q into [0, p-1]; any integer e, p >= 1."""
    if p < 1:
        raise ValueError("modulus exponent period must be >= 1")
    return e % p


def is_prime(n):
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Witness:
    """Renderings of the two sides of a failed claim and their difference."""

    lhs: str
    rhs: str
    difference: str


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of one checked claim instance.

    ``params`` is an ordered tuple of (name, integer value) pairs so reports
    stay immutable, hashable, and totally ordered by (claim_id, params).
    Status ``fail`` always comes with a witness whose difference is nonzero.
    """

    claim_id: str
    params: tuple
    status: str
    witness: Witness | None = None
    elapsed_ms: int = 0
    note: str | None = None

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError("bad status %r" % (self.status,))
        if self.status == FAIL:
            if self.witness is None:
                raise ValueError("fail report needs a witness")
            if self.witness.difference == "0":
                raise ValueError("fail witness must have a nonzero difference")

    @property
    def sort_key(self):
        return (self.claim_id, self.params)

    def params_dict(self):
        return dict(self.params)

    def to_json_obj(self, stable=False):
        """Plain dict in the exact report schema (note intentionally absent)."""
        return {
            "claim_id": self.claim_id,
            "params": dict(self.params),
            "status": self.status,
            "witness": None if self.witness is None else {
                "lhs": self.witness.lhs,
                "rhs": self.witness.rhs,
                "difference": self.witness.difference,
            },
            "elapsed_ms": 0 if stable else self.elapsed_ms,
        }


def make_report(claim_id, params, status, witness=None, elapsed_ms=0, note=None):
    """Build a report from a plain mapping of parameter names to integers."""
    items = []
    for name, value in params.items():
        if not isinstance(value, int):
            raise TypeError("param %r must be int, got %r" % (name, value))
        items.append((name, value))
    return CongruenceReport(claim_id, tuple(items), status,
                            witness=witness, elapsed_ms=elapsed_ms, note=note)


def congruence_witness(lhs, rhs, modulus):
    """Witness for a failed congruence: both sides plus the residue of lhs-rhs."""
    return Witness(str(lhs), str(rhs), str(rem_mod(lhs - rhs, modulus)))


def identity_witness(lhs, rhs):
    """Witness for a failed exact identity (polynomial or Laurent)."""
    return Witness(str(lhs), str(rhs), str(lhs - rhs))
