"""Congruence engine tests, including the exponent-period identity for [p]."""

import json

import pytest

from qcong.congruence import (
    CongruenceReport,
    Witness,
    divides,
    is_prime,
    make_report,
    normalize_exponent_mod_p,
    rem_mod,
    residue_equal_mod,
)
from qcong.errors import LeadingCoeffNotUnitError
from qcong.poly import ONE, ZERO, IntPoly
from qcong.qcomb import q_int

PRIMES_TO_13 = (2, 3, 5, 7, 11, 13)


def q_power(e):
    return ONE.shift(e)


def test_divides_basic():
    assert divides(q_int(2), q_int(4))
    assert not divides(q_int(3), q_int(4))
    assert divides(ONE, q_int(7))
    assert divides(q_int(5), ZERO)
    with pytest.raises(ZeroDivisionError):
        divides(ZERO, q_int(2))


def test_q_integer_divisibility_family():
    # [n] divides [kn] whenever n, k >= 1
    for n in range(1, 61):
        for k in range(1, 61):
            if n * k > 60:
                break
            assert divides(q_int(n), q_int(n * k)), (n, k)


def test_rem_mod_examples():
    # q^3 mod [3]: q^3 - 1 = (q-1)(1+q+q^2), so q^3 == 1
    assert rem_mod(q_power(3), q_int(3)) == ONE
    assert rem_mod(q_int(3), q_int(3)) == ZERO


def test_rem_mod_matches_divrem_contract():
    a = IntPoly([3, 1, 4, 1, 5, 9, 2, 6])
    m = q_int(4)
    r = rem_mod(a, m)
    assert r.degree < m.degree
    assert divides(m, a - r)


def test_residue_equal_mod():
    m = q_int(5)
    assert residue_equal_mod(q_power(5), ONE, m)
    assert not residue_equal_mod(q_power(5), q_power(1), m)
    assert residue_equal_mod(q_power(7), q_power(2), m)
    with pytest.raises(LeadingCoeffNotUnitError):
        residue_equal_mod(ONE, ONE, IntPoly([1, 2]))
    with pytest.raises(ZeroDivisionError):
        residue_equal_mod(ONE, ONE, ZERO)


def test_normalize_exponent():
    assert normalize_exponent_mod_p(-1, 3) == 2
    assert normalize_exponent_mod_p(7, 5) == 2
    assert normalize_exponent_mod_p(0, 2) == 0
    assert normalize_exponent_mod_p(-20, 13) == 6
    assert normalize_exponent_mod_p(5, 1) == 0
    with pytest.raises(ValueError):
        normalize_exponent_mod_p(1, 0)


def test_qp_minus_one_times_qint_identity():
    # (q^p - 1)*[p] = (q-1)*[p]^2, the fact justifying exponent reduction mod p
    for p in PRIMES_TO_13:
        lhs = (q_power(p) - ONE) * q_int(p)
        rhs = (q_power(1) - ONE) * q_int(p) * q_int(p)
        assert lhs == rhs


def test_exponent_normalization_respects_period():
    # q^(e mod p) * [p] == q^(e + p*t) * [p]  (mod [p]^2) for t lifting e >= 0
    for p in PRIMES_TO_13:
        msq = q_int(p) * q_int(p)
        for e in range(-20, 21):
            norm = normalize_exponent_mod_p(e, p)
            t0 = 0 if e >= 0 else -(e // p)  # smallest t with e + p*t >= 0
            for t in (t0, t0 + 1):
                lifted = q_power(e + p * t) * q_int(p)
                assert residue_equal_mod(q_power(norm) * q_int(p), lifted, msq), (p, e, t)


def test_is_prime_small():
    known = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-3, 50):
        assert is_prime(n) == (n in known)
    assert is_prime(7919)
    assert not is_prime(7917)


# --- report record ---------------------------------------------------------------

def test_report_json_schema():
    r = make_report("thm1", {"n": 4, "a1": 1, "a2": 1}, "pass", elapsed_ms=12)
    obj = r.to_json_obj()
    assert list(obj.keys()) == ["claim_id", "params", "status", "witness", "elapsed_ms"]
    assert obj["params"] == {"n": 4, "a1": 1, "a2": 1}
    assert obj["witness"] is None
    assert obj["elapsed_ms"] == 12
    json.dumps(obj)  # serializable


def test_report_stable_zeroes_elapsed():
    r = make_report("thm2", {"p": 3, "a": 1, "b": 0}, "pass", elapsed_ms=99)
    assert r.to_json_obj(stable=True)["elapsed_ms"] == 0


def test_fail_report_requires_nonzero_witness():
    with pytest.raises(ValueError):
        make_report("thm1", {"n": 2}, "fail")
    with pytest.raises(ValueError):
        make_report("thm1", {"n": 2}, "fail", witness=Witness("1", "1", "0"))
    ok = make_report("thm1", {"n": 2}, "fail", witness=Witness("q", "0", "q"))
    assert ok.status == "fail"


def test_report_rejects_unknown_status():
    with pytest.raises(ValueError):
        make_report("thm1", {"n": 2}, "maybe")


def test_report_params_must_be_ints():
    with pytest.raises(TypeError):
        make_report("thm1", {"n": 2.5}, "pass")


def test_report_sort_key_orders_params():
    a = make_report("thm1", {"n": 2, "a1": 0}, "pass")
    b = make_report("thm1", {"n": 2, "a1": 1}, "pass")
    c = make_report("thm2", {"p": 2, "a": 0, "b": 0}, "pass")
    assert sorted([c, b, a], key=lambda r: r.sort_key) == [a, b, c]


def test_note_kept_out_of_json():
    r = make_report("thm1", {"n": 1, "a1": 3}, "pass", note="vanishing-sum")
    assert r.note == "vanishing-sum"
    assert "note" not in r.to_json_obj()
