"""Smoke tests for the _pfd extension module.

The build directory holding _pfd*.so is injected via PFD_MODULE_DIR (set by
ctest); rationals cross the boundary as "p/q" strings.
"""

import json
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.environ["PFD_MODULE_DIR"])

import pytest

import _pfd


def frac(s):
    return Fraction(s)


def test_arith_basics():
    assert _pfd.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    af = _pfd.arithmetic_functions(144)
    assert af["phi"] == "48"
    assert af["sigma"] == "403"
    assert af["big_omega"] == 6
    assert _pfd.prime_pi(30) == 10
    assert _pfd.floor_log(100) == 4
    assert _pfd.critical_k(1_000_000) == 1
    assert _pfd.lcm_upto(6) == [(2, 2), (3, 1), (5, 1)]


def test_auxiliary_modulus():
    X, N = _pfd.auxiliary_modulus(8)
    assert X == 2
    assert N == [(2, 8)]  # (8*2)^2 = 2^8


def test_reciprocal_and_homogeneous_sums():
    S, Q = _pfd.restricted_reciprocal_sums(4, 1)
    assert frac(S) == Fraction(5, 6)
    assert frac(Q) == Fraction(13, 36)
    h = _pfd.homogeneous_sums([2, 3], 3)
    assert [frac(x) for x in h] == [
        Fraction(1),
        Fraction(5, 6),
        Fraction(19, 36),
        Fraction(65, 216),
    ]


def test_search_and_profiles():
    assert _pfd.is_product_free(6, [2, 5])
    assert not _pfd.is_product_free(6, [2, 4])
    r = _pfd.max_product_free(6)
    assert frac(r["density"]) == Fraction(1, 3)
    assert r["witness"] == [2, 5]
    assert r["optimal"]
    prof = _pfd.gcd_profile(6, [2, 5])
    assert frac(prof[1]) == Fraction(1, 2)  # 5 among phi(6)=2 units
    assert frac(prof[2]) == Fraction(1, 2)  # 2 among phi(3)=2 members
    lifted = _pfd.lift_set(6, [2, 5], 2)
    assert _pfd.is_product_free(12, lifted)
    assert len(lifted) == 4


def test_lp_and_bounds():
    p, d = _pfd.lp_optimum(6)
    assert frac(p) == frac(d) == Fraction(5, 6)
    assert frac(_pfd.primal_lower_bound(6)) == Fraction(2, 3)  # (2/3)(2 - 1)
    # n = 6: X = 1, N = 6, (phi(6)/6)(1 + 5/6) = 11/18.
    assert frac(_pfd.upper_bound_via_lp(6)) == Fraction(11, 18)
    text = _pfd.export_lp(6)
    assert text.startswith("pfd-lp 1")
    assert "v2" in text


def test_certificate_roundtrip_and_tamper():
    doc = _pfd.build_certificate(X=4, k=1, N=144)
    cert = json.loads(doc)
    assert cert["objective"] == "221/144"
    ok, checks, witness = _pfd.check_certificate(doc)
    assert ok and witness == ""
    assert checks
    cert["A"] = "1"
    ok2, _, witness2 = _pfd.check_certificate(json.dumps(cert))
    assert not ok2
    assert witness2


def test_density_upper_bound_chain():
    rep = _pfd.density_upper_bound(6)
    assert frac(rep["bound"]) == Fraction(11, 18)
    rep2 = _pfd.density_upper_bound(100)
    assert 0 < frac(rep2["bound"]) < 1


def test_construction():
    fam = json.loads(_pfd.build_family(6, 2, 3))
    assert frac(fam["density"]) == Fraction(1, 5)
    dens, rhs, holds = _pfd.lower_bound_formula(6, 2, 3)
    assert holds
    assert frac(dens) >= frac(rhs)
    t = _pfd.tail_sum(3, 3)
    assert t["exact"] and frac(t["value"]) == Fraction(23, 36)
    b = _pfd.betterest_sum(30, 2)
    assert b["exact"] and b["ratio_to_target"] > 0


def test_exceptions_map_to_python_types():
    with pytest.raises(_pfd.PreconditionError):
        _pfd.max_product_free(0)
    with pytest.raises(_pfd.PreconditionError):
        _pfd.build_certificate(X=4, k=1, N=6)
