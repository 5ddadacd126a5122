import json

import pytest

from anomcancel import anomaly
from anomcancel.algebra import AlgebraError
from anomcancel.anomaly import (build_P, cross_check_bundle_expansion,
                                divisibility_check, make_setting,
                                structural_checks, verify_theorem)


def gating_failures(report):
    return [n for n, c in report.checks.items() if c.gating and not c.zero]


def test_setting_validation():
    with pytest.raises(AlgebraError):
        make_setting("spin4k", 0, 1)
    with pytest.raises(AlgebraError):
        make_setting("spin4k", 3, 1, n_q=3)  # too few orders to over-determine
    with pytest.raises(AlgebraError):
        make_setting("weird", 1, 1)
    s = make_setting("spinc4k2", 2, 1)
    assert s.weight == 5 and s.dim == 10 and s.tm_roots == 5


def test_spin_theorems_pass():
    for tid in ("3.1", "3.2"):
        r = verify_theorem(tid, k=2, l=1)
        assert r.status == "PASS", gating_failures(r)
        assert r.solve_integral


def test_spin_constant_term_content():
    # P2's constant coefficient carries the closed form of h0 with sign (-1)^k
    s = make_setting("spin4k", 2, 1)
    dec = anomaly.decompose_setting(s)
    p2 = build_P(s, "P2")
    assert dec.h[0] == p2.coefficient(0)  # k even: (-1)^k = +1
    s1 = make_setting("spin4k", 1, 1)
    dec1 = anomaly.decompose_setting(s1)
    assert dec1.h[0] == -build_P(s1, "P2").coefficient(0)


def test_degenerate_k1_case():
    checks = structural_checks(make_setting("spin4k", 1, 2))
    assert checks["degenerate_lhs_vanishes"].zero
    assert checks["degenerate_rhs_vanishes"].zero


def test_sign_flip_structure_all_kinds():
    for kind, k, l in (("spin4k", 2, 1), ("spinc4k", 1, 1), ("spinc4k2", 1, 1)):
        checks = structural_checks(make_setting(kind, k, l))
        assert checks["p3_equals_p2_sign_flipped"].zero, kind


def test_corollaries_variant_reading():
    for tid in ("3.3", "3.4"):
        r = verify_theorem(tid, l=2)
        assert r.status == "PASS_WITH_VARIANT"
        assert r.checks["printed_identity_tangent_twist"].zero
        assert not r.checks["printed_identity_independent_v"].zero
        assert not r.checks["printed_identity_independent_v"].gating
        assert r.checks["constant_term_identity"].zero
    with pytest.raises(AlgebraError):
        verify_theorem("3.3", k=3, l=1)  # k is pinned to 2


def test_spinc_theorems_pass():
    for tid, k, l in (("4.1", 1, 2), ("4.2", 1, 2), ("4.6", 1, 1), ("4.8", 1, 1)):
        r = verify_theorem(tid, k=k, l=l)
        assert r.status == "PASS", (tid, gating_failures(r))
        assert r.checks["reality_standard_basis"].zero


def test_spinc4k2_outputs_real_in_standard_basis():
    s = make_setting("spinc4k2", 1, 1)
    p1 = build_P(s, "P1")
    for k in p1.exponents():
        std = p1.coefficient(k).to_standard_basis()
        assert std.is_real(), f"imaginary part at q-lattice {k}"


def test_unreduced_line_variant_recorded():
    r = verify_theorem("4.8", k=1, l=1)
    c = r.checks["unreduced_line_variant"]
    assert not c.gating
    assert not c.zero  # differs by twice the constant-term side, by design


def test_cross_checks():
    for kind, k, l in (("spin4k", 1, 1), ("spinc4k", 1, 1), ("spinc4k2", 1, 1)):
        s = make_setting(kind, k, l)
        for which in ("P1", "P2"):
            for units in (0, 4, 8):
                assert not cross_check_bundle_expansion(s, units, which), (kind, which, units)


def test_divisibility_outcomes():
    assert divisibility_check("3.6", 0).outcome == "PASS"
    a38 = divisibility_check("3.8", 0)
    assert a38.outcome == "PASS" and a38.implied_exponent is None
    a38b = divisibility_check("3.8", 1)
    assert a38b.outcome == "PASS" and a38b.implied_exponent == 10
    gap = divisibility_check("4.9", 0)
    assert gap.outcome == "GAP"
    assert gap.implied_exponent == 4 and gap.claimed_exponent == 5
    assert divisibility_check("4.10", 1).outcome == "PASS"
    with pytest.raises(AlgebraError):
        divisibility_check("4.9", 1, l=3)  # l below 4m+2
    with pytest.raises(AlgebraError):
        divisibility_check("3.1", 0)


def test_divisibility_respects_assumed_valuation():
    # with v2(h) = 2 the implied power for the gap case reaches 32
    a = divisibility_check("4.9", 0, assumed_v2_h=2)
    assert a.implied_exponent == 5 and a.outcome == "PASS"


def test_report_json_deterministic():
    r1 = verify_theorem("3.1", k=1, l=1)
    r2 = verify_theorem("3.1", k=1, l=1)
    assert json.dumps(r1.to_json_obj(), indent=2) == json.dumps(r2.to_json_obj(), indent=2)
    obj = r1.to_json_obj()
    assert obj["schema"] == 1
    assert "elapsed_seconds" not in json.dumps(obj)


def test_verify_rejects_bad_ids():
    with pytest.raises(AlgebraError):
        verify_theorem("9.9", k=1)
    with pytest.raises(AlgebraError):
        verify_theorem("3.6", k=1)  # audits go through divisibility_check
    with pytest.raises(AlgebraError):
        verify_theorem("3.1")  # k required


def test_higher_order_does_not_break_identities():
    # doubling the checked window must leave every residual zero
    r = verify_theorem("3.1", k=2, l=1, n_q=12)
    assert r.status == "PASS", gating_failures(r)
    r = verify_theorem("4.6", k=1, l=1, n_q=10)
    assert r.status == "PASS", gating_failures(r)


def test_generalizes_beyond_the_grid():
    # dim 16 engages a third basis coefficient (r = 2) for the first time
    r = verify_theorem("3.1", k=4, l=2)
    assert len(r.h) == 3 and r.status == "PASS", gating_failures(r)
    r = verify_theorem("3.2", k=4, l=2)
    assert r.status == "PASS", gating_failures(r)
    r = verify_theorem("4.6", k=3, l=1)
    assert r.status == "PASS", gating_failures(r)
