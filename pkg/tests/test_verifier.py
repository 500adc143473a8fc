"""Verifier tests: each check must catch the tampering aimed at it."""

import dataclasses

import pytest

from sl4witness import params, spectrum, verifier, witness
from sl4witness.verifier import MalformedCertificate
from sl4witness.witness import Selection


@pytest.fixture(scope="module")
def cert_a():
    return witness.construct(params.derive(1, 3, 2), (2, 2))


@pytest.fixture(scope="module")
def cert_d():
    return witness.construct(params.derive(1, 3, 2), (2, 1))


def failed(cert, **kwargs):
    return verifier.verify(cert, **kwargs).failed_checks()


def test_clean_certificates_pass(cert_a, cert_d):
    for cert in (cert_a, cert_d):
        report = verifier.verify(cert)
        assert report.ok
        assert report.failures == ()
        assert report.warnings == ()


def test_sum_check_catches_shifted_exponent(cert_a):
    exps = (cert_a.exponents[0] + 1,) + cert_a.exponents[1:]
    bad = dataclasses.replace(cert_a, exponents=exps)
    assert "V1" in failed(bad)


def test_orbit_check_catches_non_closed_multiset(cert_a):
    # keep the sum intact but break closure under e -> eps*q*e
    exps = list(cert_a.exponents)
    exps[1] += 1
    exps[2] -= 1
    bad = dataclasses.replace(cert_a, exponents=tuple(exps))
    report = verifier.verify(bad)
    assert "V2" in report.failed_checks()


def test_coprimality_check():
    # hand-made certificate whose modulus shares a factor with p
    pr = params.derive(1, 5, 1)
    cert = witness.construct(pr, (0,))
    bad = dataclasses.replace(
        cert, theta_order=10, exponents=(1, 5, 4, 0), claimed_order=10,
        target_order=50, selections=())
    assert "V3" in failed(bad)


def test_order_check_catches_wrong_claim(cert_a):
    bad = dataclasses.replace(
        cert_a, claimed_order=cert_a.claimed_order + 1,
        target_order=3 * (cert_a.claimed_order + 1))
    assert "V4" in failed(bad)


def test_primitivity_check():
    # exponents all equal modulo N/ell for ell = 2: theta = 6, values
    # twice an orbit of step 3 mod 6, claimed order 2 only
    pr = params.derive(1, 3, 1)  # unused arithmetic, structural carrier
    base = witness.construct(pr, (0,))
    bad = dataclasses.replace(
        base, theta_order=6, exponents=(3, 3, 3, 3), claimed_order=2,
        target_order=6, selections=())
    report = verifier.verify(bad)
    assert "V5" in report.failed_checks()


def test_selection_value_collision_strict_vs_lenient(cert_a):
    # doctor one exponent so the factor-0 selection picks equal values;
    # sums and orbits no longer matter here, only the V6 outcome
    bad = dataclasses.replace(cert_a, exponents=(1, 9, 1, 32))
    strict = verifier.verify(bad)
    assert "V6" in strict.failed_checks()
    lenient = verifier.verify(bad, strict_values=False)
    assert "V6" not in lenient.failed_checks()
    assert any("V6" in w for w in lenient.warnings)


def test_selection_coverage_mismatch(cert_a):
    bad = dataclasses.replace(cert_a, selections=(cert_a.selections[0],))
    assert "V6" in failed(bad)


def test_fixed_point_check_catches_swapped_selection(cert_a):
    # replace the factor-0 pair (1, 3) by (1, 2): values 1 + 9 != 0 mod 41
    sels = (Selection(0, (1, 2)),) + cert_a.selections[1:]
    bad = dataclasses.replace(cert_a, selections=sels)
    assert "V7" in failed(bad)


def test_case_tag_mismatch(cert_a):
    bad = dataclasses.replace(cert_a, case=witness.CASE_B)
    assert "V8" in failed(bad)


def test_case_d_tamper(cert_d):
    cd = dataclasses.replace(cert_d.case_d, a=cert_d.case_d.a + 2)
    bad = dataclasses.replace(cert_d, case_d=cd)
    assert "V8" in failed(bad)
    cd = dataclasses.replace(cert_d.case_d, r=7)
    bad = dataclasses.replace(cert_d, case_d=cd)
    assert "V8" in failed(bad)


def test_spectrum_cross_check(cert_a):
    psl = spectrum.omega(cert_a.params, group="PSL")
    assert verifier.verify(cert_a, psl_orders=psl).ok
    report = verifier.verify(cert_a, psl_orders=(1, 2))
    assert "V8" in report.failed_checks()


def test_malformed_profile_length(cert_a):
    bad = dataclasses.replace(cert_a, profile=(2,))
    with pytest.raises(MalformedCertificate):
        verifier.verify(bad)


def test_malformed_unreduced_exponent(cert_a):
    exps = (cert_a.exponents[0] + cert_a.theta_order,) + cert_a.exponents[1:]
    bad = dataclasses.replace(cert_a, exponents=exps)
    with pytest.raises(MalformedCertificate):
        verifier.verify(bad)


def test_malformed_exponent_count(cert_a):
    bad = dataclasses.replace(cert_a, exponents=cert_a.exponents[:3])
    with pytest.raises(MalformedCertificate):
        verifier.verify(bad)


def test_malformed_positions(cert_a):
    sels = (Selection(0, (3, 1)),) + cert_a.selections[1:]
    bad = dataclasses.replace(cert_a, selections=sels)
    with pytest.raises(MalformedCertificate):
        verifier.verify(bad)
    sels = (Selection(0, (1, 5)),) + cert_a.selections[1:]
    bad = dataclasses.replace(cert_a, selections=sels)
    with pytest.raises(MalformedCertificate):
        verifier.verify(bad)
    sels = (Selection(7, (1, 3)),) + cert_a.selections[1:]
    bad = dataclasses.replace(cert_a, selections=sels)
    with pytest.raises(MalformedCertificate):
        verifier.verify(bad)


def test_malformed_case_tag(cert_a):
    bad = dataclasses.replace(cert_a, case="E_Unknown")
    with pytest.raises(MalformedCertificate):
        verifier.verify(bad)


def test_malformed_case_d_presence(cert_a, cert_d):
    with pytest.raises(MalformedCertificate):
        verifier.verify(dataclasses.replace(cert_a, case_d=cert_d.case_d))
    with pytest.raises(MalformedCertificate):
        verifier.verify(dataclasses.replace(cert_d, case_d=None))


def test_malformed_tiny_orders(cert_a):
    with pytest.raises(MalformedCertificate):
        verifier.verify(dataclasses.replace(cert_a, theta_order=1))
    with pytest.raises(MalformedCertificate):
        verifier.verify(dataclasses.replace(cert_a, claimed_order=0))


def test_verify_handles_claimed_one_without_crashing(cert_a):
    # degenerate claim must fail checks, not blow up inside factoring
    bad = dataclasses.replace(cert_a, claimed_order=1, target_order=3)
    report = verifier.verify(bad)
    assert not report.ok


def test_in_spectrum():
    orders = (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 13, 20)
    assert verifier.in_spectrum(orders, 5)
    assert verifier.in_spectrum(orders, 4)   # divides 8, 12, 20
    assert not verifier.in_spectrum(orders, 15)
    assert not verifier.in_spectrum(orders, 40)
    with pytest.raises(ValueError):
        verifier.in_spectrum(orders, 0)


def test_brute_force_selections_frozen():
    pr = params.derive(1, 3, 1)
    cert = witness.construct(pr, (2,))
    found = verifier.brute_force_selections(
        pr, (2,), cert.exponents, cert.theta_order)
    assert found == [(Selection(0, (1, 3)),), (Selection(0, (2, 4)),)]
    assert cert.selections in found


def test_brute_force_selections_all_zero():
    pr = params.derive(1, 3, 1)
    cert = witness.construct(pr, (0,))
    found = verifier.brute_force_selections(
        pr, (0,), cert.exponents, cert.theta_order)
    assert found == [()]


def test_brute_force_selections_size_guard():
    pr = params.derive(1, 3, 1)
    with pytest.raises(ValueError):
        verifier.brute_force_selections(
            pr, (1,) * 7, (1, 3, 4, 2), 5)
