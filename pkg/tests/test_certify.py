import pytest

from golombz.certify import Certificate, certify_mgr, family_scan, validate_certificate
from golombz.numtheory import is_perfect_square


def test_counting2_example():
    cert = certify_mgr(94, 10)
    assert cert.verdict == "nonexistent"
    assert cert.rule == "counting2"
    assert cert.trace["candidates"] == [8, 12]
    assert cert.trace["squares"] == []
    assert validate_certificate(cert)


def test_bose_connor_seven_mod_eight():
    cert = certify_mgr(44, 7)
    assert (cert.verdict, cert.rule) == ("nonexistent", "bose-connor")
    assert validate_certificate(cert)


def test_bose_connor_for_every_seven_mod_eight():
    for k in range(7, 1001, 8):
        cert = certify_mgr(k * k - k + 2, k)
        assert cert.nonexistent, k
        assert validate_certificate(cert)


def test_inconclusive_when_no_rule_fires():
    cert = certify_mgr(32, 6)
    assert cert.verdict == "inconclusive"
    assert cert.rule == "none"


def test_trivial_bound():
    cert = certify_mgr(20, 5)
    assert (cert.verdict, cert.rule) == ("nonexistent", "trivial")
    assert cert.trace["bound"] == 21
    assert validate_certificate(cert)


def test_odd_modulus_inconclusive():
    cert = certify_mgr(23, 5)
    assert cert.verdict == "inconclusive"
    assert cert.trace["reason"] == "odd modulus"


def test_planar_modulus_inconclusive():
    assert certify_mgr(21, 5).verdict == "inconclusive"


def test_new35_fires():
    cert = certify_mgr(30 * 29 + 10, 30)
    assert (cert.verdict, cert.rule) == ("nonexistent", "new35")
    assert validate_certificate(cert)


def test_bad_arguments():
    with pytest.raises(ValueError):
        certify_mgr(10, 2)
    with pytest.raises(ValueError):
        certify_mgr(0, 5)


def test_counting_with_one_extra_pair_matches_case_split():
    # v = k^2-k+2: k = 2,3 mod 4 needs k-2 square, k = 0,1 mod 4 needs k square
    for k in range(3, 1001):
        cert = certify_mgr(k * k - k + 2, k)
        if cert.rule == "bose-connor":
            continue
        needed = is_perfect_square(k - 2) if k % 4 in (2, 3) else is_perfect_square(k)
        assert cert.nonexistent == (not needed), k


def test_certificates_round_trip_and_validate():
    for v, k in [(94, 10), (44, 7), (20, 5), (880, 30)]:
        cert = certify_mgr(v, k)
        again = Certificate.from_dict(cert.to_dict())
        assert again == cert
        assert validate_certificate(again)


def test_tampered_certificate_fails():
    cert = certify_mgr(94, 10)
    forged = Certificate("nonexistent", "counting2", {"v": 96, "k": 10}, cert.trace)
    assert not validate_certificate(forged)


def test_unknown_rule():
    with pytest.raises(ValueError):
        validate_certificate(Certificate("nonexistent", "magic", {}, {}))


def test_main_family_example():
    members = set(family_scan("main-nonexist", 3))
    assert {(k * k - k + 4, k) for k in (50, 52)} <= members
    assert {(k * k - k + 2, k) for k in (37, 39)} <= members
    for v, k in members:
        assert certify_mgr(v, k).nonexistent


def test_new35_family_example():
    members = family_scan("new35-cor", 6, ell=5)
    assert members == [(30 * 29 + 10, 30)]


def test_family_bad_kind():
    with pytest.raises(ValueError):
        family_scan("other", 1)
    with pytest.raises(ValueError):
        family_scan("new35-cor", 3, ell=5)
