import pytest

from golombz.certify import validate_certificate
from golombz.designs import (
    OocCode, certify_optimal_ooc, family_scan_ooc, is_optimal, ooc_size_bound, rdf_check,
    steiner_check, verify_cyclic_steiner, verify_ooc,
)
from golombz.numtheory import is_perfect_square, is_sum_two_squares


def test_mgr_is_a_size_one_ooc():
    report = verify_ooc(OocCode(7, ((0, 1, 3),)))
    assert report.valid and report.auto_max == 1 and report.cross_max == 0
    assert report.optimal


def test_two_block_ooc():
    report = verify_ooc(OocCode(13, ((0, 1, 4), (0, 2, 7))))
    assert report.valid
    assert report.cross_max == 1
    assert report.optimal


def test_collision_between_blocks():
    report = verify_ooc(OocCode(7, ((0, 1, 3), (0, 2, 6))))
    assert not report.valid
    assert report.cross_max == 3
    assert report.cross_pair == (0, 1)


def test_autocorrelation_failure():
    report = verify_ooc(OocCode(8, ((0, 1, 2),)))
    assert not report.valid
    assert report.auto_max == 2 and report.auto_block == 0


def test_relaxed_lambda():
    code = OocCode(8, ((0, 1, 2),), lambda_a=2, lambda_c=2)
    assert verify_ooc(code).valid


def test_code_record():
    code = OocCode(62, ((0, 1, 3), (0, 4, 9)))
    data = code.to_dict()
    assert data == {"v": 62, "lambda_a": 1, "lambda_c": 1, "blocks": [[0, 1, 3], [0, 4, 9]]}
    assert OocCode.from_dict(data) == code


@pytest.mark.parametrize("v, blocks", [(7, ()), (7, ((0, 1), (0, 1, 3))), (7, ((0, 1, 7),)), (7, ((0, 1, 1),))])
def test_malformed_codes_rejected(v, blocks):
    with pytest.raises(ValueError):
        OocCode(v, blocks)


@pytest.mark.parametrize("v, k, n", [(62, 6, 2), (7, 3, 1), (26, 3, 4)])
def test_size_bound(v, k, n):
    assert ooc_size_bound(v, k) == n
    assert is_optimal(v, k, n)


def test_size_bound_rejects_small_modulus():
    with pytest.raises(ValueError):
        ooc_size_bound(3, 3)


def test_counting_example_62_6():
    cert = certify_optimal_ooc(62, 6)
    assert cert.verdict == "nonexistent"
    assert cert.trace["S"] == [15]
    assert cert.trace["T"] == [0, 5, 8, 9]
    assert validate_certificate(cert)


def test_counting_14_3():
    cert = certify_optimal_ooc(14, 3)
    assert cert.nonexistent and validate_certificate(cert)


def test_counting_representation():
    cert = certify_optimal_ooc(26, 3)
    assert cert.verdict == "inconclusive"
    rep = cert.trace["representation"]
    assert rep["s"] == 6 and sorted(rep["parts"]) == [0, 2, 2, 2]


def test_counting_rejects_odd_modulus():
    with pytest.raises(ValueError):
        certify_optimal_ooc(63, 6)


def test_order_three_classes():
    flagged = [v for v in range(8, 2401, 2) if certify_optimal_ooc(v, 3).nonexistent]
    assert flagged == [v for v in range(8, 2401, 2) if v % 24 in (14, 20)]


def test_order_three_certificates_validate():
    for v in (14, 20, 38, 44, 2390):
        assert validate_certificate(certify_optimal_ooc(v, 3))


@pytest.mark.parametrize("k", [3, 5, 7])
def test_congruence_family(k):
    members = family_scan_ooc("thm4.3", k=k, v_max=2000)
    assert members
    for v, k_ in members:
        assert k_ == k and v <= 2000
        assert certify_optimal_ooc(v, k).nonexistent
    mod = {3: 24, 5: 40, 7: 168}[k]
    classes = {3: (14, 20), 5: (22,), 7: (44, 86)}[k]
    assert [v for v, _ in members] == [v for v in range(2001) if v % mod in classes]


def test_k_half_family():
    members = family_scan_ooc("k-half", k_max=30)
    assert (62, 6) in members
    for v, k in members:
        assert not is_sum_two_squares(k)
        assert v == 2 * k * (k - 1) + 2


def test_r_set_family():
    assert family_scan_ooc("R-set", k=6, ell=1) == [(62, 6)]
    assert family_scan_ooc("R-set", k=5, l=1) == []


def test_n3_families_confirmed():
    for kind in ("n3-ell1", "n3-ell2"):
        members = family_scan_ooc(kind, a_max=0, c_max=1)
        assert len(members) == 4
        for v, k in members:
            assert certify_optimal_ooc(v, k).nonexistent


def test_infinite_family():
    for ell in (1, 2, 3):
        members = family_scan_ooc("infinite", ell=ell)
        assert len(members) == 1
        v, k = members[0]
        assert k % 2 == 0 and v == 2 * k * (k - 1) + 2 * ell


def test_family_rejects_unknown_kind():
    with pytest.raises(ValueError):
        family_scan_ooc("other")


EVEN_TO_30 = range(2, 31, 2)


def test_steiner_two_blocks():
    flagged = [k for k in EVEN_TO_30 if steiner_check(k, 2).nonexistent]
    assert [k for k in flagged if k <= 28] == [6, 12, 14, 22, 24, 28]
    assert flagged == [6, 12, 14, 22, 24, 28, 30]


def test_steiner_three_blocks():
    flagged = [k for k in range(2, 41, 2) if steiner_check(k, 3).nonexistent]
    assert flagged == [14, 30]
    for k in (14, 46, 56, 62):
        cert = steiner_check(k, 3)
        assert cert.nonexistent and validate_certificate(cert)


def test_steiner_inconclusive_and_notes():
    assert steiner_check(10, 2).verdict == "inconclusive"
    cert = steiner_check(10, 4)
    assert cert.verdict == "inconclusive" and "note" in cert.trace


def test_steiner_rejects_odd_order():
    with pytest.raises(ValueError):
        steiner_check(7, 2)


def test_rdf_matches_steiner():
    cert = rdf_check(66, 6, 6, 1)
    assert cert.nonexistent
    assert cert.trace["n"] == 2 and cert.trace["target"] == 12
    assert validate_certificate(cert)
    assert steiner_check(6, 2).nonexistent


def test_rdf_inconclusive_example():
    cert = rdf_check(14, 2, 4, 1)
    assert cert.verdict == "inconclusive"
    assert cert.trace["n"] == 1 and cert.trace["h_in_s"] is False and cert.trace["target"] == 4


def test_rdf_inapplicable():
    assert rdf_check(20, 2, 4, 1).verdict == "inapplicable"


def test_rdf_errors():
    with pytest.raises(ValueError):
        rdf_check(15, 3, 3, 1)
    with pytest.raises(ValueError):
        rdf_check(14, 3, 4, 1)


def test_rdf_single_block_is_the_square_condition():
    # n = 1, w = 1: k - lambda must be a perfect square
    for k in range(3, 201):
        for lam in (1, 2, 3, 4):
            num = k * (k - 1)
            if num % lam:
                continue
            v = num // lam + 1
            if v % 2:
                continue
            cert = rdf_check(v, 1, k, lam)
            assert cert.trace["n"] == 1
            assert cert.nonexistent == (not is_perfect_square(k - lam)), (k, lam)


def test_rdf_two_blocks_is_the_two_squares_condition():
    # n = 2, w = 1: 2k - lambda must be a sum of two squares
    for k in range(3, 201):
        for lam in (1, 2, 3, 4):
            num = 2 * k * (k - 1)
            if num % lam:
                continue
            v = num // lam + 1
            if v % 2:
                continue
            cert = rdf_check(v, 1, k, lam)
            assert cert.nonexistent == (not is_sum_two_squares(2 * k - lam)), (k, lam)


def test_cyclic_steiner_leaves():
    sub = verify_cyclic_steiner(OocCode(15, ((0, 1, 4), (0, 2, 8))))
    assert sub.valid and sub.leave_kind == "subgroup" and sub.leave == (0, 5, 10)
    triv = verify_cyclic_steiner(OocCode(13, ((0, 1, 4), (0, 2, 7))))
    assert triv.valid and triv.leave_kind == "trivial"
    bad = verify_cyclic_steiner(OocCode(19, ((0, 1, 4), (0, 2, 8))))
    assert not bad.valid
