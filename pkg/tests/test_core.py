import pytest

from golombz.core import (
    Ruler, canonicalize, cyclic_length, diff_profile, embed, verify_golomb, verify_mgr,
)


@pytest.mark.parametrize("v, residues", [(7, (0, 1, 3)), (21, (0, 2, 7, 8, 11)), (13, (0, 1, 4, 6))])
def test_verify_valid(v, residues):
    assert verify_mgr(Ruler(v, residues)).valid


def test_verify_reports_repeated_difference():
    report = verify_mgr(Ruler(7, (0, 1, 2)))
    assert not report.valid
    d, first, second = report.witness
    assert d == 1
    assert {first, second} == {(1, 0), (2, 1)}
    assert report.to_dict()["witness"]["difference"] == 1


def test_verify_catches_half_modulus():
    # 4 - 0 = 0 - 4 = 4 mod 8
    assert not verify_mgr(Ruler(8, (0, 1, 4))).valid


@pytest.mark.parametrize("v, residues", [
    (7, (0, 1)),
    (7, (0, 3, 1)),
    (7, (0, 1, 7)),
    (2, (0, 1, 2)),
    (7, (-1, 1, 3)),
])
def test_malformed_rulers_rejected(v, residues):
    with pytest.raises(ValueError):
        Ruler(v, residues)


def test_ruler_record():
    r = Ruler(7, (0, 1, 3))
    assert r.to_dict() == {"v": 7, "k": 3, "residues": [0, 1, 3]}
    assert list(r.to_dict()) == ["v", "k", "residues"]
    assert Ruler.from_dict(r.to_dict()) == r
    with pytest.raises(ValueError):
        Ruler.from_dict({"v": 7, "k": 4, "residues": [0, 1, 3]})
    with pytest.raises(ValueError):
        Ruler.from_dict({"v": 7})


def test_diff_profile_planar():
    prof = diff_profile(Ruler(7, (0, 1, 3)))
    assert prof.differences == (1, 2, 3, 4, 5, 6)
    assert prof.leave == (0,)
    assert prof.max_multiplicity == 1
    assert prof.length == 3


def test_diff_profile_even_modulus_leave():
    prof = diff_profile(Ruler(8, (0, 1, 3)))
    assert {0, 4} <= set(prof.leave)


def test_leave_parity_v_2_mod_4():
    r = Ruler(14, (0, 1, 4, 6))
    assert verify_mgr(r).valid
    prof = diff_profile(r)
    assert {0, 7} <= set(prof.leave)
    assert prof.leave_even % 2 == 1 and prof.leave_odd % 2 == 1


def test_leave_parity_v_0_mod_4():
    r = Ruler(16, (0, 1, 4, 6))
    assert verify_mgr(r).valid
    prof = diff_profile(r)
    assert {0, 8} <= set(prof.leave)
    assert prof.leave_even % 2 == 0 and prof.leave_odd % 2 == 0


def test_profile_and_verify_agree():
    for residues in [(0, 1, 3), (0, 1, 2), (0, 2, 3), (0, 1, 5), (0, 3, 6)]:
        r = Ruler(9, residues)
        assert verify_mgr(r).valid == (diff_profile(r).max_multiplicity <= 1)


@pytest.mark.parametrize("residues", [(1, 2, 4), (0, 4, 6), (2, 3, 5), (0, 1, 3)])
def test_canonicalize(residues):
    assert canonicalize(Ruler(7, residues)).residues == (0, 1, 3)


def test_canonicalize_invariant_under_symmetries():
    r = Ruler(21, (0, 2, 7, 8, 11))
    c = canonicalize(r)
    assert canonicalize(c) == c
    for t in range(21):
        shifted = Ruler.of(21, [x + t for x in r.residues])
        reflected = Ruler.of(21, [t - x for x in r.residues])
        assert canonicalize(shifted) == c
        assert canonicalize(reflected) == c


def test_embed():
    r = embed(Ruler(13, (0, 1, 4, 6)), 13)
    assert verify_mgr(r).valid
    r = embed(Ruler(7, (0, 1, 3)), 8)
    assert r == Ruler(8, (0, 1, 3)) and verify_mgr(r).valid
    with pytest.raises(ValueError):
        embed(Ruler(13, (0, 1, 4, 6)), 12)


def test_embed_shifts_to_zero():
    r = embed(Ruler(7, (2, 3, 5)), 9)
    assert r.residues == (0, 1, 3)


def test_embed_plain_ruler_every_modulus():
    ruler = Ruler.plain((0, 1, 4, 9, 11))
    assert verify_golomb(ruler).valid
    for v in range(23, 60):
        assert verify_mgr(embed(ruler, v)).valid


def test_verify_golomb_rejects_repeat():
    report = verify_golomb(Ruler.plain((0, 1, 2, 5)))
    assert not report.valid and report.witness[0] == 1


def test_cyclic_length():
    assert cyclic_length(Ruler(7, (0, 4, 6))) == 3
    assert cyclic_length(Ruler(21, (0, 2, 7, 8, 11))) == 11
