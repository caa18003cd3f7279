import json
import logging

import pytest

from golombz import file as F
from golombz.certify import Certificate, certify_mgr
from golombz.core import Ruler


def test_ruler_json_round_trip():
    r = Ruler(21, (0, 2, 7, 8, 11))
    text = F.ruler_to_json(r)
    assert json.loads(text) == {"v": 21, "k": 5, "residues": [0, 2, 7, 8, 11]}
    assert F.ruler_from_json(text) == r


def test_parse_error_position():
    with pytest.raises(F.InputFormatError) as info:
        F.parse_json('{\n  "v": 7,\n  "k" 3\n}', "r.json")
    err = info.value
    assert (err.path, err.line) == ("r.json", 3)
    assert err.column > 0
    assert str(err).startswith("r.json:3:")


def test_input_format_error_is_a_value_error():
    assert issubclass(F.InputFormatError, ValueError)


@pytest.mark.parametrize("text", [
    '{"v": 7, "k": 3}',
    '{"v": 7, "k": 4, "residues": [0, 1, 3]}',
    '{"v": 7, "k": 3, "residues": [0, 1, 9]}',
])
def test_ruler_from_json_rejects_bad_records(text):
    with pytest.raises(F.InputFormatError):
        F.ruler_from_json(text, "bad.json")


def test_emit_json_uses_records():
    cert = certify_mgr(94, 10)
    assert Certificate.from_dict(json.loads(F.emit_json(cert))) == cert
    assert json.loads(F.emit_json({"a": 1})) == {"a": 1}


def test_load_record(tmp_path):
    path = tmp_path / "ruler.json"
    path.write_text(F.ruler_to_json(Ruler(7, (0, 1, 3))))
    assert F.load_record(str(path), Ruler) == Ruler(7, (0, 1, 3))
    path.write_text('{"v": 7}')
    with pytest.raises(F.InputFormatError) as info:
        F.load_record(str(path), Ruler)
    assert info.value.path == str(path)


def test_table_csv():
    rows = [
        {"v": 21, "k": 5, "status": "found", "residues": [0, 2, 7, 8, 11], "length": 11},
        {"v": 22, "k": 5, "status": "exhausted", "residues": None, "length": None},
    ]
    lines = F.table_csv(rows).splitlines()
    assert lines[0] == "v,k,status,residues,length"
    assert lines[1] == "21,5,found,0 2 7 8 11,11"
    assert lines[2] == "22,5,exhausted,,"


def test_export_into_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    path = F.export_into_file(Ruler(7, (0, 1, 3)))
    assert path.startswith("golombz_export_") and path.endswith(".json")
    assert json.loads((tmp_path / path).read_text())["residues"] == [0, 1, 3]
    out = F.export_into_file([{"v": 7, "k": 3, "status": "found", "residues": [0, 1, 3], "length": 3}],
                             str(tmp_path / "t.csv"), csv=True)
    assert (tmp_path / "t.csv").read_text().splitlines()[1] == "7,3,found,0 1 3,3"
    assert out.endswith("t.csv")


def test_cache_put_get(tmp_path):
    path = str(tmp_path / "sub" / "cache.jsonl")
    key = F.cache_key("search", 21, 5, "first", None)
    assert key == "search:21:5:first:None"
    assert F.cache_get(path, key, "0.1.0") is None
    F.cache_put(path, F.CacheRecord.make(key, {"status": "found", "n": 1}, "0.1.0"))
    F.cache_put(path, F.CacheRecord.make(key, {"status": "found", "n": 2}, "0.1.0"))
    hit = F.cache_get(path, key, "0.1.0")
    assert hit.payload == {"status": "found", "n": 2}
    assert F.cache_get(path, key, "0.2.0") is None
    assert F.cache_get(path, "search:22:5:first:None", "0.1.0") is None


def test_cache_skips_corrupt_lines(tmp_path, caplog):
    path = tmp_path / "cache.jsonl"
    good = F.CacheRecord.make("spectrum:5:None", {"tail": 22}, "0.1.0")
    forged = dict(good.to_dict(), payload={"tail": 23})
    path.write_text("not json\n" + json.dumps(forged) + "\n\n" + json.dumps(good.to_dict()) + "\n[1]\n")
    with caplog.at_level(logging.WARNING, logger="golombz.file"):
        hit = F.cache_get(str(path), "spectrum:5:None", "0.1.0")
    assert hit == good
    messages = [r.getMessage() for r in caplog.records]
    assert any("corrupt" in m for m in messages)
    assert any("digest" in m for m in messages)
