import json

import pytest

import golombz
from golombz import cli
from golombz.core import Ruler
from golombz.file import ruler_to_json


def _exit_code(argv):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    return info.value.code


def test_search_found():
    assert _exit_code(["search", "--v", "21", "--k", "5"]) == cli.EXIT_OK


def test_search_exhausted():
    assert _exit_code(["search", "--v", "22", "--k", "5", "--mode", "prove"]) == cli.EXIT_NEGATIVE


def test_search_budget():
    argv = ["search", "--v", "22", "--k", "5", "--mode", "prove", "--budget", "5"]
    assert _exit_code(argv) == cli.EXIT_BUDGET


def test_certify_json_with_trace(capsys):
    assert _exit_code(["certify", "mgr", "--v", "94", "--k", "10", "--format", "json", "--trace"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "nonexistent" and doc["rule"] == "counting2"
    assert doc["trace"]["candidates"] == [8, 12]


def test_certify_json_omits_trace_by_default(capsys):
    _exit_code(["certify", "mgr", "--v", "94", "--k", "10", "--format", "json"])
    assert "trace" not in json.loads(capsys.readouterr().out)


def test_certify_inconclusive():
    assert _exit_code(["certify", "mgr", "--v", "32", "--k", "6"]) == cli.EXIT_INCONCLUSIVE


def test_malformed_file(tmp_path):
    path = tmp_path / "r.json"
    path.write_text('{"v": 7, "k": ')
    assert _exit_code(["verify", "--file", str(path)]) == cli.EXIT_USAGE


def test_missing_file(tmp_path):
    assert _exit_code(["verify", "--file", str(tmp_path / "none.json")]) == cli.EXIT_USAGE


def test_verify_file(tmp_path):
    path = tmp_path / "r.json"
    path.write_text(ruler_to_json(Ruler(7, (0, 1, 3))))
    assert _exit_code(["verify", "--file", str(path)]) == cli.EXIT_OK
    path.write_text(ruler_to_json(Ruler(7, (0, 1, 2))))
    assert _exit_code(["verify", "--file", str(path)]) == cli.EXIT_NEGATIVE


def test_table_reproduce_csv(capsys):
    assert _exit_code(["table", "reproduce", "--k", "3..5", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "v,k,status,residues,length"
    assert any(line.startswith("7,3,ruler,") and line.endswith(",3") for line in lines)
    assert any(",5,nonexistent,," in line for line in lines)
    assert any("lemma-double" in line for line in lines)


def test_table_reproduce_flags_disagreement(monkeypatch, caplog):
    monkeypatch.setattr(cli, "disagreements", lambda spec: [f"k={spec.k}: forged"])
    assert _exit_code(["table", "reproduce", "--k", "3", "--format", "json"]) == cli.EXIT_NEGATIVE
    assert any("forged" in r.getMessage() for r in caplog.records)


def test_csv_unavailable_for_certificates():
    assert _exit_code(["certify", "mgr", "--v", "94", "--k", "10", "--format", "csv"]) == cli.EXIT_USAGE


def test_table_verify():
    assert _exit_code(["table", "verify"]) == cli.EXIT_OK


@pytest.mark.parametrize("argv, code", [
    (["nt", "two-squares", "21"], 1),
    (["nt", "two-squares", "25"], 0),
    (["nt", "three-squares", "7"], 1),
    (["nt", "prime", "97"], 0),
    (["nt", "ternary", "7", "2"], 0),
    (["nt", "ternary", "3", "2"], 1),
    (["nt", "bounded-squares", "3", "2", "3"], 1),
    (["nt", "prime", "1", "2"], 2),
])
def test_nt(argv, code):
    assert _exit_code(argv) == code


def test_ooc_and_designs():
    assert _exit_code(["ooc", "certify", "--v", "62", "--k", "6"]) == cli.EXIT_OK
    assert _exit_code(["ooc", "certify", "--v", "63", "--k", "6"]) == cli.EXIT_USAGE
    assert _exit_code(["ooc", "family", "--kind", "R-set", "--k", "6", "--ell", "1"]) == cli.EXIT_OK
    assert _exit_code(["steiner", "check", "--k", "6", "--n", "2"]) == cli.EXIT_OK
    assert _exit_code(["rdf", "check", "--v", "14", "--w", "2", "--k", "4"]) == cli.EXIT_INCONCLUSIVE
    assert _exit_code(["ooc", "search", "--v", "13", "--k", "3", "--n", "2"]) == cli.EXIT_OK


def test_ooc_verify_steiner(tmp_path):
    path = tmp_path / "code.json"
    path.write_text(json.dumps({"v": 15, "blocks": [[0, 1, 4], [0, 2, 8]]}))
    assert _exit_code(["ooc", "verify", "--file", str(path), "--steiner"]) == cli.EXIT_OK


def test_construct():
    assert _exit_code(["construct", "--method", "singer", "--q", "4"]) == cli.EXIT_OK
    assert _exit_code(["construct", "--method", "singer"]) == cli.EXIT_USAGE
    assert _exit_code(["construct", "--method", "exist-any", "--k", "5", "--v", "74"]) == cli.EXIT_OK


def test_export(tmp_path, capsys):
    target = tmp_path / "cert.json"
    argv = ["certify", "mgr", "--v", "94", "--k", "10", "--format", "json", "--out", "--path", str(target)]
    assert _exit_code(argv) == 0
    assert json.loads(target.read_text())["rule"] == "counting2"


def test_cache_is_reused(tmp_path):
    cache = tmp_path / "cache.jsonl"
    argv = ["search", "--v", "21", "--k", "5", "--cache", str(cache)]
    assert _exit_code(argv) == 0
    assert _exit_code(argv) == 0
    assert len(cache.read_text().splitlines()) == 1


def test_run_config_validation():
    with pytest.raises(ValueError):
        cli.RunConfig("search", fmt="xml")
    with pytest.raises(ValueError):
        cli.RunConfig("search", threads=0)
    with pytest.raises(ValueError):
        cli.RunConfig("search", budget=-1)


def test_parse_orders():
    assert cli.parse_orders("3..6") == [3, 4, 5, 6]
    assert cli.parse_orders("7") == [7]
    for bad in ("2..5", "a..b", "6..3"):
        with pytest.raises(ValueError):
            cli.parse_orders(bad)


def test_resolve_threads(monkeypatch):
    monkeypatch.setenv("GOLOMBZ_THREADS", "3")
    assert cli.resolve_threads(None) == 3
    assert cli.resolve_threads(2) == 2
    assert cli.resolve_threads(0) >= 1


def test_usage_error_from_argparse():
    assert _exit_code(["search", "--v", "21"]) == 2


def test_version_comes_from_the_package(capsys):
    assert _exit_code(["--version"]) == 0
    assert capsys.readouterr().out.strip() == f"golombz {golombz.__version__}"


def test_cache_records_carry_the_package_version(tmp_path):
    cache = tmp_path / "cache.jsonl"
    assert _exit_code(["search", "--v", "13", "--k", "4", "--cache", str(cache)]) == 0
    record = json.loads(cache.read_text().splitlines()[0])
    assert record["version"] == golombz.__version__
