import io
import json
from contextlib import redirect_stdout
import pytest

from weyl_dl import InvalidType
from weyl_dl.cli import (
    Config,
    TableCacheEntry,
    cache_path,
    load_cache_entry,
    main,
    save_cache_entry,
)


def run_cli(args):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


@pytest.fixture
def cache_dir(tmp_path):
    return tmp_path / "cache"


def test_table_text(cache_dir):
    code, out = run_cli(["table", "A", "2", "--cache-dir", str(cache_dir)])
    assert code == 0
    assert "|W| = 6" in out
    assert "(2,1)" in out
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    assert len(lines) == 4  # header + 3 rows


def test_table_a1(cache_dir):
    code, out = run_cli(["table", "A", "1", "--cache-dir", str(cache_dir)])
    assert code == 0
    assert "(1,1)" in out


def test_table_json_schema(cache_dir):
    code, out = run_cli(["table", "B", "2", "--format", "json", "--cache-dir", str(cache_dir)])
    assert code == 0
    payload = json.loads(out)
    for key in ("cartan", "classes", "irreducibles", "checks"):
        assert isinstance(payload[key], list)
    assert payload["cartan"][0] == ["2", "-1"]
    assert all(isinstance(v, str) for row in payload["cartan"] for v in row)
    assert payload["classes"][0] == {"word": "e", "size": "1"}
    degrees = sorted(item["degree"] for item in payload["irreducibles"])
    assert degrees == ["1", "1", "1", "1", "2"]
    assert all(isinstance(v, str) for item in payload["irreducibles"] for v in item["values"])


def test_table_csv(cache_dir):
    code, out = run_cli(["table", "A", "2", "--format", "csv", "--cache-dir", str(cache_dir)])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "label,degree,e,s1,s2*s1"
    assert '"(1,1,1)",1,1,-1,1' in lines


def test_invalid_type_exits_2(cache_dir):
    code, _ = run_cli(["table", "E", "8", "--cache-dir", str(cache_dir)])
    assert code == 2
    code, _ = run_cli(["verify", "D", "3", "--cache-dir", str(cache_dir)])
    assert code == 2


def test_size_limit_exits_3(cache_dir):
    code, _ = run_cli(["table", "F", "4", "--max-order", "100", "--cache-dir", str(cache_dir)])
    assert code == 3


def test_dl_text(cache_dir):
    code, out = run_cli(["dl", "A", "2", "--cache-dir", str(cache_dir)])
    assert code == 0
    assert "(3) <-> (1,1,1)" in out
    assert "(2,1) fixed" in out
    assert "springer convention" in out


def test_dl_a1_single_swap(cache_dir):
    code, out = run_cli(["dl", "A", "1", "--cache-dir", str(cache_dir)])
    assert code == 0
    assert "(2) <-> (1,1)" in out


def test_dl_g2_pairing_rows(cache_dir):
    code, out = run_cli(["dl", "G", "2", "--format", "json", "--cache-dir", str(cache_dir)])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["irreducibles"]) == 6
    assert all(c["passed"] for c in payload["checks"])


def test_verify_single(cache_dir):
    code, out = run_cli(["verify", "A", "2", "--cache-dir", str(cache_dir)])
    assert code == 0
    assert "FAIL" not in out
    assert "checks passed" in out


def test_verify_json(cache_dir):
    code, out = run_cli(["verify", "B", "2", "--format", "json", "--cache-dir", str(cache_dir)])
    assert code == 0
    payload = json.loads(out)
    assert all(c["passed"] for c in payload["checks"])


def test_output_deterministic(cache_dir):
    first = run_cli(["table", "B", "3", "--cache-dir", str(cache_dir)])
    second = run_cli(["table", "B", "3", "--cache-dir", str(cache_dir)])
    assert first == second


def test_cache_populated_and_used(cache_dir):
    cfg = Config(cache_dir=cache_dir)
    path = cache_path(cfg, "A", 3, 0)
    assert not path.exists()
    run_cli(["table", "A", "3", "--cache-dir", str(cache_dir)])
    assert path.exists()
    before = path.read_bytes()
    code, out = run_cli(["table", "A", "3", "--cache-dir", str(cache_dir)])
    assert code == 0
    assert path.read_bytes() == before
    # no stray temp files from the atomic write
    assert list(cache_dir.glob("*.tmp")) == []


def test_cache_roundtrip(cache_dir):
    entry = TableCacheEntry(
        schema_version=1,
        type_label="A",
        rank=2,
        central_rank=0,
        class_words=("e", "s1", "s2*s1"),
        class_sizes=(1, 3, 2),
        degrees=(1, 1, 2),
        labels=((3,), (1, 1, 1), (2, 1)),
        values=((1, 1, 1), (1, -1, 1), (2, 0, -1)),
    )
    cfg = Config(cache_dir=cache_dir)
    path = cache_path(cfg, "A", 2, 0)
    save_cache_entry(path, entry)
    assert load_cache_entry(path, "A", 2, 0) == entry
    # fingerprint mismatch is a miss, never partial reuse
    assert load_cache_entry(path, "A", 3, 0) is None


def test_corrupted_cache_recovers(cache_dir, capsys):
    run_cli(["table", "A", "2", "--cache-dir", str(cache_dir)])
    cfg = Config(cache_dir=cache_dir)
    path = cache_path(cfg, "A", 2, 0)
    path.write_text("{not json")
    code, out = run_cli(["table", "A", "2", "--cache-dir", str(cache_dir)])
    assert code == 0
    assert "(2,1)" in out
    err = capsys.readouterr().err
    assert "corrupted" in err


def test_tampered_cache_values_recomputed(cache_dir, capsys):
    run_cli(["table", "A", "2", "--cache-dir", str(cache_dir)])
    cfg = Config(cache_dir=cache_dir)
    path = cache_path(cfg, "A", 2, 0)
    payload = json.loads(path.read_text())
    payload["values"][0][0] = "7"  # break orthogonality
    path.write_text(json.dumps(payload))
    code, out = run_cli(["table", "A", "2", "--cache-dir", str(cache_dir)])
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("(3)")]
    assert lines and " 7" not in lines[0]
    assert "inconsistent" in capsys.readouterr().err


def test_config_validation():
    with pytest.raises(InvalidType):
        Config(max_group_order=1)
    with pytest.raises(InvalidType):
        Config(output_format="yaml")


def test_verify_bad_target(cache_dir):
    code, _ = run_cli(["verify", "A", "x", "--cache-dir", str(cache_dir)])
    assert code == 2
    code, _ = run_cli(["verify", "A", "2", "3", "--cache-dir", str(cache_dir)])
    assert code == 2
