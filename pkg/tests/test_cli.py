import json
import subprocess
import sys

import pytest

from cycliso import build_by_restrictions, build_R, cardinality_formula
from cycliso.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--n", "3..6", "--check-formula")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,enumerated,formula,match"
    assert lines[1] == "3,34,34,true"
    assert lines[4] == "6,703,703,true"


def test_count_single_n(capsys):
    code, out, _ = run(capsys, "count", "--n", "4")
    assert code == 0
    assert "4,97,97,true" in out


def test_count_is_byte_deterministic(capsys):
    _, out1, _ = run(capsys, "count", "--n", "3..5")
    _, out2, _ = run(capsys, "count", "--n", "3..5")
    assert out1 == out2


def test_enumerate_to_file_and_cache(tmp_path, capsys):
    out = tmp_path / "m3.jsonl"
    cache = tmp_path / "cache"
    code, _, _ = run(
        capsys, "enumerate", "--n", "3", "--out", str(out), "--cache-dir", str(cache)
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    m = build_by_restrictions(3)
    assert len(lines) == len(m)
    assert [json.loads(x) for x in lines] == [a.to_json() for a in m.elements]
    # cached rerun must reproduce the same bytes
    first = out.read_bytes()
    assert any(cache.iterdir())
    run(capsys, "enumerate", "--n", "3", "--out", str(out), "--cache-dir", str(cache))
    assert out.read_bytes() == first


def test_enumerate_methods_agree(capsys):
    _, by_restriction, _ = run(capsys, "enumerate", "--n", "4")
    _, by_closure, _ = run(capsys, "enumerate", "--n", "4", "--method", "closure")
    _, by_scan, _ = run(capsys, "enumerate", "--n", "4", "--method", "bruteforce")
    assert by_restriction == by_closure == by_scan


def test_enumerate_bruteforce_bound_is_usage_error(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "9", "--method", "bruteforce")
    assert code == 2
    assert "bruteforce bound" in err


def test_green_json(capsys):
    code, out, _ = run(capsys, "green", "--n", "4", "--relation", "H", "--verify-oracle")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 4 and obj["relation"] == "H"
    assert obj["verified"] is True
    assert sum(
        int(size) * count for size, count in obj["class_sizes_histogram"].items()
    ) == cardinality_formula(4)


def test_green_without_oracle(capsys):
    code, out, _ = run(capsys, "green", "--n", "5", "--relation", "J")
    assert code == 0
    assert json.loads(out)["verified"] is None


def test_rank_small(capsys):
    code, out, _ = run(capsys, "rank", "--n", "3", "--exhaustive-pairs")
    assert code == 0
    obj = json.loads(out)
    assert obj["triple_generates"] is True
    assert obj["generating_pairs"] == []
    assert obj["message"] == "no generating set of size <= 2; {g, h, e_n} generates"


def test_rank_pair_scan_gated(capsys):
    code, out, _ = run(capsys, "rank", "--n", "6", "--exhaustive-pairs")
    assert code == 0
    obj = json.loads(out)
    assert obj["triple_generates"] is True
    assert obj["pair_search"].startswith("skipped")


def test_present_show(capsys):
    code, out, _ = run(capsys, "present", "show", "--n", "3", "--which", "R")
    assert code == 0
    obj = json.loads(out)
    assert obj["alphabet"] == ["g", "h", "e_1", "e_2", "e_3"]
    assert len(obj["relations"]) == 16
    assert build_R(3).to_json() == obj


def test_present_verify_defines(capsys):
    for which in ("R", "Q"):
        code, out, _ = run(capsys, "present", "verify", "--n", "4", "--which", which)
        assert code == 0
        obj = json.loads(out)
        assert obj["verdict"] == "defines"
        assert obj["quotient_size"] == obj["target_size"] == 97


def test_present_verify_inconclusive_exit_code(capsys):
    code, out, _ = run(
        capsys, "present", "verify", "--n", "3", "--which", "R", "--max-slots", "5"
    )
    assert code == 3
    assert json.loads(out)["verdict"] == "inconclusive"


def test_present_verify_deterministic_modulo_wall_time(capsys):
    _, out1, _ = run(capsys, "present", "verify", "--n", "3", "--which", "Q")
    _, out2, _ = run(capsys, "present", "verify", "--n", "3", "--which", "Q")
    a, b = json.loads(out1), json.loads(out2)
    a.pop("wall_ms"), b.pop("wall_ms")
    assert a == b


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas", "--n", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["all_pass"] is True
    assert set(obj["suites"]) == {"corank1", "antipodal_pair", "empty_map"}
    assert obj["suites"]["corank1"] == {"checked": 4, "failures": []}


def test_tietze(capsys):
    code, out, _ = run(capsys, "tietze", "--n", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["all_pass"] is True
    assert obj["r_to_q"]["checked"] == 16
    assert obj["q_to_r"]["checked"] == 9


def test_out_flag_writes_json(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "tietze", "--n", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["all_pass"] is True


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count", "--n", "5..3"])
    assert info.value.code == 2
    assert "5..3" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["green", "--n", "2", "--relation", "L"])
    assert info.value.code == 2
    assert "n must be >= 3" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["present", "verify", "--n", "4"])  # --which missing
    assert info.value.code == 2
    assert "--which" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cycliso", "count", "--n", "3", "--check-formula"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "3,34,34,true" in proc.stdout
