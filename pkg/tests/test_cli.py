"""CLI behaviour and golden artifacts.

Regenerate the golden files with ``python tests/test_cli.py``.
"""
import io
import json
import math
import shutil
import sys
from pathlib import Path

import pytest

from ctaffect.cli import main, parse_angle, parse_grid, parse_int_list, run_experiment
from ctaffect.errors import ConfigInvalid

GOLDEN = Path(__file__).parent / "golden"

# name -> argv; every experiment appears at least once
GOLDEN_CASES = {
    "classify-medium-coherent": ["classify-medium", "--medium", "coherent"],
    "classify-medium-classical": ["classify-medium", "--medium", "classical"],
    "conjunction-coherent": ["conjunction", "--medium", "coherent"],
    "conjunction-classical": ["conjunction", "--medium", "classical", "--seed", "1", "--states", "200"],
    "e1e2-coherent": ["e1e2", "--medium", "coherent"],
    "e1e2-classical": ["e1e2", "--medium", "classical", "--seed", "1", "--mixtures", "200"],
    "symmetry-coherent": ["symmetry", "--medium", "coherent"],
    "symmetry-classical": ["symmetry", "--medium", "classical"],
    "wfw-scan": ["wfw-scan"],
    "grover": ["grover", "--N", "64", "--M", "2", "--iters", "20"],
    "grover-scan": ["grover-scan", "--N", "16", "--grid-size", "5"],
    "mood-demo": ["mood-demo", "--N", "16"],
}


def _run(argv, out):
    return main([*argv, "--out", str(out)])


def _files(d: Path) -> dict:
    return {p.name: p.read_bytes() for p in sorted(d.iterdir())}


# -- parsing ------------------------------------------------------------------

@pytest.mark.parametrize(
    "text,value",
    [("pi", math.pi), ("-pi/2", -math.pi / 2), ("3pi/4", 0.75 * math.pi), ("0.5*pi", 0.5 * math.pi),
     ("1.25", 1.25), ("2π", 2 * math.pi), (0.3, 0.3)],
)
def test_parse_angle(text, value):
    assert parse_angle(text) == pytest.approx(value, abs=1e-15)


def test_parse_angle_rejects_garbage():
    with pytest.raises(ConfigInvalid):
        parse_angle("tau")


def test_parse_grid():
    assert parse_grid("0:pi:3") == pytest.approx([0, math.pi / 2, math.pi])
    assert parse_grid("0,pi") == pytest.approx([0, math.pi])
    with pytest.raises(ConfigInvalid):
        parse_grid("0:pi:x")
    with pytest.raises(ConfigInvalid):
        parse_grid("0:pi:0")


def test_parse_int_list():
    assert parse_int_list("1, 3") == [1, 3]
    with pytest.raises(ConfigInvalid):
        parse_int_list("1,b")


# -- exit codes ---------------------------------------------------------------

def test_list(capsys):
    assert main(["--list"]) == 0
    names = [l.split("\t")[0] for l in capsys.readouterr().out.splitlines()]
    assert names == ["classify-medium", "conjunction", "e1e2", "symmetry", "wfw-scan", "grover", "grover-scan", "mood-demo"]


def test_no_experiment():
    assert main([]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["grover", "--N", "6"],
        ["grover", "--N", "4", "--M", "4"],
        ["grover", "--theta", "tau"],
        ["conjunction", "--medium", "classical"],
        ["mood-demo", "--N", "4", "--tags=----"],
        ["mood-demo", "--N", "4", "--tags", "++"],
        ["symmetry", "--medium", "classical", "--jx", "0.1", "--jxa", "0.5"],
        ["grover-scan", "--grid-size", "0"],
    ],
)
def test_invalid_config_exits_2(argv, tmp_path, capsys):
    assert _run(argv, tmp_path) == 2
    assert "invalid configuration" in capsys.readouterr().err


def test_resource_limit_exits_3(tmp_path):
    assert _run(["grover", "--N", str(2**15)], tmp_path) == 3


def test_unwritable_out_exits_3(tmp_path):
    blocker = tmp_path / "f"
    blocker.write_text("")
    assert main(["wfw-scan", "--out", str(blocker / "d")]) == 3


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("[1, 2]")
    assert main(["grover", "--config", str(cfg)]) == 2
    assert main(["grover", "--config", str(tmp_path / "missing.yaml")]) == 2


def test_bad_seed_env(tmp_path, monkeypatch):
    monkeypatch.setenv("CT_AFFECT_SEED", "abc")
    assert _run(["conjunction", "--medium", "classical"], tmp_path) == 2


# -- configuration precedence -------------------------------------------------

def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("N: 16\nM: 1\niters: 3\ntheta: pi/2\n")
    assert main(["grover", "--config", str(cfg), "--out", str(tmp_path / "a")]) == 0
    doc = json.loads((tmp_path / "a" / "grover.json").read_text())
    assert doc["N"] == 16 and doc["iterations"] == 3 and doc["theta"] == pytest.approx(math.pi / 2, abs=1e-11)
    assert main(["grover", "--config", str(cfg), "--iters", "5", "--out", str(tmp_path / "b")]) == 0
    doc = json.loads((tmp_path / "b" / "grover.json").read_text())
    assert doc["iterations"] == 5


def test_seed_from_env(tmp_path, monkeypatch):
    monkeypatch.setenv("CT_AFFECT_SEED", "9")
    assert _run(["conjunction", "--medium", "classical", "--states", "20"], tmp_path / "env") == 0
    monkeypatch.delenv("CT_AFFECT_SEED")
    assert _run(["conjunction", "--medium", "classical", "--states", "20", "--seed", "9"], tmp_path / "flag") == 0
    assert _files(tmp_path / "env") == _files(tmp_path / "flag")


def test_stdout_json():
    buf = io.StringIO()
    run_experiment("grover", {"N": 4, "M": 1, "iters": 1}, None, buf)
    doc = json.loads(buf.getvalue())
    assert doc["trace"]["success_by_iteration"] == [0.25, 1.0]


def test_grover_marked_list(tmp_path):
    assert _run(["grover", "--N", "8", "--marked", "3,5", "--iters", "1"], tmp_path) == 0
    doc = json.loads((tmp_path / "grover.json").read_text())
    assert doc["marked"] == [3, 5]


# -- determinism and golden files ---------------------------------------------

@pytest.mark.parametrize("case", sorted(GOLDEN_CASES))
def test_golden(case, tmp_path):
    assert _run(GOLDEN_CASES[case], tmp_path) == 0
    expected = GOLDEN / case
    assert expected.is_dir(), f"missing golden directory for {case}"
    assert _files(tmp_path) == _files(expected)


def regenerate():
    for case, argv in GOLDEN_CASES.items():
        d = GOLDEN / case
        shutil.rmtree(d, ignore_errors=True)
        if _run(argv, d) != 0:
            raise SystemExit(f"{case} failed")
        print(case, sorted(p.name for p in d.iterdir()))


if __name__ == "__main__":
    sys.exit(regenerate())
