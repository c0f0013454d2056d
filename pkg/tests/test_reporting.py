import json
import math

import numpy as np
import pytest

from ctaffect.grover import GroverConfig, ScanPoint, mood_congruent_demo, run
from ctaffect.judgement import Infusion
from ctaffect.reporting import emit_report, format_float, quantize, render, to_csv, to_json


def test_quantize_types():
    out = quantize({"b": np.float64(0.1) + np.float64(0.2), "a": (np.int64(3), True), "e": Infusion.LOW,
                    "c": 1 + 2j, "n": float("nan"), "z": 1e-30})
    assert out == {"b": 0.3, "a": [3, True], "e": "low", "c": [1.0, 2.0], "n": None, "z": 0.0}


def test_json_is_sorted_and_stable():
    text = to_json({"b": 1, "a": [math.pi]})
    assert text == '{\n  "a": [\n    3.14159265359\n  ],\n  "b": 1\n}\n'
    assert json.loads(text)["a"][0] == 3.14159265359


def test_format_float():
    assert format_float(1 / 3) == "0.333333333333"
    assert format_float(-1e-20) == "0"


def test_csv_layouts():
    tr = run(GroverConfig(4, (0,), iterations=1))
    assert render(tr, "csv") == "iteration,success\n0,0.25\n1,1\n"
    rep = mood_congruent_demo(4, dict(enumerate("+---")), "+", iterations=1)
    assert render(rep, "csv").splitlines()[0] == "iteration,congruent_recall,incongruent_recall"
    pts = [ScanPoint(0.0, 1.0, 0.5, 2)]
    assert render(pts, "csv") == "theta,phi,peakSuccess,peakIteration\n0,1,0.5,2\n"
    assert to_csv(["a"], [[0.1]]) == "a\n0.1\n"
    with pytest.raises(TypeError):
        render(object(), "csv")
    with pytest.raises(ValueError):
        render({}, "xml")


def test_emit_report(tmp_path):
    p = emit_report({"x": 1}, "json", tmp_path / "sub" / "r.json")
    assert p.read_bytes() == b'{\n  "x": 1\n}\n'


def test_emit_report_io_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OSError):
        emit_report({"x": 1}, "json", blocker / "r.json")
