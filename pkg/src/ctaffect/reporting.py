"""Deterministic JSON/CSV output: sorted keys, 12 significant digits."""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

SIG_DIGITS = 12
# magnitudes below this are round-off residue and print as 0
ZERO_FLOOR = 1e-15


def format_float(x: float) -> str:
    x = float(x)
    if abs(x) < ZERO_FLOOR:
        x = 0.0
    return f"{x:.{SIG_DIGITS}g}"


def quantize(obj: Any) -> Any:
    """Round floats to 12 significant digits (|x| < 1e-15 becomes 0) and turn containers into JSON types."""
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, enum.Enum):
        return quantize(obj.value)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x) or math.isinf(x):
            return None
        x = float(format_float(x))
        return 0.0 if x == 0 else x
    if isinstance(obj, complex):
        return [quantize(obj.real), quantize(obj.imag)]
    if isinstance(obj, np.ndarray):
        return quantize(obj.tolist())
    if isinstance(obj, dict):
        return {str(k): quantize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [quantize(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return quantize(obj.to_dict())
    return obj


def to_json(obj: Any) -> str:
    return json.dumps(quantize(obj), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_float(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def _csv_table(report) -> tuple[list[str], list[list]]:
    from .grover import GroverTrace, MoodReport, ScanPoint

    if isinstance(report, GroverTrace):
        return ["iteration", "success"], [[j, p] for j, p in report.rows()]
    if isinstance(report, MoodReport):
        rows = [[j, c, 1.0 - c] for j, c in enumerate(report.congruent_recall)]
        return ["iteration", "congruent_recall", "incongruent_recall"], rows
    if isinstance(report, (list, tuple)) and report and isinstance(report[0], ScanPoint):
        rows = [[p.theta, p.phi, p.peak_success, p.peak_iteration] for p in report]
        return ["theta", "phi", "peakSuccess", "peakIteration"], rows
    if isinstance(report, dict) and "header" in report and "rows" in report:
        return list(report["header"]), [list(r) for r in report["rows"]]
    raise TypeError(f"no CSV layout for {type(report).__name__}")


def render(report, format: str) -> str:
    if format == "json":
        return to_json(report)
    if format == "csv":
        header, rows = _csv_table(report)
        return to_csv(header, rows)
    raise ValueError(f"unknown format {format!r}")


def emit_report(report, format: str, path: str | Path) -> Path:
    """Write ``report`` as JSON or CSV; OSError propagates on I/O failure."""
    path = Path(path)
    text = render(report, format)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path
