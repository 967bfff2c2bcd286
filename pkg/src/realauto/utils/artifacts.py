"""
CSV and JSON artifact writers.

Floats are written with repr, the shortest string that round-trips to the
same binary64 value, so repeated runs produce byte-identical files.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any

from ..models.curve_sample import CurveSample
from ..models.series_expansion import SeriesExpansion

CURVE_HEADER: tuple[str, ...] = ("x", "f", "f_prime")
SERIES_HEADER: tuple[str, ...] = ("index", "coefficient")
ITERATES_HEADER: tuple[str, ...] = ("k", "x", "f", "f_prime")


def format_float(value: float) -> str:
    """Shortest round-trip representation of a binary64 value."""
    return repr(float(value))


def _render_csv(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def curve_to_csv(sample: CurveSample) -> str:
    """Render a CurveSample as `x,f,f_prime` CSV."""
    return _render_csv(
        CURVE_HEADER,
        [tuple(format_float(v) for v in row) for row in sample.rows()],
    )


def iterates_to_csv(samples: list[CurveSample]) -> str:
    """Render h_1..h_n as one `k,x,f,f_prime` CSV, k counting from 1."""
    return _render_csv(
        ITERATES_HEADER,
        [
            (str(k), *(format_float(v) for v in row))
            for k, sample in enumerate(samples, start=1)
            for row in sample.rows()
        ],
    )


def series_to_csv(expansion: SeriesExpansion) -> str:
    """Render series coefficients as `index,coefficient` CSV."""
    return _render_csv(
        SERIES_HEADER,
        [(str(j), format_float(c)) for j, c in enumerate(expansion.coeffs)],
    )


def to_json(data: Any) -> str:
    """Deterministic JSON document with a trailing newline."""
    return json.dumps(data, indent=2) + "\n"


def write_text(path: str | Path, text: str) -> Path:
    """Write text to path, creating parent directories."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target


def sibling_path(path: str | Path, suffix: str) -> Path:
    """Path next to `path` named `<stem><suffix>`, e.g. arctan4.report.json."""
    target = Path(path)
    return target.with_name(f"{target.stem}{suffix}")
