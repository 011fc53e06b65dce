"""Deterministic CSV/JSON formatting for the command-line tools.

Floats are written with 17 significant digits so files round-trip the exact
double-precision values and repeated runs are byte-identical.
"""

import csv
import json

import numpy as np

__all__ = ["fmt", "matrix_payload", "write_csv", "write_json"]


def fmt(value) -> str:
    """Full-precision text for one CSV cell."""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def write_csv(path, header, rows) -> None:
    """Write one CSV file with a header row, UTF-8, '.' decimal point."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])


def write_json(path, payload) -> None:
    """Write one JSON file with sorted keys and a trailing newline."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def matrix_payload(m) -> dict:
    """JSON-friendly split of a complex matrix into real/imaginary grids."""
    m = np.asarray(m)
    return {
        "re": [[float(v) for v in row] for row in m.real],
        "im": [[float(v) for v in row] for row in m.imag],
    }
