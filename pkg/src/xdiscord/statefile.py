"""JSON state files: ``{"dim": d, "matrix": [[[re, im], ...], ...], "label": ...}``."""

import json

import numpy as np

from .linalg import InvalidStateError, validate_density_matrix


class StateFileError(ValueError):
    """Malformed state file; ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


def parse_state(text):
    """Parse state-file text into ``(matrix, label)`` without validating physics."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise StateFileError("top level must be an object")
    dim = doc.get("dim")
    rows = doc.get("matrix")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
        raise StateFileError(f"dim must be a positive integer, got {dim!r}")
    if not isinstance(rows, list) or len(rows) != dim:
        raise StateFileError(f"matrix must have {dim} rows")
    out = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise StateFileError(f"row {i} must have {dim} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
            ):
                raise StateFileError(f"entry [{i}][{j}] must be a [re, im] pair of numbers")
            out[i, j] = complex(float(entry[0]), float(entry[1]))
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise StateFileError("label must be a string")
    return out, label


def load_state(path, with_label=False):
    """Read and validate a state file.

    Raises :class:`StateFileError` for malformed files and
    :class:`InvalidStateError` when the matrix is not a density matrix.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    rho, label = parse_state(text)
    rho = validate_density_matrix(rho)
    return (rho, label) if with_label else rho


def format_state(rho, label=None):
    rho = np.asarray(rho, dtype=complex)
    doc = {
        "dim": int(rho.shape[0]),
        # repr-exact floats, so a dump/load cycle is bit-exact
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in rho],
    }
    if label is not None:
        doc["label"] = label
    return json.dumps(doc, indent=1) + "\n"


def dump_state(rho, path, label=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_state(rho, label))


__all__ = [
    "InvalidStateError",
    "StateFileError",
    "dump_state",
    "format_state",
    "load_state",
    "parse_state",
]
