"""CSV ingestion and atomic result writing for the CLI."""

from __future__ import annotations

import csv
import math
import os
import tempfile

import numpy as np

from .exceptions import ShapeError, ValidationError

TWO_PI = 2.0 * math.pi


def ingest_csv(path: str, feature_columns, scale: bool = False) -> np.ndarray:
    """Read feature columns from a headered CSV into a row-major matrix.

    Missing cells are imputed by their column mean.  With ``scale``, each
    column is min-max mapped onto [0, 2*pi]; the column max lands on
    2*pi exactly (angle periodicity makes 2*pi equivalent to 0), and a
    constant column scales to all zeros.
    """
    feature_columns = list(feature_columns)
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in feature_columns:
            if col not in header:
                raise ValidationError(f"column {col!r} missing from {path}")
        rows = []
        for record in reader:
            row = []
            for col in feature_columns:
                cell = (record.get(col) or "").strip()
                if not cell or cell.lower() == "nan":
                    row.append(math.nan)
                    continue
                try:
                    row.append(float(cell))
                except ValueError:
                    raise ValidationError(
                        f"non-numeric cell {cell!r} in column {col!r}"
                    ) from None
            rows.append(row)
    if not rows:
        raise ShapeError(f"no data rows in {path}")
    X = np.array(rows, dtype=np.float64)
    for j in range(X.shape[1]):
        col = X[:, j]
        mask = np.isnan(col)
        if mask.all():
            raise ValidationError(
                f"column {feature_columns[j]!r} has no numeric values"
            )
        if mask.any():
            col[mask] = col[~mask].mean()
    if scale:
        lo = X.min(axis=0)
        hi = X.max(axis=0)
        span = hi - lo
        out = np.zeros_like(X)
        nonconst = span > 0
        out[:, nonconst] = (X[:, nonconst] - lo[nonconst]) / span[nonconst] * TWO_PI
        X = out
    return X


def write_text_atomic(path: str, text: str):
    """Write-temp-then-rename so readers never see a partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_matrix_csv(path: str, matrix):
    """Headerless CSV matrix with full float precision."""
    lines = [
        ",".join(repr(float(v)) for v in row) for row in np.atleast_2d(matrix)
    ]
    write_text_atomic(path, "\n".join(lines) + "\n")
