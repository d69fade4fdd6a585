import math

import numpy as np
import pytest

from vqsim.exceptions import ShapeError, ValidationError
from vqsim.io import ingest_csv, write_matrix_csv, write_text_atomic


def _write(tmp_path, text):
    p = tmp_path / "data.csv"
    p.write_text(text)
    return str(p)


def test_reads_selected_columns(tmp_path):
    path = _write(tmp_path, "a,b,c\n1,2,3\n4,5,6\n")
    X = ingest_csv(path, ["a", "c"])
    np.testing.assert_array_equal(X, [[1.0, 3.0], [4.0, 6.0]])


def test_scaling_maps_extremes_to_zero_and_two_pi(tmp_path):
    path = _write(tmp_path, "x,y\n0,5\n10,5\n5,5\n")
    X = ingest_csv(path, ["x", "y"], scale=True)
    np.testing.assert_allclose(X[:, 0], [0.0, 2 * math.pi, math.pi], atol=1e-15)
    # a constant column scales to zeros rather than dividing by zero
    np.testing.assert_array_equal(X[:, 1], [0.0, 0.0, 0.0])


def test_missing_cells_imputed_with_column_mean(tmp_path):
    path = _write(tmp_path, "x,y\n1,5\nnan,6\n3,7\n")
    X = ingest_csv(path, ["x", "y"])
    np.testing.assert_allclose(X[:, 0], [1.0, 2.0, 3.0])
    np.testing.assert_allclose(X[:, 1], [5.0, 6.0, 7.0])


def test_missing_column_rejected(tmp_path):
    path = _write(tmp_path, "a,b\n1,2\n")
    with pytest.raises(ValidationError):
        ingest_csv(path, ["z"])


def test_non_numeric_cell_rejected(tmp_path):
    path = _write(tmp_path, "a\nfoo\n")
    with pytest.raises(ValidationError):
        ingest_csv(path, ["a"])


def test_empty_file_rejected(tmp_path):
    path = _write(tmp_path, "a\n")
    with pytest.raises(ShapeError):
        ingest_csv(path, ["a"])


def test_all_missing_column_rejected(tmp_path):
    path = _write(tmp_path, "a,b\nnan,1\nnan,2\n")
    with pytest.raises(ValidationError):
        ingest_csv(path, ["a", "b"])


def test_atomic_write_replaces_existing(tmp_path):
    target = tmp_path / "out.txt"
    target.write_text("old")
    write_text_atomic(str(target), "new contents\n")
    assert target.read_text() == "new contents\n"
    assert list(tmp_path.iterdir()) == [target]  # no stray temp files


def test_matrix_csv_round_trip(tmp_path):
    target = tmp_path / "m.csv"
    m = np.array([[1.0, 0.5], [0.5, 1.0 / 3.0]])
    write_matrix_csv(str(target), m)
    back = np.loadtxt(str(target), delimiter=",")
    np.testing.assert_array_equal(back, m)  # repr() keeps full precision
