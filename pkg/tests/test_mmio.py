"""Matrix Market round trips and error handling."""

from __future__ import annotations

import io
import random

import pytest

from critgroup.intmat import BigIntMatrix
from critgroup.mmio import MatrixMarketError, read_matrix_market, write_matrix_market


def test_coordinate_round_trip(tmp_path):
    m = BigIntMatrix.from_rows([[2, 0, -4], [0, 0, 8]])
    path = tmp_path / "m.mtx"
    write_matrix_market(m, path, fmt="coordinate")
    assert read_matrix_market(path) == m


def test_array_round_trip(tmp_path):
    m = BigIntMatrix.from_rows([[2, 4], [6, 8]])
    path = tmp_path / "m.mtx"
    write_matrix_market(m, path, fmt="array")
    assert read_matrix_market(path) == m


def test_random_round_trips():
    rng = random.Random(23)
    for _ in range(30):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = BigIntMatrix(rows, cols, [rng.randint(-50, 50) for _ in range(rows * cols)])
        for fmt in ("array", "coordinate"):
            text = write_matrix_market(m, fmt=fmt)
            assert read_matrix_market(io.StringIO(text)) == m


def test_big_integers_survive():
    m = BigIntMatrix.from_rows([[10**80, -(3**100)]])
    for fmt in ("array", "coordinate"):
        assert read_matrix_market(io.StringIO(write_matrix_market(m, fmt=fmt))) == m


def test_laplacian_export_round_trip(tmp_path):
    from critgroup.graphs import kneser_graph, laplacian_matrix

    lap = laplacian_matrix(kneser_graph(6))
    path = tmp_path / "lap.mtx"
    write_matrix_market(lap, path, fmt="coordinate")
    assert read_matrix_market(path) == lap


def test_symmetric_coordinate():
    text = "%%MatrixMarket matrix coordinate integer symmetric\n3 3 2\n2 1 5\n3 3 7\n"
    m = read_matrix_market(io.StringIO(text))
    assert m == BigIntMatrix.from_rows([[0, 5, 0], [5, 0, 0], [0, 0, 7]])


def test_symmetric_array():
    # Lower triangle, column-major: (1,1) (2,1) (2,2)
    text = "%%MatrixMarket matrix array integer symmetric\n2 2\n1\n2\n3\n"
    m = read_matrix_market(io.StringIO(text))
    assert m == BigIntMatrix.from_rows([[1, 2], [2, 3]])


def test_comments_and_blank_lines():
    text = (
        "%%MatrixMarket matrix coordinate integer general\n"
        "% a comment\n"
        "\n"
        "2 2 1\n"
        "% another\n"
        "1 2 -3\n"
    )
    m = read_matrix_market(io.StringIO(text))
    assert m == BigIntMatrix.from_rows([[0, -3], [0, 0]])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "garbage\n",
        "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1.5\n",
        "%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 7\n",
        "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 7\n1 1 8\n",
        "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 7\n",
        "%%MatrixMarket matrix array integer general\n2 2\n1\n2\n3\n",
        "%%MatrixMarket matrix array integer general\n2 2\n1\n2\n3\n4\n5\n",
        "%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 1 2.5\n",
        "%%MatrixMarket matrix array integer hermitian\n1 1\n1\n",
    ],
)
def test_malformed_inputs_rejected(text):
    with pytest.raises(MatrixMarketError):
        read_matrix_market(io.StringIO(text))


def test_write_rejects_unknown_format():
    with pytest.raises(ValueError):
        write_matrix_market(BigIntMatrix.identity(2), fmt="dense")
