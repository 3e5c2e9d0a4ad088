"""Matrix Market reader/writer for exact integer matrices.

Supports the ``array`` and ``coordinate`` formats with the ``integer`` field
and ``general`` or ``symmetric`` symmetry.  Real/complex files are rejected:
this package is float-free by design.
"""

from __future__ import annotations

import io
from os import PathLike

from .intmat import BigIntMatrix


class MatrixMarketError(ValueError):
    """Raised on malformed Matrix Market input."""


_HEADER_PREFIX = "%%matrixmarket"


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MatrixMarketError(f"invalid {what}: {token!r}") from None


def _data_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        yield lineno, stripped


def read_matrix_market(source) -> BigIntMatrix:
    """Read an integer matrix from a path, file object, or literal text."""
    if isinstance(source, (str, PathLike)):
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        text = source.read()
    else:
        raise TypeError("source must be a path or a readable file object")

    lines = text.splitlines()
    if not lines or not lines[0].lower().startswith(_HEADER_PREFIX):
        raise MatrixMarketError("missing %%MatrixMarket header line")
    header = lines[0].split()
    if len(header) != 5:
        raise MatrixMarketError(f"malformed header: {lines[0]!r}")
    _, obj, fmt, field, symmetry = (tok.lower() for tok in header)
    if obj != "matrix":
        raise MatrixMarketError(f"unsupported object {obj!r}")
    if fmt not in ("array", "coordinate"):
        raise MatrixMarketError(f"unsupported format {fmt!r}")
    if field != "integer":
        raise MatrixMarketError(f"unsupported field {field!r} (only integer)")
    if symmetry not in ("general", "symmetric"):
        raise MatrixMarketError(f"unsupported symmetry {symmetry!r}")

    body = "\n".join(lines[1:])
    entries = list(_data_lines(body))
    if not entries:
        raise MatrixMarketError("missing size line")
    _, size_line = entries[0]
    data = entries[1:]
    size = size_line.split()

    if fmt == "array":
        if len(size) != 2:
            raise MatrixMarketError(f"array size line must have 2 fields: {size_line!r}")
        m = _parse_int(size[0], "row count")
        n = _parse_int(size[1], "column count")
        if m < 0 or n < 0:
            raise MatrixMarketError("negative dimensions")
        return _read_array(data, m, n, symmetry)

    if len(size) != 3:
        raise MatrixMarketError(f"coordinate size line must have 3 fields: {size_line!r}")
    m = _parse_int(size[0], "row count")
    n = _parse_int(size[1], "column count")
    nnz = _parse_int(size[2], "entry count")
    if m < 0 or n < 0 or nnz < 0:
        raise MatrixMarketError("negative dimensions")
    return _read_coordinate(data, m, n, nnz, symmetry)


def _read_array(data, m: int, n: int, symmetry: str) -> BigIntMatrix:
    values = []
    for lineno, line in data:
        for tok in line.split():
            values.append(_parse_int(tok, f"entry on line {lineno}"))
    if symmetry == "general":
        expected = m * n
    else:
        if m != n:
            raise MatrixMarketError("symmetric matrix must be square")
        expected = n * (n + 1) // 2
    if len(values) != expected:
        raise MatrixMarketError(f"expected {expected} array entries, got {len(values)}")
    ent = [0] * (m * n)
    idx = 0
    if symmetry == "general":
        # Array data is column-major.
        for j in range(n):
            for i in range(m):
                ent[i * n + j] = values[idx]
                idx += 1
    else:
        for j in range(n):
            for i in range(j, m):
                ent[i * n + j] = values[idx]
                ent[j * n + i] = values[idx]
                idx += 1
    return BigIntMatrix(m, n, ent)


def _read_coordinate(data, m: int, n: int, nnz: int, symmetry: str) -> BigIntMatrix:
    triples = []
    for lineno, line in data:
        toks = line.split()
        if len(toks) != 3:
            raise MatrixMarketError(f"coordinate line {lineno} must have 3 fields: {line!r}")
        i = _parse_int(toks[0], f"row index on line {lineno}")
        j = _parse_int(toks[1], f"column index on line {lineno}")
        v = _parse_int(toks[2], f"value on line {lineno}")
        triples.append((i, j, v))
    if len(triples) != nnz:
        raise MatrixMarketError(f"expected {nnz} coordinate entries, got {len(triples)}")
    ent = [0] * (m * n)
    seen = set()
    for i, j, v in triples:
        if not (1 <= i <= m and 1 <= j <= n):
            raise MatrixMarketError(f"index ({i}, {j}) out of range for {m}x{n}")
        if (i, j) in seen:
            raise MatrixMarketError(f"duplicate entry at ({i}, {j})")
        seen.add((i, j))
        ent[(i - 1) * n + (j - 1)] = v
        if symmetry == "symmetric" and i != j:
            if (j, i) in seen:
                raise MatrixMarketError(f"duplicate entry at ({j}, {i})")
            seen.add((j, i))
            ent[(j - 1) * n + (i - 1)] = v
    return BigIntMatrix(m, n, ent)


def write_matrix_market(matrix: BigIntMatrix, target=None, fmt: str = "coordinate") -> str:
    """Serialize a matrix; optionally write it to a path or file object.

    Returns the serialized text either way.
    """
    if fmt not in ("array", "coordinate"):
        raise ValueError(f"unsupported format {fmt!r}")
    m, n = matrix.rows, matrix.cols
    out = [f"%%MatrixMarket matrix {fmt} integer general"]
    if fmt == "array":
        out.append(f"{m} {n}")
        for j in range(n):
            for i in range(m):
                out.append(str(matrix[i, j]))
    else:
        nonzero = [(i, j, matrix[i, j]) for i in range(m) for j in range(n) if matrix[i, j]]
        out.append(f"{m} {n} {len(nonzero)}")
        for i, j, v in nonzero:
            out.append(f"{i + 1} {j + 1} {v}")
    text = "\n".join(out) + "\n"
    if target is not None:
        if isinstance(target, (str, PathLike)):
            with open(target, "w", encoding="ascii") as fh:
                fh.write(text)
        else:
            target.write(text)
    return text
