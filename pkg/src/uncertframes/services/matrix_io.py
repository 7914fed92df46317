"""
Pair files: a header line "d,m" followed by m rows of 2d cells. Row n
holds the functional f_n (d cells) followed by the vector tau_n (d cells).
Cells are complex numbers written "re+imi" with both parts in hexadecimal
float notation, so a write-then-read round trip is bit-exact.
"""

import io
import re
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from uncertframes.components.frames import FramePair
from uncertframes.utils.exceptions import InputError, MatrixFormatError
from uncertframes.utils.logger import CustomLogger

logger = CustomLogger(module_name=__name__).get_logger()

_HEX = r"0x[0-9a-f]+(?:\.[0-9a-f]*)?p[+-]?\d+"
_CELL = re.compile(rf"^(?P<re>[+-]?{_HEX})(?P<im>[+-]{_HEX})i$", re.IGNORECASE)


def format_complex(value: complex) -> str:
    real = float(value.real).hex()
    imag = float(value.imag).hex()
    sign = "" if imag.startswith("-") else "+"
    return f"{real}{sign}{imag}i"


def parse_complex(cell: str, row: Optional[int] = None) -> complex:
    match = _CELL.match(cell.strip())
    if match is None:
        raise MatrixFormatError(f"cannot parse complex cell {cell!r}", row=row)
    return complex(float.fromhex(match.group("re")), float.fromhex(match.group("im")))


def write_pair(pair: FramePair, path: Union[str, Path]) -> Path:
    path = Path(path)
    cells = np.hstack([pair.analysis, pair.synthesis.T])
    table = pd.DataFrame([[format_complex(v) for v in row] for row in cells])

    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as handle:
            handle.write(f"{pair.ambient_dim},{pair.count}\n")
            table.to_csv(handle, header=False, index=False)
    except OSError as e:
        raise InputError(f"cannot write pair file {path}: {e.strerror or e}") from e

    logger.info(f"Wrote {pair!r} to {path}")
    return path


def _parse_header(line: str) -> tuple:
    parts = line.strip().split(",")
    try:
        d, m = (int(part) for part in parts)
    except ValueError as e:
        raise MatrixFormatError(f"header must be 'd,m', got {line.strip()!r}", row=0) from e
    if d < 1 or m < d:
        raise MatrixFormatError(f"header needs 1 <= d <= m, got d={d}, m={m}", row=0)
    return d, m


def read_pair(path: Union[str, Path], label: Optional[str] = None) -> FramePair:
    """Read a pair file. Errors name the offending row (0 is the header)."""
    path = Path(path)
    if not path.is_file():
        raise MatrixFormatError(f"pair file not found: {path}")

    try:
        text = path.read_text()
    except (OSError, UnicodeDecodeError) as e:
        raise MatrixFormatError(f"cannot read pair file {path}: {e}") from e
    header, _, body = text.partition("\n")
    d, m = _parse_header(header)

    try:
        table = pd.read_csv(
            io.StringIO(body),
            header=None,
            names=list(range(2 * d)),
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
        )
    except pd.errors.ParserError as e:
        found = re.search(r"line (\d+)", str(e))
        row = int(found.group(1)) if found else None
        raise MatrixFormatError(f"expected {2 * d} cells per row ({e})", row=row) from e
    except pd.errors.EmptyDataError as e:
        raise MatrixFormatError(f"expected {m} rows, found none", row=1) from e

    if len(table) != m:
        raise MatrixFormatError(f"expected {m} rows after the header, found {len(table)}", row=len(table) + 1)

    values = np.empty((m, 2 * d), dtype=np.complex128)
    for index, row in enumerate(table.itertuples(index=False), start=1):
        for column, cell in enumerate(row):
            if cell is None or cell == "" or (isinstance(cell, float) and np.isnan(cell)):
                raise MatrixFormatError(f"expected {2 * d} cells, cell {column + 1} is missing", row=index)
            values[index - 1, column] = parse_complex(cell, row=index)

    logger.info(f"Read pair file {path} (d={d}, m={m})")
    return FramePair(values[:, :d], values[:, d:].T, label=label or f"file:{path.name}")
