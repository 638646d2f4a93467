"""表と報告の CSV / JSON 形式"""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Literal

from .kostka import KostkaMatrix
from .orbit_numbers import OrbitNumberTable

logger = logging.getLogger(__name__)

type MatrixName = Literal["M", "K", "Y"]
MATRIX_NAMES: tuple[MatrixName, ...] = ("M", "K", "Y")


def _csv(header: Sequence[str], labels: Sequence[str], rows: Sequence[Sequence[int]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["", *header])
    for label, row in zip(labels, rows, strict=True):
        writer.writerow([label, *(str(x) for x in row)])
    return buffer.getvalue()


def kostka_csv(matrix: KostkaMatrix) -> str:
    labels = [str(lam) for lam in matrix.order]
    return _csv(labels, labels, matrix.entries)


def kostka_json(matrix: KostkaMatrix) -> dict[str, Any]:
    """行と列は同じ order で並ぶ"""
    return {
        "n": matrix.n,
        "p": matrix.p,
        "order": [str(lam) for lam in matrix.order],
        "entries": [list(row) for row in matrix.entries],
    }


def table_csv(table: OrbitNumberTable, name: MatrixName) -> str:
    """M または Y は行が分割、列が軌道型。K は行列とも分割"""
    if name == "K":
        return kostka_csv(table.K)
    rows = table.M if name == "M" else table.Y
    return _csv([str(o) for o in table.cols], [str(lam) for lam in table.rows], rows)


def table_json(
    table: OrbitNumberTable, names: Sequence[MatrixName] = MATRIX_NAMES
) -> dict[str, Any]:
    data: dict[str, Any] = {
        "n": table.n,
        "p": table.p,
        "order_rows": [str(lam) for lam in table.rows],
        "order_cols": [str(o) for o in table.cols],
    }
    for name in MATRIX_NAMES:
        if name not in names:
            continue
        source = table.K.entries if name == "K" else table.M if name == "M" else table.Y
        data[name] = [list(row) for row in source]
    return data


def dumps(data: Any, *, indent: int | None = 2) -> str:
    return json.dumps(data, indent=indent, ensure_ascii=False)


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)
