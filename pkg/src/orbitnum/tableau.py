"""ヤング盤の列挙

標準盤と半標準盤を素朴に列挙する。フック公式や Kostka 数の照合用。
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .errors import InvalidInputError
from .partition import Composition, Partition

type Tableau = tuple[tuple[int, ...], ...]


def standard_tableaux(shape: Partition) -> Iterator[Tableau]:
    """形 shape の標準盤を 1..n で埋めて列挙する"""
    n = shape.n
    rows: list[list[int]] = [[] for _ in shape.parts]

    def rec(k: int) -> Iterator[Tableau]:
        if k > n:
            yield tuple(tuple(row) for row in rows)
            return
        for i, row in enumerate(rows):
            if len(row) == shape.parts[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= len(row):
                continue
            row.append(k)
            yield from rec(k + 1)
            row.pop()

    yield from rec(1)


def semistandard_tableaux(
    shape: Partition, content: Composition | Partition | Sequence[int]
) -> Iterator[Tableau]:
    """形 shape、内容 content の半標準盤を列挙する

    セルを行優先で埋め、行は広義単調増加、列は狭義単調増加とする。
    """
    values = tuple(content.parts if isinstance(content, Composition | Partition) else content)
    if sum(values) != shape.n:
        raise InvalidInputError(f"InvalidInput: |μ|={shape.n}, |α|={sum(values)}")
    cells = [(i, j) for i, length in enumerate(shape.parts) for j in range(length)]
    remaining = list(values)
    grid: list[list[int]] = [[0] * length for length in shape.parts]

    def rec(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[k]
        low = 1
        if j > 0:
            low = max(low, grid[i][j - 1])
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        for v in range(low, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[i][j] = v
            yield from rec(k + 1)
            remaining[v - 1] += 1
        grid[i][j] = 0

    yield from rec(0)


def row_of(tableau: Tableau, n: int) -> tuple[int, ...]:
    """タブロイド表現。index e-1 が entry e の行番号"""
    result = [0] * n
    for i, row in enumerate(tableau):
        for entry in row:
            result[entry - 1] = i
    return tuple(result)


def columns(tableau: Tableau) -> list[list[int]]:
    if not tableau:
        return []
    return [[row[j] for row in tableau if len(row) > j] for j in range(len(tableau[0]))]
