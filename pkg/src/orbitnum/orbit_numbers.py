"""軌道数 y_{λ,O} と表 M, K, Y

m_{λ,O} は軌道型 O の軌道を λ の行に入れる方法の数 (= dim M^λ(P))。
y_{λ,O} は m_{λ,O} = y_{λ,O} + Σ_{μ▷λ} k_{λ,μ} y_{μ,O} を後退代入で解いて得る。
"""

from __future__ import annotations

import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Literal

from .config import check_ceiling, require_prime
from .errors import InvalidInputError, TableInconsistencyError
from .kostka import KostkaMatrix, kostka_matrix, young_module_dimension
from .orbit_type import (
    OrbitType,
    canonical_orbit_type,
    orbit_types,
    trivial_orbit_type,
)
from .partition import (
    Partition,
    level_decompositions,
    multinomial,
    p_adic_expansion,
    partitions,
    perm_module_dimension,
    specht_dimension,
)

logger = logging.getLogger(__name__)

type TwoPartForm = Literal["dimension", "binomial"]


class JordanKind(Enum):
    YOUNG = "young"
    YOUNG_PERMUTATION = "permutation"


def _check_sizes(lam: Partition, orbit: OrbitType) -> None:
    if lam.n != orbit.n:
        raise InvalidInputError(f"InvalidInput: |λ|={lam.n}, |O|={orbit.n}")


def _check_prime(orbit: OrbitType, p: int) -> None:
    if orbit.p != p:
        raise InvalidInputError(f"InvalidInput: 軌道型の p={orbit.p} と p={p} が一致しません")


def m_number(lam: Partition, orbit: OrbitType) -> int:
    """m_{λ,O} = Σ_{α ∈ Λ(λ,O)} Π_i dim M^{α^(i)}"""
    _check_sizes(lam, orbit)
    total = 0
    for alphas in level_decompositions(lam, orbit.mult or (0,), orbit.p):
        total += math.prod(multinomial(alpha) for alpha in alphas)
    return total


def m_oracle(lam: Partition, orbit: OrbitType) -> int:
    """軌道 (区別する) を行にちょうど埋まるよう割り当てる方法を全探索で数える"""
    _check_sizes(lam, orbit)
    sizes = orbit.sizes()
    capacity = list(lam.parts)

    def rec(k: int) -> int:
        if k == len(sizes):
            return 1
        count = 0
        for i, room in enumerate(capacity):
            if room >= sizes[k]:
                capacity[i] -= sizes[k]
                count += rec(k + 1)
                capacity[i] += sizes[k]
        return count

    return rec(0)


@dataclass(frozen=True, slots=True)
class JordanType:
    """[1]^ones [p]^pblocks"""

    p: int
    ones: int
    pblocks: int

    @property
    def dimension(self) -> int:
        return self.ones + self.p * self.pblocks

    @property
    def generically_free(self) -> bool:
        return self.ones == 0

    def __str__(self) -> str:
        return f"[1]^{self.ones}[{self.p}]^{self.pblocks}"


@dataclass(frozen=True, slots=True)
class OrbitNumberTable:
    """(n, p) の表。行は n の分割 (辞書式降順)、列は軌道型 (指数ベクトルの辞書式降順)"""

    n: int
    p: int
    rows: tuple[Partition, ...]
    cols: tuple[OrbitType, ...]
    M: tuple[tuple[int, ...], ...]
    Y: tuple[tuple[int, ...], ...]
    K: KostkaMatrix

    def _cell(self, lam: Partition, orbit: OrbitType) -> tuple[int, int]:
        try:
            return self.rows.index(lam), self.cols.index(orbit)
        except ValueError:
            raise InvalidInputError(
                f"InvalidInput: ({lam.label()}, {orbit}) は n={self.n}, p={self.p} の表にありません"
            ) from None

    def m(self, lam: Partition, orbit: OrbitType) -> int:
        i, j = self._cell(lam, orbit)
        return self.M[i][j]

    def y(self, lam: Partition, orbit: OrbitType) -> int:
        i, j = self._cell(lam, orbit)
        return self.Y[i][j]


def _solve_column(
    orbit: OrbitType, rows: tuple[Partition, ...], kostka: KostkaMatrix
) -> tuple[list[int], list[int]]:
    m_column = [m_number(lam, orbit) for lam in rows]
    y_column: list[int] = []
    for i, lam in enumerate(rows):
        value = m_column[i]
        for j in range(i):
            k = kostka.entries[i][j]
            if k:
                value -= k * y_column[j]
        if value < 0:
            logger.error("negative orbit number at (%s, %s): %d", lam.label(), orbit, value)
            raise TableInconsistencyError(
                f"TableInconsistency: y={value} < 0 at λ={lam.label()}, O={orbit}"
                f" (n={kostka.n}, p={kostka.p})"
            )
        y_column.append(value)
    return m_column, y_column


def _validate(table: OrbitNumberTable) -> None:
    k = table.K.entries
    size = len(table.rows)
    for j, orbit in enumerate(table.cols):
        for i, lam in enumerate(table.rows):
            product = sum(k[i][t] * table.Y[t][j] for t in range(size))
            if product != table.M[i][j]:
                raise TableInconsistencyError(
                    f"TableInconsistency: (K·Y)={product} ≠ m={table.M[i][j]}"
                    f" at λ={lam.label()}, O={orbit}"
                )
    trivial = trivial_orbit_type(table.n, table.p)
    j = table.cols.index(trivial)
    for i, lam in enumerate(table.rows):
        expected = young_module_dimension(lam, table.p)
        if table.Y[i][j] != expected:
            raise TableInconsistencyError(
                f"TableInconsistency: y={table.Y[i][j]} ≠ dim Y={expected}"
                f" at λ={lam.label()}, O={trivial}"
            )


def _build(n: int, p: int, max_workers: int | None) -> OrbitNumberTable:
    kostka = kostka_matrix(n, p)
    rows = partitions(n)
    cols = orbit_types(n, p)
    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            solved = list(executor.map(lambda orbit: _solve_column(orbit, rows, kostka), cols))
    else:
        solved = [_solve_column(orbit, rows, kostka) for orbit in cols]
    M = tuple(tuple(solved[j][0][i] for j in range(len(cols))) for i in range(len(rows)))
    Y = tuple(tuple(solved[j][1][i] for j in range(len(cols))) for i in range(len(rows)))
    table = OrbitNumberTable(n, p, rows, cols, M, Y, kostka)
    _validate(table)
    return table


_tables: dict[tuple[int, int], OrbitNumberTable | TableInconsistencyError] = {}
_tables_lock = threading.Lock()


def build_tables(n: int, p: int, *, max_workers: int | None = None) -> OrbitNumberTable:
    """(n, p) の表を作る。結果は (n, p) ごとにキャッシュする

    検証に失敗した表はキャッシュに失敗として残り、以後も同じ例外を送出する。
    """
    require_prime(p)
    if n < 0:
        raise InvalidInputError(f"InvalidInput: n={n} は負です")
    check_ceiling(n, p)
    key = (n, p)
    with _tables_lock:
        cached = _tables.get(key)
    if isinstance(cached, TableInconsistencyError):
        raise cached
    if cached is not None:
        return cached
    logger.info("building tables n=%d p=%d", n, p)
    try:
        table = _build(n, p, max_workers)
    except TableInconsistencyError as e:
        logger.error("tables n=%d p=%d poisoned: %s", n, p, e)
        with _tables_lock:
            _tables[key] = e
        raise
    with _tables_lock:
        # 並行して作られた場合も内容は同じなので先に入った方を使う
        existing = _tables.setdefault(key, table)
    if isinstance(existing, TableInconsistencyError):
        raise existing
    return existing


def clear_table_cache() -> None:
    with _tables_lock:
        _tables.clear()


def orbit_number(lam: Partition, orbit: OrbitType, p: int) -> int:
    """y_{λ,O}"""
    require_prime(p)
    _check_prime(orbit, p)
    _check_sizes(lam, orbit)
    return build_tables(lam.n, p).y(lam, orbit)


def y_canonical_product(lam: Partition, p: int) -> int:
    """y_{λ,O_λ} = Π_i dim Y^{λ(i)}"""
    require_prime(p)
    return math.prod(young_module_dimension(term, p) for term in p_adic_expansion(lam, p))


def y_hook_closed_form(n: int, orbit: OrbitType, p: int) -> int:
    """y_{(n−1,1),O}: a_0 = 0 なら 0、p | n なら a_0、それ以外は a_0 − 1"""
    require_prime(p)
    if n < 2:
        raise InvalidInputError(f"InvalidInput: n={n} < 2")
    if orbit.p != p or orbit.n != n:
        raise InvalidInputError(f"InvalidInput: 軌道型 ({orbit}) は n={n}, p={p} のものではありません")
    a0 = orbit.a(0)
    if a0 == 0:
        return 0
    return a0 if n % p == 0 else a0 - 1


def _digits(value: int, p: int) -> list[int]:
    digits = []
    while value > 0:
        digits.append(value % p)
        value //= p
    return digits


def _binomial(m: int, k: int) -> int:
    if k == 0:
        return 1
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def _delta(x: int, y: int, p: int) -> int:
    return 1 if x < p - 1 and x + y + 1 >= p else 0


def y_two_part_closed_form(lam: Partition, p: int, *, form: TwoPartForm = "dimension") -> int:
    """2 行の λ に対する y_{λ,O_λ} の閉じた式

    λ_1 − λ_2 = Σ x_i p^i, λ_2 = Σ y_i p^i として桁ごとの因子の積をとる。
    form="dimension" の因子は dim S^{(x+y,y)} + δ(x,y)·dim S^{(y+p−1, x+y+1−p)}。
    form="binomial" は C(x+2y−1, y) + δ(x,y)·C(x+2y−1, x+y+1−p) で、y_i ≤ 1 のときだけ一致する。
    """
    require_prime(p)
    if len(lam) > 2:
        raise InvalidInputError(f"InvalidInput: {lam.label()} は 2 行の分割ではありません")
    if form not in ("dimension", "binomial"):
        raise InvalidInputError(f"InvalidInput: 未知の形式: {form!r}")
    xs = _digits(lam.part(0) - lam.part(1), p)
    ys = _digits(lam.part(1), p)
    result = 1
    for i in range(max(len(xs), len(ys))):
        x = xs[i] if i < len(xs) else 0
        y = ys[i] if i < len(ys) else 0
        delta = _delta(x, y, p)
        if form == "binomial":
            factor = _binomial(x + 2 * y - 1, y) + delta * _binomial(x + 2 * y - 1, x + y + 1 - p)
        else:
            factor = specht_dimension(Partition.from_parts((x + y, y)))
            if delta:
                factor += specht_dimension(Partition.from_parts((y + p - 1, x + y + 1 - p)))
        result *= factor
    return result


def generic_jordan_type(
    lam: Partition, orbit: OrbitType, p: int, which: JordanKind = JordanKind.YOUNG
) -> JordanType:
    """安定一般 Jordan 型。ones は y_{λ,O} (Young) または m_{λ,O} (置換加群)"""
    require_prime(p)
    _check_prime(orbit, p)
    _check_sizes(lam, orbit)
    if which is JordanKind.YOUNG:
        ones = orbit_number(lam, orbit, p)
        total = young_module_dimension(lam, p)
    else:
        ones = m_number(lam, orbit)
        total = perm_module_dimension(lam)
    rest = total - ones
    if rest < 0 or rest % p:
        raise TableInconsistencyError(
            f"TableInconsistency: dim={total}, ones={ones} は p={p} で割り切れません"
            f" (λ={lam.label()}, O={orbit})"
        )
    return JordanType(p, ones, rest // p)


def canonical_orbit_number(lam: Partition, p: int) -> int:
    """表から読んだ y_{λ,O_λ}"""
    return orbit_number(lam, canonical_orbit_type(lam, p), p)
