"""Kostka 数と p-Kostka 数

k_{λ,μ} は M^λ における Y^μ の重複度。μ = Σ p^i μ(i) を p 進展開として

    k_{λ,μ} = Σ_{λ = Σ p^i β^(i)} Π_i k_{β^(i), μ(i)}

と分解し、p-制限な μ(i) に対する因子を F_p 上の階数で求める。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache
from typing import Literal

from .config import check_ceiling, require_prime
from .errors import InvalidInputError, TableInconsistencyError
from .modular import SimpleModule, signed_symmetrizer_rank, simple_dimension, simple_module
from .partition import (
    Composition,
    Partition,
    conjugate,
    dominates,
    is_p_core,
    is_p_restricted,
    level_decompositions,
    p_adic_expansion,
    partitions,
    perm_module_dimension,
    specht_dimension,
)

logger = logging.getLogger(__name__)

type KostkaMethod = Literal["modular", "ordinary"]


def _content(alpha: Composition | Partition | Sequence[int]) -> tuple[int, ...]:
    if isinstance(alpha, Composition | Partition):
        return alpha.parts
    return tuple(alpha)


@cache
def _horizontal_strip_kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    # 最大の値 len(content) が占めるセルは shape の水平帯になる
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    rest = content[:-1]
    if last == 0:
        return _horizontal_strip_kostka(shape, rest)
    total = 0
    inner = list(shape)

    def remove(i: int, left: int) -> None:
        nonlocal total
        if left == 0:
            total += _horizontal_strip_kostka(
                tuple(x for x in inner if x > 0), rest
            )
            return
        if i < 0:
            return
        below = shape[i + 1] if i + 1 < len(shape) else 0
        for take in range(min(left, shape[i] - below), -1, -1):
            inner[i] = shape[i] - take
            remove(i - 1, left - take)
        inner[i] = shape[i]

    remove(len(shape) - 1, last)
    return total


def ordinary_kostka(mu: Partition, alpha: Composition | Partition | Sequence[int]) -> int:
    """形 μ、内容 α の半標準盤の個数"""
    content = _content(alpha)
    if any(x < 0 for x in content):
        raise InvalidInputError(f"InvalidInput: 内容に負の成分があります: {content}")
    if mu.n != sum(content):
        raise InvalidInputError(f"InvalidInput: |μ|={mu.n}, |α|={sum(content)}")
    return _horizontal_strip_kostka(mu.parts, content)


@cache
def _restricted_column(mu: Partition, p: int) -> dict[Partition, int]:
    """p-制限な μ について、K_{μ,α} ≠ 0 となる全ての α ⊢ |μ| での k_{α,μ}

    D^{μ'} は μ ごとに一度だけ作る。
    """
    core = is_p_core(mu, p)
    module: SimpleModule | None = None
    column: dict[Partition, int] = {}
    for alpha in partitions(mu.n):
        upper = ordinary_kostka(mu, alpha)
        if upper == 0:
            continue
        if alpha == mu:
            value = 1
        elif core:
            value = upper
        else:
            if module is None:
                module = simple_module(conjugate(mu), p)
            if all(x == 1 for x in alpha.parts):
                value = module.dimension
            else:
                value = signed_symmetrizer_rank(module, alpha)
        if value > upper:
            raise TableInconsistencyError(
                f"TableInconsistency: k={value} が Kostka 数 {upper} を超えています"
                f" (α={alpha.label()}, μ={mu.label()}, p={p})"
            )
        column[alpha] = value
    logger.debug("restricted column μ=%s p=%d: %d entries", mu.label(), p, len(column))
    return column


def restricted_p_kostka(alpha: Partition, mu: Partition, p: int) -> int:
    """p-制限な μ に対する M^α 中の Y^μ の重複度

    Y^μ は射影的なので、Σ_{h ∈ S_α} sgn(h) h の D^{μ'} 上の階数に等しい。
    """
    require_prime(p)
    if not is_p_restricted(mu, p):
        raise InvalidInputError(f"InvalidInput: {mu.label()} は {p}-制限ではありません")
    if alpha.n != mu.n:
        raise InvalidInputError(f"InvalidInput: |α|={alpha.n}, |μ|={mu.n}")
    return _restricted_column(mu, p).get(alpha, 0)


def p_kostka(lam: Partition, mu: Partition, p: int, *, method: KostkaMethod = "modular") -> int:
    """p-Kostka 数 k_{λ,μ}

    method="ordinary" は各因子を通常の Kostka 数に置き換えた値で、比較診断用。
    """
    require_prime(p)
    if lam.n != mu.n:
        raise InvalidInputError(f"InvalidInput: |λ|={lam.n}, |μ|={mu.n}")
    if method == "ordinary":
        return _p_kostka_sum(lam, mu, p, ordinary=True)
    if method != "modular":
        raise InvalidInputError(f"InvalidInput: 未知の計算方法: {method!r}")
    value = _p_kostka_sum(lam, mu, p, ordinary=False)
    if lam == mu and value != 1:
        raise TableInconsistencyError(
            f"TableInconsistency: k_{{λ,λ}}={value} (λ={lam.label()}, p={p})"
        )
    if value and not dominates(mu, lam):
        raise TableInconsistencyError(
            f"TableInconsistency: μ ⋭ λ なのに k={value}"
            f" (λ={lam.label()}, μ={mu.label()}, p={p})"
        )
    return value


@cache
def _p_kostka_sum(lam: Partition, mu: Partition, p: int, *, ordinary: bool) -> int:
    expansion = p_adic_expansion(mu, p)
    total = 0
    for betas in level_decompositions(lam, expansion.sizes(), p):
        term = 1
        for beta, restricted in zip(betas, expansion.terms, strict=True):
            if ordinary:
                term *= ordinary_kostka(restricted, beta)
            else:
                term *= restricted_p_kostka(Composition(beta).sorted(), restricted, p)
            if term == 0:
                break
        total += term
    return total


@dataclass(frozen=True, slots=True)
class KostkaMatrix:
    """(n, p) の p-Kostka 行列

    order は n の分割の辞書式降順。entries[i][j] = k_{order[i], order[j]} で、
    order[j] ⊵ order[i] のときだけ非零になる。
    """

    n: int
    p: int
    order: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def index(self, lam: Partition) -> int:
        try:
            return self.order.index(lam)
        except ValueError:
            raise InvalidInputError(
                f"InvalidInput: {lam.label()} は {self.n} の分割ではありません"
            ) from None

    def entry(self, lam: Partition, mu: Partition) -> int:
        return self.entries[self.index(lam)][self.index(mu)]


@cache
def kostka_matrix(n: int, p: int) -> KostkaMatrix:
    require_prime(p)
    check_ceiling(n, p)
    order = partitions(n)
    entries = tuple(tuple(p_kostka(lam, mu, p) for mu in order) for lam in order)
    logger.debug("kostka matrix n=%d p=%d built", n, p)
    return KostkaMatrix(n, p, order, entries)


@cache
def young_module_dimension(mu: Partition, p: int) -> int:
    """dim Y^μ = dim M^μ − Σ_{ν ▷ μ} k_{μ,ν} dim Y^ν"""
    require_prime(p)
    check_ceiling(mu.n, p)
    matrix = kostka_matrix(mu.n, p)
    row = matrix.entries[matrix.index(mu)]
    value = perm_module_dimension(mu)
    for nu, k in zip(matrix.order, row, strict=True):
        if nu != mu and k:
            value -= k * young_module_dimension(nu, p)
    if value <= 0:
        raise TableInconsistencyError(
            f"TableInconsistency: dim Y^{mu.label()} = {value} (p={p})"
        )
    return value


def two_part_young_dimension(lam: Partition, p: int) -> int:
    """p-制限な (a, b) に対し dim S^λ、ウェイト 1 なら dim S^{κ_p(λ)+(p)} を足す

    ウェイト 1 になるのは b ≥ 1, a − b < p − 1, a + 1 ≥ p のときで、コアは (b−1, a+1−p)。
    """
    require_prime(p)
    if len(lam) > 2:
        raise InvalidInputError(f"InvalidInput: {lam.label()} は 2 行以下ではありません")
    if not is_p_restricted(lam, p):
        raise InvalidInputError(f"InvalidInput: {lam.label()} は {p}-制限ではありません")
    a, b = lam.part(0), lam.part(1)
    if b >= 1 and a - b < p - 1 and a + 1 >= p:
        core = Partition.from_parts((b - 1, a + 1 - p))
        return specht_dimension(lam) + specht_dimension(core + Partition((p,)))
    return specht_dimension(lam)


def dimension_check(n: int, p: int) -> None:
    """dim M^λ = Σ_μ k_{λ,μ} dim Y^μ を全 λ ⊢ n で確かめる"""
    matrix = kostka_matrix(n, p)
    for lam, row in zip(matrix.order, matrix.entries, strict=True):
        total = sum(
            k * young_module_dimension(mu, p) for mu, k in zip(matrix.order, row, strict=True)
        )
        if total != perm_module_dimension(lam):
            raise TableInconsistencyError(
                f"TableInconsistency: Σ k dim Y = {total} ≠ dim M^{lam.label()} (p={p})"
            )


def clear_kostka_cache() -> None:
    """p-Kostka 数と D^ν のキャッシュを捨てる"""
    _restricted_column.cache_clear()
    _p_kostka_sum.cache_clear()
    kostka_matrix.cache_clear()
    young_module_dimension.cache_clear()
    simple_module.cache_clear()
    simple_dimension.cache_clear()
