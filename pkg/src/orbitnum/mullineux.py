"""Mullineux 写像

p-正則な分割の p-リムを繰り返し取り除いて Mullineux 記号を作り、
記号 (a_i, r_i) を (a_i, a_i − r_i + ε_i) に置き換えた分割を像とする。
ε_i は p | a_i なら 0、そうでなければ 1。
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator
from functools import cache
from itertools import product

from .config import require_prime
from .errors import InvalidInputError
from .partition import Partition, conjugate, is_p_regular, is_p_restricted, partitions

logger = logging.getLogger(__name__)

type MullineuxSymbol = tuple[tuple[int, int], ...]


def _rim(lam: Partition) -> list[tuple[int, int]]:
    # 行ごとに右から左へ、上の行から順に
    nodes = []
    for i, length in enumerate(lam.parts):
        stop = max(lam.part(i + 1) - 1, 0)
        nodes.extend((i, j) for j in range(length - 1, stop - 1, -1))
    return nodes


def p_rim(lam: Partition, p: int) -> list[tuple[int, int]]:
    """p-リム (p-セグメントの和) のノード"""
    rim = _rim(lam)
    result: list[tuple[int, int]] = []
    start = 0
    while start < len(rim):
        segment = rim[start : start + p]
        result.extend(segment)
        last_row = segment[-1][0]
        start = next((k for k, (i, _) in enumerate(rim) if i == last_row + 1), len(rim))
    return result


def mullineux_symbol(lam: Partition, p: int) -> MullineuxSymbol:
    """Mullineux 記号 ((a_0, r_0), (a_1, r_1), …)"""
    require_prime(p)
    if not is_p_regular(lam, p):
        raise InvalidInputError(f"InvalidInput: {lam.label()} は {p}-正則ではありません")
    columns = []
    current = lam
    while current.parts:
        nodes = p_rim(current, p)
        removed = [0] * len(current)
        for i, _ in nodes:
            removed[i] += 1
        columns.append((len(nodes), len(current)))
        current = Partition.from_parts(x - r for x, r in zip(current.parts, removed, strict=True))
    return tuple(columns)


@cache
def _symbol_index(n: int, p: int) -> dict[MullineuxSymbol, Partition]:
    index = {}
    for lam in partitions(n):
        if is_p_regular(lam, p):
            index[mullineux_symbol(lam, p)] = lam
    logger.debug("mullineux symbols n=%d p=%d: %d partitions", n, p, len(index))
    return index


def mullineux_regular(lam: Partition, p: int) -> Partition:
    """p-正則な分割に対する Mullineux 写像"""
    symbol = mullineux_symbol(lam, p)
    image = tuple((a, a - r + (0 if a % p == 0 else 1)) for a, r in symbol)
    try:
        return _symbol_index(lam.n, p)[image]
    except KeyError:
        raise InvalidInputError(
            f"InvalidInput: 記号 {image} を持つ {p}-正則な分割がありません ({lam.label()})"
        ) from None


def mullineux_restricted(lam: Partition, p: int) -> Partition:
    """p-制限な分割に対する Mullineux 写像 (共役 ∘ 正則版 ∘ 共役)"""
    require_prime(p)
    if not is_p_restricted(lam, p):
        raise InvalidInputError(f"InvalidInput: {lam.label()} は {p}-制限ではありません")
    return conjugate(mullineux_regular(conjugate(lam), p))


def mullineux_twists(
    terms: tuple[Partition, ...],
    p: int,
    *,
    max_n: int | None = None,
    limit: int = 200,
    seed: int = 0,
) -> Iterator[Partition]:
    """μ = Σ p^{k_i} m^{ℓ_i}(λ(i)) を列挙する

    k_i は {0, …, len(terms)} から相異なる値、ℓ_i は 0 か 1。
    |μ| が max_n を超える選び方は除き、limit を超えるときは seed 固定で抽出する。
    """
    twisted = [(term, mullineux_restricted(term, p)) for term in terms]
    exponents = range(len(terms) + 1)
    choices = []
    for ks in product(exponents, repeat=len(terms)):
        if len(set(ks)) != len(ks):
            continue
        if max_n is not None and sum(t.n * p**k for t, k in zip(terms, ks, strict=True)) > max_n:
            continue
        for flags in product((0, 1), repeat=len(terms)):
            choices.append((ks, flags))
    if len(choices) > limit:
        choices = random.Random(seed).sample(choices, limit)
    for ks, flags in choices:
        mu = Partition()
        for (plain, image), k, flag in zip(twisted, ks, flags, strict=True):
            mu = mu + (image if flag else plain).scale(p**k)
        yield mu
