"""分割まわりのテストで共通に使うヘルパー"""

import os

import pytest
from hypothesis import strategies as st

from orbitnum import OrbitType, Partition, clear_table_cache

# 重いグリッドは ORBITNUM_SLOW=1 のときだけ実行する
slow = pytest.mark.skipif(
    os.environ.get("ORBITNUM_SLOW") is None, reason="ORBITNUM_SLOW not set"
)

PRIMES = [2, 3, 5]


def P(text: str) -> Partition:
    """"4,3" から Partition を作る"""
    return Partition.parse(text)


def O(text: str, p: int) -> OrbitType:
    """"1^3,2^2" から OrbitType を作る"""
    return OrbitType.parse(text, p)


def partial_sums(lam: Partition, length: int) -> list[int]:
    sums = []
    total = 0
    for i in range(length):
        total += lam.part(i)
        sums.append(total)
    return sums


@st.composite
def partitions_strategy(draw, min_size: int = 0, max_size: int = 8):
    """サイズ max_size 以下のランダムな分割"""
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    parts = []
    remaining = n
    largest = n
    while remaining > 0:
        x = draw(st.integers(min_value=1, max_value=min(remaining, largest)))
        parts.append(x)
        remaining -= x
        largest = x
    return Partition(tuple(parts))


@st.composite
def same_size_pair(draw, max_size: int = 8):
    """同じサイズの分割の組"""
    lam = draw(partitions_strategy(min_size=0, max_size=max_size))
    mu = draw(partitions_strategy(min_size=lam.n, max_size=lam.n))
    return lam, mu


def use_ceiling(monkeypatch, n: int) -> None:
    """上限を n にし、表のキャッシュを空にする"""
    monkeypatch.setenv("ORBITNUM_MAX_N", str(n))
    clear_table_cache()
