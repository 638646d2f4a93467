"""軌道型 (p 冪サイズの軌道の多重集合)

OrbitType は指数 i ごとの重複度 a_i (サイズ p^i の軌道の個数) を持つ。
多重集合として比較するので、並べ替えは恒等になる。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cache

from .config import require_prime
from .errors import InvalidInputError
from .partition import Partition, p_adic_expansion

logger = logging.getLogger(__name__)


def _trim(mult: tuple[int, ...]) -> tuple[int, ...]:
    values = list(mult)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _exponent(size: int, p: int) -> int:
    e = 0
    while size % p == 0 and size > 1:
        size //= p
        e += 1
    if size != 1:
        raise InvalidInputError(f"InvalidInput: 軌道サイズは p={p} の冪です")
    return e


@dataclass(frozen=True, slots=True)
class OrbitType:
    """(1^{a_0}, p^{a_1}, …) の形の軌道型。mult[i] = a_i"""

    p: int
    mult: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        require_prime(self.p)
        mult = tuple(self.mult)
        if any(not isinstance(a, int) or a < 0 for a in mult):
            raise InvalidInputError(f"InvalidInput: 重複度は非負整数です: {mult}")
        object.__setattr__(self, "mult", _trim(mult))

    @classmethod
    def from_sizes(cls, sizes: list[int] | tuple[int, ...], p: int) -> OrbitType:
        counts: dict[int, int] = {}
        for size in sizes:
            if not isinstance(size, int) or size < 1:
                raise InvalidInputError(f"InvalidInput: 軌道サイズは正整数です: {size!r}")
            e = _exponent(size, p)
            counts[e] = counts.get(e, 0) + 1
        top = max(counts, default=-1)
        return cls(p, tuple(counts.get(i, 0) for i in range(top + 1)))

    @classmethod
    def parse(cls, text: str, p: int) -> OrbitType:
        """"1^3,2^2" (指数形式) と "1,1,1,2,2" (列挙形式) を受け付ける"""
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1].strip()
        sizes: list[int] = []
        if body:
            for token in body.split(","):
                token = token.strip()
                size_text, _, count_text = token.partition("^")
                try:
                    size = int(size_text)
                    count = int(count_text) if count_text else 1
                except ValueError:
                    raise InvalidInputError(
                        f"InvalidInput: 軌道型の書式が不正です: {text!r}"
                    ) from None
                if count < 0:
                    raise InvalidInputError(f"InvalidInput: 軌道型の書式が不正です: {text!r}")
                sizes.extend([size] * count)
        return cls.from_sizes(sizes, p)

    @property
    def n(self) -> int:
        return sum(a * self.p**i for i, a in enumerate(self.mult))

    def a(self, i: int) -> int:
        """サイズ p^i の軌道の個数"""
        return self.mult[i] if 0 <= i < len(self.mult) else 0

    def sizes(self) -> tuple[int, ...]:
        """軌道サイズを降順に並べたもの"""
        return tuple(
            self.p**i for i in range(len(self.mult) - 1, -1, -1) for _ in range(self.mult[i])
        )

    def __str__(self) -> str:
        return ",".join(f"{self.p**i}^{a}" for i, a in enumerate(self.mult) if a > 0)

    def _check_prime(self, other: OrbitType) -> None:
        if self.p != other.p:
            raise InvalidInputError(f"InvalidInput: p={self.p} と p={other.p} の軌道型です")

    def concat(self, other: OrbitType) -> OrbitType:
        """O•O' (多重集合の和)"""
        self._check_prime(other)
        length = max(len(self.mult), len(other.mult))
        return OrbitType(self.p, tuple(self.a(i) + other.a(i) for i in range(length)))

    def scale(self, s: int) -> OrbitType:
        """p^s O (各軌道のサイズを p^s 倍する)"""
        if s < 0:
            raise InvalidInputError(f"InvalidInput: s={s} は負です")
        if not self.mult:
            return self
        return OrbitType(self.p, (0,) * s + self.mult)

    def column_key(self) -> tuple[int, ...]:
        """表の列順 (指数ベクトルの辞書式降順) の並べ替えキー"""
        return tuple(-a for a in self.mult)


def trivial_orbit_type(n: int, p: int) -> OrbitType:
    """(1^n)"""
    return OrbitType(p, (n,))


@cache
def orbit_types(n: int, p: int) -> tuple[OrbitType, ...]:
    """n の軌道型すべてを (a_0, a_1, …) の辞書式降順で返す。先頭は (1^n)"""
    require_prime(p)
    if n < 0:
        raise InvalidInputError(f"InvalidInput: n={n} は負です")
    top = 0
    while p ** (top + 1) <= n:
        top += 1
    result: list[OrbitType] = []

    # 大きい指数から個数を決め、最後に a_0 を残りで埋める
    def rec(level: int, remaining: int, suffix: tuple[int, ...]) -> None:
        if level == 0:
            result.append(OrbitType(p, (remaining,) + suffix))
            return
        for count in range(remaining // p**level + 1):
            rec(level - 1, remaining - count * p**level, (count,) + suffix)

    rec(top, n, ())
    return tuple(sorted(result, key=OrbitType.column_key))


def canonical_orbit_type(lam: Partition, p: int) -> OrbitType:
    """O_λ = (1^{|λ(0)|}, p^{|λ(1)|}, …)"""
    require_prime(p)
    return OrbitType(p, p_adic_expansion(lam, p).sizes())


def refines_up_to_rearrangement(orbit: OrbitType, target: OrbitType) -> bool:
    """O を群に分けて各群の和が O' の相異なる成分になるかを全探索で判定する"""
    if orbit.p != target.p or orbit.n != target.n:
        raise InvalidInputError(
            f"InvalidInput: 軌道型の p または n が一致しません: ({orbit}) と ({target})"
        )
    items = orbit.sizes()
    bins = list(target.sizes())

    def place(k: int) -> bool:
        if k == len(items):
            return all(b == 0 for b in bins)
        tried: set[int] = set()
        for j, capacity in enumerate(bins):
            if capacity < items[k] or capacity in tried:
                continue
            tried.add(capacity)
            bins[j] -= items[k]
            if place(k + 1):
                bins[j] += items[k]
                return True
            bins[j] += items[k]
        return False

    return place(0)

