"""分割と組成の組み合わせ論

- Partition: 広義単調減少の正整数列
- Composition: 非負整数列 (0 を含んでよい)
- PAdicExpansion: λ = Σ p^i λ(i) (各 λ(i) は p-制限)

値はすべて不変で、どの関数も純粋関数としてスレッドから同時に呼び出してよい。
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cache

from .config import require_prime
from .errors import InvalidInputError

logger = logging.getLogger(__name__)


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if body == "":
        return ()
    values = []
    for token in body.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidInputError(f"InvalidInput: {what} の書式が不正です: {text!r}") from None
    return tuple(values)


@dataclass(frozen=True, slots=True)
class Composition:
    """非負整数列。和が n になる"""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for x in parts:
            if not isinstance(x, int) or x < 0:
                raise InvalidInputError(f"InvalidInput: 組成の成分は非負整数です: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(_parse_int_list(text, "組成"))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    def sorted(self) -> Partition:
        """成分を降順に並べ 0 を除いた分割"""
        return Partition(tuple(sorted((x for x in self.parts if x > 0), reverse=True)))


@dataclass(frozen=True, slots=True)
class Partition:
    """広義単調減少の正整数列。空列は ∅ (n = 0)"""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for i, x in enumerate(parts):
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise InvalidInputError(f"InvalidInput: 分割の成分は正整数です: {parts}")
            if i > 0 and parts[i - 1] < x:
                raise InvalidInputError(
                    f"InvalidInput: 分割は単調減少でなければなりません: {parts}"
                )
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """"4,2,1" 形式。空文字列は ∅"""
        return cls(_parse_int_list(text, "分割"))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """末尾の 0 を取り除いて分割にする"""
        values = list(parts)
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """i 番目 (0 始まり) の成分。範囲外は 0"""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    def label(self) -> str:
        """"(2,1)" 形式。∅ は "∅" """
        return f"({self})" if self.parts else "∅"

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __add__(self, other: Partition) -> Partition:
        length = max(len(self), len(other))
        return Partition(tuple(self.part(i) + other.part(i) for i in range(length)))

    def scale(self, m: int) -> Partition:
        if m < 0:
            raise InvalidInputError(f"InvalidInput: 負のスカラー倍はできません: {m}")
        if m == 0:
            return Partition()
        return Partition(tuple(m * x for x in self.parts))


class CombineMode(Enum):
    ADD = "add"
    CONCAT = "concat"
    SCALE = "scale"


class Dominance(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def composition_combine(
    alpha: Composition | Partition,
    beta: Composition | Partition | None,
    mode: CombineMode,
    *,
    factor: int = 1,
) -> Composition:
    """α+β (短い方を 0 で埋める)、α•β (連結)、factor·α のいずれか

    SCALE のときは beta を使わない。
    """
    a = tuple(alpha.parts)
    match mode:
        case CombineMode.ADD:
            b = tuple(beta.parts) if beta is not None else ()
            length = max(len(a), len(b))
            a = a + (0,) * (length - len(a))
            b = b + (0,) * (length - len(b))
            return Composition(tuple(x + y for x, y in zip(a, b, strict=True)))
        case CombineMode.CONCAT:
            b = tuple(beta.parts) if beta is not None else ()
            return Composition(a + b)
        case CombineMode.SCALE:
            if factor < 0:
                raise InvalidInputError(f"InvalidInput: 負のスカラー倍はできません: {factor}")
            return Composition(tuple(factor * x for x in a))
    raise InvalidInputError(f"InvalidInput: 未知の演算: {mode}")


def dominance_compare(lam: Partition, mu: Partition) -> Dominance:
    """支配順序での比較"""
    if lam.n != mu.n:
        raise InvalidInputError(f"InvalidInput: |λ|={lam.n}, |μ|={mu.n}")
    if lam == mu:
        return Dominance.EQUAL
    ge = le = True
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam.part(i)
        t += mu.part(i)
        if s < t:
            ge = False
        if s > t:
            le = False
    if ge:
        return Dominance.GREATER
    if le:
        return Dominance.LESS
    return Dominance.INCOMPARABLE


def dominates(lam: Partition, mu: Partition) -> bool:
    """λ ⊵ μ"""
    return dominance_compare(lam, mu) in (Dominance.GREATER, Dominance.EQUAL)


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """n の分割すべてを辞書式降順で返す"""
    if n < 0:
        raise InvalidInputError(f"InvalidInput: n={n} は負です")
    result: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            result.append(Partition(tuple(prefix)))
            return
        for x in range(min(remaining, largest), 0, -1):
            prefix.append(x)
            rec(remaining - x, x, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(result)


def _differences(lam: Partition) -> list[int]:
    return [lam.part(j) - lam.part(j + 1) for j in range(len(lam))]


def is_p_restricted(lam: Partition, p: int) -> bool:
    """最後の成分と隣接する成分の差がすべて p 未満"""
    return all(d < p for d in _differences(lam))


def is_p_regular(lam: Partition, p: int) -> bool:
    """同じ成分が p 回以上現れない"""
    run = 0
    prev = None
    for x in lam.parts:
        run = run + 1 if x == prev else 1
        prev = x
        if run >= p:
            return False
    return True


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for x in lam.parts if x > j) for j in range(lam.parts[0])))


@dataclass(frozen=True, slots=True)
class PAdicExpansion:
    """λ = Σ p^i λ(i) の p 進展開。terms[i] が λ(i)"""

    p: int
    terms: tuple[Partition, ...]

    def recombine(self) -> Partition:
        total = Partition()
        for i, term in enumerate(self.terms):
            total = total + term.scale(self.p**i)
        return total

    def sizes(self) -> tuple[int, ...]:
        return tuple(term.n for term in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.terms)

    def __str__(self) -> str:
        pieces = []
        for i, term in enumerate(self.terms):
            if not term.parts:
                continue
            pieces.append(term.label() if i == 0 else f"{self.p**i}·{term.label()}")
        return " + ".join(pieces) if pieces else "∅"


def p_adic_expansion(lam: Partition, p: int) -> PAdicExpansion:
    """λ_j − λ_{j+1} = Σ_i a_{i,j} p^i として λ(i)_k = Σ_{j≥k} a_{i,j}"""
    require_prime(p)
    diffs = _differences(lam)
    digits: list[list[int]] = []
    for d in diffs:
        row = []
        while d > 0:
            row.append(d % p)
            d //= p
        digits.append(row)
    depth = max((len(row) for row in digits), default=0)
    terms = []
    for i in range(max(depth, 1)):
        a = [row[i] if i < len(row) else 0 for row in digits]
        parts = []
        acc = 0
        for k in range(len(a) - 1, -1, -1):
            acc += a[k]
            parts.append(acc)
        terms.append(Partition.from_parts(reversed(parts)))
    while len(terms) > 1 and not terms[-1].parts:
        terms.pop()
    return PAdicExpansion(p, tuple(terms))


def _beta_numbers(lam: Partition) -> list[int]:
    r = len(lam)
    return [x + (r - 1 - i) for i, x in enumerate(lam.parts)]


def _from_beta_numbers(beads: Iterable[int]) -> Partition:
    ordered = sorted(beads, reverse=True)
    r = len(ordered)
    return Partition.from_parts(b - (r - 1 - i) for i, b in enumerate(ordered))


def rim_hook_removals(lam: Partition, p: int) -> tuple[Partition, ...]:
    """リム p-フックを 1 つ取り除いて得られる分割すべて

    手の位置が高いフック (大きいビーズ) から順に並ぶ。
    """
    beads = _beta_numbers(lam)
    occupied = set(beads)
    result = []
    for b in sorted(beads, reverse=True):
        if b - p >= 0 and b - p not in occupied:
            moved = [x for x in beads if x != b] + [b - p]
            result.append(_from_beta_numbers(moved))
    return tuple(result)


def p_core_and_weight(lam: Partition, p: int) -> tuple[Partition, int]:
    """(p-コア, p-ウェイト)。手の位置が最も高いリム p-フックから取り除く"""
    core = lam
    weight = 0
    while True:
        removals = rim_hook_removals(core, p)
        if not removals:
            return core, weight
        core = removals[0]
        weight += 1


def is_p_core(lam: Partition, p: int) -> bool:
    return not rim_hook_removals(lam, p)


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [
        lam.parts[i] - j + conj.parts[j] - i - 1
        for i in range(len(lam))
        for j in range(lam.parts[i])
    ]


@cache
def specht_dimension(lam: Partition) -> int:
    """フック公式 n! / Π h(i,j)"""
    return math.factorial(lam.n) // math.prod(hook_lengths(lam))


def multinomial(parts: Sequence[int]) -> int:
    total = 0
    result = 1
    for x in parts:
        total += x
        result *= math.comb(total, x)
    return result


def perm_module_dimension(alpha: Composition | Partition | Sequence[int]) -> int:
    """タブロイドの個数 |α|! / Π α_i!"""
    parts = alpha.parts if isinstance(alpha, Composition | Partition) else tuple(alpha)
    return multinomial(parts)


def level_decompositions(
    lam: Partition | Composition, sizes: Sequence[int], p: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Σ_i p^i β^(i) = λ (成分ごと) かつ |β^(i)| = sizes[i] となる組成の組を列挙する

    各 β^(i) は λ の長さに 0 で揃えた組成として返す。
    行ごとに λ_j を p 冪の和に分け、各レベルの残り容量で枝刈りする。
    """
    rows = tuple(lam.parts)
    levels = len(sizes)
    if sum(s * p**i for i, s in enumerate(sizes)) != sum(rows):
        return
    powers = [p**i for i in range(levels)]
    remaining = list(sizes)
    chosen: list[list[int]] = [[0] * len(rows) for _ in range(levels)]

    def split_row(j: int, level: int, value: int) -> Iterator[None]:
        if level < 0:
            if value == 0:
                yield
            return
        top = min(value // powers[level], remaining[level])
        lower_capacity = sum(remaining[i] * powers[i] for i in range(level))
        for c in range(top, -1, -1):
            rest = value - c * powers[level]
            if rest > lower_capacity:
                break
            chosen[level][j] = c
            remaining[level] -= c
            yield from split_row(j, level - 1, rest)
            remaining[level] += c
        chosen[level][j] = 0

    def walk(j: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if j == len(rows):
            if all(r == 0 for r in remaining):
                yield tuple(tuple(level) for level in chosen)
            return
        for _ in split_row(j, levels - 1, rows[j]):
            yield from walk(j + 1)

    yield from walk(0)
