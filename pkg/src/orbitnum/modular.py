"""F_p 上の線形代数と既約加群 D^ν

D^ν は Specht 加群 S^ν をその Gram 形式の根基で割った商として扱う。
基底はポリタブロイド e_t (t は標準盤)、タブロイドは正規直交とする。
D^ν ⊗ sgn ≅ D^{m(ν)} なので、ポリタブロイドの項数が少ない方の形で実現する。

階数は列を幅 _PANEL_WIDTH ごとに掃き出し、残りの行列の更新は行列積で行う。
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache, lru_cache

import numpy as np
from scipy import sparse
from sympy.combinatorics import Permutation

from .errors import InvalidInputError, ResourceLimitError
from .mullineux import mullineux_regular
from .partition import Partition, conjugate, is_p_regular, specht_dimension
from .tableau import standard_tableaux

logger = logging.getLogger(__name__)

_PANEL_WIDTH = 64

# float64 で整数が厳密に表せる範囲
_EXACT = 2**53

# タブロイドの符号化に使う int64 の範囲
_CODE_LIMIT = 2**62


def _work_dtype(p: int) -> type:
    # 行列積の各成分は _PANEL_WIDTH·(p−1)^2 未満
    if _PANEL_WIDTH * p * p < _EXACT:
        return np.float64
    return object


def _reduce(matrix: np.ndarray | Sequence[Sequence[int]], p: int) -> np.ndarray:
    array = np.asarray(matrix)
    if array.dtype.kind == "f":
        array = np.rint(array)
    return np.mod(array.astype(np.int64), p).astype(_work_dtype(p))


def _panel_pivots(panel: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """パネル内のピボット行 (元の行番号) とピボット列を返す"""
    a = panel.copy()
    rows, width = a.shape
    order = np.arange(rows)
    top = 0
    pivots: list[int] = []
    for j in range(width):
        if top == rows:
            break
        nonzero = np.flatnonzero(a[top:, j])
        if nonzero.size == 0:
            continue
        r = top + int(nonzero[0])
        if r != top:
            a[[top, r]] = a[[r, top]]
            order[[top, r]] = order[[r, top]]
        a[top] = np.mod(a[top] * pow(int(a[top, j]), -1, p), p)
        below = a[top + 1 :]
        hit = np.flatnonzero(below[:, j])
        if hit.size:
            below[hit] = np.mod(below[hit] - np.outer(below[hit, j], a[top]), p)
        pivots.append(j)
        top += 1
    return order[:top], pivots


def _inverse_mod_p(block: np.ndarray, p: int) -> np.ndarray:
    size = block.shape[0]
    aug = np.concatenate([block, np.eye(size, dtype=block.dtype)], axis=1)
    for j in range(size):
        r = j + int(np.flatnonzero(aug[j:, j])[0])
        if r != j:
            aug[[j, r]] = aug[[r, j]]
        aug[j] = np.mod(aug[j] * pow(int(aug[j, j]), -1, p), p)
        factors = aug[:, j].copy()
        factors[j] = 0
        aug = np.mod(aug - np.outer(factors, aug[j]), p)
    return aug[:, size:]


def _column_rank_profile(matrix: np.ndarray | Sequence[Sequence[int]], p: int) -> list[int]:
    """左の列から順に、それ以前の列と独立な列の番号を返す"""
    work = _reduce(matrix, p)
    if work.ndim != 2 or work.size == 0:
        return []
    rows, cols = work.shape
    profile: list[int] = []
    top = 0
    for start in range(0, cols, _PANEL_WIDTH):
        if top == rows:
            break
        stop = min(start + _PANEL_WIDTH, cols)
        order, local = _panel_pivots(work[top:, start:stop], p)
        if not local:
            continue
        k = len(local)
        rest = np.setdiff1d(np.arange(rows - top), order, assume_unique=True)
        work[top:, start:] = work[top:, start:][np.concatenate([order, rest])]
        pivots = np.asarray(local) + start
        inverse = _inverse_mod_p(work[top : top + k][:, pivots], p)
        head = np.mod(inverse @ work[top : top + k, start:], p)
        tail = work[top + k :, start:]
        tail -= tail[:, pivots - start] @ head
        np.mod(tail, p, out=tail)
        profile.extend(int(c) for c in pivots)
        top += k
    return profile


def rank_mod_p(matrix: np.ndarray | Sequence[Sequence[int]], p: int) -> int:
    return len(_column_rank_profile(matrix, p))


def row_basis_mod_p(matrix: np.ndarray | Sequence[Sequence[int]], p: int) -> list[int]:
    """行空間の基底となる行番号 (先頭から貪欲に選ぶ)"""
    array = np.asarray(matrix)
    if array.size == 0:
        return []
    return _column_rank_profile(array.T, p)


@cache
def _column_permutations(height: int) -> tuple[np.ndarray, np.ndarray]:
    """S_height の全要素 (各行が像の列) と符号"""
    perms = list(itertools.permutations(range(height)))
    signs = np.array([Permutation(list(perm)).signature() for perm in perms], dtype=np.int8)
    return np.array(perms, dtype=np.int64).reshape(len(perms), height), signs


def _column_action(shape: Partition) -> tuple[np.ndarray, np.ndarray]:
    """C_t の各元について、列優先に並べたセルが移る行と符号"""
    heights = conjugate(shape).parts
    if not heights:
        return np.zeros((1, 0), dtype=np.int64), np.ones(1, dtype=np.int8)
    tables = [_column_permutations(h) for h in heights]
    grid = np.indices([len(signs) for _, signs in tables]).reshape(len(tables), -1)
    rows = np.concatenate([perms[grid[c]] for c, (perms, _) in enumerate(tables)], axis=1)
    signs = np.ones(grid.shape[1], dtype=np.int8)
    for c, (_, column_signs) in enumerate(tables):
        signs *= column_signs[grid[c]]
    return rows, signs


def _column_terms(shape: Partition) -> int:
    return math.prod(math.factorial(h) for h in conjugate(shape).parts)


def _realization(shape: Partition, p: int) -> tuple[Partition, bool]:
    if shape.n == 0:
        return shape, False
    twin = mullineux_regular(shape, p)
    cost = specht_dimension(shape) * _column_terms(shape)
    if twin != shape and specht_dimension(twin) * _column_terms(twin) < cost:
        return twin, True
    return shape, False


def _polytabloids(shape: Partition) -> tuple[np.ndarray, sparse.csr_array]:
    """全ての標準盤のポリタブロイドを (タブロイド表, 係数の疎行列) で返す

    タブロイドは index e-1 が entry e の行番号となる列で表す。
    """
    n = shape.n
    base = max(len(shape), 1)
    if base**n >= _CODE_LIMIT:
        raise ResourceLimitError(
            f"ResourceLimit: {shape.label()} のタブロイドを符号化できません"
        )
    heights = conjugate(shape).parts
    tableaux = list(standard_tableaux(shape))
    cells = [(i, c) for c, height in enumerate(heights) for i in range(height)]
    entries = np.array(
        [[t[i][c] - 1 for i, c in cells] for t in tableaux], dtype=np.int64
    ).reshape(len(tableaux), n)
    rows, signs = _column_action(shape)
    count, terms = entries.shape[0], rows.shape[0]
    codes = (base**entries) @ rows.T
    unique, columns = np.unique(codes.ravel(), return_inverse=True)
    index_dtype = np.int32 if count * terms < 2**31 else np.int64
    vectors = sparse.csr_array(
        (
            np.tile(signs, count),
            columns.astype(index_dtype),
            np.arange(0, count * terms + 1, terms, dtype=index_dtype),
        ),
        shape=(count, unique.size),
    )
    vectors.sort_indices()
    tabloids = (unique[:, np.newaxis] // base ** np.arange(n, dtype=np.int64)) % base
    return tabloids.astype(np.uint8), vectors


@dataclass(frozen=True, slots=True, eq=False)
class SimpleModule:
    """D^ν の F_p 上の基底データ

    twisted が真なら D^{m(ν)} ⊗ sgn として realized = m(ν) のポリタブロイドで持つ。
    polytabloids は Gram 行列の行基底に選んだものだけで、列は tabloids の行に対応する。
    """

    shape: Partition
    p: int
    realized: Partition
    twisted: bool
    tabloids: np.ndarray
    polytabloids: sparse.csr_array

    @property
    def dimension(self) -> int:
        return int(self.polytabloids.shape[0])


@lru_cache(maxsize=4)
def simple_module(shape: Partition, p: int) -> SimpleModule:
    """p-正則な ν に対する D^ν"""
    if not is_p_regular(shape, p):
        raise InvalidInputError(f"InvalidInput: {shape.label()} は {p}-正則ではありません")
    realized, twisted = _realization(shape, p)
    tabloids, vectors = _polytabloids(realized)
    dense = vectors.astype(np.float32)
    gram = (dense @ dense.T).toarray()
    basis = np.asarray(row_basis_mod_p(gram, p), dtype=np.int64)
    chosen = vectors[basis, :]
    used, columns = np.unique(chosen.indices, return_inverse=True)
    chosen = sparse.csr_array(
        (chosen.data, columns.astype(chosen.indices.dtype), chosen.indptr),
        shape=(basis.size, used.size),
    )
    logger.debug(
        "simple module D^%s p=%d via %s: %d polytabloids, dim %d",
        shape.label(),
        p,
        realized.label(),
        vectors.shape[0],
        basis.size,
    )
    return SimpleModule(shape, p, realized, twisted, tabloids[used], chosen)


@cache
def simple_dimension(shape: Partition, p: int) -> int:
    """dim D^ν (ν は p-正則)"""
    return simple_module(shape, p).dimension


def signed_symmetrizer_rank(module: SimpleModule, content: Partition) -> int:
    """Σ_{h ∈ S_α} sgn(h) h の D^ν 上での F_p 階数

    S_α 軌道の和を O として B = Σ_O c_O ⟨e_i, O⟩⟨e_j, O⟩ の階数を求める。
    符号付きの和では同じ行を含むブロックの軌道は消え、c_O = 1。
    ねじった実現では符号なしの和になり、c_O は固定部分群の位数。
    α のブロックは連続する entry の区間。
    """
    p = module.p
    if content.n != module.shape.n:
        raise InvalidInputError(f"InvalidInput: |ν|={module.shape.n}, |α|={content.n}")
    tabloids = module.tabloids
    count, n = tabloids.shape
    base = max(len(module.realized), 1)
    ordered = np.empty_like(tabloids)
    alive = np.ones(count, dtype=bool)
    odd = np.zeros(count, dtype=bool)
    weight = np.ones(count, dtype=np.int64)
    factorials = np.array([math.factorial(k) % p for k in range(n + 1)], dtype=np.int64)
    start = 0
    for size in content.parts:
        segment = tabloids[:, start : start + size]
        block = np.sort(segment, axis=1)
        ordered[:, start : start + size] = block
        if module.twisted:
            for row in range(base):
                weight = weight * factorials[np.count_nonzero(segment == row, axis=1)] % p
        else:
            alive &= np.all(block[:, 1:] != block[:, :-1], axis=1)
            for a in range(size):
                for b in range(a + 1, size):
                    odd ^= segment[:, a] > segment[:, b]
        start += size
    alive &= weight != 0
    keep = np.flatnonzero(alive)
    if keep.size == 0:
        return 0
    codes = ordered[keep].astype(np.int64) @ (base ** np.arange(n, dtype=np.int64))
    orbits, column = np.unique(codes, return_inverse=True)
    shape = (count, orbits.size)
    signs = np.where(odd[keep], -1, 1).astype(np.int64)
    incidence = sparse.csr_array((signs, (keep, column)), shape=shape)
    projected = module.polytabloids @ incidence
    projected.data = np.mod(projected.data, p)
    if module.twisted:
        scaled_incidence = sparse.csr_array((signs * weight[keep], (keep, column)), shape=shape)
        scaled = module.polytabloids @ scaled_incidence
        scaled.data = np.mod(scaled.data, p)
    else:
        scaled = projected
    form = (scaled @ projected.T).toarray()
    return rank_mod_p(form, p)
