"""
F_p 上の階数と既約加群 D^ν のテスト

階数は構成から分かっている行列で確かめ、D^ν は既知の次元と
D^ν ⊗ sgn ≅ D^{m(ν)} で確かめる。
"""

import numpy as np
import pytest
from partition_test_helpers import P

from orbitnum import (
    InvalidInputError,
    is_p_regular,
    mullineux_regular,
    partitions,
    rank_mod_p,
    simple_dimension,
    specht_dimension,
)
from orbitnum.modular import row_basis_mod_p, signed_symmetrizer_rank, simple_module


@pytest.mark.parametrize(
    ("matrix", "p", "expected"),
    [
        ([[1, 2], [3, 4]], 2, 1),
        ([[1, 2], [3, 4]], 3, 2),
        ([[1, 2], [2, 4]], 5, 1),
        ([[0, 0], [0, 0]], 2, 0),
        ([[-1, 1], [1, -1]], 3, 1),
    ],
)
def test_rank_mod_p(matrix, p, expected):
    assert rank_mod_p(matrix, p) == expected


def test_rank_of_empty_matrix():
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 2) == 0
    assert row_basis_mod_p(np.zeros((0, 3), dtype=np.int64), 2) == []


def test_row_basis_is_greedy():
    """先頭から独立な行を選ぶ"""
    assert row_basis_mod_p([[0, 0], [1, 1], [2, 2], [0, 1]], 3) == [1, 3]
    assert row_basis_mod_p([[2, 4], [1, 2], [0, 1]], 2) == [1, 2]


@pytest.mark.parametrize("p", [2, 3, 7])
def test_rank_across_panels(p):
    """L U の積 (階数 90) を行と列で並べ替えても階数は 90"""
    rng = np.random.default_rng(7)
    k = 90
    lower = np.tril(rng.integers(0, p, size=(k, k)), -1) + np.eye(k, dtype=np.int64)
    lower = np.concatenate([lower, rng.integers(0, p, size=(60, k))])
    upper = np.concatenate(
        [
            np.triu(rng.integers(0, p, size=(k, k)), 1) + np.eye(k, dtype=np.int64),
            rng.integers(0, p, size=(k, 110)),
        ],
        axis=1,
    )
    product = np.mod(lower @ upper, p)
    product = product[rng.permutation(product.shape[0])][:, rng.permutation(product.shape[1])]
    assert rank_mod_p(product, p) == k
    assert len(row_basis_mod_p(product, p)) == k


@pytest.mark.parametrize(
    ("nu", "p", "expected"),
    [
        ("3", 2, 1),
        ("2,1", 2, 2),
        ("3,1", 2, 2),
        ("4,1", 2, 4),
        ("3,2", 2, 4),
        ("2,1", 3, 1),
        ("3,1", 3, 3),
        ("4,1", 5, 3),
        ("1,1,1", 5, 1),
    ],
)
def test_simple_dimension(nu, p, expected):
    assert simple_dimension(P(nu), p) == expected


def test_simple_dimension_rejects_singular():
    with pytest.raises(InvalidInputError):
        simple_dimension(P("1,1"), 2)


def test_twisted_realization():
    """ポリタブロイドの項数が少ない Mullineux 像の側で持つ"""
    module = simple_module(P("1,1"), 3)
    assert module.twisted
    assert module.realized == P("2")
    assert module.dimension == 1
    module = simple_module(P("3"), 5)
    assert not module.twisted
    assert module.realized == P("3")


@pytest.mark.parametrize("p", [2, 3, 5])
def test_sign_twist_preserves_dimension(p):
    """dim D^ν = dim D^{m(ν)}、p > n なら dim S^ν"""
    for n in range(1, 8):
        for nu in partitions(n):
            if not is_p_regular(nu, p):
                continue
            assert simple_dimension(nu, p) == simple_dimension(mullineux_regular(nu, p), p)
            assert simple_dimension(nu, p) <= specht_dimension(nu)
            if p > n:
                assert simple_dimension(nu, p) == specht_dimension(nu)


@pytest.mark.parametrize(("nu", "expected"), [("1,1,1", 1), ("2,1", 0), ("3", 0)])
def test_antisymmetrizer_rank_in_semisimple_case(nu, expected):
    """p > n では Σ sgn(h) h の階数は D^ν が符号表現のときだけ 1"""
    module = simple_module(P(nu), 5)
    assert signed_symmetrizer_rank(module, P("3")) == expected


@pytest.mark.parametrize("p", [2, 3])
def test_trivial_content_gives_dimension(p):
    """α = (1^n) では恒等写像の階数なので dim D^ν"""
    for n in range(1, 7):
        ones = P(",".join(["1"] * n))
        for nu in partitions(n):
            if is_p_regular(nu, p):
                module = simple_module(nu, p)
                assert signed_symmetrizer_rank(module, ones) == module.dimension


def test_symmetrizer_rank_size_mismatch():
    with pytest.raises(InvalidInputError):
        signed_symmetrizer_rank(simple_module(P("2,1"), 3), P("2"))
