"""
軌道型のテスト

文字列形式、列順、標準軌道型 O_λ、細分判定を確認する。
"""

import pytest
from partition_test_helpers import O, P

from orbitnum import (
    InvalidInputError,
    OrbitType,
    canonical_orbit_type,
    orbit_types,
    partitions,
    refines_up_to_rearrangement,
    trivial_orbit_type,
)


def test_parse_exponent_and_list_forms():
    """指数形式と列挙形式が同じ多重集合になることを確認"""
    assert O("1^3,2^2", 2) == O("1,1,1,2,2", 2)
    assert O("2,1,2,1,1", 2) == OrbitType(2, (3, 2))
    assert str(O("1,1,1,2,2", 2)) == "1^3,2^2"
    assert O("", 3) == OrbitType(3, ())
    assert O("", 3).n == 0


@pytest.mark.parametrize(("text", "p"), [("3", 2), ("1^x", 2), ("6^1", 3), ("0", 2)])
def test_parse_rejects_non_powers(text, p):
    """p 冪でない軌道サイズや不正な書式を拒否することを確認"""
    with pytest.raises(InvalidInputError):
        O(text, p)


def test_non_prime_is_rejected():
    with pytest.raises(InvalidInputError):
        OrbitType(4, (1,))


def test_concat_and_scale():
    """O•O' と p^s O を確認"""
    o1 = O("1^2,2^1", 2)
    o2 = O("1^1", 2)
    assert o1.concat(o2.scale(2)) == O("1^2,2^1,4^1", 2)
    assert o1.scale(1) == O("2^2,4^1", 2)
    assert o1.scale(1).n == 2 * o1.n
    assert O("", 2).scale(3) == O("", 2)


def test_orbit_types_column_order():
    """列順は (a_0, a_1, …) の辞書式降順で (1^n) が先頭"""
    assert [str(o) for o in orbit_types(2, 2)] == ["1^2", "2^1"]
    assert [str(o) for o in orbit_types(4, 2)] == ["1^4", "1^2,2^1", "2^2", "4^1"]
    assert [str(o) for o in orbit_types(6, 3)] == ["1^6", "1^3,3^1", "3^2"]
    assert orbit_types(0, 5) == (OrbitType(5, ()),)
    assert orbit_types(4, 2)[0] == trivial_orbit_type(4, 2)


@pytest.mark.parametrize(
    ("lam", "p", "expected"),
    [("4,3", 2, "1^3,2^2"), ("5,4", 3, "1^3,3^2"), ("2", 3, "1^2"), ("4", 2, "4^1")],
)
def test_canonical_orbit_type(lam, p, expected):
    orbit = canonical_orbit_type(P(lam), p)
    assert str(orbit) == expected
    assert orbit.n == P(lam).n


@pytest.mark.parametrize(
    ("orbit", "target", "expected"),
    [
        ("1,1,2", "2,2", True),
        ("2,2", "2,2", True),
        ("4", "2,2", False),
        ("1,1,1,1", "4", True),
        ("2,2", "1,1,2", False),
    ],
)
def test_refines_up_to_rearrangement(orbit, target, expected):
    assert refines_up_to_rearrangement(O(orbit, 2), O(target, 2)) is expected


def test_trivial_orbit_type_refines_everything():
    """(1^n) はすべての軌道型を細分する"""
    for n in range(0, 9):
        for target in orbit_types(n, 2):
            assert refines_up_to_rearrangement(trivial_orbit_type(n, 2), target)
            assert refines_up_to_rearrangement(target, target)


def test_refines_requires_same_size():
    with pytest.raises(InvalidInputError):
        refines_up_to_rearrangement(O("1,1", 2), O("2,2", 2))
    with pytest.raises(InvalidInputError):
        refines_up_to_rearrangement(O("1,1,1", 3), O("1,2", 2))


def test_canonical_orbit_type_of_every_partition_has_right_size():
    for p in (2, 3):
        for lam in partitions(8):
            assert canonical_orbit_type(lam, p).n == 8
