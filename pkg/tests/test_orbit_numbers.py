"""
軌道数と表 M, K, Y のテスト

小さな (n, p) の表を手計算の値と照合し、閉じた式、Jordan 型、
キャッシュの汚染と上限の扱いを確認する。
"""

import pytest
from partition_test_helpers import O, P, use_ceiling

from orbitnum import (
    InvalidInputError,
    JordanKind,
    OrbitType,
    ResourceLimitError,
    TableInconsistencyError,
    build_tables,
    canonical_orbit_number,
    canonical_orbit_type,
    clear_table_cache,
    generic_jordan_type,
    m_number,
    m_oracle,
    orbit_number,
    orbit_types,
    partitions,
    perm_module_dimension,
    trivial_orbit_type,
    y_canonical_product,
    y_hook_closed_form,
    y_two_part_closed_form,
    young_module_dimension,
)
from orbitnum import orbit_numbers


@pytest.fixture(autouse=True)
def fresh_cache():
    clear_table_cache()
    yield
    clear_table_cache()


@pytest.mark.parametrize(
    ("lam", "orbit", "p", "expected"),
    [
        ("2", "1^2", 2, 1),
        ("1,1", "1^2", 2, 2),
        ("1,1", "2^1", 2, 0),
        ("2,1", "1^1,2^1", 2, 1),
        ("1,1,1", "1^3", 3, 6),
        ("3,1", "1^2,2^1", 2, 2),
        ("2,2", "2^2", 2, 2),
    ],
)
def test_m_number(lam, orbit, p, expected):
    assert m_number(P(lam), O(orbit, p)) == expected
    assert m_oracle(P(lam), O(orbit, p)) == expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_m_number_matches_oracle(p):
    """レベル分解による和と全探索が一致することを確認"""
    for n in range(0, 8):
        for lam in partitions(n):
            for orbit in orbit_types(n, p):
                assert m_number(lam, orbit) == m_oracle(lam, orbit)


def test_m_number_of_trivial_orbit_type_is_dimension():
    for lam in partitions(7):
        assert m_number(lam, trivial_orbit_type(7, 3)) == perm_module_dimension(lam)


def test_m_number_size_mismatch():
    with pytest.raises(InvalidInputError):
        m_number(P("2,1"), O("1^2", 2))


def test_tables_n2_p2():
    table = build_tables(2, 2)
    assert [str(lam) for lam in table.rows] == ["2", "1,1"]
    assert [str(o) for o in table.cols] == ["1^2", "2^1"]
    assert table.M == ((1, 1), (2, 0))
    assert table.Y == ((1, 1), (2, 0))
    assert table.K.entries == ((1, 0), (0, 1))


def test_tables_n3():
    """p=3 では M^{(1^3)} から Y^{(2,1)} が 1 つ分かれる"""
    table = build_tables(3, 3)
    assert table.M == ((1, 1), (3, 0), (6, 0))
    assert table.Y == ((1, 1), (3, 0), (3, 0))
    table = build_tables(3, 2)
    assert [str(o) for o in table.cols] == ["1^3", "1^1,2^1"]
    assert table.M == ((1, 1), (3, 1), (6, 0))
    assert table.Y == ((1, 1), (2, 0), (2, 0))


def test_tables_n0():
    table = build_tables(0, 5)
    assert table.M == ((1,),)
    assert table.Y == ((1,),)
    assert table.cols == (OrbitType(5, ()),)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tables_consistency(p):
    """K·Y = M、Y は非負、(1^n) 列は dim Y、(n) 行はすべて 1"""
    for n in range(1, 7):
        table = build_tables(n, p)
        size = len(table.rows)
        for j in range(len(table.cols)):
            for i in range(size):
                assert table.Y[i][j] >= 0
                product = sum(table.K.entries[i][t] * table.Y[t][j] for t in range(size))
                assert product == table.M[i][j]
        first = table.cols.index(trivial_orbit_type(n, p))
        for i, lam in enumerate(table.rows):
            assert table.Y[i][first] == young_module_dimension(lam, p)
        assert all(value == 1 for value in table.Y[0])


def test_build_tables_is_cached():
    assert build_tables(4, 2) is build_tables(4, 2)


def test_parallel_build_matches_serial():
    serial = build_tables(6, 3)
    clear_table_cache()
    parallel = build_tables(6, 3, max_workers=4)
    assert serial.M == parallel.M
    assert serial.Y == parallel.Y


def test_orbit_number():
    assert orbit_number(P("2,1"), O("1^3", 3), 3) == 3
    assert orbit_number(P("2,1"), O("3^1", 3), 3) == 0
    assert orbit_number(P("1,1,1"), O("1^3", 2), 2) == 2
    assert canonical_orbit_number(P("2,1"), 3) == 3


def test_orbit_number_rejects_mismatch():
    with pytest.raises(InvalidInputError):
        orbit_number(P("2,1"), O("1^3", 3), 2)
    with pytest.raises(InvalidInputError):
        orbit_number(P("2,1"), O("1^2", 2), 2)
    with pytest.raises(InvalidInputError):
        orbit_number(P("2,1"), O("1^3", 3), 4)


def test_ceiling(monkeypatch):
    """上限を超える n は ResourceLimitError"""
    with pytest.raises(ResourceLimitError):
        build_tables(11, 2)
    use_ceiling(monkeypatch, 3)
    with pytest.raises(ResourceLimitError):
        build_tables(4, 3)
    assert build_tables(3, 3).n == 3
    with pytest.raises(InvalidInputError):
        build_tables(-1, 3)


def test_poisoned_cache(monkeypatch):
    """検証に失敗した (n, p) は以後も同じ失敗を返す"""
    calls = []

    def broken(table):
        calls.append(table.n)
        raise TableInconsistencyError("TableInconsistency: broken")

    monkeypatch.setattr(orbit_numbers, "_validate", broken)
    with pytest.raises(TableInconsistencyError):
        build_tables(3, 2)
    monkeypatch.undo()
    with pytest.raises(TableInconsistencyError):
        build_tables(3, 2)
    assert calls == [3]
    clear_table_cache()
    assert build_tables(3, 2).Y[0] == (1, 1)


@pytest.mark.parametrize(
    ("lam", "p", "expected"),
    [("4,3", 2, 4), ("2,1", 3, 3), ("2,2", 3, 3), ("3", 3, 1), ("1,1,1", 2, 2)],
)
def test_y_canonical_product(lam, p, expected):
    assert y_canonical_product(P(lam), p) == expected


@pytest.mark.parametrize("p", [2, 3])
def test_canonical_product_matches_tables(p):
    for n in range(1, 7):
        for lam in partitions(n):
            assert canonical_orbit_number(lam, p) == y_canonical_product(lam, p)


@pytest.mark.parametrize(
    ("n", "orbit", "p", "expected"),
    [
        (3, "1^3", 3, 3),
        (3, "3^1", 3, 0),
        (3, "1^3", 2, 2),
        (3, "1^1,2^1", 2, 0),
        (4, "1^2,2^1", 2, 2),
    ],
)
def test_y_hook_closed_form(n, orbit, p, expected):
    assert y_hook_closed_form(n, O(orbit, p), p) == expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_y_hook_closed_form_matches_tables(p):
    for n in range(2, 7):
        table = build_tables(n, p)
        hook = P(f"{n - 1},1")
        for orbit in table.cols:
            assert y_hook_closed_form(n, orbit, p) == table.y(hook, orbit)


def test_y_hook_closed_form_rejects():
    with pytest.raises(InvalidInputError):
        y_hook_closed_form(1, O("1^1", 2), 2)
    with pytest.raises(InvalidInputError):
        y_hook_closed_form(3, O("1^2", 2), 2)


@pytest.mark.parametrize(
    ("lam", "p", "expected"),
    [("2,1", 2, 2), ("4,3", 2, 4), ("2,2", 3, 3), ("3", 2, 1), ("", 3, 1)],
)
def test_y_two_part_closed_form(lam, p, expected):
    assert y_two_part_closed_form(P(lam), p) == expected


def test_two_part_binomial_form_differs():
    """二項係数の形は λ_2 の桁が 2 以上のとき合わない"""
    assert y_two_part_closed_form(P("2,2"), 3, form="binomial") == 4
    assert y_two_part_closed_form(P("2,2"), 3) == canonical_orbit_number(P("2,2"), 3)
    assert y_two_part_closed_form(P("2,1"), 2, form="binomial") == 2


@pytest.mark.parametrize("p", [2, 3, 5])
def test_y_two_part_closed_form_matches_tables(p):
    for n in range(1, 8):
        for lam in partitions(n):
            if len(lam) <= 2:
                assert y_two_part_closed_form(lam, p) == canonical_orbit_number(lam, p)


def test_y_two_part_closed_form_rejects():
    with pytest.raises(InvalidInputError):
        y_two_part_closed_form(P("1,1,1"), 2)
    with pytest.raises(InvalidInputError):
        y_two_part_closed_form(P("2,1"), 2, form="other")


def test_generic_jordan_type():
    jordan = generic_jordan_type(P("2,1"), O("1^3", 3), 3)
    assert (jordan.ones, jordan.pblocks) == (3, 0)
    assert str(jordan) == "[1]^3[3]^0"
    jordan = generic_jordan_type(P("2,1"), O("3^1", 3), 3)
    assert jordan.generically_free
    assert jordan.dimension == 3
    jordan = generic_jordan_type(P("2,1"), O("3^1", 3), 3, JordanKind.YOUNG_PERMUTATION)
    assert str(jordan) == "[1]^0[3]^1"


@pytest.mark.parametrize("p", [2, 3])
def test_jordan_type_conserves_dimension(p):
    for n in range(1, 6):
        for lam in partitions(n):
            for orbit in orbit_types(n, p):
                young = generic_jordan_type(lam, orbit, p)
                perm = generic_jordan_type(lam, orbit, p, JordanKind.YOUNG_PERMUTATION)
                assert young.dimension == young_module_dimension(lam, p)
                assert perm.dimension == perm_module_dimension(lam)


def test_canonical_orbit_is_smallest_nonzero():
    """O_λ の列の値は λ 行の非零成分の最小値"""
    for p in (2, 3):
        table = build_tables(6, p)
        for lam in table.rows:
            floor = table.y(lam, canonical_orbit_type(lam, p))
            assert floor > 0
            assert all(v == 0 or v >= floor for v in table.Y[table.rows.index(lam)])


@pytest.mark.parametrize("which", list(JordanKind))
def test_generic_jordan_type_rejects_other_prime(which):
    """軌道型の p と引数の p が違えばどちらの種類でも拒否する"""
    with pytest.raises(InvalidInputError):
        generic_jordan_type(P("2,1"), O("1^3", 3), 2, which)
    with pytest.raises(InvalidInputError):
        generic_jordan_type(P("1,1"), O("2^1", 2), 3, which)
