"""
既定の上限いっぱいの範囲での検証と所要時間

ORBITNUM_SLOW=1 のときだけ実行する。
表の構築以外は、計時の前に必要な表を fixture で作っておく。
"""

import numpy as np
import pytest
from partition_test_helpers import slow

from orbitnum import (
    build_tables,
    clear_kostka_cache,
    clear_table_cache,
    max_n,
    run_suite,
)

pytestmark = slow


@pytest.fixture
def warm_tables(request, monkeypatch):
    """(p, n_max) までの表を作る。n_max が上限を超えるなら上限を上げる"""
    params = request.node.callspec.params
    p, n_max = params["p"], params["n_max"]
    if n_max > max_n(p):
        monkeypatch.setenv("ORBITNUM_MAX_N", str(n_max))
    for n in range(1, max(n_max, max_n(p)) + 1):
        build_tables(n, p)


def _assert_passed(report):
    assert report.passed, report.to_dict()["failures"][:5]
    assert report.cases > 0


@pytest.mark.timeout(300, func_only=True)
@pytest.mark.parametrize(("p", "n_max"), [(2, 10), (3, 12)])
def test_tables_up_to_ceiling(p, n_max):
    """キャッシュなしで n_max までの表を作り、K·Y = M と Y ≥ 0 を確かめる"""
    clear_table_cache()
    clear_kostka_cache()
    for n in range(1, n_max + 1):
        table = build_tables(n, p)
        y = np.array(table.Y, dtype=np.int64)
        k = np.array(table.K.entries, dtype=np.int64)
        assert (y >= 0).all()
        np.testing.assert_array_equal(k @ y, np.array(table.M, dtype=np.int64))


@pytest.mark.timeout(60, func_only=True)
@pytest.mark.parametrize(("p", "n_max"), [(2, 10), (3, 10)])
def test_oracle_m(p, n_max):
    _assert_passed(run_suite("oracle-m", p, {"n_max": n_max}))


@pytest.mark.timeout(60, func_only=True)
@pytest.mark.parametrize("name", ["canonical-product", "nonzero-pattern"])
@pytest.mark.parametrize(("p", "n_max"), [(2, 10), (3, 12)])
def test_table_properties(warm_tables, name, p, n_max):
    _assert_passed(run_suite(name, p, {"n_max": n_max}))


@pytest.mark.timeout(60, func_only=True)
@pytest.mark.parametrize(("p", "n_max"), [(2, 12), (3, 12), (5, 12)])
def test_closed_forms(warm_tables, p, n_max):
    """フック型と 2 行の閉じた式を n ≤ 12 で表と照合する"""
    _assert_passed(run_suite("closed-forms", p, {"n_max": n_max}))


@pytest.mark.timeout(300, func_only=True)
@pytest.mark.parametrize(("p", "n_max"), [(2, 4), (3, 4)])
def test_reductions(warm_tables, p, n_max):
    report = run_suite("reductions", p, {"m_max": 6, "n2_max": n_max})
    _assert_passed(report)
    assert report.bounds == {"m_max": 6, "n2_max": 4}


@pytest.mark.timeout(120, func_only=True)
@pytest.mark.parametrize("p", [2, 3])
def test_gill(p):
    _assert_passed(run_suite("gill", p, {"m_max": 5, "n2_max": 3, "r_max": 2}))


@pytest.mark.timeout(120, func_only=True)
@pytest.mark.parametrize(("p", "n_max"), [(2, 8), (3, 8)])
def test_mullineux_invariance(warm_tables, p, n_max):
    _assert_passed(run_suite("mullineux-invariance", p, {"n_max": n_max}))
