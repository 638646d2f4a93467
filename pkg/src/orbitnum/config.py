"""計算規模の上限と検証スイートの範囲設定

上限は環境変数 ORBITNUM_MAX_N で全素数一律に上書きできる。
"""

import logging
import os
from typing import NotRequired, TypedDict

from sympy import isprime

from .errors import InvalidInputError, ResourceLimitError

logger = logging.getLogger(__name__)

MAX_N_ENV = "ORBITNUM_MAX_N"

# p ごとの既定の上限
DEFAULT_CEILINGS: dict[int, int] = {2: 10, 3: 12, 5: 12}
DEFAULT_CEILING = 12

# Mullineux 不変性の指数選択がこれを超えたら固定シードでサンプリングする
MULLINEUX_SAMPLE_LIMIT = 200
MULLINEUX_SAMPLE_SEED = 20240101


class SuiteBounds(TypedDict):
    """検証スイートのパラメータ範囲

    すべて省略可能。省略時はスイートごとの既定値を使う。
    """

    n_max: NotRequired[int]
    m_max: NotRequired[int]
    n2_max: NotRequired[int]
    r_max: NotRequired[int]
    twist_max: NotRequired[int]
    samples: NotRequired[int]
    seed: NotRequired[int]


def require_prime(p: int) -> None:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise InvalidInputError(f"InvalidInput: p={p!r} は素数ではありません")
    if not isprime(p):
        raise InvalidInputError(f"InvalidInput: p={p} は素数ではありません")


def max_n(p: int) -> int:
    """p に対する n の上限を返す"""
    value = os.environ.get(MAX_N_ENV)
    if value is not None and value.strip() != "":
        try:
            ceiling = int(value)
        except ValueError:
            raise InvalidInputError(
                f"InvalidInput: {MAX_N_ENV}={value!r} は整数ではありません"
            ) from None
        if ceiling < 0:
            raise InvalidInputError(f"InvalidInput: {MAX_N_ENV}={ceiling} は負です")
        return ceiling
    return DEFAULT_CEILINGS.get(p, DEFAULT_CEILING)


def check_ceiling(n: int, p: int) -> None:
    """n が上限を超えていれば ResourceLimitError を送出する"""
    ceiling = max_n(p)
    if n > ceiling:
        logger.error("ceiling exceeded: n=%d p=%d ceiling=%d", n, p, ceiling)
        raise ResourceLimitError(
            f"ResourceLimit: n={n} は p={p} の上限 {ceiling} を超えています"
            f" ({MAX_N_ENV} で変更できます)"
        )
