"""orbitnum の例外"""


class OrbitnumError(Exception):
    """orbitnum が送出するすべての例外の基底クラス"""


class InvalidInputError(OrbitnumError, ValueError):
    """入力が前提条件を満たさない

    サイズ不一致、p-制限でない分割、素数でない p、書式の誤った文字列など。
    """


class TableInconsistencyError(OrbitnumError, RuntimeError):
    """検証ゲートに失敗した

    p-Kostka 行列の単三角性や、解いた軌道数表の非負性、M = K·Y の不一致など。
    p-Kostka 数の計算に欠陥があることを示す。
    """


class ResourceLimitError(OrbitnumError, RuntimeError):
    """計算規模が設定された上限を超えた

    上限は環境変数 ORBITNUM_MAX_N で変更できる。黙って打ち切ることはしない。
    """
