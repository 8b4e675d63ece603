"""
ED文字列ツールキット - 入力値検証モジュール

例外階層と小さな検証ヘルパーをまとめる。
ライブラリ内の入力エラーはすべて ValidationError の派生として送出する。
"""

from enum import Enum
from typing import Any


class ValidationError(Exception):
    """入力値検証エラー"""
    pass


# =============================================================================
# 線形化表記の構文エラー
# =============================================================================

class EdStringSyntaxError(ValidationError):
    """線形化表記の構文エラー（基底）"""
    pass


class UnbalancedParentheses(EdStringSyntaxError):
    """括弧の対応が取れていない"""
    pass


class NestedParentheses(EdStringSyntaxError):
    """括弧が入れ子になっている"""
    pass


class EmptySymbol(EdStringSyntaxError):
    """空記号（() または ε のみの記号）"""
    pass


class ReservedCharacterInAlphabet(EdStringSyntaxError):
    """予約文字 ( | ) が文字として使われた"""
    pass


class InvalidCharacter(EdStringSyntaxError):
    """空白・制御文字などアルファベットに使えない文字"""
    pass


# =============================================================================
# 前提条件エラー
# =============================================================================

class InvalidTextPosition(ValidationError):
    """存在しないテキスト位置"""
    pass


class NotIndeterminate(ValidationError):
    """不確定文字列でない入力"""
    pass


class NotGd(ValidationError):
    """GD文字列でない入力"""
    pass


class ClauseWithRepeatedVariable(ValidationError):
    """3-CNF節に同じ変数が2回以上現れる"""
    pass


class MalformedDimacs(ValidationError):
    """DIMACS CNF の書式不正"""
    pass


class MalformedWitness(ValidationError):
    """証拠文字列から解を取り出せない"""
    pass


class MalformedGraph(ValidationError):
    """グラフ定義の不正"""
    pass


class DollarInAlphabet(ValidationError):
    """区切り文字 $ が入力文字列に含まれる"""
    pass


# =============================================================================
# 予算超過・その他
# =============================================================================

class BudgetExceeded(Exception):
    """探索・列挙の上限超過（基底）"""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class LanguageTooLarge(BudgetExceeded):
    """言語の列挙数が上限を超えた"""
    pass


class CandidateSpaceTooLarge(BudgetExceeded):
    """総当たり候補数が上限を超えた"""
    pass


class SearchBudgetExceeded(BudgetExceeded):
    """探索ノード数が上限を超えた"""
    pass


class AlphabetExhausted(Exception):
    """区切りに使える未使用文字が残っていない"""
    pass


class SolverError(Exception):
    """外部SATソルバー連携エラー（基底）"""
    pass


class SolverUnavailable(SolverError):
    """ソルバーが設定されていない、または起動できない"""
    pass


class UnparsableOutput(SolverError):
    """ソルバー出力を解釈できない"""
    pass


class ModelRejected(SolverError):
    """ソルバーが返したモデルが式を満たさない"""
    pass


# =============================================================================
# 検証ヘルパー
# =============================================================================

def validate_positive_int(value: Any, field_name: str, minimum: int = 1) -> int:
    """
    正の整数の検証

    Args:
        value: 検証対象の値
        field_name: フィールド名（エラーメッセージ用）
        minimum: 許容する最小値

    Returns:
        検証済み整数

    Raises:
        ValidationError: 整数でない、または最小値未満の場合
    """
    if isinstance(value, bool):
        raise ValidationError(f"{field_name}は整数で指定してください")
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{field_name}は整数で指定してください") from None
    if number != value and not isinstance(value, str):
        raise ValidationError(f"{field_name}は整数で指定してください")
    if number < minimum:
        raise ValidationError(f"{field_name}は{minimum}以上にしてください")
    return number


def validate_enum(value: Any, field_name: str, enum_type: type[Enum]) -> Enum:
    """
    列挙型の検証

    Args:
        value: 検証対象の値（列挙メンバーまたはその値）
        field_name: フィールド名
        enum_type: 許可される列挙型

    Returns:
        列挙メンバー

    Raises:
        ValidationError: 許可されない値の場合
    """
    if isinstance(value, enum_type):
        return value
    try:
        return enum_type(value)
    except ValueError:
        allowed = ", ".join(str(member.value) for member in enum_type)
        raise ValidationError(
            f"{field_name}は次の値のいずれかである必要があります: {allowed}"
        ) from None
