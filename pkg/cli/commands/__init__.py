"""
サブコマンド群

各モジュールは register(subparsers) でサブコマンドを登録し、
ハンドラは CommandOutput（出力行と終了コード）を返す。
"""

import argparse
from dataclasses import dataclass, field

from lib import TextPosition

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


@dataclass(frozen=True)
class CommandOutput:
    """標準出力に書く行と終了コード"""
    lines: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    @classmethod
    def none(cls) -> "CommandOutput":
        return cls(["none"], EXIT_NO)


def positive_int(value: str) -> int:
    """argparse 用: 1以上の整数"""
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"整数で指定してください: {value}") from None
    if number < 1:
        raise argparse.ArgumentTypeError(f"1以上にしてください: {value}")
    return number


def add_position_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("i", type=positive_int, help="記号番号")
    parser.add_argument("j", type=positive_int, help="選択肢番号")
    parser.add_argument("k", type=positive_int, help="文字オフセット")


def position_from(args: argparse.Namespace) -> TextPosition:
    return TextPosition(args.i, args.j, args.k)


def add_cap_argument(parser: argparse.ArgumentParser, help_text: str = "言語列挙の上限（省略時は EDSTR_LANGUAGE_CAP）"):
    parser.add_argument("--cap", type=positive_int, default=None, help=help_text)
