"""
ED文字列ツールキット - コマンドラインのエントリーポイント

使い方:
    edstr [--json] <サブコマンド> [引数...]

終了コード: 0 = 判定済み・結果あり、1 = 否定・解なし、2 = エラー
"""

import argparse
import sys

from lib import (
    AlphabetExhausted,
    BudgetExceeded,
    SolverError,
    ValidationError,
    get_supported_formats,
    log,
)
from lib.schemas import CommandResult

from .commands import EXIT_ERROR, CommandOutput
from .commands import antipower, core, equiv, generate, lpf, reduce, repeats, uniqueness

HANDLED_ERRORS = (ValidationError, BudgetExceeded, SolverError, AlphabetExhausted, OSError)

COMMAND_MODULES = (core, repeats, uniqueness, reduce, antipower, lpf, equiv, generate)


def _epilog() -> str:
    lines = ["入力形式:"]
    lines += [f"  {name}: {description}" for name, description in get_supported_formats().items()]
    lines.append("終了コード: 0 = 結果あり, 1 = 否定・解なし, 2 = エラー")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edstr",
        description="ED文字列（elastic-degenerate string）の解析ツール",
        epilog=_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--json", action="store_true", help="結果を JSON で出力")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="<command>")
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def run(argv: list[str] | None = None) -> int:
    """
    コマンドを1つ実行する

    Args:
        argv: 引数（省略時は sys.argv[1:]）

    Returns:
        終了コード
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # 使い方の誤りは argparse が stderr に表示済み
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    command = args.command if args.command != "reduce" else f"reduce {args.reduction}"
    try:
        output: CommandOutput = args.func(args)
    except HANDLED_ERRORS as e:
        log(f"{command}: {type(e).__name__}", "DEBUG")
        if args.json:
            print(CommandResult.from_error(command, e).to_json())
        print(f"edstr: エラー: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.json:
        print(CommandResult.from_lines(command, output.lines, output.exit_code).to_json())
    else:
        for line in output.lines:
            print(line)
    return output.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
