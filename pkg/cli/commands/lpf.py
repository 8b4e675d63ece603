"""
LPF コマンド
lpf-weak / lpf-strong-max
"""

from lib import longest_strong_repeat, lpf_weak, max_lpf_strong, read_ed_string

from . import CommandOutput, add_cap_argument, add_position_arguments, position_from


def cmd_lpf_weak(args) -> CommandOutput:
    """長さ<TAB>証拠<TAB>先行位置（0 なら長さのみ）"""
    result = lpf_weak(read_ed_string(args.file), position_from(args))
    if result.length == 0:
        return CommandOutput(["0"])
    return CommandOutput([f"{result.length}\t{result.witness}\t{result.source}"])


def cmd_lpf_strong_max(args) -> CommandOutput:
    s = read_ed_string(args.file)
    if args.engine == "search":
        return CommandOutput([str(longest_strong_repeat(s, args.cap).length)])
    return CommandOutput([str(max_lpf_strong(s, args.cap))])


def register(subparsers):
    parser = subparsers.add_parser("lpf-weak", help="テキスト位置の弱い LPF")
    parser.add_argument("file")
    add_position_arguments(parser)
    parser.set_defaults(func=cmd_lpf_weak)

    parser = subparsers.add_parser("lpf-strong-max", help="強い LPF の最大値")
    parser.add_argument("file")
    parser.add_argument("--engine", choices=("enum", "search"), default="enum",
                        help="enum は言語の列挙、search は同期カーソル探索")
    add_cap_argument(parser, "列挙数（enum）または探索状態数（search）の上限")
    parser.set_defaults(func=cmd_lpf_strong_max)
