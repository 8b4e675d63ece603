"""
ED文字列の基本コマンド
parse / classify / size / language
"""

from lib import (
    classify,
    enumerate_language,
    get_settings,
    read_ed_string,
    serialize_linearized,
    size,
    symbol_sizes,
)

from . import CommandOutput, add_cap_argument


def cmd_parse(args) -> CommandOutput:
    """正準形の線形化表記"""
    return CommandOutput([serialize_linearized(read_ed_string(args.file))])


def cmd_classify(args) -> CommandOutput:
    return CommandOutput([classify(read_ed_string(args.file)).value])


def cmd_size(args) -> CommandOutput:
    """||S|| と記号ごとのサイズ"""
    s = read_ed_string(args.file)
    return CommandOutput([f"{size(s)}\t{','.join(str(v) for v in symbol_sizes(s))}"])


def cmd_language(args) -> CommandOutput:
    """言語の要素を辞書順に1行ずつ（ε は空行）"""
    s = read_ed_string(args.file)
    cap = args.cap or get_settings().language_cap
    return CommandOutput(sorted(enumerate_language(s, cap)))


def register(subparsers):
    parser = subparsers.add_parser("parse", help="線形化表記を正準形で出力")
    parser.add_argument("file")
    parser.set_defaults(func=cmd_parse)

    parser = subparsers.add_parser("classify", help="indeterminate / gd / ed を判定")
    parser.add_argument("file")
    parser.set_defaults(func=cmd_classify)

    parser = subparsers.add_parser("size", help="サイズ ||S|| と記号ごとのサイズ")
    parser.add_argument("file")
    parser.set_defaults(func=cmd_size)

    parser = subparsers.add_parser("language", help="言語 L(S) を列挙")
    parser.add_argument("file")
    add_cap_argument(parser)
    parser.set_defaults(func=cmd_language)
