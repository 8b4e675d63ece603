"""
LCE / LRF / EDSI コマンド
"""

from lib import build_linearization, edsi_decide, lce, lrf, read_ed_string

from . import EXIT_NO, CommandOutput, positive_int


def cmd_lrf(args) -> CommandOutput:
    """長さ<TAB>証拠<TAB>位置<TAB>位置（反復がなければ 0）"""
    result = lrf(read_ed_string(args.file))
    if result.length == 0:
        return CommandOutput(["0"])
    return CommandOutput([f"{result.length}\t{result.witness}\t{result.first}\t{result.second}"])


def cmd_lce(args) -> CommandOutput:
    """L の位置 i, j の D(i, j)"""
    lin = build_linearization(read_ed_string(args.file))
    return CommandOutput([str(lce(lin, args.i, args.j))])


def cmd_edsi(args) -> CommandOutput:
    if edsi_decide(read_ed_string(args.file1), read_ed_string(args.file2)):
        return CommandOutput(["intersecting"])
    return CommandOutput(["disjoint"], EXIT_NO)


def register(subparsers):
    parser = subparsers.add_parser("lrf", help="最長反復因子")
    parser.add_argument("file")
    parser.set_defaults(func=cmd_lrf)

    parser = subparsers.add_parser("lce", help="線形化の2位置の最長共通拡張")
    parser.add_argument("file")
    parser.add_argument("i", type=positive_int)
    parser.add_argument("j", type=positive_int)
    parser.set_defaults(func=cmd_lce)

    parser = subparsers.add_parser("edsi", help="2つの ED文字列の言語が交わるか")
    parser.add_argument("file1")
    parser.add_argument("file2")
    parser.set_defaults(func=cmd_edsi)
