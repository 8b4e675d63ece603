"""
アンチパワーコマンド
"""

from lib import antipower_witnesses, read_ed_string

from . import CommandOutput, positive_int


def cmd_antipower(args) -> CommandOutput:
    """語<TAB>因子1,因子2,…（--all なら全証拠を1行ずつ）"""
    witnesses = antipower_witnesses(read_ed_string(args.file), args.k, args.cap, find_all=args.all)
    if not witnesses:
        return CommandOutput.none()
    return CommandOutput([f"{w.word}\t{','.join(w.factors)}" for w in witnesses])


def register(subparsers):
    parser = subparsers.add_parser("antipower", help="GD文字列の言語に k次アンチパワーがあるか")
    parser.add_argument("file")
    parser.add_argument("k", type=positive_int)
    parser.add_argument("--all", action="store_true", help="全証拠を列挙")
    parser.add_argument("--cap", type=positive_int, default=None, help="探索ノード数の上限")
    parser.set_defaults(func=cmd_antipower)
