"""
帰着生成コマンド
reduce 3sat-mus | 3sat-maw | hampath | lcs | 2ed-ineq
"""

from lib import (
    Cnf3,
    CsInstance,
    read_dimacs,
    read_graph,
    read_strings,
    reduce_3sat_to_2ed_inequality,
    reduce_3sat_to_maw,
    reduce_3sat_to_mus,
    reduce_common_subsequence,
    reduce_hampath,
    serialize_linearized,
)

from . import CommandOutput, positive_int


def _read_cnf3(path: str) -> Cnf3:
    return Cnf3.from_formula(read_dimacs(path))


def cmd_reduce_3sat_mus(args) -> CommandOutput:
    reduction = reduce_3sat_to_mus(_read_cnf3(args.file))
    return CommandOutput([f"{serialize_linearized(reduction.string)}\t{reduction.threshold}"])


def cmd_reduce_3sat_maw(args) -> CommandOutput:
    reduction = reduce_3sat_to_maw(_read_cnf3(args.file))
    return CommandOutput([f"{serialize_linearized(reduction.string)}\t{reduction.threshold}"])


def cmd_reduce_hampath(args) -> CommandOutput:
    reduction = reduce_hampath(read_graph(args.file), binary=args.binary)
    return CommandOutput([f"{serialize_linearized(reduction.string)}\t{reduction.k}"])


def cmd_reduce_lcs(args) -> CommandOutput:
    reduction = reduce_common_subsequence(CsInstance(tuple(read_strings(args.file)), args.k))
    return CommandOutput([f"{serialize_linearized(reduction.string)}\t{reduction.target_length}"])


def cmd_reduce_2ed(args) -> CommandOutput:
    """S の記号の要素を1行ずつ、最後に T"""
    reduction = reduce_3sat_to_2ed_inequality(_read_cnf3(args.file))
    members = sorted(serialize_linearized(inner) for inner in reduction.s.symbols[0])
    return CommandOutput([f"S\t{member}" for member in members] + [f"T\t{serialize_linearized(reduction.t)}"])


def register(subparsers):
    parser = subparsers.add_parser("reduce", help="NP困難性の帰着インスタンスを生成")
    kinds = parser.add_subparsers(dest="reduction", required=True)

    sub = kinds.add_parser("3sat-mus", help="3-CNF → MUS 文字列としきい値")
    sub.add_argument("file")
    sub.set_defaults(func=cmd_reduce_3sat_mus)

    sub = kinds.add_parser("3sat-maw", help="3-CNF → MAW 文字列としきい値")
    sub.add_argument("file")
    sub.set_defaults(func=cmd_reduce_3sat_maw)

    sub = kinds.add_parser("hampath", help="グラフ → GD文字列と次数 k")
    sub.add_argument("file")
    sub.add_argument("--binary", action="store_true", help="頂点を2進ビット列で符号化")
    sub.set_defaults(func=cmd_reduce_hampath)

    sub = kinds.add_parser("lcs", help="文字列リストと k → ED文字列と目標 LPF 長")
    sub.add_argument("file")
    sub.add_argument("k", type=positive_int)
    sub.set_defaults(func=cmd_reduce_lcs)

    sub = kinds.add_parser("2ed-ineq", help="3-CNF → 2ED文字列 S と ED文字列 T")
    sub.add_argument("file")
    sub.set_defaults(func=cmd_reduce_2ed)
