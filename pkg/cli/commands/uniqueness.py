"""
MUS / MAW コマンド
mus / maw / encode
"""

from lib import (
    emit_dimacs,
    encode_maw_cnf,
    encode_mus_cnf,
    read_ed_string,
    shortest_absent_bruteforce,
    shortest_absent_sat,
    shortest_unique_bruteforce,
    shortest_unique_sat,
    solve,
    solve_external,
)

from . import CommandOutput, positive_int

ENGINES = ("brute", "sat")
SOLVERS = ("builtin", "external")


def _solver(name: str):
    return solve_external if name == "external" else solve


def _search(args, brute, sat) -> CommandOutput:
    s = read_ed_string(args.file)
    kmax = args.max_k or len(s)
    if args.engine == "sat":
        result = sat(s, kmax, _solver(args.solver))
    else:
        result = brute(s, kmax)
    if result is None:
        return CommandOutput.none()
    return CommandOutput([f"{result.length}\t{result.witness}"])


def cmd_mus(args) -> CommandOutput:
    """最短の極小ユニーク部分文字列"""
    return _search(args, shortest_unique_bruteforce, shortest_unique_sat)


def cmd_maw(args) -> CommandOutput:
    """最短の極小欠損語"""
    return _search(args, shortest_absent_bruteforce, shortest_absent_sat)


def cmd_encode(args) -> CommandOutput:
    """長さ x の SAT 符号化を DIMACS で出力"""
    s = read_ed_string(args.file)
    encoder = encode_mus_cnf if args.kind == "mus" else encode_maw_cnf
    return CommandOutput(emit_dimacs(encoder(s, args.x).cnf).splitlines())


def register(subparsers):
    for name, func, help_text in (
        ("mus", cmd_mus, "最短の極小ユニーク部分文字列（不確定文字列）"),
        ("maw", cmd_maw, "最短の極小欠損語（不確定文字列）"),
    ):
        parser = subparsers.add_parser(name, help=help_text)
        parser.add_argument("file")
        parser.add_argument("--max-k", type=positive_int, default=None, help="探索する最大長（省略時は |S|）")
        parser.add_argument("--engine", choices=ENGINES, default="brute")
        parser.add_argument("--solver", choices=SOLVERS, default="builtin",
                            help="external は EDSTR_SAT_SOLVER のコマンドを使う")
        parser.set_defaults(func=func)

    parser = subparsers.add_parser("encode", help="固定長の SAT 符号化を DIMACS で出力")
    parser.add_argument("kind", choices=("mus", "maw"))
    parser.add_argument("file")
    parser.add_argument("x", type=positive_int, help="文字列の長さ")
    parser.set_defaults(func=cmd_encode)
