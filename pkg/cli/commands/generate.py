"""
乱数インスタンス生成コマンド
generate ed | gd | indet | cnf | graph
"""

from lib import (
    emit_dimacs,
    random_cnf3,
    random_ed_string,
    random_gd_string,
    random_graph,
    random_indeterminate_string,
    serialize_linearized,
)

from . import CommandOutput, positive_int

KINDS = ("ed", "gd", "indet", "cnf", "graph")


def cmd_generate(args) -> CommandOutput:
    if args.kind == "ed":
        s = random_ed_string(args.length, alphabet=args.alphabet or "ab", seed=args.seed)
        return CommandOutput([serialize_linearized(s)])
    if args.kind == "gd":
        s = random_gd_string(args.length, alphabet=args.alphabet or "ab", seed=args.seed)
        return CommandOutput([serialize_linearized(s)])
    if args.kind == "indet":
        s = random_indeterminate_string(args.length, alphabet=args.alphabet or "ACGT", r=args.r, seed=args.seed)
        return CommandOutput([serialize_linearized(s)])
    if args.kind == "cnf":
        return CommandOutput(emit_dimacs(random_cnf3(args.n, args.m, seed=args.seed).to_formula()).splitlines())
    g = random_graph(args.n, args.p, seed=args.seed)
    return CommandOutput([str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges)])


def register(subparsers):
    parser = subparsers.add_parser("generate", help="乱数インスタンスを生成")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--length", type=positive_int, default=8, help="記号数（ed/gd/indet）")
    parser.add_argument("--alphabet", default=None)
    parser.add_argument("-r", type=positive_int, default=2, help="記号あたりの最大文字数（indet）")
    parser.add_argument("-n", type=positive_int, default=4, help="変数数（cnf）または頂点数（graph）")
    parser.add_argument("-m", type=positive_int, default=6, help="節数（cnf）")
    parser.add_argument("-p", type=float, default=0.5, help="辺の確率（graph）")
    parser.set_defaults(func=cmd_generate)
