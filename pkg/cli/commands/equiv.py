"""
言語等価性コマンド
equiv / equiv-brute
"""

from lib import build_gd_dfa, dfa_equivalent, languages_equal_bruteforce, read_ed_string

from . import EXIT_NO, CommandOutput, add_cap_argument


def _verdict(equal: bool) -> CommandOutput:
    return CommandOutput(["equivalent"]) if equal else CommandOutput(["different"], EXIT_NO)


def cmd_equiv(args) -> CommandOutput:
    """2つの GD文字列の DFA 等価判定"""
    a = build_gd_dfa(read_ed_string(args.file1))
    b = build_gd_dfa(read_ed_string(args.file2))
    return _verdict(dfa_equivalent(a, b))


def cmd_equiv_brute(args) -> CommandOutput:
    s, t = read_ed_string(args.file1), read_ed_string(args.file2)
    return _verdict(languages_equal_bruteforce(s, t, args.cap))


def register(subparsers):
    parser = subparsers.add_parser("equiv", help="GD文字列の言語等価性（DFA）")
    parser.add_argument("file1")
    parser.add_argument("file2")
    parser.set_defaults(func=cmd_equiv)

    parser = subparsers.add_parser("equiv-brute", help="ED文字列の言語等価性（列挙）")
    parser.add_argument("file1")
    parser.add_argument("file2")
    add_cap_argument(parser)
    parser.set_defaults(func=cmd_equiv_brute)
