"""
ED文字列ツールキット - 乱数生成モジュール

検算・性能確認・`edstr generate` 用に、シード固定の乱数で
ED文字列・GD文字列・不確定文字列・3-CNF・グラフ・共通部分列インスタンスを作る。
"""

import random

from .antipower import Graph
from .edcore import EDString, Symbol
from .uniqueness import Cnf3
from .validation import ValidationError, validate_positive_int

DEFAULT_ALPHABET = "ab"
DNA_ALPHABET = "ACGT"


def _rng(seed: int | random.Random | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _check_alphabet(alphabet: str):
    if not alphabet:
        raise ValidationError("アルファベットが空です")


def random_ed_string(length: int, alphabet: str = DEFAULT_ALPHABET, max_alternatives: int = 3,
                     max_alternative_length: int = 3, epsilon_rate: float = 0.2,
                     seed: int | random.Random | None = None) -> EDString:
    """
    ランダムな ED文字列

    Args:
        length: 記号数
        alphabet: 使う文字
        max_alternatives: 記号あたりの選択肢数の上限
        max_alternative_length: 選択肢の長さの上限
        epsilon_rate: 記号が ε を含む確率
        seed: シードまたは Random
    """
    validate_positive_int(length, "length")
    validate_positive_int(max_alternatives, "max_alternatives")
    validate_positive_int(max_alternative_length, "max_alternative_length")
    _check_alphabet(alphabet)
    rng = _rng(seed)
    symbols = []
    for _ in range(length):
        count = rng.randint(1, max_alternatives)
        alternatives = {"".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_alternative_length)))
                        for _ in range(count)}
        if count > 1 and rng.random() < epsilon_rate:
            alternatives.add("")
        symbols.append(Symbol.of(alternatives))
    return EDString(tuple(symbols))


def random_gd_string(length: int, alphabet: str = DEFAULT_ALPHABET, max_alternatives: int = 3,
                     max_width: int = 3, seed: int | random.Random | None = None) -> EDString:
    """ランダムな GD文字列（記号ごとに選択肢の長さが揃う）"""
    validate_positive_int(length, "length")
    validate_positive_int(max_alternatives, "max_alternatives")
    validate_positive_int(max_width, "max_width")
    _check_alphabet(alphabet)
    rng = _rng(seed)
    symbols = []
    for _ in range(length):
        width = rng.randint(1, max_width)
        count = min(rng.randint(1, max_alternatives), len(alphabet) ** width)
        alternatives: set[str] = set()
        while len(alternatives) < count:
            alternatives.add("".join(rng.choice(alphabet) for _ in range(width)))
        symbols.append(Symbol.of(alternatives))
    return EDString(tuple(symbols))


def random_indeterminate_string(length: int, alphabet: str = DNA_ALPHABET, r: int = 2,
                                seed: int | random.Random | None = None) -> EDString:
    """ランダムな不確定文字列（各記号は 1..r 文字の集合）"""
    validate_positive_int(length, "length")
    validate_positive_int(r, "r")
    _check_alphabet(alphabet)
    rng = _rng(seed)
    upper = min(r, len(alphabet))
    return EDString(tuple(Symbol.of(rng.sample(alphabet, rng.randint(1, upper))) for _ in range(length)))


def random_cnf3(n: int, m: int, seed: int | random.Random | None = None) -> Cnf3:
    """ランダムな 3-CNF（各節は相異なる3変数、符号は一様）"""
    validate_positive_int(n, "n", minimum=3)
    validate_positive_int(m, "m")
    rng = _rng(seed)
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return Cnf3(n, tuple(clauses))


def random_graph(n: int, p: float = 0.5, seed: int | random.Random | None = None) -> Graph:
    """G(n, p) のランダムグラフ"""
    validate_positive_int(n, "n")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"辺の確率は0以上1以下にしてください: {p}")
    rng = _rng(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph.create(n, edges)


def random_cs_instance(count: int, max_length: int, alphabet: str = DEFAULT_ALPHABET,
                       seed: int | random.Random | None = None) -> tuple[tuple[str, ...], int]:
    """
    ランダムな共通部分列インスタンス

    Returns:
        (文字列の組, k)。k は最短の文字列の長さ以下。
    """
    validate_positive_int(count, "count")
    validate_positive_int(max_length, "max_length")
    _check_alphabet(alphabet)
    rng = _rng(seed)
    strings = tuple("".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_length)))
                    for _ in range(count))
    return strings, rng.randint(1, min(len(word) for word in strings))
