"""
ED文字列ツールキット - アンチパワーモジュール

k次アンチパワー（長さの等しい k 個の相異なる因子への分解）の判定、
GD文字列の言語上の探索、ハミルトン路問題からの帰着と路の復元を提供する。
"""

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import NamedTuple

import networkx as nx

from .config import get_settings, log
from .edcore import EDString, StringClass, Symbol, classify
from .validation import (
    MalformedGraph,
    MalformedWitness,
    NotGd,
    SearchBudgetExceeded,
    validate_positive_int,
)

MAX_LETTER_VERTICES = 26


# =============================================================================
# グラフ
# =============================================================================

@dataclass(frozen=True)
class Graph:
    """無向グラフ（頂点は 1..n、辺は u < v に正規化）"""
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise MalformedGraph(f"頂点数が不正です: {self.n!r}")
        for u, v in self.edges:
            if u == v:
                raise MalformedGraph(f"自己ループは使えません: {u}")
            if not (1 <= u < v <= self.n):
                raise MalformedGraph(f"辺 ({u}, {v}) が不正です (1 ≤ u < v ≤ {self.n})")

    @classmethod
    def create(cls, n: int, edges) -> "Graph":
        """向き・重複を問わない辺リストから作る"""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise MalformedGraph(f"自己ループは使えません: {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(n, frozenset(normalized))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    def non_edges(self) -> list[tuple[int, int]]:
        """補グラフの辺（辞書順）"""
        complement = nx.complement(self.to_networkx())
        return sorted((min(u, v), max(u, v)) for u, v in complement.edges)


def hamiltonian_paths(g: Graph) -> list[tuple[int, ...]]:
    """全ハミルトン路（向き付き、辞書順）。小さなグラフの総当たり用。"""
    graph = g.to_networkx()
    return [order for order in permutations(range(1, g.n + 1))
            if all(graph.has_edge(a, b) for a, b in zip(order, order[1:], strict=False))]


def has_hamiltonian_path(g: Graph) -> bool:
    return bool(hamiltonian_paths(g))


# =============================================================================
# アンチパワー
# =============================================================================

@dataclass(frozen=True)
class AntiPowerWitness:
    """k次アンチパワーの証拠"""
    word: str
    k: int
    factors: tuple[str, ...]


def is_k_antipower(t: str, k: int) -> bool:
    """t を長さの等しい k 個の因子に分けたとき、因子がすべて異なるか"""
    k = validate_positive_int(k, "k")
    if len(t) % k:
        return False
    width = len(t) // k
    blocks = {t[i * width:(i + 1) * width] for i in range(k)}
    return len(blocks) == k


def _require_gd(s: EDString):
    if classify(s) is StringClass.ED:
        raise NotGd("GD文字列（各記号の選択肢が同じ長さで ε を含まない）が必要です")


def antipower_witnesses(s: EDString, k: int, cap: int | None = None,
                        find_all: bool = True) -> list[AntiPowerWitness]:
    """
    L(s) 中の k次アンチパワーを深さ優先で列挙

    記号ごとに選択肢を選び、完成したブロックが既出のブロックと衝突した時点で
    その枝を打ち切る。GD文字列ではブロック境界が記号の長さだけで決まる。

    Args:
        s: GD文字列
        k: 次数
        cap: 探索ノード数の上限（省略時は設定値）
        find_all: False なら最初の1件で止める

    Returns:
        証拠のリスト（選択肢の正準順による深さ優先順）

    Raises:
        NotGd: s が GD文字列でない場合
        SearchBudgetExceeded: 探索ノード数が cap を超えた場合
    """
    _require_gd(s)
    k = validate_positive_int(k, "k")
    cap = cap or get_settings().search_budget
    alternatives = [sym.alternatives for sym in s.symbols]
    total = sum(len(options[0]) for options in alternatives)
    if total % k:
        return []
    width = total // k
    depth_count = len(alternatives)

    witnesses: list[AntiPowerWitness] = []
    choice = [-1] * depth_count
    offsets = [0] * (depth_count + 1)
    added: list[list[str]] = [[] for _ in range(depth_count)]
    seen: set[str] = set()
    text = ""
    explored = 0
    depth = 0
    while depth >= 0:
        if depth == depth_count:
            factors = tuple(text[i * width:(i + 1) * width] for i in range(k))
            witnesses.append(AntiPowerWitness(text, k, factors))
            if not find_all:
                break
            depth -= 1
            continue
        for block in added[depth]:
            seen.discard(block)
        added[depth] = []
        choice[depth] += 1
        if choice[depth] >= len(alternatives[depth]):
            choice[depth] = -1
            depth -= 1
            continue
        explored += 1
        if explored > cap:
            log(f"アンチパワー探索が上限 {cap} に達しました", "WARN")
            raise SearchBudgetExceeded(f"探索ノード数が上限 {cap} を超えました", cap)
        start = offsets[depth]
        text = text[:start] + alternatives[depth][choice[depth]]
        end = len(text)
        offsets[depth + 1] = end
        collided = False
        for index in range(start // width, end // width):
            block = text[index * width:(index + 1) * width]
            if block in seen:
                collided = True
                break
            seen.add(block)
            added[depth].append(block)
        if not collided:
            depth += 1
    return witnesses


def has_k_antipower(s: EDString, k: int, cap: int | None = None) -> AntiPowerWitness | None:
    """L(s) に k次アンチパワーが存在すれば最初の証拠を返す"""
    found = antipower_witnesses(s, k, cap, find_all=False)
    return found[0] if found else None


# =============================================================================
# ハミルトン路からの帰着
# =============================================================================

class HampathReduction(NamedTuple):
    """帰着で得た GD文字列と次数"""
    string: EDString
    k: int


def vertex_codes(n: int, binary: bool = False) -> dict[int, str]:
    """
    頂点 → 文字（n ≤ 26 は a, b, …、それ以外または binary 指定時は ⌈log₂n⌉ ビット列）
    """
    if binary or n > MAX_LETTER_VERTICES:
        bits = max(1, math.ceil(math.log2(n)))
        return {v: format(v - 1, f"0{bits}b") for v in range(1, n + 1)}
    return {v: chr(ord("a") + v - 1) for v in range(1, n + 1)}


def reduce_hampath(g: Graph, binary: bool = False) -> HampathReduction:
    """
    ハミルトン路 → アンチパワーの帰着

    補グラフの各辺 {u, v} について記号 {c_u c_v}{c_v c_u} を並べ、
    続けて {c_i^3}, {c_i^4}^(n-2), {c_i^3} を置く。
    k = 2(C(n,2) - |E| + n) - 1 で、言語の要素の長さは 2k（ビット列なら b 倍）。

    Raises:
        MalformedGraph: n < 2 の場合
    """
    if g.n < 2:
        raise MalformedGraph("頂点数は2以上が必要です")
    codes = vertex_codes(g.n, binary)
    missing = g.non_edges()
    symbols: list[Symbol] = []
    for u, v in missing:
        symbols.append(Symbol((codes[u] + codes[v],)))
        symbols.append(Symbol((codes[v] + codes[u],)))
    triple = Symbol.of(code * 3 for code in codes.values())
    quadruple = Symbol.of(code * 4 for code in codes.values())
    symbols += [triple] + [quadruple] * (g.n - 2) + [triple]
    k = 2 * (math.comb(g.n, 2) - len(g.edges) + g.n) - 1
    log(f"ハミルトン路帰着を生成: n={g.n}, |Ē|={len(missing)}, k={k}, binary={binary}")
    return HampathReduction(EDString(tuple(symbols)), k)


def extract_ham_path(w: AntiPowerWitness, g: Graph, binary: bool = False) -> list[int]:
    """
    アンチパワー証拠からハミルトン路を復元

    頂点ブロックの j 番目の因子 c_i c_i から訪問順を読む。

    Raises:
        MalformedWitness: 所定の位置に c_i c_i がない、または復元結果が
            ハミルトン路でない場合
    """
    codes = vertex_codes(g.n, binary)
    width = len(codes[1])
    by_code = {code: v for v, code in codes.items()}
    base = 4 * len(g.non_edges()) * width
    if len(w.word) < base + 4 * width * (g.n - 1) + 2 * width:
        raise MalformedWitness("証拠の長さが帰着文字列と合いません")
    path = []
    for j in range(g.n):
        start = base + 4 * width * j
        first, second = w.word[start:start + width], w.word[start + width:start + 2 * width]
        if first != second or first not in by_code:
            raise MalformedWitness(f"位置 {start + 1} に頂点の二重文字がありません: {first}{second}")
        path.append(by_code[first])
    graph = g.to_networkx()
    if len(set(path)) != g.n or not all(graph.has_edge(a, b) for a, b in zip(path, path[1:], strict=False)):
        raise MalformedWitness(f"復元した訪問順はハミルトン路ではありません: {path}")
    return path


def complete_graph(n: int) -> Graph:
    """完全グラフ K_n"""
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))
