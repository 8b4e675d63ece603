"""
ED文字列ツールキット - 最長共通拡張（LCE）・最長反復因子（LRF）モジュール

線形化 L 上の再帰 D(i, j) を、作業リストによるメモ化（query）と
numpy による行単位のボトムアップ計算（fill）の2通りで求める。
D(i, j) は i, j から始まる出現の最長共通拡張で、それぞれの出現は独立に
選択肢を選んでよい。
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .config import log
from .edcore import (
    EDString,
    Symbol,
    TextPosition,
    enumerate_language,
    size,
    text_positions,
    validate_text_position,
)
from .linearization import Linearization, build_linearization
from .validation import AlphabetExhausted, ValidationError, validate_positive_int

SEPARATOR_CANDIDATES = tuple(chr(c) for c in range(33, 127)) + tuple(chr(c) for c in range(161, 256))


class LceTable:
    """
    D(i, j) の表

    添字は L の位置（1始まり）で、|L|+1 が番兵。
    query は必要なセルだけを計算し、fill は表全体を埋める。
    """

    def __init__(self, lin: Linearization):
        self.lin = lin
        self._size = lin.length + 2
        self._memo = np.full((self._size, self._size), -1, dtype=np.int32)
        # '(' 同士の組で評価した子の数（償却 O(|L|^2) の確認用）
        self.paren_pair_evaluations = 0
        self._filled = False

    # --- トップダウン ---

    def _expand(self, a: int, b: int) -> tuple[int, tuple[tuple[int, int], ...]]:
        lin = self.lin
        if a > lin.length or b > lin.length:
            return 0, ()
        if lin.is_sigma(a) and lin.is_sigma(b):
            if lin.text[a - 1] == lin.text[b - 1]:
                return 1, ((a + 1, b + 1),)
            return 0, ()
        return 0, tuple((x, y) for x in lin.adjacency[a] for y in lin.adjacency[b])

    def query(self, i: int, j: int) -> int:
        """
        D(i, j) の計算（作業リストによるメモ化、再帰なし）

        Args:
            i: L の位置（1..|L|+1）
            j: L の位置（1..|L|+1）

        Returns:
            最長共通拡張の長さ
        """
        memo = self._memo
        if memo[i, j] >= 0:
            return int(memo[i, j])
        stack = [(i, j)]
        while stack:
            a, b = stack[-1]
            if memo[a, b] >= 0:
                stack.pop()
                continue
            base, kids = self._expand(a, b)
            pending = [kid for kid in kids if memo[kid] < 0]
            if pending:
                stack.extend(pending)
                continue
            value = base + (max(int(memo[kid]) for kid in kids) if kids else 0)
            memo[a, b] = memo[b, a] = value
            if self.lin.text[a - 1:a] == "(" and self.lin.text[b - 1:b] == "(":
                self.paren_pair_evaluations += len(kids)
            stack.pop()
        return int(memo[i, j])

    # --- ボトムアップ ---

    def _special_levels(self) -> list[tuple[np.ndarray, np.ndarray, np.ndarray]]:
        """特殊文字の列を依存の深さごとにまとめる（reduceat 用の平坦化配列付き）"""
        lin = self.lin
        level = [0] * self._size
        for j in range(lin.length, 0, -1):
            if lin.is_sigma(j):
                continue
            deeper = [level[b] + 1 for b in lin.adjacency[j] if b <= lin.length and not lin.is_sigma(b)]
            level[j] = max(deeper, default=0)
        groups: dict[int, list[int]] = {}
        for j in range(1, lin.length + 1):
            if not lin.is_sigma(j):
                groups.setdefault(level[j], []).append(j)
        result = []
        for depth in sorted(groups):
            columns = groups[depth]
            flat: list[int] = []
            offsets: list[int] = []
            for j in columns:
                offsets.append(len(flat))
                flat.extend(lin.adjacency[j])
            result.append((np.array(columns), np.array(flat), np.array(offsets)))
        return result

    def fill(self) -> np.ndarray:
        """
        表全体をボトムアップに計算

        行 i は行 i+1 と adj(i) の行だけに依存するので、i の降順に1行ずつ
        ベクトル演算で埋める。特殊文字の行は adj(i) の行の要素ごとの最大、
        Σ の行は Σ 列を一括で、特殊文字の列を依存の深さ順に reduceat で求める。

        Returns:
            (|L|+2) x (|L|+2) の int32 配列
        """
        if self._filled:
            return self._memo
        lin = self.lin
        table = np.zeros((self._size, self._size), dtype=np.int32)
        codes = np.full(self._size, -1, dtype=np.int64)
        sigma = np.array([i for i in range(1, lin.length + 1) if lin.is_sigma(i)], dtype=np.int64)
        for i in sigma:
            codes[i] = ord(lin.text[i - 1])
        levels = self._special_levels()
        sigma_codes = codes[sigma]
        for i in range(lin.length, 0, -1):
            if not lin.is_sigma(i):
                table[i, :] = table[list(lin.adjacency[i]), :].max(axis=0)
                continue
            row = table[i]
            if sigma.size:
                row[sigma] = np.where(sigma_codes == codes[i], table[i + 1, sigma + 1] + 1, 0)
            for columns, flat, offsets in levels:
                row[columns] = np.maximum.reduceat(row[flat], offsets)
        self._memo = table
        self._filled = True
        log(f"LCE表を計算: |L|={lin.length}", "DEBUG")
        return table

    # --- 証拠文字列 ---

    def witness(self, i: int, j: int, cache: dict[tuple[int, int], str] | None = None) -> str:
        """
        D(i, j) を実現する辞書順最小の文字列

        Args:
            i: L の位置
            j: L の位置
            cache: 複数の組で共有する部分結果

        Returns:
            長さ D(i, j) の文字列
        """
        if cache is None:
            cache = {}
        self.query(i, j)
        memo = self._memo
        lin = self.lin

        def optimal_children(node: tuple[int, int]) -> tuple[tuple[int, int], ...]:
            value = int(memo[node])
            if value == 0:
                return ()
            base, kids = self._expand(*node)
            return tuple(kid for kid in kids if base + int(memo[kid]) == value)

        order: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        stack = [(i, j)]
        while stack:
            node = stack.pop()
            if node in seen or node in cache:
                continue
            seen.add(node)
            order.append(node)
            stack.extend(optimal_children(node))
        # 子は常に座標和が大きい
        for node in sorted(order, key=lambda xy: xy[0] + xy[1], reverse=True):
            a, b = node
            kids = optimal_children(node)
            if not kids:
                cache[node] = ""
            elif lin.is_sigma(a) and lin.is_sigma(b):
                cache[node] = lin.text[a - 1] + cache[kids[0]]
            else:
                cache[node] = min(cache[kid] for kid in kids)
        return cache[(i, j)]


# =============================================================================
# LCE / LRF
# =============================================================================

@dataclass(frozen=True)
class LrfResult:
    """最長反復因子"""
    length: int
    witness: str | None
    first: TextPosition | None
    second: TextPosition | None


def lce(lin: Linearization, i: int, j: int) -> int:
    """
    L の2位置の最長共通拡張 D(i, j)

    Args:
        lin: 線形化
        i: L の位置（1..|L|+1）
        j: L の位置（1..|L|+1）

    Raises:
        ValidationError: 位置が範囲外の場合
    """
    for name, value in (("i", i), ("j", j)):
        validate_positive_int(value, name)
        if value > lin.sentinel:
            raise ValidationError(f"{name}={value} は範囲外です (1..{lin.sentinel})")
    return LceTable(lin).query(i, j)


def lce_at(s: EDString, p: TextPosition, q: TextPosition) -> int:
    """
    2つのテキスト位置の最長共通拡張

    Raises:
        InvalidTextPosition: p または q が不正な場合
    """
    validate_text_position(s, p)
    validate_text_position(s, q)
    lin = build_linearization(s)
    return LceTable(lin).query(lin.to_index(p), lin.to_index(q))


def _sigma_pair_maximum(s: EDString) -> tuple[LceTable, np.ndarray, np.ndarray, int]:
    lin = build_linearization(s)
    table = LceTable(lin)
    full = table.fill()
    sigma = np.array([i for i in range(1, lin.length + 1) if lin.is_sigma(i)], dtype=np.int64)
    if sigma.size < 2:
        return table, sigma, np.zeros((sigma.size, sigma.size), dtype=np.int32), 0
    sub = full[np.ix_(sigma, sigma)].copy()
    np.fill_diagonal(sub, -1)
    return table, sigma, sub, max(int(sub.max()), 0)


def lrf_length(s: EDString) -> int:
    """最長反復因子の長さのみ"""
    return _sigma_pair_maximum(s)[3]


def lrf(s: EDString) -> LrfResult:
    """
    最長反復因子（異なる2つのテキスト位置から出現する最長の文字列）

    同長の候補が複数ある場合は、辞書順最小の文字列、次に位置の組が最小のものを返す。

    Args:
        s: ED文字列

    Returns:
        LrfResult（長さ0なら証拠なし）
    """
    table, sigma, sub, best = _sigma_pair_maximum(s)
    if best == 0:
        return LrfResult(0, None, None, None)
    cache: dict[tuple[int, int], str] = {}
    candidates = []
    for a, b in np.argwhere(np.triu(sub == best, k=1)):
        i, j = int(sigma[a]), int(sigma[b])
        candidates.append((table.witness(i, j, cache), i, j))
    witness, i, j = min(candidates)
    lin = table.lin
    return LrfResult(best, witness, lin.to_text_position(i), lin.to_text_position(j))


# =============================================================================
# EDSI（2つの ED文字列の言語の交わり判定）
# =============================================================================

def pick_separator(*strings: EDString) -> str:
    """
    どの入力にも現れない区切り文字を選ぶ

    Raises:
        AlphabetExhausted: 候補文字がすべて使われている場合
    """
    used = frozenset().union(*(s.alphabet for s in strings))
    for ch in SEPARATOR_CANDIDATES:
        if ch not in used:
            return ch
    raise AlphabetExhausted("区切り文字に使える未使用の文字がありません")


def edsi_decide(s1: EDString, s2: EDString) -> bool:
    """
    L(S1) ∩ L(S2) ≠ ∅ の判定

    S = c^k S1 c^k S2 c^k（k = ||S1|| + ||S2|| + 1, c は未使用文字）を作り、
    1つ目と2つ目の c^k の先頭どうしの LCE が 2k 以上になることと
    交わりが空でないことが同値であることを使う。
    S1 の内側から始まる2つの出現は c^k S2 c^k を共有できるため、
    S 全体の LRF の長さでは判定できない。

    Raises:
        AlphabetExhausted: 区切り文字が選べない場合
    """
    separator = pick_separator(s1, s2)
    k = size(s1) + size(s2) + 1
    block = Symbol((separator * k,))
    combined = EDString((block,) + s1.symbols + (block,) + s2.symbols + (block,))
    length = lce_at(combined, TextPosition(1, 1, 1), TextPosition(len(s1) + 2, 1, 1))
    log(f"EDSI: 区切り={separator!r}, k={k}, LCE={length}", "DEBUG")
    return length >= 2 * k


# =============================================================================
# 列挙による検算
# =============================================================================

def _suffix_strings(s: EDString, t: TextPosition, cap: int) -> set[str]:
    head = s.symbols[t.i - 1].alternatives[t.j - 1][t.k - 1:]
    rest = enumerate_language(EDString(s.symbols[t.i:]), cap)
    return {head + tail for tail in rest}


def _common_prefix(a: str, b: str) -> int:
    length = 0
    for x, y in zip(a, b, strict=False):
        if x != y:
            break
        length += 1
    return length


def lce_bruteforce(s: EDString, p: TextPosition, q: TextPosition, cap: int) -> int:
    """列挙による LCE（小さな入力の検算用）"""
    validate_text_position(s, p)
    validate_text_position(s, q)
    left = _suffix_strings(s, p, cap)
    right = _suffix_strings(s, q, cap)
    return max(_common_prefix(a, b) for a in left for b in right)


def lrf_bruteforce(s: EDString, cap: int) -> int:
    """列挙による LRF の長さ（小さな入力の検算用）"""
    suffixes = {t: _suffix_strings(s, t, cap) for t in text_positions(s)}
    best = 0
    for p, q in combinations(suffixes, 2):
        best = max(best, max(_common_prefix(a, b) for a in suffixes[p] for b in suffixes[q]))
    return best
