"""
ED文字列ツールキット - 最長先行因子（LPF）モジュール

古典的な LPF 配列、ED文字列上の弱い LPF（LCE 表への帰着）、
強い LPF（同一言語要素内での反復）の列挙と厳密探索、
共通部分列問題からの帰着を提供する。
"""

import math
from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

from .config import get_settings, log
from .edcore import (
    RESERVED_CHARACTERS,
    EDString,
    Symbol,
    TextPosition,
    enumerate_language,
    text_positions,
    validate_text_position,
)
from .lce import LceTable
from .linearization import build_linearization
from .validation import (
    DollarInAlphabet,
    LanguageTooLarge,
    SearchBudgetExceeded,
    ValidationError,
    validate_positive_int,
)

SEPARATOR = "$"
DOLLAR = Symbol((SEPARATOR,))


# =============================================================================
# 古典的 LPF
# =============================================================================

def classic_lpf(t: str) -> list[int]:
    """
    LPF 配列（添字0始まり、LPF[i] = 位置 i から始まり i より前にも出現する最長の長さ）

    ずれ d ごとに一致の連長を右から数える O(n^2) 時間・O(n) 領域の走査。
    """
    n = len(t)
    values = [0] * n
    for shift in range(1, n):
        run = 0
        for p in range(n - shift - 1, -1, -1):
            run = run + 1 if t[p] == t[p + shift] else 0
            if run > values[p + shift]:
                values[p + shift] = run
    return values


def _lpf_at(word: str, x: int) -> int:
    best = 0
    for j in range(x):
        length = 0
        while x + length < len(word) and word[j + length] == word[x + length]:
            length += 1
        best = max(best, length)
    return best


@dataclass(frozen=True)
class LpfResult:
    """位置ごとの LPF（source は先行出現のテキスト位置）"""
    length: int
    witness: str | None
    source: TextPosition | None = None


# =============================================================================
# 弱い LPF
# =============================================================================

def _precedes(a: TextPosition, b: TextPosition) -> bool:
    return a.i < b.i or (a.i == b.i and a.j == b.j and a.k < b.k)


def lpf_weak(s: EDString, t: TextPosition) -> LpfResult:
    """
    弱い LPF

    t より前のテキスト位置 t'（i' < i、または i' = i かつ j' = j かつ k' < k）の
    うち、t との LCE が最大のもの。同長なら辞書順最小の文字列、次に最も前の t'。

    Raises:
        InvalidTextPosition: t が不正な場合
    """
    validate_text_position(s, t)
    lin = build_linearization(s)
    table = LceTable(lin)
    target = lin.to_index(t)
    scored = []
    for earlier in text_positions(s):
        if _precedes(earlier, t):
            scored.append((table.query(lin.to_index(earlier), target), earlier))
    best = max((value for value, _ in scored), default=0)
    if best == 0:
        return LpfResult(0, None, None)
    cache: dict[tuple[int, int], str] = {}
    witness, source = min(
        (table.witness(lin.to_index(earlier), target, cache), earlier)
        for value, earlier in scored if value == best
    )
    return LpfResult(best, witness, source)


# =============================================================================
# 強い LPF（列挙）
# =============================================================================

def lpf_strong_at(s: EDString, t: TextPosition, cap: int | None = None) -> LpfResult:
    """
    強い LPF（t を覆う言語要素ごとの LPF の最大）

    記号 t.i で選択肢 t.j を選ぶ言語要素を列挙し、要素内の t に対応する位置の
    古典的 LPF の最大を取る。

    Raises:
        InvalidTextPosition: t が不正な場合
        LanguageTooLarge: 列挙数が cap を超える場合
    """
    validate_text_position(s, t)
    cap = cap or get_settings().language_cap
    choices = [sym.alternatives for sym in s.symbols]
    choices[t.i - 1] = (choices[t.i - 1][t.j - 1],)
    raw = math.prod(len(options) for options in choices)
    if raw > cap:
        raise LanguageTooLarge(f"言語の組合せ数 {raw} が上限 {cap} を超えています", cap)
    best: tuple[int, str] | None = None
    for combination in product(*choices):
        word = "".join(combination)
        x = sum(len(piece) for piece in combination[:t.i - 1]) + t.k - 1
        length = _lpf_at(word, x)
        candidate = (length, word[x:x + length])
        if best is None or length > best[0] or (length == best[0] and candidate[1] < best[1]):
            best = candidate
    assert best is not None
    return LpfResult(best[0], best[1] if best[0] else None)


def max_lpf_strong(s: EDString, cap: int | None = None) -> int:
    """
    強い LPF の最大値（L(s) を列挙し、各要素の LPF 配列の最大を取る）

    Raises:
        LanguageTooLarge: 列挙数が cap を超える場合
    """
    cap = cap or get_settings().language_cap
    return max((max(classic_lpf(word), default=0) for word in enumerate_language(s, cap)), default=0)


# =============================================================================
# 強い LPF（同期カーソル探索）
# =============================================================================

@dataclass(frozen=True)
class StrongRepeat:
    """同一言語要素内で2か所に出現する最長の文字列"""
    length: int
    witness: str | None
    first: TextPosition | None
    second: TextPosition | None


def longest_strong_repeat(s: EDString, budget: int | None = None) -> StrongRepeat:
    """
    同一の言語要素の中で2か所に出現する最長の文字列（= 強い LPF の最大値）

    後方カーソル（先の出現）と前方カーソル（後の出現）を同時に進め、前方カーソルが
    選んだ選択肢を後方カーソルが同じ記号に入るときに従わせる。状態は
    (後方位置, 前方位置, 未消化の選択の列)。弱い LCE 表 D を上界とする分枝限定法で、
    探索済み状態の上界を表に残す。

    Args:
        s: ED文字列
        budget: 展開する状態数の上限（省略時は設定値）

    Returns:
        StrongRepeat（反復がなければ長さ0）

    Raises:
        SearchBudgetExceeded: 展開数が上限を超えた場合
    """
    budget = budget or get_settings().search_budget
    lin = build_linearization(s)
    weak = LceTable(lin).fill()
    n = lin.length
    text = lin.text

    def entry(symbol: int, j: int) -> int:
        start = lin.alternative_starts[symbol][j - 1]
        return lin.skip_specials(lin.symbol_end[symbol]) if start is None else start

    def expand(state):
        trail, lead, pending = state
        if trail > n or lead > n:
            return []
        if text[trail - 1] == "(":
            symbol = lin.symbol_of[trail]
            if pending and pending[0][0] == symbol:
                return [(0, (entry(symbol, pending[0][1]), lead, pending[1:]), None)]
            count = len(lin.alternative_starts[symbol])
            return [(0, (entry(symbol, j), lead, pending), None) for j in range(1, count + 1)]
        if text[lead - 1] == "(":
            symbol = lin.symbol_of[lead]
            count = len(lin.alternative_starts[symbol])
            return [(0, (trail, entry(symbol, j), pending + ((symbol, j),) if count > 1 else pending), None)
                    for j in range(1, count + 1)]
        if text[trail - 1] == text[lead - 1]:
            return [(1, (lin.skip_specials(trail + 1), lin.skip_specials(lead + 1), pending), text[trail - 1])]
        return []

    sigma = [i for i in range(1, n + 1) if lin.is_sigma(i)]
    starts = []
    for a, p in enumerate(sigma):
        first = lin.positions[p]
        for q in sigma[a + 1:]:
            second = lin.positions[q]
            if first.i == second.i and first.j != second.j:
                continue
            if weak[p, q] > 0:
                starts.append((-int(weak[p, q]), p, q))
    starts.sort()

    best, best_pair, best_word = 0, None, ""
    upper: dict[tuple, int] = {}
    expanded = 0
    for negative_bound, p, q in starts:
        if -negative_bound <= best:
            break
        first, second = lin.positions[p], lin.positions[q]
        pending = ()
        if second.i > first.i and len(s.symbols[second.i - 1]) > 1:
            pending = ((second.i, second.j),)
        chars: list[str] = []
        # フレーム: [状態, 累積長, 子, 次の子, 文字を積んだか]
        stack: list[list] = [[(p, q, pending), 0, None, 0, False]]
        while stack:
            frame = stack[-1]
            state, acc, children = frame[0], frame[1], frame[2]
            if children is None:
                expanded += 1
                if expanded > budget:
                    log(f"強い LPF 探索が上限 {budget} に達しました", "WARN")
                    raise SearchBudgetExceeded(f"探索状態数が上限 {budget} を超えました", budget)
                bound = min(int(weak[state[0], state[1]]), upper.get(state, n))
                if acc + bound <= best:
                    stack.pop()
                    if frame[4]:
                        chars.pop()
                    continue
                children = expand(state)
                if not children:
                    if acc > best:
                        best, best_pair, best_word = acc, (first, second), "".join(chars)
                    upper[state] = 0
                    stack.pop()
                    if frame[4]:
                        chars.pop()
                    continue
                children.sort(key=lambda child: -int(weak[child[1][0], child[1][1]]))
                frame[2] = children
            if frame[3] < len(children):
                gain, child, ch = children[frame[3]]
                frame[3] += 1
                if ch is not None:
                    chars.append(ch)
                stack.append([child, acc + gain, None, 0, ch is not None])
                continue
            upper[state] = min(upper.get(state, n), best - acc)
            stack.pop()
            if frame[4]:
                chars.pop()
    log(f"強い LPF 探索: 最長={best}, 展開状態数={expanded}", "DEBUG")
    if best_pair is None:
        return StrongRepeat(0, None, None, None)
    return StrongRepeat(best, best_word, best_pair[0], best_pair[1])


# =============================================================================
# 共通部分列からの帰着
# =============================================================================

@dataclass(frozen=True)
class CsInstance:
    """
    共通部分列問題のインスタンス

    ell は k·(ell-2) > Σ|S_i| を満たす最小の ell ≥ 3。
    """
    strings: tuple[str, ...]
    k: int
    ell: int = field(init=False)

    def __post_init__(self):
        validate_positive_int(self.k, "k")
        if not self.strings:
            raise ValidationError("文字列を1つ以上指定してください")
        for word in self.strings:
            if not word:
                raise ValidationError("空の文字列は指定できません")
            if SEPARATOR in word:
                raise DollarInAlphabet(f"文字列に区切り文字 '{SEPARATOR}' が含まれています: {word}")
            for ch in word:
                if ch in RESERVED_CHARACTERS or ch.isspace() or not ch.isprintable():
                    raise ValidationError(f"使用できない文字です: {ch!r}")
        total = sum(len(word) for word in self.strings)
        object.__setattr__(self, "ell", max(3, total // self.k + 3))

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted(set("".join(self.strings))))


class CsReduction(NamedTuple):
    """帰着で得た ED文字列と目標 LPF 長"""
    string: EDString
    target_length: int


def reduce_common_subsequence(inst: CsInstance) -> CsReduction:
    """
    共通部分列 → 強い LPF の帰着

    S = ($ Σ^k)^ell $ S_1 $ … $ S_f $ Σ^k $。Σ の記号は {x | x ∈ Σ} ∪ {ε}、
    S_i は各文字を (c|ε) にしたもの。目標長は (k+1)(f+ell)+1。
    """
    sigma = Symbol.of([*inst.alphabet, ""])
    symbols: list[Symbol] = []
    for _ in range(inst.ell):
        symbols.append(DOLLAR)
        symbols.extend([sigma] * inst.k)
    for word in inst.strings:
        symbols.append(DOLLAR)
        symbols.extend(Symbol.of([ch, ""]) for ch in word)
    symbols.append(DOLLAR)
    symbols.extend([sigma] * inst.k)
    symbols.append(DOLLAR)
    target = (inst.k + 1) * (len(inst.strings) + inst.ell) + 1
    log(f"共通部分列帰着を生成: f={len(inst.strings)}, k={inst.k}, ell={inst.ell}, 目標={target}")
    return CsReduction(EDString(tuple(symbols)), target)


def is_subsequence(candidate: str, word: str) -> bool:
    remaining = iter(word)
    return all(ch in remaining for ch in candidate)


def has_common_subsequence_bruteforce(strings: list[str] | tuple[str, ...], k: int) -> bool:
    """長さ k の全候補を試す共通部分列判定"""
    alphabet = sorted(set("".join(strings)))
    for candidate in product(alphabet, repeat=k):
        word = "".join(candidate)
        if all(is_subsequence(word, other) for other in strings):
            return True
    return False


def decide_common_subsequence(strings: list[str] | tuple[str, ...], k: int,
                              cap: int | None = None) -> bool:
    """
    長さ k の共通部分列が存在するかを帰着文字列の強い LPF で判定

    Raises:
        SearchBudgetExceeded: 探索が cap を超えた場合
    """
    reduction = reduce_common_subsequence(CsInstance(tuple(strings), k))
    repeat = longest_strong_repeat(reduction.string, cap)
    return repeat.length >= reduction.target_length
