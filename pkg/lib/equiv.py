"""
ED文字列ツールキット - 言語等価性モジュール

GD文字列の決定性オートマトン構築と線形時間の等価判定、ED文字列の
非決定性オートマトン、列挙による言語比較、3-SAT から 2ED文字列の
言語不等判定への帰着を提供する。
"""

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

from .config import get_settings, log
from .edcore import EDString, StringClass, classify, enumerate_language
from .uniqueness import BIT, Cnf3, clause_gadget
from .validation import LanguageTooLarge, NotGd, ValidationError

DEAD_STATE = 0


# =============================================================================
# 決定性オートマトン（GD文字列）
# =============================================================================

@dataclass(frozen=True)
class Dfa:
    """
    非巡回の決定性オートマトン

    状態0は死状態で、transitions にない遷移はすべて死状態へ向かう。
    """
    state_count: int
    transitions: dict[tuple[int, str], int]
    start: int
    accept: int

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(ch for _, ch in self.transitions)

    def step(self, state: int, ch: str) -> int:
        return self.transitions.get((state, ch), DEAD_STATE)

    def accepts(self, w: str) -> bool:
        state = self.start
        for ch in w:
            state = self.step(state, ch)
            if state == DEAD_STATE:
                return False
        return state == self.accept

    def language(self) -> set[str]:
        """受理する全文字列（非巡回なので有限）"""
        outgoing: dict[int, list[tuple[str, int]]] = {}
        for (state, ch), target in self.transitions.items():
            outgoing.setdefault(state, []).append((ch, target))
        words: set[str] = set()
        stack = [(self.start, "")]
        while stack:
            state, prefix = stack.pop()
            if state == self.accept:
                words.add(prefix)
            for ch, target in outgoing.get(state, ()):
                stack.append((target, prefix + ch))
        return words


def _require_gd(s: EDString):
    if classify(s) is StringClass.ED:
        raise NotGd("GD文字列（記号内の選択肢が同じ長さで ε なし）が必要です")


def build_gd_dfa(s: EDString) -> Dfa:
    """
    GD文字列の DFA

    記号ごとに選択肢のトライを作り、深さが選択肢長に達した節点をすべて
    1つの境界状態にまとめる。境界状態は次の記号の開始状態を兼ねる。

    Raises:
        NotGd: s が GD文字列でない場合
    """
    _require_gd(s)
    transitions: dict[tuple[int, str], int] = {}
    start = boundary = 1
    next_state = 2
    for sym in s.symbols:
        width = len(sym.alternatives[0])
        nodes: dict[str, int] = {"": boundary}
        end = next_state
        next_state += 1
        for alternative in sym.alternatives:
            for depth in range(1, width + 1):
                prefix = alternative[:depth]
                if prefix not in nodes:
                    if depth == width:
                        nodes[prefix] = end
                    else:
                        nodes[prefix] = next_state
                        next_state += 1
                transitions[(nodes[alternative[:depth - 1]], alternative[depth - 1])] = nodes[prefix]
        boundary = end
    return Dfa(next_state, transitions, start, boundary)


def dfa_equivalent(a: Dfa, b: Dfa) -> bool:
    """
    2つの DFA の等価判定（Hopcroft–Karp）

    両者の状態の直和上で開始状態を併合し、併合した組の遷移先を順に併合する。
    最後に、受理状態と非受理状態が同じ類に入っていないかを確かめる。
    """
    offset = a.state_count
    parent = list(range(a.state_count + b.state_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    alphabet = sorted(a.alphabet | b.alphabet)
    parent[find(b.start + offset)] = find(a.start)
    queue = deque([(a.start, b.start)])
    while queue:
        p, q = queue.popleft()
        for ch in alphabet:
            p2, q2 = a.step(p, ch), b.step(q, ch)
            root_p, root_q = find(p2), find(q2 + offset)
            if root_p != root_q:
                parent[root_q] = root_p
                queue.append((p2, q2))
    verdict: dict[int, bool] = {}
    members = [(state, state == a.accept) for state in range(a.state_count)]
    members += [(state + offset, state == b.accept) for state in range(b.state_count)]
    for state, accepting in members:
        root = find(state)
        if verdict.setdefault(root, accepting) != accepting:
            return False
    return True


# =============================================================================
# 非決定性オートマトン（ED文字列）
# =============================================================================

@dataclass(frozen=True)
class Nfa:
    """ε 遷移（ラベル ""）つきの非決定性オートマトン"""
    state_count: int
    edges: tuple[tuple[int, str, int], ...]
    start: int
    accept: int
    _outgoing: dict[int, list[tuple[str, int]]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for source, label, target in self.edges:
            self._outgoing.setdefault(source, []).append((label, target))

    @property
    def epsilon_edges(self) -> list[tuple[int, int]]:
        return [(source, target) for source, label, target in self.edges if label == ""]

    def _closure(self, states: set[int]) -> set[int]:
        stack = list(states)
        closed = set(states)
        while stack:
            state = stack.pop()
            for label, target in self._outgoing.get(state, ()):
                if label == "" and target not in closed:
                    closed.add(target)
                    stack.append(target)
        return closed

    def accepts(self, w: str) -> bool:
        current = self._closure({self.start})
        for ch in w:
            moved = {target for state in current
                     for label, target in self._outgoing.get(state, ()) if label == ch}
            if not moved:
                return False
            current = self._closure(moved)
        return self.accept in current


def build_ed_nfa(s: EDString) -> Nfa:
    """
    ED文字列の NFA

    記号ごとに選択肢の接頭辞を共有するトライを作り、各選択肢の最後の文字で
    境界状態へ遷移する。ε を含む記号は開始状態から境界状態への ε 遷移を持つ。
    """
    edges: list[tuple[int, str, int]] = []
    seen: set[tuple[int, str, int]] = set()

    def connect(source: int, label: str, target: int):
        if (source, label, target) not in seen:
            seen.add((source, label, target))
            edges.append((source, label, target))

    start = boundary = 0
    next_state = 1
    for sym in s.symbols:
        end = next_state
        next_state += 1
        nodes: dict[str, int] = {"": boundary}
        for alternative in sym.alternatives:
            if alternative == "":
                connect(boundary, "", end)
                continue
            for depth in range(1, len(alternative)):
                prefix = alternative[:depth]
                if prefix not in nodes:
                    nodes[prefix] = next_state
                    next_state += 1
                connect(nodes[alternative[:depth - 1]], alternative[depth - 1], nodes[prefix])
            connect(nodes[alternative[:-1]], alternative[-1], end)
        boundary = end
    return Nfa(next_state, tuple(edges), start, boundary)


def languages_equal_bruteforce(s: EDString, t: EDString, cap: int | None = None) -> bool:
    """
    列挙による言語の等価判定

    Raises:
        LanguageTooLarge: どちらかの組合せ数が cap を超える場合
    """
    cap = cap or get_settings().language_cap
    return enumerate_language(s, cap) == enumerate_language(t, cap)


# =============================================================================
# 2ED文字列と 3-SAT からの帰着
# =============================================================================

@dataclass(frozen=True)
class TwoEdString:
    """各記号が ED文字列の集合である 2ED文字列"""
    symbols: tuple[frozenset[EDString], ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValidationError("2ED文字列には記号が1つ以上必要です")
        for i, sym in enumerate(self.symbols, start=1):
            if not sym:
                raise ValidationError(f"2ED文字列の第{i}記号が空です")

    def language(self, cap: int | None = None) -> set[str]:
        """
        言語（各記号の言語の和集合の連接）

        Raises:
            LanguageTooLarge: 組合せ数が cap を超える場合
        """
        cap = cap or get_settings().language_cap
        parts: list[set[str]] = []
        raw = 1
        for sym in self.symbols:
            words: set[str] = set()
            for inner in sym:
                words |= enumerate_language(inner, cap)
            parts.append(words)
            raw *= len(words)
            if raw > cap:
                raise LanguageTooLarge(f"言語の組合せ数 {raw} が上限 {cap} を超えています", cap)
        return {"".join(choice) for choice in product(*parts)}


class TwoEdReduction(NamedTuple):
    """帰着で得た 2ED文字列 S と ED文字列 T"""
    s: TwoEdString
    t: EDString


def reduce_3sat_to_2ed_inequality(f: Cnf3) -> TwoEdReduction:
    """
    3-SAT → 2ED 言語不等の帰着

    S は節ブロック T_1..T_m を要素とする1記号、T は (0|1)^n。
    L(S) は f を偽にする割当の全体なので、L(S) ≠ L(T) と f の充足可能性が同値。
    """
    if not f.clauses:
        raise ValidationError("節が1つ以上必要です")
    n = f.variable_count
    gadgets = frozenset(EDString(clause_gadget(clause, n)) for clause in f.clauses)
    log(f"2ED不等帰着を生成: n={n}, m={len(f.clauses)}")
    return TwoEdReduction(TwoEdString((gadgets,)), EDString((BIT,) * n))


@dataclass(frozen=True)
class InequalityReport:
    """2ED文字列と ED文字列の言語比較の結果"""
    equal: bool
    only_in_s: tuple[str, ...]
    only_in_t: tuple[str, ...]


def check_2ed_inequality(s: TwoEdString, t: EDString, cap: int | None = None) -> InequalityReport:
    """
    列挙による言語比較（差分の要素を辞書順で返す）

    Raises:
        LanguageTooLarge: 組合せ数が cap を超える場合
    """
    cap = cap or get_settings().language_cap
    left = s.language(cap)
    right = enumerate_language(t, cap)
    return InequalityReport(
        equal=left == right,
        only_in_s=tuple(sorted(left - right)),
        only_in_t=tuple(sorted(right - left)),
    )
