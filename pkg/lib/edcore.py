"""
ED文字列ツールキット - ED文字列コアモジュール

記号・ED文字列の型、線形化表記のパース／シリアライズ、サイズ、
言語の列挙、テキスト位置での出現判定、文字列クラスの分類を提供する。

線形化表記:
    単一文字の記号はそのまま書き、それ以外は (w1|w2|…) と書く。
    ε は空の選択肢で表す（例: (|a) は {ε, a}）。
    選択肢は常に正準順（ε が先頭、以降は辞書順）で保持する。
"""

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product

from .validation import (
    EmptySymbol,
    InvalidCharacter,
    InvalidTextPosition,
    LanguageTooLarge,
    NestedParentheses,
    ReservedCharacterInAlphabet,
    UnbalancedParentheses,
)

RESERVED_CHARACTERS = frozenset("(|)")


class StringClass(str, Enum):
    """文字列クラス"""
    INDETERMINATE = "indeterminate"
    GD = "gd"
    ED = "ed"


def _check_character(ch: str):
    if ch in RESERVED_CHARACTERS:
        raise ReservedCharacterInAlphabet(f"予約文字 '{ch}' は文字として使えません")
    if ch.isspace() or not ch.isprintable():
        raise InvalidCharacter(f"使用できない文字です: {ch!r}")


@dataclass(frozen=True, order=True)
class TextPosition:
    """テキスト位置 (記号番号, 選択肢番号, 文字オフセット)。すべて1始まり。"""
    i: int
    j: int
    k: int

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"


@dataclass(frozen=True)
class Symbol:
    """
    ED記号（文字列の有限集合）

    alternatives は正準順のタプル。ε は空文字列 "" で表し、
    集合全体が {ε} になることはない。
    """
    alternatives: tuple[str, ...]

    def __post_init__(self):
        if not self.alternatives or self.alternatives == ("",):
            raise EmptySymbol("記号は ε 以外の選択肢を1つ以上含む必要があります")
        if list(self.alternatives) != sorted(set(self.alternatives)):
            raise ValueError(f"選択肢が正準順ではありません: {self.alternatives!r}")
        for alternative in self.alternatives:
            for ch in alternative:
                _check_character(ch)

    @classmethod
    def of(cls, alternatives: Iterable[str]) -> "Symbol":
        """任意順・重複ありの選択肢から正準形の記号を作る"""
        return cls(tuple(sorted(set(alternatives))))

    @property
    def size(self) -> int:
        """記号のサイズ（ε は1として数える）"""
        return sum(max(1, len(w)) for w in self.alternatives)

    @property
    def has_epsilon(self) -> bool:
        return self.alternatives[0] == ""

    @property
    def is_bare(self) -> bool:
        """括弧なしで書ける単一文字記号か"""
        return len(self.alternatives) == 1 and len(self.alternatives[0]) == 1

    @cached_property
    def char_set(self) -> frozenset[str]:
        """1文字選択肢の集合（不確定文字列の窓判定用）"""
        return frozenset(w for w in self.alternatives if len(w) == 1)

    def __len__(self) -> int:
        return len(self.alternatives)

    def __str__(self) -> str:
        if self.is_bare:
            return self.alternatives[0]
        return "(" + "|".join(self.alternatives) + ")"


@dataclass(frozen=True)
class EDString:
    """ED文字列（記号の有限列）"""
    symbols: tuple[Symbol, ...]

    @classmethod
    def from_alternatives(cls, groups: Iterable[Iterable[str]]) -> "EDString":
        """選択肢の集まりの列から ED文字列を作る"""
        return cls(tuple(Symbol.of(group) for group in groups))

    @cached_property
    def alphabet(self) -> frozenset[str]:
        return frozenset(ch for sym in self.symbols for w in sym.alternatives for ch in w)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, index: int) -> Symbol:
        return self.symbols[index]

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return serialize_linearized(self)


# =============================================================================
# パース／シリアライズ
# =============================================================================

def parse_linearized(text: str) -> EDString:
    """
    線形化表記をパースして ED文字列を得る

    Args:
        text: 線形化表記

    Returns:
        正準形の EDString

    Raises:
        UnbalancedParentheses: 括弧が閉じていない、または対応する ( がない
        NestedParentheses: 括弧の入れ子
        EmptySymbol: () や (|) のような空記号、または空入力
        ReservedCharacterInAlphabet: 括弧外の |
        InvalidCharacter: 空白・制御文字
    """
    symbols: list[Symbol] = []
    group: list[str] | None = None
    for pos, ch in enumerate(text):
        if ch == "(":
            if group is not None:
                raise NestedParentheses(f"{pos + 1}文字目: 括弧の入れ子はできません")
            group = [""]
        elif ch == ")":
            if group is None:
                raise UnbalancedParentheses(f"{pos + 1}文字目: 対応する '(' がありません")
            if all(w == "" for w in group):
                raise EmptySymbol(f"{pos + 1}文字目: 空の記号です")
            symbols.append(Symbol.of(group))
            group = None
        elif ch == "|":
            if group is None:
                raise ReservedCharacterInAlphabet(f"{pos + 1}文字目: '|' は括弧内でのみ使えます")
            group.append("")
        else:
            _check_character(ch)
            if group is None:
                symbols.append(Symbol((ch,)))
            else:
                group[-1] += ch
    if group is not None:
        raise UnbalancedParentheses("')' が不足しています")
    if not symbols:
        raise EmptySymbol("空の ED文字列です")
    return EDString(tuple(symbols))


def serialize_linearized(s: EDString) -> str:
    """ED文字列を正準形の線形化表記に変換"""
    return "".join(str(sym) for sym in s.symbols)


# =============================================================================
# サイズ・分類・言語
# =============================================================================

def symbol_sizes(s: EDString) -> list[int]:
    """記号ごとのサイズ"""
    return [sym.size for sym in s.symbols]


def size(s: EDString) -> int:
    """ED文字列のサイズ ||S||（ε は1として数える）"""
    return sum(symbol_sizes(s))


def max_degree(s: EDString) -> int:
    """記号あたりの最大選択肢数 r"""
    return max(len(sym) for sym in s.symbols)


def classify(s: EDString) -> StringClass:
    """
    文字列クラスの判定

    - 全選択肢が1文字で ε なし: 不確定文字列
    - 各記号内の選択肢がすべて同じ長さ（≥1）: GD文字列
    - それ以外: ED文字列
    """
    if all(not sym.has_epsilon and all(len(w) == 1 for w in sym.alternatives) for sym in s.symbols):
        return StringClass.INDETERMINATE
    if all(not sym.has_epsilon and len({len(w) for w in sym.alternatives}) == 1 for sym in s.symbols):
        return StringClass.GD
    return StringClass.ED


def language_size_bound(s: EDString) -> int:
    """重複除去前の組合せ数"""
    return math.prod(len(sym) for sym in s.symbols)


def enumerate_language(s: EDString, cap: int) -> set[str]:
    """
    言語 L(S) の列挙

    Args:
        s: ED文字列
        cap: 重複除去前の組合せ数の上限

    Returns:
        L(S) の要素集合

    Raises:
        LanguageTooLarge: 組合せ数が cap を超える場合
    """
    raw = language_size_bound(s)
    if raw > cap:
        raise LanguageTooLarge(f"言語の組合せ数 {raw} が上限 {cap} を超えています", cap)
    return {"".join(choice) for choice in product(*(sym.alternatives for sym in s.symbols))}


# =============================================================================
# テキスト位置と出現
# =============================================================================

def text_positions(s: EDString) -> Iterator[TextPosition]:
    """全テキスト位置を辞書順に列挙"""
    for i, sym in enumerate(s.symbols, start=1):
        for j, alternative in enumerate(sym.alternatives, start=1):
            for k in range(1, len(alternative) + 1):
                yield TextPosition(i, j, k)


def validate_text_position(s: EDString, t: TextPosition) -> TextPosition:
    """
    テキスト位置の検証

    Raises:
        InvalidTextPosition: 記号・選択肢・オフセットのいずれかが範囲外
    """
    if not 1 <= t.i <= len(s):
        raise InvalidTextPosition(f"記号番号 {t.i} は範囲外です (1..{len(s)})")
    alternatives = s.symbols[t.i - 1].alternatives
    if not 1 <= t.j <= len(alternatives):
        raise InvalidTextPosition(f"選択肢番号 {t.j} は範囲外です (1..{len(alternatives)})")
    if not 1 <= t.k <= len(alternatives[t.j - 1]):
        raise InvalidTextPosition(f"テキスト位置 {t} は文字を指していません")
    return t


def char_at(s: EDString, t: TextPosition) -> str:
    """テキスト位置の文字"""
    validate_text_position(s, t)
    return s.symbols[t.i - 1].alternatives[t.j - 1][t.k - 1]


def occurs_at(p: str, s: EDString, t: TextPosition) -> bool:
    """
    文字列 p がテキスト位置 t から出現するか

    p の最初の断片は t の選択肢の接尾辞、途中の断片は後続記号の選択肢そのもの
    （ε を含む記号では空の断片も可）、最後の断片は選択肢の接頭辞に一致すればよい。

    Raises:
        InvalidTextPosition: t が不正な場合
    """
    validate_text_position(s, t)
    if p == "":
        return True
    head = s.symbols[t.i - 1].alternatives[t.j - 1][t.k - 1:]
    if len(p) <= len(head):
        return head.startswith(p)
    if not p.startswith(head):
        return False
    frontier = {p[len(head):]}
    for sym in s.symbols[t.i:]:
        following: set[str] = set()
        for rest in frontier:
            for alternative in sym.alternatives:
                if alternative.startswith(rest):
                    return True
                if rest.startswith(alternative):
                    following.add(rest[len(alternative):])
        if not following:
            return False
        frontier = following
    return False


def occurrence_positions(p: str, s: EDString) -> list[TextPosition]:
    """p が出現する全テキスト位置"""
    return [t for t in text_positions(s) if occurs_at(p, s, t)]
