"""
ED文字列ツールキット - 線形化モジュール

線形化表記 L の各位置（1始まり）について、後続位置集合 adj、
括弧の分岐先 P、テキスト位置との対応表を構築する。
位置 |L|+1 は番兵。
"""

from dataclasses import dataclass

from .edcore import EDString, TextPosition, serialize_linearized, validate_text_position
from .validation import InvalidTextPosition

SPECIAL_CHARACTERS = frozenset("(|)")


@dataclass(frozen=True)
class Linearization:
    """
    線形化の索引

    配列はすべて長さ |L|+2 で、添字0は未使用、添字 |L|+1 は番兵。
    """
    text: str
    adjacency: tuple[tuple[int, ...], ...]
    next_close: tuple[int, ...]
    symbol_of: tuple[int, ...]
    symbol_end: tuple[int, ...]
    alternative_starts: tuple[tuple[int | None, ...], ...]
    positions: tuple[TextPosition | None, ...]
    index_of: dict[TextPosition, int]

    @property
    def length(self) -> int:
        return len(self.text)

    @property
    def sentinel(self) -> int:
        return len(self.text) + 1

    def char(self, i: int) -> str:
        """L[i]（1始まり）"""
        return self.text[i - 1]

    def is_sigma(self, i: int) -> bool:
        return 1 <= i <= self.length and self.text[i - 1] not in SPECIAL_CHARACTERS

    def adj(self, i: int) -> tuple[int, ...]:
        """後続位置集合 adj(i)"""
        return self.adjacency[i]

    def branch_targets(self, i: int) -> tuple[int, ...]:
        """'(' の位置 i に対する P(i)"""
        if self.char(i) != "(":
            raise ValueError(f"位置 {i} は '(' ではありません")
        return self.adjacency[i]

    def next_of(self, i: int, ch: str) -> int:
        """next(i, ')') / next(i, '|'): i より後で最初に現れる位置"""
        if ch == ")":
            return self.next_close[i]
        pos = self.text.find(ch, i)
        return pos + 1 if pos >= 0 else self.sentinel

    def resolved(self, i: int) -> frozenset[int]:
        """adj(i) を特殊文字について推移的に辿った Σ 位置と番兵の集合"""
        result: set[int] = set()
        stack = list(self.adjacency[i])
        seen: set[int] = set()
        while stack:
            pos = stack.pop()
            if pos in seen:
                continue
            seen.add(pos)
            if pos > self.length or self.is_sigma(pos):
                result.add(pos)
            else:
                stack.extend(self.adjacency[pos])
        return frozenset(result)

    def skip_specials(self, i: int) -> int:
        """'|' と ')' を読み飛ばして、Σ・'('・番兵のいずれかの位置へ進める"""
        while i <= self.length:
            ch = self.text[i - 1]
            if ch == "|":
                i = self.symbol_end[self.symbol_of[i]]
            elif ch == ")":
                i += 1
            else:
                break
        return i

    def to_index(self, t: TextPosition) -> int:
        """テキスト位置 → L の位置"""
        try:
            return self.index_of[t]
        except KeyError:
            raise InvalidTextPosition(f"テキスト位置 {t} は存在しません") from None

    def to_text_position(self, i: int) -> TextPosition:
        """L の Σ 位置 → テキスト位置"""
        if not self.is_sigma(i):
            raise InvalidTextPosition(f"L の位置 {i} は文字ではありません")
        position = self.positions[i]
        assert position is not None
        return position


def build_linearization(s: EDString) -> Linearization:
    """
    線形化索引の構築

    右から左への1回の走査で、直近の ')' の位置と、括弧内で見た '|' の位置を
    スタックに保持しながら adj を求める。

    Args:
        s: ED文字列

    Returns:
        Linearization
    """
    text = serialize_linearized(s)
    n = len(text)
    sentinel = n + 1

    # 左から右: 記号番号・テキスト位置の対応
    symbol_of = [0] * (n + 2)
    positions: list[TextPosition | None] = [None] * (n + 2)
    index_of: dict[TextPosition, int] = {}
    symbol_end = [sentinel] * (len(s) + 2)
    alternative_starts: list[tuple[int | None, ...]] = [()] * (len(s) + 2)

    pos = 1
    for i, sym in enumerate(s.symbols, start=1):
        starts: list[int | None] = []
        if sym.is_bare:
            symbol_of[pos] = i
            positions[pos] = TextPosition(i, 1, 1)
            index_of[positions[pos]] = pos
            starts.append(pos)
            pos += 1
        else:
            symbol_of[pos] = i  # '('
            pos += 1
            for j, alternative in enumerate(sym.alternatives, start=1):
                starts.append(pos if alternative else None)
                for k in range(1, len(alternative) + 1):
                    symbol_of[pos] = i
                    positions[pos] = TextPosition(i, j, k)
                    index_of[positions[pos]] = pos
                    pos += 1
                symbol_of[pos] = i  # '|' または ')'
                pos += 1
        symbol_end[i] = pos
        alternative_starts[i] = tuple(starts)

    # 右から左: next(i, ')') と adj
    next_close = [sentinel] * (n + 2)
    adjacency: list[tuple[int, ...]] = [()] * (n + 2)
    last_close = sentinel
    bars: list[int] = []
    for i in range(n, 0, -1):
        next_close[i] = last_close
        ch = text[i - 1]
        if ch == ")":
            adjacency[i] = (i + 1,)
            last_close = i
            bars = []
        elif ch == "|":
            adjacency[i] = (last_close + 1,)
            bars.append(i)
        elif ch == "(":
            adjacency[i] = (i + 1,) + tuple(b + 1 for b in reversed(bars))
            bars = []
        else:
            adjacency[i] = (i,)
    next_close[0] = text.find(")") + 1 if ")" in text else sentinel

    return Linearization(
        text=text,
        adjacency=tuple(adjacency),
        next_close=tuple(next_close),
        symbol_of=tuple(symbol_of),
        symbol_end=tuple(symbol_end),
        alternative_starts=tuple(alternative_starts),
        positions=tuple(positions),
        index_of=index_of,
    )


def posmap(s: EDString, t: TextPosition) -> int:
    """テキスト位置 → L の位置（単発の問い合わせ用）"""
    validate_text_position(s, t)
    return build_linearization(s).to_index(t)
