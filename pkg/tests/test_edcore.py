"""
lib/edcore.py のユニットテスト
パース・シリアライズ・サイズ・分類・言語・出現判定のテスト
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lib.edcore import (
    EDString,
    StringClass,
    Symbol,
    TextPosition,
    char_at,
    classify,
    enumerate_language,
    language_size_bound,
    max_degree,
    occurrence_positions,
    occurs_at,
    parse_linearized,
    serialize_linearized,
    size,
    symbol_sizes,
    text_positions,
    validate_text_position,
)
from lib.generators import random_ed_string
from lib.validation import (
    EmptySymbol,
    InvalidCharacter,
    InvalidTextPosition,
    LanguageTooLarge,
    NestedParentheses,
    ReservedCharacterInAlphabet,
    UnbalancedParentheses,
)


_symbols = (
    st.sets(st.text(alphabet="abc$", max_size=3), min_size=1, max_size=4)
    .filter(lambda alternatives: any(alternatives))
    .map(Symbol.of)
)
_ed_strings = st.lists(_symbols, min_size=1, max_size=6).map(lambda symbols: EDString(tuple(symbols)))


class TestSymbol:
    """Symbol のテスト"""

    def test_of_canonicalizes(self):
        """ε が先頭、以降は辞書順、重複は除去"""
        assert Symbol.of(["c", "abc", "", "c"]).alternatives == ("", "abc", "c")

    def test_non_canonical_rejected(self):
        """正準順でない選択肢は直接は作れない"""
        with pytest.raises(ValueError):
            Symbol(("b", "a"))

    def test_only_epsilon_rejected(self):
        """{ε} だけの記号は不可"""
        with pytest.raises(EmptySymbol):
            Symbol(("",))

    def test_size_counts_epsilon_as_one(self):
        """ε はサイズ1"""
        assert Symbol.of(["", "abc"]).size == 4

    def test_bare(self):
        """1文字1選択肢の記号だけが括弧なし"""
        assert Symbol(("a",)).is_bare
        assert not Symbol(("ab",)).is_bare
        assert str(Symbol(("ab",))) == "(ab)"


class TestParseLinearized:
    """parse_linearized関数のテスト"""

    def test_running_example(self):
        """作業例をパースして正準形に並べる"""
        s = parse_linearized("b(a|)c(abc|c)(a|b)")
        assert [sym.alternatives for sym in s] == [
            ("b",), ("", "a"), ("c",), ("abc", "c"), ("a", "b"),
        ]

    def test_canonical_serialization(self, running_example):
        """ε を先頭にした正準形で出力"""
        assert serialize_linearized(running_example) == "b(|a)c(abc|c)(a|b)"

    def test_single_character(self):
        """1文字は1記号"""
        s = parse_linearized("a")
        assert len(s) == 1
        assert s[0].alternatives == ("a",)

    def test_bare_run_split(self):
        """括弧外の文字列は1文字ずつの記号になる"""
        assert len(parse_linearized("abc")) == 3

    def test_duplicates_removed(self):
        """(a|a) は {a}"""
        s = parse_linearized("(a|a)")
        assert s[0].alternatives == ("a",)
        assert serialize_linearized(s) == "a"

    def test_multi_character_singleton_round_trip(self):
        """(ab) は1記号として往復する"""
        s = EDString((Symbol(("ab",)),))
        assert serialize_linearized(s) == "(ab)"
        assert parse_linearized("(ab)") == s

    def test_nested(self):
        """括弧の入れ子はエラー"""
        with pytest.raises(NestedParentheses):
            parse_linearized("((a))")

    @pytest.mark.parametrize("text", ["(a", "a)", "(a|b"])
    def test_unbalanced(self, text):
        """括弧の不一致はエラー"""
        with pytest.raises(UnbalancedParentheses):
            parse_linearized(text)

    @pytest.mark.parametrize("text", ["()", "(|)", ""])
    def test_empty_symbol(self, text):
        """空の記号・空入力はエラー"""
        with pytest.raises(EmptySymbol):
            parse_linearized(text)

    def test_bar_outside_parentheses(self):
        """括弧外の | はエラー"""
        with pytest.raises(ReservedCharacterInAlphabet) as exc_info:
            parse_linearized("a|b")
        assert "2文字目" in str(exc_info.value)

    def test_whitespace_rejected(self):
        """空白は文字として使えない"""
        with pytest.raises(InvalidCharacter):
            parse_linearized("a b")

    def test_dollar_is_ordinary(self):
        """$ は通常の文字"""
        assert parse_linearized("$(a|$)").alphabet == frozenset("$a")

    @given(_ed_strings)
    @settings(max_examples=100, deadline=None)
    def test_round_trip(self, s):
        """parse(serialize(s)) = s"""
        text = serialize_linearized(s)
        assert parse_linearized(text) == s
        assert len(text) <= 2 * size(s) + len(s)


class TestSizes:
    """サイズ・次数のテスト"""

    def test_running_example_sizes(self, running_example):
        """作業例の記号サイズ"""
        assert symbol_sizes(running_example) == [1, 2, 1, 4, 2]
        assert size(running_example) == 10

    def test_t3_sizes(self, t3):
        """T3 の記号サイズ（ε は1）と選択肢数"""
        assert symbol_sizes(t3) == [1, 3, 1, 5]
        assert size(t3) == 10
        assert [len(sym) for sym in t3] == [1, 2, 1, 3]

    def test_single(self):
        """1文字"""
        s = parse_linearized("a")
        assert symbol_sizes(s) == [1]
        assert max_degree(s) == 1

    def test_max_degree(self, t3):
        """最大選択肢数"""
        assert max_degree(t3) == 3
        assert max_degree(parse_linearized("(a|b)(a|b|c|d)")) == 4


class TestClassify:
    """classify関数のテスト"""

    def test_t1_indeterminate(self, t1):
        assert classify(t1) is StringClass.INDETERMINATE

    def test_t2_gd(self, t2):
        assert classify(t2) is StringClass.GD

    def test_t3_ed(self, t3):
        assert classify(t3) is StringClass.ED

    def test_epsilon_makes_ed(self):
        """ε を含めば ED"""
        assert classify(parse_linearized("(|a)")) is StringClass.ED


class TestEnumerateLanguage:
    """enumerate_language関数のテスト"""

    def test_t1(self, t1):
        assert enumerate_language(t1, 100) == {"AACG", "AACT", "ACCG", "ACCT"}

    def test_t2(self, t2):
        assert enumerate_language(t2, 100) == {"AAGCG", "AAGCT", "ACACG", "ACACT"}

    def test_t3(self, t3):
        assert enumerate_language(t3, 100) == {"AAGCG", "AAGCT", "AAGCCCT", "ACG", "ACT", "ACCCT"}

    def test_cap_exceeded(self, t3):
        """組合せ数が上限を超えたら切り詰めずにエラー"""
        with pytest.raises(LanguageTooLarge) as exc_info:
            enumerate_language(t3, 5)
        assert exc_info.value.cap == 5

    def test_cardinality_bound(self):
        """要素数は組合せ数以下"""
        s = parse_linearized("(a|aa)(|a)")
        assert len(enumerate_language(s, 10)) == 3
        assert language_size_bound(s) == 4


class TestTextPositions:
    """テキスト位置のテスト"""

    def test_lexicographic(self):
        """辞書順に列挙し、ε の選択肢には位置がない"""
        s = parse_linearized("b(|a)")
        assert list(text_positions(s)) == [TextPosition(1, 1, 1), TextPosition(2, 2, 1)]

    def test_char_at(self, t3):
        """T3[4][3][3] は 'T'（正準順では (CCT|G|T) の第1選択肢）"""
        assert char_at(t3, TextPosition(4, 1, 3)) == "T"

    @pytest.mark.parametrize("position", [
        TextPosition(0, 1, 1), TextPosition(6, 1, 1), TextPosition(2, 3, 1),
        TextPosition(2, 1, 1), TextPosition(4, 1, 4),
    ])
    def test_invalid(self, running_example, position):
        """範囲外・ε の選択肢はエラー"""
        with pytest.raises(InvalidTextPosition):
            validate_text_position(running_example, position)

    def test_str(self):
        assert str(TextPosition(4, 1, 2)) == "(4,1,2)"


class TestOccurrence:
    """occurs_at / occurrence_positions のテスト"""

    def test_cac_in_t2(self, t2):
        """CAC は T2 の (2,2,1) に出現"""
        assert occurs_at("CAC", t2, TextPosition(2, 2, 1))
        assert occurrence_positions("CAC", t2) == [TextPosition(2, 2, 1)]

    def test_first_character(self, t1):
        """1文字目"""
        assert occurs_at("A", t1, TextPosition(1, 1, 1))

    def test_epsilon_skip(self, running_example):
        """ε を選んで記号を飛ばす出現"""
        assert occurs_at("bca", running_example, TextPosition(1, 1, 1))
        assert occurs_at("bac", running_example, TextPosition(1, 1, 1))

    def test_within_alternative(self, running_example):
        """選択肢の内部で完結する出現"""
        assert occurs_at("bc", running_example, TextPosition(4, 1, 2))
        assert not occurs_at("bb", running_example, TextPosition(4, 1, 2))

    def test_runs_past_end(self, t1):
        """末尾を越える文字列は出現しない"""
        assert not occurs_at("CGA", t1, TextPosition(3, 1, 1))

    def test_enumeration_oracle(self):
        """出現位置があること ⟺ 言語のある要素が部分文字列として含む"""
        rng = random.Random(20240601)
        for _ in range(30):
            s = random_ed_string(4, alphabet="ab", seed=rng)
            members = enumerate_language(s, 10_000)
            for length in (1, 2, 3):
                for bits in range(2 ** length):
                    p = "".join("ab"[(bits >> b) & 1] for b in range(length))
                    expected = any(p in member for member in members)
                    assert bool(occurrence_positions(p, s)) == expected, (serialize_linearized(s), p)
