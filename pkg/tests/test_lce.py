"""
lib/lce.py のユニットテスト
D(i, j)・LRF・EDSI と列挙による検算
"""

import importlib
import random
import time

import pytest

from lib.edcore import TextPosition, enumerate_language, language_size_bound, parse_linearized, text_positions
from lib.generators import random_ed_string
from lib.lce import (
    LceTable,
    edsi_decide,
    lce,
    lce_at,
    lce_bruteforce,
    lrf,
    lrf_bruteforce,
    lrf_length,
    pick_separator,
)
from lib.linearization import build_linearization
from lib.validation import AlphabetExhausted, ValidationError


def _small_random_strings(seed: int, count: int, length: int = 5):
    """組合せ数 10^4 以下のランダム ED文字列"""
    rng = random.Random(seed)
    result = []
    while len(result) < count:
        s = random_ed_string(length, alphabet="ab", seed=rng)
        if language_size_bound(s) <= 10_000:
            result.append(s)
    return result


class TestLceRecursion:
    """作業例での D(i, j)"""

    @pytest.mark.parametrize("i, j, expected", [
        (1, 9, 3),
        (6, 10, 2),
        (8, 14, 1),
        (12, 14, 0),
    ])
    def test_worked_values(self, running_example, i, j, expected):
        lin = build_linearization(running_example)
        assert lce(lin, i, j) == expected

    def test_symmetric(self, running_example):
        """D(i, j) = D(j, i)"""
        lin = build_linearization(running_example)
        table = LceTable(lin)
        for i in range(1, lin.sentinel + 1):
            for j in range(1, lin.sentinel + 1):
                assert table.query(i, j) == table.query(j, i)

    def test_sentinel_is_zero(self, running_example):
        """番兵との D は0"""
        lin = build_linearization(running_example)
        assert lce(lin, 1, lin.sentinel) == 0

    def test_out_of_range(self, running_example):
        """範囲外の位置はエラー"""
        lin = build_linearization(running_example)
        with pytest.raises(ValidationError) as exc_info:
            lce(lin, 1, 20)
        assert "範囲外" in str(exc_info.value)
        with pytest.raises(ValidationError):
            lce(lin, 0, 1)

    def test_monotone_bound(self, running_example):
        """D(i, j) ≤ |L| - max(i, j) + 1"""
        lin = build_linearization(running_example)
        table = LceTable(lin).fill()
        for i in range(1, lin.sentinel + 1):
            for j in range(1, lin.sentinel + 1):
                assert table[i, j] <= lin.length - max(i, j) + 1

    def test_amortized_paren_pairs(self):
        """'(' 同士の組で評価する子の総数は |L|^2 以下"""
        for s in _small_random_strings(11, 10, length=8):
            lin = build_linearization(s)
            table = LceTable(lin)
            for i in range(1, lin.sentinel + 1):
                for j in range(1, lin.sentinel + 1):
                    table.query(i, j)
            assert table.paren_pair_evaluations <= lin.length ** 2


class TestFill:
    """ボトムアップ計算のテスト"""

    def test_fill_matches_query(self):
        """fill と query は全セルで一致"""
        for s in _small_random_strings(3, 25, length=6):
            lin = build_linearization(s)
            full = LceTable(lin).fill()
            lazy = LceTable(lin)
            for i in range(1, lin.sentinel + 1):
                for j in range(1, lin.sentinel + 1):
                    assert full[i, j] == lazy.query(i, j), (str(s), i, j)

    def test_self_extension(self, running_example):
        """Σ 位置 i の D(i, i) は i から読める最長の長さ"""
        lin = build_linearization(running_example)
        table = LceTable(lin)
        for t in text_positions(running_example):
            i = lin.to_index(t)
            suffixes = enumerate_language(
                type(running_example)(running_example.symbols[t.i:]), 1000
            )
            head = running_example.symbols[t.i - 1].alternatives[t.j - 1][t.k - 1:]
            assert table.query(i, i) == max(len(head + tail) for tail in suffixes)

    @pytest.mark.slow
    def test_quadratic_growth(self):
        """サイズ2倍で計算時間の伸びは5倍以内、N=1000 は10秒以内"""
        timings = {}
        for n in (250, 500, 1000):
            rng = random.Random(n)
            s = random_ed_string(n // 2, alphabet="ACGT", max_alternatives=2,
                                 max_alternative_length=2, seed=rng)
            start = time.perf_counter()
            LceTable(build_linearization(s)).fill()
            timings[n] = max(time.perf_counter() - start, 1e-3)
        assert timings[1000] < 10
        assert timings[500] / timings[250] <= 5 or timings[500] < 0.05
        assert timings[1000] / timings[500] <= 5 or timings[1000] < 0.05


class TestWitness:
    """証拠文字列のテスト"""

    def test_running_example(self, running_example):
        lin = build_linearization(running_example)
        assert LceTable(lin).witness(1, 9) == "bca"

    def test_length_matches(self):
        """証拠の長さは D(i, j) に等しく、両方の位置から出現する"""
        from lib.edcore import occurs_at
        for s in _small_random_strings(5, 10):
            lin = build_linearization(s)
            table = LceTable(lin)
            positions = list(text_positions(s))
            for p in positions:
                for q in positions:
                    i, j = lin.to_index(p), lin.to_index(q)
                    w = table.witness(i, j)
                    assert len(w) == table.query(i, j)
                    if w:
                        assert occurs_at(w, s, p) and occurs_at(w, s, q)


class TestLrf:
    """lrf関数のテスト"""

    def test_running_example(self, running_example):
        result = lrf(running_example)
        assert result.length == 3
        assert result.witness == "bca"
        assert result.first == TextPosition(1, 1, 1)
        assert result.second == TextPosition(4, 1, 2)

    def test_no_repeat(self):
        """同じ文字がなければ0"""
        result = lrf(parse_linearized("ab"))
        assert result.length == 0
        assert result.witness is None

    def test_single_repeat(self):
        result = lrf(parse_linearized("aa"))
        assert result.length == 1
        assert result.witness == "a"

    def test_deterministic(self, running_example):
        """同じ入力なら同じ結果"""
        assert lrf(running_example) == lrf(running_example)

    def test_against_bruteforce(self):
        """LRF の長さは総当たりと一致"""
        for s in _small_random_strings(2024, 50):
            assert lrf_length(s) == lrf_bruteforce(s, 10_000), str(s)

    @pytest.mark.slow
    def test_lce_against_bruteforce(self):
        """全テキスト位置の組で LCE は総当たりと一致"""
        for s in _small_random_strings(2024, 50):
            positions = list(text_positions(s))
            for p in positions:
                for q in positions:
                    assert lce_at(s, p, q) == lce_bruteforce(s, p, q, 10_000), (str(s), p, q)


class TestEdsi:
    """edsi_decide関数のテスト"""

    def test_length_mismatch(self, t1, t2):
        """長さの異なる言語は交わらない"""
        assert edsi_decide(t1, t2) is False

    def test_common_string(self):
        assert edsi_decide(parse_linearized("(a|b)"), parse_linearized("(b|c)")) is True

    def test_disjoint_with_long_inner_repeat(self):
        """S1 の内側どうしの長い反復があっても交わらなければ False"""
        s1 = parse_linearized("(ab)(aaa)(a|aaa)")
        s2 = parse_linearized("(a|baa)(aa|bb)a")
        assert not enumerate_language(s1, 256) & enumerate_language(s2, 256)
        assert edsi_decide(s1, s2) is False
        assert edsi_decide(s2, s1) is False

    def test_symmetric(self, t2, t3):
        """引数の順序によらない"""
        assert edsi_decide(t2, t3) == edsi_decide(t3, t2) is True

    def test_against_enumeration(self):
        """列挙した言語の交わりと一致"""
        rng = random.Random(31)
        checked = 0
        while checked < 20:
            s1 = random_ed_string(3, alphabet="ab", seed=rng)
            s2 = random_ed_string(3, alphabet="ab", seed=rng)
            if language_size_bound(s1) > 256 or language_size_bound(s2) > 256:
                continue
            expected = bool(enumerate_language(s1, 256) & enumerate_language(s2, 256))
            assert edsi_decide(s1, s2) == expected, (str(s1), str(s2))
            checked += 1

    def test_separator(self):
        """未使用の文字を選ぶ"""
        assert pick_separator(parse_linearized("(!|a)")) == '"'

    def test_alphabet_exhausted(self, monkeypatch):
        """候補がすべて使われていればエラー"""
        monkeypatch.setattr(importlib.import_module("lib.lce"), "SEPARATOR_CANDIDATES", ("a",))
        with pytest.raises(AlphabetExhausted):
            pick_separator(parse_linearized("a"))
