"""
lib/generators.py のユニットテスト
"""

import random

import pytest

from lib.edcore import StringClass, classify
from lib.generators import (
    random_cnf3,
    random_cs_instance,
    random_ed_string,
    random_gd_string,
    random_graph,
    random_indeterminate_string,
)
from lib.validation import ValidationError


class TestReproducible:
    """同じシードなら同じ結果"""

    def test_ed_string(self):
        assert random_ed_string(8, seed=1) == random_ed_string(8, seed=1)

    def test_shared_random(self):
        """Random を渡すと呼び出しごとに状態が進む"""
        rng = random.Random(3)
        drawn = [random_cnf3(5, 4, seed=rng), random_cnf3(5, 4, seed=rng)]
        replay = random.Random(3)
        assert drawn == [random_cnf3(5, 4, seed=replay), random_cnf3(5, 4, seed=replay)]


class TestShapes:
    """生成物の形"""

    def test_ed_string(self):
        s = random_ed_string(10, "ab", 3, 3, seed=5)
        assert len(s) == 10
        assert s.alphabet <= {"a", "b"}

    def test_gd_string(self):
        rng = random.Random(7)
        for _ in range(20):
            s = random_gd_string(rng.randint(1, 6), "ab", 3, 3, seed=rng)
            assert classify(s) is not StringClass.ED
            for sym in s.symbols:
                assert len({len(w) for w in sym.alternatives}) == 1

    def test_indeterminate(self):
        s = random_indeterminate_string(12, "ACGT", r=3, seed=2)
        assert classify(s) is StringClass.INDETERMINATE
        assert max(len(sym) for sym in s.symbols) <= 3

    def test_cnf3(self):
        f = random_cnf3(6, 9, seed=4)
        assert f.variable_count == 6
        assert len(f.clauses) == 9

    def test_graph_extremes(self):
        assert random_graph(5, 0.0, seed=1).edges == frozenset()
        assert len(random_graph(5, 1.0, seed=1).edges) == 10

    def test_cs_instance(self):
        strings, k = random_cs_instance(3, 4, "ab", seed=9)
        assert len(strings) == 3
        assert 1 <= k <= min(len(w) for w in strings)


class TestInvalid:
    """引数の検証"""

    @pytest.mark.parametrize("call", [
        lambda: random_ed_string(0),
        lambda: random_ed_string(3, ""),
        lambda: random_cnf3(2, 1),
        lambda: random_graph(3, 1.5),
        lambda: random_indeterminate_string(3, r=0),
    ])
    def test_rejected(self, call):
        with pytest.raises(ValidationError):
            call()
