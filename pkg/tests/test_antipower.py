"""
lib/antipower.py のユニットテスト
アンチパワー判定・GD文字列上の探索・ハミルトン路からの帰着
"""

import random

import pytest

from lib.antipower import (
    AntiPowerWitness,
    Graph,
    antipower_witnesses,
    complete_graph,
    extract_ham_path,
    has_hamiltonian_path,
    has_k_antipower,
    hamiltonian_paths,
    is_k_antipower,
    reduce_hampath,
    vertex_codes,
)
from lib.edcore import parse_linearized
from lib.generators import random_gd_string, random_graph
from lib.validation import MalformedGraph, MalformedWitness, NotGd, SearchBudgetExceeded


class TestGraph:
    """グラフの正規化と補グラフ"""

    def test_create_normalizes(self):
        g = Graph.create(3, [(2, 1), (1, 2), (3, 2)])
        assert g.edges == frozenset({(1, 2), (2, 3)})

    @pytest.mark.parametrize("n, edges", [
        (0, []),
        (3, [(1, 1)]),
        (3, [(1, 4)]),
    ])
    def test_malformed(self, n, edges):
        with pytest.raises(MalformedGraph):
            Graph.create(n, edges)

    def test_unnormalized_edge_rejected(self):
        with pytest.raises(MalformedGraph):
            Graph(3, frozenset({(2, 1)}))

    def test_non_edges(self, example_graph):
        assert example_graph.non_edges() == [(1, 4), (2, 4)]

    def test_hamiltonian_paths(self, example_graph):
        assert hamiltonian_paths(example_graph) == [
            (1, 2, 3, 4), (2, 1, 3, 4), (4, 3, 1, 2), (4, 3, 2, 1),
        ]

    def test_complete_graph(self):
        assert len(complete_graph(5).edges) == 10
        assert complete_graph(5).non_edges() == []


class TestIsKAntipower:
    """語のアンチパワー判定"""

    @pytest.mark.parametrize("word, k, expected", [
        ("abcd", 2, True),
        ("abab", 2, False),
        ("abc", 2, False),
        ("aab", 3, False),
        ("abc", 3, True),
        ("aaaa", 1, True),
    ])
    def test_examples(self, word, k, expected):
        assert is_k_antipower(word, k) is expected


class TestAntipowerSearch:
    """GD文字列の言語上の探索"""

    def test_small(self):
        s = parse_linearized("(ab|aa)(ab|ba)")
        words = [w.word for w in antipower_witnesses(s, 2)]
        assert words == ["aaab", "aaba", "abba"]
        assert all(is_k_antipower(word, 2) for word in words)

    def test_factors(self):
        s = parse_linearized("a(b|c)d")
        witness = has_k_antipower(s, 3)
        assert witness == AntiPowerWitness("abd", 3, ("a", "b", "d"))

    def test_not_divisible(self):
        """長さが k で割り切れなければ証拠なし"""
        assert antipower_witnesses(parse_linearized("abc"), 2) == []

    def test_none(self):
        assert has_k_antipower(parse_linearized("(aa)(aa)"), 2) is None

    def test_requires_gd(self):
        with pytest.raises(NotGd):
            antipower_witnesses(parse_linearized("(a|bb)"), 1)

    def test_budget(self):
        s = parse_linearized("(a|b)(a|b)(a|b)(a|b)")
        with pytest.raises(SearchBudgetExceeded) as exc_info:
            antipower_witnesses(s, 4, cap=3)
        assert exc_info.value.cap == 3

    def test_matches_language(self):
        """探索結果は言語の全要素を判定したものと一致"""
        rng = random.Random(8)
        for _ in range(20):
            s = random_gd_string(rng.randint(1, 4), "ab", 3, 2, seed=rng)
            total = sum(len(sym.alternatives[0]) for sym in s.symbols)
            for k in range(1, total + 1):
                found = sorted(w.word for w in antipower_witnesses(s, k))
                expected = sorted(w for w in _language(s) if is_k_antipower(w, k))
                assert found == expected, (str(s), k)


def _language(s):
    words = {""}
    for sym in s.symbols:
        words = {w + a for w in words for a in sym.alternatives}
    return words


class TestHampathReduction:
    """ハミルトン路 → アンチパワー"""

    def test_example_k(self, example_graph):
        reduction = reduce_hampath(example_graph)
        assert reduction.k == 11
        lengths = {len(w) for w in _language(reduction.string)}
        assert lengths == {22}

    def test_example_witnesses(self, example_graph):
        """証拠は向き付きハミルトン路と1対1"""
        reduction = reduce_hampath(example_graph)
        witnesses = antipower_witnesses(reduction.string, reduction.k)
        assert len(witnesses) == 4
        paths = {tuple(extract_ham_path(w, example_graph)) for w in witnesses}
        assert paths == set(hamiltonian_paths(example_graph))
        assert (1, 2, 3, 4) in paths
        assert (4, 3, 2, 1) in paths

    def test_binary_variant(self, example_graph):
        reduction = reduce_hampath(example_graph, binary=True)
        assert reduction.k == 11
        assert reduction.string.alphabet <= {"0", "1"}
        witnesses = antipower_witnesses(reduction.string, reduction.k)
        paths = {tuple(extract_ham_path(w, example_graph, binary=True)) for w in witnesses}
        assert paths == set(hamiltonian_paths(example_graph))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_complete_graph_k(self, n):
        """K_n では k = 2n-1 で、証拠は n! 個"""
        g = complete_graph(n)
        reduction = reduce_hampath(g)
        assert reduction.k == 2 * n - 1
        count = len(antipower_witnesses(reduction.string, reduction.k))
        assert count == len(hamiltonian_paths(g))

    def test_edgeless_pair(self):
        g = Graph.create(2, [])
        reduction = reduce_hampath(g)
        assert reduction.k == 5
        assert has_k_antipower(reduction.string, reduction.k) is None
        assert not has_hamiltonian_path(g)

    def test_single_vertex_rejected(self):
        with pytest.raises(MalformedGraph):
            reduce_hampath(Graph(1, frozenset()))

    def test_random_graphs(self):
        """ランダムグラフで帰着が判定を保ち、長さ 2k と因子の奇数位置開始が成り立つ"""
        rng = random.Random(99)
        for _ in range(20):
            g = random_graph(rng.randint(2, 5), rng.random(), seed=rng)
            for binary in (False, True):
                reduction = reduce_hampath(g, binary)
                code_length = len(vertex_codes(g.n, binary)[1])
                widths = [{len(a) for a in sym.alternatives} for sym in reduction.string.symbols]
                assert all(len(w) == 1 for w in widths)
                assert sum(w.pop() for w in widths) == 2 * reduction.k * code_length
                witness = has_k_antipower(reduction.string, reduction.k)
                assert (witness is not None) == has_hamiltonian_path(g)
                if witness is not None:
                    width = len(witness.word) // reduction.k
                    starts = [1 + j * width for j in range(reduction.k)]
                    assert all(start % 2 == 1 for start in starts)
                    assert "".join(witness.factors) == witness.word
                    assert all(len(f) == width for f in witness.factors)
                    path = extract_ham_path(witness, g, binary)
                    assert tuple(path) in hamiltonian_paths(g)


class TestExtract:
    """証拠からの路の復元"""

    def test_short_word(self, example_graph):
        with pytest.raises(MalformedWitness):
            extract_ham_path(AntiPowerWitness("ab", 11, ()), example_graph)

    def test_not_a_path(self, example_graph):
        """二重文字はあるが辺でつながらない"""
        word = "adda" "bddb" "aaa" "dddd" "bbbb" "ccc"
        with pytest.raises(MalformedWitness) as exc_info:
            extract_ham_path(AntiPowerWitness(word, 11, ()), example_graph)
        assert "ハミルトン路ではありません" in str(exc_info.value)


class TestVertexCodes:

    def test_letters(self):
        assert vertex_codes(3) == {1: "a", 2: "b", 3: "c"}

    def test_binary(self):
        assert vertex_codes(4, binary=True) == {1: "00", 2: "01", 3: "10", 4: "11"}

    def test_many_vertices_use_bits(self):
        codes = vertex_codes(27)
        assert len(codes[27]) == 5
        assert len(set(codes.values())) == 27
