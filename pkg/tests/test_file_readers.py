"""
ファイル読み込みモジュールのテスト
lib/file_readers.py のテスト
"""

import pytest

from lib.edcore import serialize_linearized
from lib.file_readers import (
    get_supported_formats,
    read_dimacs,
    read_ed_string,
    read_ed_strings,
    read_graph,
    read_strings,
    read_text_file,
)
from lib.validation import (
    MalformedDimacs,
    MalformedGraph,
    NestedParentheses,
    UnbalancedParentheses,
    ValidationError,
)


@pytest.fixture
def write(tmp_path):
    """tmp_path にファイルを書いてパスを返す"""
    def _write(name, content, encoding="utf-8"):
        path = tmp_path / name
        path.write_bytes(content.encode(encoding))
        return path
    return _write


class TestGetSupportedFormats:
    """サポート形式取得のテスト"""

    def test_returns_dict(self):
        """辞書を返す"""
        assert isinstance(get_supported_formats(), dict)

    def test_four_formats(self):
        """4種類の形式"""
        assert set(get_supported_formats()) == {"eds", "cnf", "graph", "strings"}


class TestReadTextFile:
    """テキストファイル読み込みのテスト"""

    def test_read_utf8(self, write):
        """UTF-8テキストの読み込み"""
        assert read_text_file(write("a.txt", "こんにちは")) == "こんにちは"

    def test_fallback_latin1(self, write):
        """UTF-8 で読めなければ latin-1"""
        path = write("b.txt", "café", encoding="latin-1")
        assert read_text_file(path) == "café"

    def test_missing_file(self, tmp_path):
        """存在しないファイル"""
        with pytest.raises(OSError):
            read_text_file(tmp_path / "missing.eds")


class TestReadEdStrings:
    """ED文字列ファイルのテスト"""

    def test_skips_comments_and_blank_lines(self, write):
        """# 行と空行は無視"""
        path = write("s.eds", "# 作業例\n\nb(a|)c(c|abc)(b|a)\n  A(A|C)C(G|T)  \n")
        strings = read_ed_strings(path)
        assert [serialize_linearized(s) for s in strings] == [
            "b(|a)c(abc|c)(a|b)", "A(A|C)C(G|T)",
        ]

    def test_error_has_line_number(self, write):
        """構文誤りは型を保ったまま行番号を付ける"""
        path = write("bad.eds", "ab\n# c\n(a|(b))\n")
        with pytest.raises(NestedParentheses) as exc_info:
            read_ed_strings(path)
        assert f"{path}:3:" in str(exc_info.value)

    def test_single(self, write):
        """ちょうど1つ"""
        assert len(read_ed_string(write("one.eds", "(a|b)\n"))) == 1

    def test_single_rejects_many(self, write):
        """2つ以上はエラー"""
        with pytest.raises(ValidationError) as exc_info:
            read_ed_string(write("two.eds", "a\nb\n"))
        assert "ちょうど1つ" in str(exc_info.value)

    def test_single_rejects_empty(self, write):
        """空ファイルはエラー"""
        with pytest.raises(ValidationError):
            read_ed_string(write("empty.eds", "# なし\n"))

    def test_unbalanced(self, write):
        with pytest.raises(UnbalancedParentheses):
            read_ed_string(write("open.eds", "a(b|c\n"))


class TestReadDimacs:
    """DIMACS ファイルのテスト"""

    def test_read(self, write):
        f = read_dimacs(write("f.cnf", "c 例\np cnf 4 2\n1 -2 3 0\n2 -3 4 0\n"))
        assert f.variable_count == 4
        assert f.clauses == ((1, -2, 3), (2, -3, 4))

    def test_malformed(self, write):
        with pytest.raises(MalformedDimacs):
            read_dimacs(write("bad.cnf", "1 2 0\n"))


class TestReadGraph:
    """グラフファイルのテスト"""

    def test_read(self, write):
        g = read_graph(write("g.txt", "# 作業例\n4\n1 2\n3 1\n2 3\n3 4\n"))
        assert g.n == 4
        assert g.edges == frozenset({(1, 2), (1, 3), (2, 3), (3, 4)})

    def test_isolated_vertices(self, write):
        """辺なし"""
        g = read_graph(write("g.txt", "3\n"))
        assert g.edges == frozenset()

    @pytest.mark.parametrize("content, message", [
        ("", "頂点数の行がありません"),
        ("x\n", "整数として読めません"),
        ("3\n1 2 3\n", "'u v' の形式"),
    ])
    def test_malformed(self, write, content, message):
        with pytest.raises(MalformedGraph) as exc_info:
            read_graph(write("bad.txt", content))
        assert message in str(exc_info.value)

    def test_out_of_range(self, write):
        with pytest.raises(MalformedGraph):
            read_graph(write("bad.txt", "2\n1 3\n"))


class TestReadStrings:
    """文字列リストのテスト"""

    def test_read(self, write):
        assert read_strings(write("cs.txt", "abb\n\n# コメント\nbab\n")) == ["abb", "bab"]
