"""
ED文字列ツールキット - ファイル読み込みモジュール
線形化表記・DIMACS CNF・グラフ・文字列リストの読み込み
"""

from pathlib import Path

from .antipower import Graph
from .edcore import EDString, parse_linearized
from .satkit import CnfFormula, parse_dimacs
from .validation import MalformedGraph, ValidationError


def get_supported_formats() -> dict:
    """サポートする入力形式と説明を返す"""
    return {
        "eds": "線形化表記の ED文字列（1行1つ、# で始まる行は無視）",
        "cnf": "DIMACS CNF",
        "graph": "1行目に頂点数 n、以降 'u v' の辺（頂点は 1..n）",
        "strings": "1行1文字列（共通部分列インスタンス）",
    }


def read_text_file(path: str | Path) -> str:
    """
    テキストファイルを読み込む

    Raises:
        OSError: ファイルが開けない場合
    """
    content = Path(path).read_bytes()

    # エンコーディングを試行（latin-1 は必ず成功する）
    try:
        return content.decode("utf-8")
    except UnicodeDecodeError:
        return content.decode("latin-1")


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((number, stripped))
    return lines


def read_ed_strings(path: str | Path) -> list[EDString]:
    """
    ED文字列を1行ずつ読み込む

    Raises:
        EdStringSyntaxError: 構文誤り（行番号つき）
    """
    result = []
    for number, line in _content_lines(read_text_file(path)):
        try:
            result.append(parse_linearized(line))
        except ValidationError as e:
            raise type(e)(f"{path}:{number}: {e}") from e
    return result


def read_ed_string(path: str | Path) -> EDString:
    """ED文字列がちょうど1つ書かれたファイルを読み込む"""
    strings = read_ed_strings(path)
    if len(strings) != 1:
        raise ValidationError(f"{path}: ED文字列はちょうど1つ必要です（{len(strings)}個）")
    return strings[0]


def read_dimacs(path: str | Path) -> CnfFormula:
    """DIMACS CNF ファイルを読み込む"""
    return parse_dimacs(read_text_file(path))


def read_graph(path: str | Path) -> Graph:
    """
    グラフファイルを読み込む

    Raises:
        MalformedGraph: 形式が不正な場合
    """
    lines = _content_lines(read_text_file(path))
    if not lines:
        raise MalformedGraph(f"{path}: 頂点数の行がありません")
    try:
        n = int(lines[0][1])
        edges = []
        for number, line in lines[1:]:
            fields = line.split()
            if len(fields) != 2:
                raise MalformedGraph(f"{path}:{number}: 辺は 'u v' の形式で書いてください")
            edges.append((int(fields[0]), int(fields[1])))
    except ValueError as e:
        raise MalformedGraph(f"{path}: 整数として読めません: {e}") from e
    return Graph.create(n, edges)


def read_strings(path: str | Path) -> list[str]:
    """文字列リストを読み込む（空行と # 行は無視）"""
    return [line for _, line in _content_lines(read_text_file(path))]
