"""
テスト共通設定
作業例の ED文字列・3-CNF・グラフのフィクスチャと、設定のリセット

Note:
- 乱数を使うテストはシード固定の random.Random を使う
- 重いテストには @pytest.mark.slow を付ける（`uv run pytest -m "not slow"` で除外）
"""

import pytest

from lib import Cnf3, Graph, parse_linearized, reset_settings

RUNNING_EXAMPLE = "b(|a)c(abc|c)(a|b)"
T1 = "A(A|C)C(G|T)"
T2 = "A(AG|CA)C(G|T)"
T3 = "A(|AG)C(CCT|G|T)"

# (x1 ∨ ¬x2 ∨ x3) ∧ (x2 ∨ ¬x3 ∨ x4)
EXAMPLE_F_CLAUSES = ((1, -2, 3), (2, -3, 4))


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    """各テストを既定の設定で始める"""
    for name in ("EDSTR_SAT_SOLVER", "EDSTR_SOLVER_TIMEOUT", "EDSTR_LANGUAGE_CAP",
                 "EDSTR_CANDIDATE_BUDGET", "EDSTR_SEARCH_BUDGET", "EDSTR_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def running_example():
    """線形化の作業例 b{ε,a}c{abc,c}{a,b}"""
    return parse_linearized(RUNNING_EXAMPLE)


@pytest.fixture
def t1():
    return parse_linearized(T1)


@pytest.fixture
def t2():
    return parse_linearized(T2)


@pytest.fixture
def t3():
    return parse_linearized(T3)


@pytest.fixture
def example_f():
    """充足可能な作業例の式（1000 が充足割当）"""
    return Cnf3(4, EXAMPLE_F_CLAUSES)


@pytest.fixture
def unsatisfiable_f():
    """x1..x3 の符号パターン8通りをすべて節にした充足不能な式"""
    clauses = tuple(
        tuple(v if (mask >> (v - 1)) & 1 else -v for v in (1, 2, 3)) for mask in range(8)
    )
    return Cnf3(3, clauses)


@pytest.fixture
def example_graph():
    """頂点 a..d、辺 ab, ac, bc, cd"""
    return Graph.create(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
