"""
lib/config.py のユニットテスト
環境変数による設定とログ出力のテスト
"""

import pytest

from lib.config import (
    DEFAULT_LANGUAGE_CAP,
    DEFAULT_SEARCH_BUDGET,
    get_settings,
    log,
    reset_settings,
)
from lib.validation import ValidationError


class TestGetSettings:
    """get_settings関数のテスト"""

    def test_defaults(self):
        """環境変数がなければ既定値"""
        settings = get_settings()
        assert settings.sat_solver is None
        assert settings.solver_timeout == 60
        assert settings.language_cap == DEFAULT_LANGUAGE_CAP
        assert settings.search_budget == DEFAULT_SEARCH_BUDGET

    def test_singleton(self):
        """同じインスタンスを返す"""
        assert get_settings() is get_settings()

    def test_env_override(self, monkeypatch):
        """環境変数で上書きできる"""
        monkeypatch.setenv("EDSTR_LANGUAGE_CAP", "500")
        monkeypatch.setenv("EDSTR_SAT_SOLVER", " minisat ")
        reset_settings()
        settings = get_settings()
        assert settings.language_cap == 500
        assert settings.sat_solver == "minisat"

    def test_invalid_number(self, monkeypatch):
        """数値でない値はエラー（変数名を含む）"""
        monkeypatch.setenv("EDSTR_SOLVER_TIMEOUT", "abc")
        reset_settings()
        with pytest.raises(ValidationError) as exc_info:
            get_settings()
        assert "EDSTR_SOLVER_TIMEOUT" in str(exc_info.value)

    def test_zero_rejected(self, monkeypatch):
        """0 はエラー"""
        monkeypatch.setenv("EDSTR_SEARCH_BUDGET", "0")
        reset_settings()
        with pytest.raises(ValidationError):
            get_settings()


class TestLog:
    """log関数のテスト"""

    def test_writes_to_stderr(self, capsys):
        """標準エラー出力に書く"""
        log("テストメッセージ")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "[EDSTR:INFO] テストメッセージ" in captured.err

    def test_level_label(self, capsys):
        """レベル名を含む"""
        log("警告", "WARN")
        assert "[EDSTR:WARN] 警告" in capsys.readouterr().err

    def test_below_threshold_suppressed(self, capsys, monkeypatch):
        """しきい値未満のレベルは出力しない"""
        monkeypatch.setenv("EDSTR_LOG_LEVEL", "WARN")
        log("詳細", "DEBUG")
        log("情報")
        assert capsys.readouterr().err == ""

    def test_debug_hidden_by_default(self, capsys):
        """既定では DEBUG を出力しない"""
        log("詳細", "DEBUG")
        assert capsys.readouterr().err == ""
