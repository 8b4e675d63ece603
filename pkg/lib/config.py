"""
ED文字列ツールキット - 設定・ログモジュール

.env / 環境変数から実行時設定を読み込み、標準エラー出力へのログヘルパーを提供する。
"""

import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

from .validation import ValidationError, validate_positive_int

load_dotenv()


LOG_LEVELS = ("DEBUG", "INFO", "SUCCESS", "WARN", "ERROR")


def _level_rank(level: str) -> int:
    try:
        return LOG_LEVELS.index(level.upper())
    except ValueError:
        return LOG_LEVELS.index("INFO")


def log(message: str, level: str = "INFO"):
    """ログ出力（標準エラー出力）"""
    threshold = os.getenv("EDSTR_LOG_LEVEL", "INFO")
    if _level_rank(level) < _level_rank(threshold):
        return
    sys.stderr.write(f"[EDSTR:{level}] {message}\n")
    sys.stderr.flush()


# --- 実行時設定 ---

@dataclass(frozen=True)
class Settings:
    """実行時設定"""
    sat_solver: str | None
    solver_timeout: int
    language_cap: int
    candidate_budget: int
    search_budget: int


DEFAULT_SOLVER_TIMEOUT = 60
DEFAULT_LANGUAGE_CAP = 100_000
DEFAULT_CANDIDATE_BUDGET = 1_000_000
DEFAULT_SEARCH_BUDGET = 2_000_000

_settings: Settings | None = None


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return validate_positive_int(raw.strip(), name)
    except ValidationError as e:
        raise ValidationError(f"環境変数{name}が不正です: {raw!r} ({e})") from None


def get_settings() -> Settings:
    """実行時設定を取得（シングルトン）"""
    global _settings
    if _settings is None:
        solver = os.getenv("EDSTR_SAT_SOLVER") or None
        _settings = Settings(
            sat_solver=solver.strip() if solver else None,
            solver_timeout=_int_env("EDSTR_SOLVER_TIMEOUT", DEFAULT_SOLVER_TIMEOUT),
            language_cap=_int_env("EDSTR_LANGUAGE_CAP", DEFAULT_LANGUAGE_CAP),
            candidate_budget=_int_env("EDSTR_CANDIDATE_BUDGET", DEFAULT_CANDIDATE_BUDGET),
            search_budget=_int_env("EDSTR_SEARCH_BUDGET", DEFAULT_SEARCH_BUDGET),
        )
        if _settings.sat_solver:
            log(f"外部SATソルバー設定: {_settings.sat_solver}", "DEBUG")
    return _settings


def reset_settings():
    """設定キャッシュを破棄（テスト・環境変数変更後の再読込用）"""
    global _settings
    _settings = None
