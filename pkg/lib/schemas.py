"""
ED文字列ツールキット - 構造化出力スキーマ
`edstr --json` の出力形式（Pydantic）
"""

from datetime import datetime

from pydantic import BaseModel, Field


class Meta(BaseModel):
    """出力メタ情報"""
    command: str
    exit_code: int = 0
    timestamp: datetime = Field(default_factory=datetime.now)


class ErrorDetail(BaseModel):
    """エラー詳細"""
    code: str
    message: str
    field: str | None = None
    detail: str | None = None


class CommandResult(BaseModel):
    """
    コマンド1回分の結果

    data にはテキスト出力と同じ内容を、行ごとにタブで分けた列のリストとして入れる。
    """
    data: list[list[str]] | None = None
    meta: Meta
    errors: list[ErrorDetail] | None = None

    @classmethod
    def from_lines(cls, command: str, lines: list[str], exit_code: int) -> "CommandResult":
        return cls(data=[line.split("\t") for line in lines],
                   meta=Meta(command=command, exit_code=exit_code))

    @classmethod
    def from_error(cls, command: str, error: Exception) -> "CommandResult":
        cap = getattr(error, "cap", None)
        detail = ErrorDetail(
            code=type(error).__name__,
            message=str(error),
            detail=f"cap={cap}" if cap is not None else None,
        )
        return cls(meta=Meta(command=command, exit_code=2), errors=[detail])

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)
