from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.utils.textio import format_machine


class CommandOptions(BaseModel):
    """1回の呼び出しで使うサブコマンドと共通オプション"""

    model_config = ConfigDict(extra="forbid")

    command: str
    output_format: Literal["text", "machine"] = "text"
    budget: int = Field(ge=1)
    workers: int = Field(default=1, ge=1)
    verbose: int = Field(default=0, ge=0)
    log_dir: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)


class CommandResult(BaseModel):
    exit_code: Literal[0, 1] = 0
    text: str = ""
    report: Dict[str, Any] = Field(default_factory=dict)

    def render(self, output_format: str) -> str:
        # report を持たないコマンド（gen など）は常にテキスト
        if output_format == "machine" and self.report:
            return format_machine(self.report)
        if self.text and not self.text.endswith("\n"):
            return self.text + "\n"
        return self.text
