import logging
from datetime import datetime
from pathlib import Path
from typing import Dict, Optional

import pandas as pd

logger = logging.getLogger(__name__)


class ProbeLogger:
    """全数探索の結果を CSV に1行ずつ記録するクラス"""

    COLUMNS = [
        # 基本情報
        "記録日時",
        "探索",
        "n",
        "次数",
        # 列挙
        "列挙した族",
        "候補",
        # 結果
        "反例",
        "閾値での反例",
        "極小元",
        "最大μ",
        "下界",
        "判定",
    ]

    def __init__(self, log_dir: str):
        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)
        self.csv_file = self.log_dir / "probe_log.csv"

        # 既存のログファイルを読み込み、なければ新規作成
        if self.csv_file.exists():
            try:
                self.df = pd.read_csv(self.csv_file, index_col=0)
            except (OSError, ValueError, pd.errors.ParserError) as e:
                logger.warning("既存ログファイル読み込みエラー: %s", e)
                self.df = self._create_empty_dataframe()
        else:
            self.df = self._create_empty_dataframe()

    def _create_empty_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(columns=self.COLUMNS)

    def log_probe(self, row: Dict) -> int:
        """探索結果を1行追加して保存し、その行番号を返す"""
        new_row = {column: row.get(column, "") for column in self.COLUMNS}
        new_row["記録日時"] = row.get("記録日時") or datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        new_row = pd.DataFrame([new_row])
        if self.df.empty:
            self.df = new_row
        else:
            self.df = pd.concat([self.df, new_row], ignore_index=True)
        self.save()
        return len(self.df) - 1

    def save(self) -> None:
        self.df.to_csv(self.csv_file, index=True, index_label="ID")
        logger.info("ログが保存されました: %s", self.csv_file)

    def get_recent_probes(self, n: int = 10) -> pd.DataFrame:
        """最近のn件の探索を取得"""
        return self.df.tail(n)

    def get_statistics(self) -> Dict:
        if len(self.df) == 0:
            return {"total_probes": 0}
        return {
            "total_probes": len(self.df),
            "probe_distribution": self.df["探索"].value_counts().to_dict(),
            "latest_probe": self.df["記録日時"].max(),
        }


def probe_logger_for(log_dir: Optional[str]) -> Optional[ProbeLogger]:
    if not log_dir:
        return None
    return ProbeLogger(log_dir)
