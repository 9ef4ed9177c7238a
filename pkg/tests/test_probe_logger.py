import pandas as pd

from src.utils.probe_logger import ProbeLogger, probe_logger_for


class TestProbeLogger:
    """探索結果の CSV ログのテスト"""

    def test_creates_file(self, tmp_path):
        """1行記録すると probe_log.csv ができる"""
        probe_logger = ProbeLogger(str(tmp_path / "logs"))
        index = probe_logger.log_probe({"探索": "probe-star", "n": 4, "次数": 2, "反例": 0, "判定": "holds"})
        assert index == 0
        df = pd.read_csv(tmp_path / "logs" / "probe_log.csv", index_col=0)
        assert len(df) == 1
        assert df.iloc[0]["探索"] == "probe-star"
        assert list(df.columns) == ProbeLogger.COLUMNS

    def test_appends_to_existing(self, tmp_path):
        """既存のログに追記する"""
        ProbeLogger(str(tmp_path)).log_probe({"探索": "probe-star", "n": 4})
        probe_logger = ProbeLogger(str(tmp_path))
        index = probe_logger.log_probe({"探索": "probe-xi-min", "n": 5})
        assert index == 1
        assert len(probe_logger.get_recent_probes()) == 2

    def test_statistics(self, tmp_path):
        """探索の種類ごとの件数"""
        probe_logger = ProbeLogger(str(tmp_path))
        assert probe_logger.get_statistics() == {"total_probes": 0}
        probe_logger.log_probe({"探索": "probe-star"})
        probe_logger.log_probe({"探索": "probe-star"})
        stats = probe_logger.get_statistics()
        assert stats["total_probes"] == 2
        assert stats["probe_distribution"] == {"probe-star": 2}

    def test_disabled_without_directory(self):
        """ディレクトリ未指定なら記録しない"""
        assert probe_logger_for(None) is None
        assert probe_logger_for("") is None
