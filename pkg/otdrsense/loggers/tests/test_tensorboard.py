import os

from ... import loggers
from ...detection import StreamProgress


def test_disabled_without_a_path(monkeypatch):
    monkeypatch.delenv(loggers.TENSORBOARD_ENV, raising=False)
    logger = loggers.TensorBoardLogger(None, "mc")
    assert not logger.enabled
    logger.add_scalar("ignored", 1.0, 0)
    logger.close()


def test_environment_variable_enables_logging(tmp_path, monkeypatch):
    monkeypatch.setenv(loggers.TENSORBOARD_ENV, str(tmp_path) + "/")
    logger = loggers.TensorBoardLogger(None, "mc")
    assert logger.enabled
    logger.progress_callback("codebook")(StreamProgress(0, 1, 1000, 0.5))
    logger.add_text("config", "{}")
    logger.close()
    folders = [root for root, _, names in os.walk(tmp_path / "mc") if names]
    assert len(folders) == 1
    assert any(name.startswith("events.out.tfevents") for name in os.listdir(folders[0]))
