import datetime
import os
import typing as T

from torch.utils.tensorboard import SummaryWriter

from ..base import BaseObject
from ..detection.models import StreamProgress

TENSORBOARD_ENV = "OTDR_TENSORBOARD_PATH"


class TensorBoardLogger(BaseObject):
    """Scalar run log; it only writes event files and never starts a tensorboard server."""
    def __init__(self, base: T.Optional[str], run: str):
        super(TensorBoardLogger, self).__init__()
        self.summary_writer: T.Optional[SummaryWriter] = None
        if base is None:
            base = os.environ.get(TENSORBOARD_ENV)
        if base:
            self.summary_writer = SummaryWriter(self.create_tensor_board_folder(base, run))

    @property
    def enabled(self) -> bool:
        return self.summary_writer is not None

    def create_tensor_board_folder(self, base: str, run: str) -> str:
        if base.endswith("/"):
            base = base[:-1]
        today = str(datetime.datetime.now().date())
        now = str(datetime.datetime.now().time().strftime("%H_%M_%S"))
        folder = os.path.join(base, run, today, now)
        os.makedirs(folder, exist_ok=True)
        self.log.info(f"tensorboard folder: {folder}")
        return folder

    def progress_callback(self, tag: str) -> T.Callable[[StreamProgress], None]:
        def cbk(progress: StreamProgress) -> None:
            self.add_scalar(f"{tag}/running estimate", progress.mean, progress.samples)
        return cbk

    def add_scalar(self, tag: str, value: float, step: int) -> None:
        if self.summary_writer:
            self.summary_writer.add_scalar(tag, value, step)

    def add_text(self, tag: str, text: str) -> None:
        if self.summary_writer:
            self.summary_writer.add_text(tag, text)

    def close(self) -> None:
        if self.summary_writer:
            self.summary_writer.close()
            self.summary_writer = None
