import math
import typing as T
from dataclasses import dataclass

import numpy as np
import torch
import torch.multiprocessing

from ...base import BaseObject
from ..models import MCReport, StreamProgress, TProgressCallback
from .params import MonteCarloParams
from .samplers import Sampler


@dataclass(frozen=True)
class StreamTask:
    sampler: Sampler
    index: int
    seed: int
    samples: int
    chunk_size: int
    device: str


@dataclass(frozen=True)
class StreamResult:
    index: int
    count: int
    mean: float
    m2: float


def merge(a: StreamResult, b: StreamResult) -> StreamResult:
    """Pairwise combination of counts, means and sums of squared deviations."""
    count = a.count + b.count
    if count == 0:
        return StreamResult(a.index, 0, 0.0, 0.0)
    delta = b.mean - a.mean
    mean = a.mean + delta * b.count / count
    m2 = a.m2 + b.m2 + delta ** 2 * a.count * b.count / count
    return StreamResult(a.index, count, mean, m2)


def run_stream(task: StreamTask) -> StreamResult:
    generator = torch.Generator(device=task.device)
    generator.manual_seed(task.seed)
    acc = StreamResult(task.index, 0, 0.0, 0.0)
    remaining = task.samples
    while remaining > 0:
        size = min(task.chunk_size, remaining)
        values = task.sampler.draw(generator, size, task.device)
        mean = values.mean().item()
        m2 = ((values - mean) ** 2).sum().item()
        acc = merge(acc, StreamResult(task.index, size, mean, m2))
        remaining -= size
    return acc


def stream_seeds(seed: int, streams: int) -> T.List[int]:
    """One 64 bit seed per stream, split deterministically from the master seed."""
    return [int(child.generate_state(1, np.uint64)[0]) for child in np.random.SeedSequence(seed).spawn(streams)]


class MonteCarloEstimator(BaseObject):
    def __init__(self, params: MonteCarloParams = MonteCarloParams()):
        super(MonteCarloEstimator, self).__init__()
        self.params: MonteCarloParams = params
        self.device: str = "cpu"
        if params.use_gpu:
            if not torch.cuda.is_available():
                self.log.warning("cuda is not available, CPU will be used")
            else:
                self.device = "cuda"
        self.progress_callbacks: T.Dict[str, TProgressCallback] = {}

    def add_progress_callback(self, label: str, cbk: TProgressCallback) -> None:
        if label in self.progress_callbacks:
            self.log.warning(f"overwriting progress callback with label {label}")
        self.progress_callbacks[label] = cbk
        self.log.debug(f"added progress callback {label}: {cbk}")

    def call_progress_callbacks(self, progress: StreamProgress) -> None:
        for label, cbk in self.progress_callbacks.items():
            self.log.debug(f"calling progress callback {label}, {cbk}")
            cbk(progress)

    def tasks(self, sampler: Sampler) -> T.List[StreamTask]:
        workers = self.params.workers
        share, extra = divmod(self.params.samples, workers)
        return [StreamTask(sampler, i, seed, share + (1 if i < extra else 0), self.params.chunk_size, self.device)
                for i, seed in enumerate(stream_seeds(self.params.seed, workers))]

    def _results(self, tasks: T.List[StreamTask]) -> T.Iterator[StreamResult]:
        if self.params.workers == 1:
            yield from map(run_stream, tasks)
            return
        with torch.multiprocessing.get_context("spawn").Pool(processes=self.params.workers) as pool:
            yield from pool.imap(run_stream, tasks)

    def estimate(self, sampler: Sampler, analytic_value: T.Optional[float] = None) -> MCReport:
        tasks = self.tasks(sampler)
        self.log.info(f"sampling {self.params.samples} values with {len(tasks)} streams on {self.device}")
        total = StreamResult(0, 0, 0.0, 0.0)
        # imap keeps stream order, so the reduction does not depend on scheduling
        for result in self._results(tasks):
            total = merge(total, result)
            self.call_progress_callbacks(StreamProgress(result.index, len(tasks), total.count, total.mean))
        std_error = math.sqrt(total.m2 / (total.count - 1)) / math.sqrt(total.count)
        report = MCReport(total.mean, std_error, total.count, self.params.seed, self.params.workers, analytic_value)
        self.log.info(f"estimate {report.estimate} +- {report.std_error}, analytic {analytic_value}")
        return report
