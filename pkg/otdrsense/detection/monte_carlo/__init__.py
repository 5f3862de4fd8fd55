from .params import MonteCarloParams, MIN_SAMPLES
from .samplers import Sampler, CodebookSampler, HomodyneSampler
from .estimator import MonteCarloEstimator, StreamTask, StreamResult, run_stream, stream_seeds, merge
