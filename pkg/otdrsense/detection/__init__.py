from .models import LogProb, MCReport, HomodyneReport, CompositeHomodyneReport, DetectionExponentReport, \
    StreamProgress, LOG_HALF
from .overlap import coherent_overlap_log, helstrom_error, helstrom_error_log, povm_error_log, detection_exponents
from .gaussian import expected_error_determinant_log, log_det_identity_plus, homodyne_error_closed_form, \
    steady_state_amplitude
from .monte_carlo import MonteCarloParams, MonteCarloEstimator, CodebookSampler, HomodyneSampler
from .simulation import expected_error_mc, homodyne_mc, homodyne_composite_mc
