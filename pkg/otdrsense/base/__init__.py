from .base_object import BaseObject, get_logger, force_level, debug_level_for
from .errors import ValidationError, ConfigError, DenseLimitError, NumericalCheckError
