__version__ = "0.1.0"

from . import base
from . import fiber
from . import spectral
from . import detection
from . import rates
