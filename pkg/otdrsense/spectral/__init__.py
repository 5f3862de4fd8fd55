from .params import NumericsParams
from .models import Functional, SpectrumReport, SzegoResult, Extremum
from .supremum import symbol_supremum, symbol_infimum
from .eigen import toeplitz_eigenvalues, top_eigenvector_input
from .szego import szego_functional, szego_convergence
