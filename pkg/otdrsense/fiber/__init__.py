from .models import FiberSpec, AttackSpec, BackscatterResponse, GramSymbol, ResponseTable, BASELINE
from .backscatter import backscatter_coefficients, forward_loss, null_attack, expand_attack_grid, response_table
from .symbol import gram_symbol, attack_symbol, eval_symbol, modulus_squared, symbol_on_grid, symbol_at_zero
from .toeplitz import BandedLowerToeplitz, dense_matrix, toeplitz_gram, exact_gram, quadratic_form, \
    check_dense_size, DEFAULT_DENSE_LIMIT
