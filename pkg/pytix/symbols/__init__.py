__all__ = [ 'LaurentSymbol', 'CircleGrid', 'evaluate', 'derivative', 'invert_symbol', 'constant', 'monomial',
            'zero_symbol', 'Z', 'ZBAR', 'parse_coeffs', 'load_symbol', 'save_symbol', 'ZERO_TOL',
            'min_modulus', 'winding_argument_principle', 'winding_logderivative', 'winding_number' ]

from .laurent import LaurentSymbol, CircleGrid, evaluate, derivative, invert_symbol, constant, monomial, \
     zero_symbol, Z, ZBAR, parse_coeffs, load_symbol, save_symbol, ZERO_TOL
from .winding import min_modulus, winding_argument_principle, winding_logderivative, winding_number
