import numpy as np
import pytest

from pytix.config import default_config
from pytix.symbols import CircleGrid, LaurentSymbol, Z, ZBAR, constant


def random_symbol( rng, degree, spread=2 ):
    '''Symbol with winding number `degree`: a dominant monomial plus a small perturbation'''
    modes = range( -spread, spread+1 )
    small = rng.uniform( -1, 1, len( modes ) ) + 1j*rng.uniform( -1, 1, len( modes ) )
    small *= 0.5 / np.abs( small ).sum()
    coeffs = dict( zip( modes, small ) )
    coeffs[degree] = coeffs.get( degree, 0 ) + 2.0
    return LaurentSymbol( coeffs )


# symbol, winding number
BATTERY = {
    'z':              ( Z, 1 ),
    'z^2':            ( Z*Z, 2 ),
    'z^3':            ( Z*Z*Z, 3 ),
    'zbar':           ( ZBAR, -1 ),
    'zbar^2':         ( ZBAR*ZBAR, -2 ),
    'z-0.3':          ( Z - 0.3, 1 ),
    'z-0.3i':         ( Z - 0.3j, 1 ),
    'z-2':            ( Z - 2, 0 ),
    '(z-0.5)(z-3)':   ( ( Z - 0.5 )*( Z - 3 ), 1 ),
    'zbar^2+0.1':     ( ZBAR*ZBAR + 0.1, -2 ),
    '3':              ( constant( 3 ), 0 ),
}


@pytest.fixture
def cfg():
    return default_config()


@pytest.fixture(scope='session')
def grid():
    return CircleGrid( 4096 )


@pytest.fixture
def rng():
    return np.random.default_rng( 20200417 )


@pytest.fixture(params=sorted( BATTERY ))
def battery_case( request ):
    return BATTERY[ request.param ]
