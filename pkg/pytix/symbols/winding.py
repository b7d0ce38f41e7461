# =============================================
# Module: symbols
# File: winding.py
# Package: PyTIX
# Description: Winding numbers of circle loops
# =============================================

import logging
import numpy as np
from .laurent import derivative, ZERO_TOL
from ..misc.misc import PhaseWinding, RoundInteger
from ..misc.errors import NonInvertibleSymbolError, NumericalQualityError, TheoremViolationError

logger = logging.getLogger( __name__ )


def min_modulus( symbol, grid ):
    '''min |f(t_j)| over the grid'''
    return float( np.abs( symbol( grid.points ) ).min() )


def _invertible_values( symbol, grid, zero_tol ):
    # the phase step guard, not the sampling floor, decides if the grid is fine enough
    values = symbol( grid.points )
    fmin = np.abs( values ).min()
    if fmin <= zero_tol:
        raise NonInvertibleSymbolError( 'symbol %s is not invertible: min |f| = %.3e <= %.1e' \
                                        % ( symbol.Label(), fmin, zero_tol ) )
    return values


def winding_argument_principle( symbol, grid, zero_tol=ZERO_TOL ):
    '''
    Winding number from the accumulated principal phase increments of f
    along the grid.

    Arguments
    ---------
    symbol        LaurentSymbol
    grid          CircleGrid, fine enough that phase steps stay below pi/2
    zero_tol      invertibility threshold

    Returns
    -------
    w             integer winding number
    '''
    values = _invertible_values( symbol, grid, zero_tol )
    turns = PhaseWinding( values )
    return RoundInteger( turns, 1e-9, 'accumulated phase' )


def winding_logderivative( symbol, grid, zero_tol=ZERO_TOL, tol=1e-6 ):
    '''
    Winding number from the trapezoid rule for (1/2 pi i) int f'/f dz,
    which on the grid is the mean of z f'(z)/f(z)
    '''
    values = _invertible_values( symbol, grid, zero_tol )
    dvalues = derivative( symbol )( grid.points )
    z = np.exp( 1j*grid.points )
    w = np.mean( z*dvalues/values )
    if abs( w.imag ) > tol:
        raise NumericalQualityError( 'log-derivative integral has imaginary part %.2e' % w.imag )
    return RoundInteger( w.real, tol, 'log-derivative integral' )


def winding_number( symbol, grid, zero_tol=ZERO_TOL ):
    '''Both winding estimates; they must coincide'''
    w_ap = winding_argument_principle( symbol, grid, zero_tol )
    w_logd = winding_logderivative( symbol, grid, zero_tol )
    logger.debug( 'winding of %s on %d points: %d (phase) %d (log-derivative)', symbol.Label(), grid.size, w_ap, w_logd )
    if w_ap != w_logd:
        raise TheoremViolationError( 'winding estimates disagree: %d vs %d' % ( w_ap, w_logd ),
                                     { 'winding_ap': w_ap, 'winding_logd': w_logd } )
    return w_ap, w_logd
