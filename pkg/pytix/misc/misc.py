# ============================================
# Module: misc
# File: misc.py
# Package: PyTIX
# Description: Phase unwrapping, rounding, rng
# ============================================

import numpy as np
from .errors import GridTooCoarseError, NumericalQualityError, ConfigurationError


def PhaseIncrements( values ):
    '''
    Principal phase increments between cyclically consecutive samples

    Arguments
    ---------
    values        complex samples along a closed loop (nonvanishing)

    Returns
    -------
    dphi          arg( values[j+1]/values[j] ) in (-pi,pi], the last one closing the loop
    '''
    values = np.asarray( values, dtype=complex )
    return np.angle( np.roll( values, -1 ) / values )


def PhaseWinding( values, guard=0.5*np.pi ):
    '''
    Number of turns of a closed complex loop around the origin.
    Increments must stay below the guard, otherwise a phase jump
    could be hidden between two samples.

    Arguments
    ---------
    values        complex samples along a closed loop (nonvanishing)
    guard         largest admissible phase increment

    Returns
    -------
    turns         real number of turns (integer up to rounding)
    '''
    dphi = PhaseIncrements( values )
    jump = np.abs( dphi ).max()
    if jump >= guard:
        raise GridTooCoarseError( 'phase increment %.3f rad exceeds %.3f rad on a %d point grid: refine the grid' \
                                  % ( jump, guard, dphi.size ) )
    return dphi.sum() / ( 2*np.pi )


def RoundInteger( value, tol, what='value' ):
    '''Round to the nearest integer, failing if value is not close enough'''
    k = int( np.rint( value ) )
    if abs( value - k ) > tol:
        raise NumericalQualityError( '%s %.3e is %.2e away from an integer (tolerance %.1e)' \
                                     % ( what, value, abs( value-k ), tol ) )
    return k


def MaxResidual( A, B=None ):
    '''Largest absolute entry of A-B (or of A); zero for empty arrays'''
    D = np.asarray( A ) if B is None else np.asarray( A ) - np.asarray( B )
    if D.size == 0: return 0.0
    return float( np.abs( D ).max() )


def Substream( seed, index ):
    '''Independent generator for item index of a run seeded with seed'''
    return np.random.default_rng( [ int( seed ), int( index ) ] )


def ParseFloatList( text ):
    '''Parse "a,b,c" or a range "start:stop:step" (stop included) into floats'''
    text = text.strip()
    try:
        if ':' in text:
            start, stop, step = [ float( s ) for s in text.split( ':' ) ]
            if step <= 0: raise ValueError( 'step must be positive' )
            count = int( np.floor( ( stop-start ) / step + 1e-9 ) ) + 1
            return [ float( np.round( start + k*step, 12 ) ) for k in range( max( count, 0 ) ) ]
        return [ float( s ) for s in text.split( ',' ) if s.strip() ]
    except ValueError as e:
        raise ConfigurationError( 'cannot parse number list "%s": %s' % ( text, e ) )
