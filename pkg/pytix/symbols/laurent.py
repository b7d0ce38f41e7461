# ==============================================
# Module: symbols
# File: laurent.py
# Package: PyTIX
# Description: Laurent polynomial circle symbols
# ==============================================

import json
import logging
import re
import numpy as np
from scipy import fft as sfft
from ..misc.errors import ConfigurationError, NonInvertibleSymbolError

logger = logging.getLogger( __name__ )

ZERO_TOL = 1e-8


class LaurentSymbol( object ):
    '''
    LaurentSymbol( coeffs, allow_zero=False )
    =========================================

    Finitely supported function on the unit circle

        f(e^{it}) = sum_m a_m e^{imt}

    Arguments
    ---------
    coeffs        mapping mode -> complex coefficient. Exact zeros are dropped
    allow_zero    accept an empty support (only the designated zero symbol)
    '''

    def __init__( self, coeffs, allow_zero=False ):
        clean = {}
        for mode, value in dict( coeffs ).items():
            if isinstance( mode, str ): mode = mode.strip()
            try:
                m = int( mode )
                ok = float( mode ) == m
            except ( TypeError, ValueError ):
                ok = False
            if not ok: raise ConfigurationError( 'mode %r is not an integer' % ( mode, ) )
            clean[m] = clean.get( m, 0j ) + complex( value )
        clean = { m: a for m, a in clean.items() if a != 0 }
        if not clean and not allow_zero:
            raise ConfigurationError( 'a symbol needs at least one nonzero coefficient' )
        self.modes = np.array( sorted( clean ), dtype=int )
        self.values = np.array( [ clean[m] for m in self.modes ], dtype=complex )
        self.modes.flags.writeable = False
        self.values.flags.writeable = False
        self.bandwidth = int( np.abs( self.modes ).max() ) if self.modes.size else 0

    # Access
    # ------

    @property
    def IsZero( self ):
        return self.modes.size == 0

    def Coefficient( self, m ):
        idx = np.searchsorted( self.modes, m )
        if idx < self.modes.size and self.modes[idx] == m: return complex( self.values[idx] )
        return 0j

    def Coefficients( self, modes ):
        '''Coefficients for an array of modes (zero outside the support)'''
        modes = np.asarray( modes, dtype=int )
        out = np.zeros( modes.shape, dtype=complex )
        for m, a in zip( self.modes, self.values ): out[ modes == m ] = a
        return out

    def Dense( self, k=None ):
        '''Coefficient vector (a_{-k},...,a_k)'''
        if k is None: k = self.bandwidth
        return self.Coefficients( np.arange( -k, k+1 ) )

    @classmethod
    def FromDense( cls, dense, allow_zero=False ):
        dense = np.asarray( dense, dtype=complex )
        k = ( dense.size-1 ) // 2
        return cls( dict( zip( range( -k, k+1 ), dense ) ), allow_zero=allow_zero )

    def __call__( self, theta ):
        '''Values at the angles theta (no grid requirement)'''
        theta = np.atleast_1d( np.asarray( theta, dtype=float ) )
        if self.IsZero: return np.zeros( theta.shape, dtype=complex )
        return np.exp( 1j*np.outer( theta, self.modes ) ) @ self.values

    # Algebra
    # -------

    def Conjugate( self ):
        '''The pointwise complex conjugate f* (modes reversed and conjugated)'''
        return LaurentSymbol( dict( zip( -self.modes, self.values.conj() ) ), allow_zero=True )

    def _combine( self, other, sign ):
        coeffs = dict( zip( self.modes.tolist(), self.values ) )
        for m, a in zip( other.modes.tolist(), other.values ): coeffs[m] = coeffs.get( m, 0j ) + sign*a
        return LaurentSymbol( coeffs, allow_zero=True )

    def __add__( self, other ):
        if np.isscalar( other ): other = constant( other, allow_zero=True )
        return self._combine( other, 1 )

    __radd__ = __add__

    def __sub__( self, other ):
        if np.isscalar( other ): other = constant( other, allow_zero=True )
        return self._combine( other, -1 )

    def __rsub__( self, other ):
        return ( -self ) + other

    def __neg__( self ):
        return LaurentSymbol( dict( zip( self.modes, -self.values ) ), allow_zero=True )

    def __mul__( self, other ):
        if np.isscalar( other ):
            return LaurentSymbol( dict( zip( self.modes, complex( other )*self.values ) ), allow_zero=True )
        k = self.bandwidth + other.bandwidth
        prod = np.convolve( self.Dense(), other.Dense() )
        return LaurentSymbol( dict( zip( range( -k, k+1 ), prod ) ), allow_zero=True )

    __rmul__ = __mul__

    def __eq__( self, other ):
        if not isinstance( other, LaurentSymbol ): return NotImplemented
        return np.array_equal( self.modes, other.modes ) and np.array_equal( self.values, other.values )

    def __hash__( self ):
        return hash( ( tuple( self.modes ), tuple( self.values ) ) )

    # Serialization
    # -------------

    def ToDict( self ):
        '''{"coeffs": [{"mode": m, "re": .., "im": ..}, ...]}'''
        return { 'coeffs': [ { 'mode': int( m ), 're': float( a.real ), 'im': float( a.imag ) }
                             for m, a in zip( self.modes, self.values ) ] }

    @classmethod
    def FromDict( cls, data ):
        try:
            parsed = {}
            for entry in data['coeffs']:
                m = entry['mode']
                if isinstance( m, bool ) or not isinstance( m, int ):
                    raise ValueError( 'mode %r is not an integer' % ( m, ) )
                parsed[m] = parsed.get( m, 0j ) + complex( float( entry.get( 're', 0.0 ) ), float( entry.get( 'im', 0.0 ) ) )
        except ( KeyError, TypeError, AttributeError, ValueError ) as e:
            raise ConfigurationError( 'malformed symbol description: %s' % e )
        return cls( parsed )

    def Label( self ):
        '''Short human readable form, e.g. "1*z^1 + 0.5*z^-1"'''
        terms = []
        for m, a in zip( self.modes, self.values ):
            c = '%g' % a.real if a.imag == 0 else '(%g%+gj)' % ( a.real, a.imag )
            terms.append( '%s*z^%d' % ( c, m ) )
        return ' + '.join( terms ) if terms else '0'

    def __repr__( self ):
        return 'LaurentSymbol(%s)' % self.Label()


def constant( c, allow_zero=False ):
    return LaurentSymbol( { 0: c }, allow_zero=allow_zero )


def monomial( m, c=1.0 ):
    return LaurentSymbol( { m: c } )


def zero_symbol():
    '''The designated zero symbol'''
    return LaurentSymbol( {}, allow_zero=True )


Z = monomial( 1 )
ZBAR = monomial( -1 )


_TERM = re.compile( r'^\s*(-?\d+)\s*:\s*([^\s,]+)\s*$' )

def parse_coeffs( text ):
    '''
    Parse an inline symbol, e.g. "1:1" for z or "0:1,1:-0.5" for 1-0.5z.
    Coefficients are python complex literals ("0.5", "1j", "0.5-2j").
    '''
    coeffs = {}
    for item in text.split( ',' ):
        if not item.strip(): continue
        match = _TERM.match( item )
        if match is None: raise ConfigurationError( 'cannot parse symbol term "%s" (expected mode:coefficient)' % item )
        try:
            value = complex( match.group( 2 ) )
        except ValueError:
            raise ConfigurationError( 'cannot parse coefficient "%s"' % match.group( 2 ) )
        coeffs[ int( match.group( 1 ) ) ] = coeffs.get( int( match.group( 1 ) ), 0j ) + value
    return LaurentSymbol( coeffs )


def load_symbol( fname ):
    '''Read a symbol from a JSON file'''
    try:
        with open( fname ) as f: data = json.load( f )
    except ( IOError, ValueError ) as e:
        raise ConfigurationError( 'cannot read symbol file %s: %s' % ( fname, e ) )
    symbol = LaurentSymbol.FromDict( data )
    logger.debug( 'loaded symbol %s from %s', symbol.Label(), fname )
    return symbol


def save_symbol( fname, symbol ):
    with open( fname, 'w' ) as f: json.dump( symbol.ToDict(), f, indent=2 )
    return None


class CircleGrid( object ):
    '''
    Equispaced grid t_j = 2 pi j / N on the unit circle
    '''

    def __init__( self, size ):
        if int( size ) != size or size < 1:
            raise ConfigurationError( 'grid size must be a positive integer, got %r' % ( size, ) )
        self.size = int( size )
        self.points = 2*np.pi*np.arange( self.size ) / self.size
        self.points.flags.writeable = False

    def Floor( self, symbol ):
        '''Smallest admissible grid size for symbol'''
        return 4*symbol.bandwidth + 4

    def CheckFloor( self, symbol ):
        if self.size < self.Floor( symbol ):
            raise ConfigurationError( 'grid of %d points is below the floor 4k+4=%d for bandwidth %d' \
                                      % ( self.size, self.Floor( symbol ), symbol.bandwidth ) )

    def Refine( self, factor=2 ):
        return CircleGrid( self.size*factor )

    def __repr__( self ):
        return 'CircleGrid(%d)' % self.size


def evaluate( symbol, grid ):
    '''
    Sample a symbol on a circle grid

    Arguments
    ---------
    symbol        LaurentSymbol
    grid          CircleGrid with at least 4k+4 points

    Returns
    -------
    values        complex array of f(t_j)
    '''
    grid.CheckFloor( symbol )
    return symbol( grid.points )


def derivative( symbol ):
    '''d/dz of f as a function of z on the circle: a_m z^m -> m a_m z^{m-1}'''
    return LaurentSymbol( dict( zip( symbol.modes-1, symbol.modes*symbol.values ) ), allow_zero=True )


def invert_symbol( symbol, out_bandwidth, grid, zero_tol=ZERO_TOL ):
    '''
    Truncated Laurent expansion of 1/f from an FFT on the grid

    Arguments
    ---------
    symbol          invertible LaurentSymbol
    out_bandwidth   modes kept in the result (|m| <= out_bandwidth)
    grid            CircleGrid with at least 4*out_bandwidth points
    zero_tol        invertibility threshold on min |f|

    Returns
    -------
    g               LaurentSymbol approximating 1/f
    residual        max |f g - 1| on the grid
    '''
    if out_bandwidth < 0: raise ConfigurationError( 'output bandwidth must be nonnegative' )
    if grid.size < max( 4*out_bandwidth, 1 ):
        raise ConfigurationError( 'grid of %d points too coarse for %d inverse modes' % ( grid.size, out_bandwidth ) )
    values = evaluate( symbol, grid )
    fmin = np.abs( values ).min()
    if fmin <= zero_tol:
        raise NonInvertibleSymbolError( 'min |f| = %.3e on the grid is below %.1e' % ( fmin, zero_tol ) )
    c = sfft.fft( 1.0/values ) / grid.size
    modes = np.arange( -out_bandwidth, out_bandwidth+1 )
    g = c[ modes % grid.size ]
    g[ np.abs( g ) < 1e-14*np.abs( g ).max() ] = 0
    inverse = LaurentSymbol( dict( zip( modes, g ) ) )
    residual = float( np.abs( values*inverse( grid.points ) - 1 ).max() )
    logger.debug( 'inverse of %s with %d modes: residual %.2e', symbol.Label(), out_bandwidth, residual )
    return inverse, residual
