# ==================================================
# Module: toeplitz
# File: truncation.py
# Package: PyTIX
# Description: Rectangular finite sections of T_f
# ==================================================

import logging
from dataclasses import dataclass
import numpy as np
from scipy import linalg
from ..symbols.laurent import Z
from ..misc.errors import ConfigurationError, NumericalQualityError
from ..misc.misc import MaxResidual
from ..misc.reports import RelationReport

logger = logging.getLogger( __name__ )


def toeplitz_section( symbol, rows, cols ):
    '''
    rows x cols block of the infinite Toeplitz matrix of symbol, entry (i,j) = a_{i-j}

    Arguments
    ---------
    symbol        LaurentSymbol
    rows          number of rows
    cols          number of columns

    Returns
    -------
    A             complex (rows,cols) array
    '''
    if rows == 0 or cols == 0: return np.zeros( ( rows, cols ), dtype=complex )
    column = symbol.Coefficients( np.arange( rows ) )
    row = symbol.Coefficients( -np.arange( cols ) )
    return linalg.toeplitz( column, row )


class ToeplitzTruncation( object ):
    '''
    (N+k) x N section of T_f. The k extra rows hold everything T_f does to
    vectors supported on the first N coordinates, so kernels are exact.
    '''

    def __init__( self, symbol, N ):
        self.symbol = symbol
        self.N = int( N )
        self.matrix = toeplitz_section( symbol, self.N+symbol.bandwidth, self.N )
        self.matrix.flags.writeable = False

    @property
    def shape( self ):
        return self.matrix.shape

    def __repr__( self ):
        return 'ToeplitzTruncation(%s, N=%d)' % ( self.symbol.Label(), self.N )


def build_truncation( symbol, N ):
    '''Finite section of T_f on the first N coordinates (N >= k+1)'''
    if int( N ) != N or N < symbol.bandwidth + 1:
        raise ConfigurationError( 'truncation size %r too small for bandwidth %d (need N >= %d)' \
                                  % ( N, symbol.bandwidth, symbol.bandwidth+1 ) )
    return ToeplitzTruncation( symbol, N )


def numerical_kernel_dim( matrix, tol ):
    '''
    Number of singular values below tol and the singular value gap

    Returns
    -------
    count         kernel dimension (columns beyond the row count included)
    gap           smallest singular value above tol over largest below (inf if none below)
    '''
    if tol <= 0: raise ConfigurationError( 'kernel tolerance must be positive' )
    matrix = np.asarray( matrix )
    rows, cols = matrix.shape
    try:
        s = linalg.svdvals( matrix ) if matrix.size else np.zeros( 0 )
    except linalg.LinAlgError as e:
        raise NumericalQualityError( 'singular value decomposition failed: %s' % e )
    small, large = s[ s < tol ], s[ s >= tol ]
    count = small.size + max( 0, cols-rows )
    if small.size == 0:
        gap = np.inf
    elif large.size == 0:
        gap = 0.0
    else:
        gap = large.min() / max( small.max(), np.finfo( float ).tiny )
    return count, float( gap )


@dataclass(frozen=True)
class DefectReport:
    '''Finite rank defect of a product of Toeplitz sections'''
    name: str
    rank: int
    frobenius: float
    corner: tuple

    def ToDict( self ):
        return { 'check': self.name, 'rank': self.rank, 'frobenius': self.frobenius, 'corner': list( self.corner ) }


def _product_window( f, g, N ):
    # (T_f T_g) on the N x N window; the inner index runs past N by the bandwidth of g
    inner = N + g.bandwidth
    return toeplitz_section( f, N, inner ) @ toeplitz_section( g, inner, N )


def _defect_report( name, D, tol ):
    s = linalg.svdvals( D )
    big = np.argwhere( np.abs( D ) > tol )
    corner = tuple( int( c ) for c in big.max( axis=0 )+1 ) if big.size else ( 0, 0 )
    return DefectReport( name, int( ( s > tol ).sum() ), float( np.linalg.norm( D ) ), corner )


def semicommutator_defect( f, g, N=64, tol=1e-8 ):
    '''
    T_f T_g - T_{fg} on the N x N window. For Laurent symbols it is supported
    in the top left k_f^+ x k_g^- corner, with k_f^+ the top mode of f and
    k_g^- the bottom mode of g.
    '''
    D = _product_window( f, g, N ) - toeplitz_section( f*g, N, N )
    return _defect_report( 'semicommutator', D, tol )


def commutator_defect( f, g, N=64, tol=1e-8 ):
    '''[T_f, T_g] on the N x N window'''
    D = _product_window( f, g, N ) - _product_window( g, f, N )
    return _defect_report( 'commutator', D, tol )


def shift_relations( N, tol=1e-12 ):
    '''T*T = 1 and TT* = 1 - p_ker(T*) on the section of the unilateral shift'''
    T = build_truncation( Z, N ).matrix
    vacuum = np.zeros( ( N+1, N+1 ) )
    vacuum[0, 0] = 1
    return [ RelationReport( 'shift isometry T*T = 1', MaxResidual( T.conj().T @ T, np.eye( N ) ), tol ),
             RelationReport( 'shift range TT* = 1 - p_ker(T*)', MaxResidual( T @ T.conj().T, np.eye( N+1 )-vacuum ), tol ) ]
