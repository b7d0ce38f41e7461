# ==================================================
# Module: fock
# File: fockspace.py
# Package: PyTIX
# Description: Truncated full Fock space over C^n
#              and its creation operators
# ==================================================

import itertools
import logging
from dataclasses import dataclass
import numpy as np
from scipy import linalg
from ..symbols.laurent import Z
from ..toeplitz.truncation import build_truncation, toeplitz_section
from ..misc.errors import ConfigurationError
from ..misc.misc import MaxResidual, Substream
from ..misc.reports import RelationReport

logger = logging.getLogger( __name__ )

MAX_DIMENSION = 10**6


def fock_dimension( n, K ):
    '''1 + n + ... + n^K'''
    return K+1 if n == 1 else ( n**( K+1 ) - 1 ) // ( n-1 )


class FockSpace( object ):
    '''
    FockSpace( n, K )
    =================

    Words of length 0..K over the letters 1..n, ordered by length and then
    lexicographically. The empty word is the vacuum.
    '''

    def __init__( self, n, K ):
        self.n, self.K = int( n ), int( K )
        self.words = [ w for k in range( self.K+1 ) for w in itertools.product( range( 1, self.n+1 ), repeat=k ) ]
        self.index = { w: i for i, w in enumerate( self.words ) }
        self.levels = np.array( [ len( w ) for w in self.words ] )
        self.dimension = len( self.words )

    def Index( self, word ):
        '''Position of a word given as a tuple or as a string such as "12"'''
        if isinstance( word, str ): word = tuple( int( c ) for c in word )
        return self.index[ tuple( word ) ]

    def Basis( self, word ):
        v = np.zeros( self.dimension, dtype=complex )
        v[ self.Index( word ) ] = 1
        return v

    def LevelProjector( self, k ):
        return np.diag( ( self.levels == k ).astype( complex ) )

    def __repr__( self ):
        return 'FockSpace(n=%d, K=%d, dim=%d)' % ( self.n, self.K, self.dimension )


def build_fock( n, K, max_dimension=MAX_DIMENSION ):
    if n < 1 or K < 1: raise ConfigurationError( 'Fock space needs n >= 1 and K >= 1, got n=%r K=%r' % ( n, K ) )
    dim = fock_dimension( n, K )
    if dim > max_dimension:
        raise ConfigurationError( 'Fock dimension %d exceeds the guard %d' % ( dim, max_dimension ) )
    fock = FockSpace( n, K )
    logger.debug( 'built %r', fock )
    return fock


@dataclass(frozen=True)
class CreationOperator:
    xi: np.ndarray
    matrix: np.ndarray

    def Adjoint( self ):
        return self.matrix.conj().T

    def __call__( self, vector ):
        return self.matrix @ vector


def creation( xi, fock ):
    '''
    Shift map T_xi: w -> xi x w on words below level K; level K is sent to 0.

    Arguments
    ---------
    xi            complex n-vector (nonzero)
    fock          FockSpace
    '''
    xi = np.asarray( xi, dtype=complex )
    if xi.shape != ( fock.n, ):
        raise ConfigurationError( 'creation vector of shape %s on a fiber of dimension %d' % ( xi.shape, fock.n ) )
    if not np.any( xi ): raise ConfigurationError( 'creation vector must be nonzero' )
    M = np.zeros( ( fock.dimension, fock.dimension ), dtype=complex )
    for col, w in enumerate( fock.words ):
        if len( w ) == fock.K: continue
        for i in range( fock.n ):
            M[ fock.index[ ( i+1, ) + w ], col ] = xi[i]
    return CreationOperator( xi, M )


def annihilation( xi, fock ):
    '''T_xi*: i w -> conj(xi_i) w, vacuum -> 0'''
    return creation( xi, fock ).Adjoint()


def _generators( fock ):
    return [ creation( np.eye( fock.n )[i], fock ).matrix for i in range( fock.n ) ]


def check_toeplitz_relations( fock, tol=1e-12 ):
    '''
    Truncated Cuntz-Toeplitz relations for V_i = T_{e_i}:
    V_i* V_j = delta_ij (1 - P_K), sum V_i V_i* = 1 - P_vac with a positive
    semidefinite defect, and for n = 1 agreement with the section of T_z.

    Returns
    -------
    reports       list of RelationReport
    '''
    V = _generators( fock )
    one = np.eye( fock.dimension )
    top = fock.LevelProjector( fock.K )
    vacuum = fock.LevelProjector( 0 )

    isometry = max( MaxResidual( V[i].conj().T @ V[j], ( i == j )*( one-top ) )
                    for i in range( fock.n ) for j in range( fock.n ) )
    ranges = sum( v @ v.conj().T for v in V )
    defect = one - ranges
    reports = [ RelationReport( 'V_i*V_j = delta_ij(1-P_K)', isometry, tol ),
                RelationReport( 'sum V_iV_i* = 1-P_vac', MaxResidual( ranges, one-vacuum ), tol ),
                RelationReport( '1 - sum V_iV_i* >= 0', max( 0.0, -float( linalg.eigvalsh( defect ).min() ) ), tol ) ]

    if fock.n == 1:
        # word of length k <-> coordinate k; below level K V_1 is the shift section
        K = fock.K
        T = build_truncation( Z, K ).matrix if K >= Z.bandwidth+1 else toeplitz_section( Z, K+1, K )
        reports.append( RelationReport( 'n=1 creation = section of T_z', MaxResidual( V[0][:, :K], T ), tol ) )
    for r in reports:
        logger.debug( '%s: residual %.2e (%s)', r.check, r.max_residual, 'pass' if r.passed else 'FAIL' )
    return reports


def parseval_frame( n, m, seed ):
    '''m vectors eta_j in C^n with sum eta_j eta_j* = 1 (rows of a random isometry)'''
    if m < n: raise ConfigurationError( 'a Parseval frame of C^%d needs at least %d vectors' % ( n, n ) )
    rng = Substream( seed, 0 )
    A = rng.standard_normal( ( m, n ) ) + 1j*rng.standard_normal( ( m, n ) )
    Q, _ = np.linalg.qr( A )
    return Q.conj()


def check_frame_relations( fock, frame, tol=1e-12 ):
    '''
    Generator relations for a Parseval frame: T*_{eta_i} T_{eta_j} =
    <eta_i, eta_j>(1 - P_K) and sum_j T_{eta_j} T*_{eta_j} = 1 - P_vac
    '''
    frame = np.asarray( frame, dtype=complex )
    ops = [ creation( eta, fock ).matrix for eta in frame ]
    one = np.eye( fock.dimension )
    below = one - fock.LevelProjector( fock.K )
    gram = frame.conj() @ frame.T
    relation = max( MaxResidual( ops[i].conj().T @ ops[j], gram[i, j]*below )
                    for i in range( len( ops ) ) for j in range( len( ops ) ) )
    ranges = sum( s @ s.conj().T for s in ops )
    return [ RelationReport( 'S_i*S_j = <eta_i,eta_j>(1-P_K)', relation, tol ),
             RelationReport( 'sum S_jS_j* = 1-P_vac', MaxResidual( ranges, one-fock.LevelProjector( 0 ) ), tol ) ]
