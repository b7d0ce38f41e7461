# ====================================================
# Module: fock
# File: pimsner.py
# Package: PyTIX
# Description: Automorphism correspondences over the
#              functions on p points, interior tensor
#              powers and the covariant shift W = u x T
# ====================================================

import logging
import numpy as np
from ..symbols.laurent import Z
from ..toeplitz.truncation import toeplitz_section
from ..misc.errors import ConfigurationError
from ..misc.misc import MaxResidual, Substream
from ..misc.reports import RelationReport

logger = logging.getLogger( __name__ )


class AutomorphismCorrespondence( object ):
    '''
    AutomorphismCorrespondence( p, permutation )
    ============================================

    B = C^p with pointwise operations, the automorphism alpha(b)[s(i)] = b[i]
    induced by the permutation s, and X = B with right action x.b = xb,
    left action a.x = alpha(a)x and inner product <x,y> = x*y.

    Arguments
    ---------
    p             number of points
    permutation   images s(0),...,s(p-1) (0-based)
    '''

    def __init__( self, p, permutation ):
        perm = tuple( int( s ) for s in permutation )
        if p < 1 or len( perm ) != p or sorted( perm ) != list( range( p ) ):
            raise ConfigurationError( 'permutation %s is not a bijection of %d points' % ( list( permutation ), p ) )
        self.p = int( p )
        self.permutation = np.array( perm, dtype=int )

    @classmethod
    def FromString( cls, text, p=None ):
        '''1-based images, e.g. "2,3,1" for the cycle 1->2->3->1'''
        try:
            images = [ int( s ) - 1 for s in text.split( ',' ) if s.strip() ]
        except ValueError:
            raise ConfigurationError( 'cannot parse permutation "%s"' % text )
        if p is None: p = len( images )
        return cls( p, images )

    @classmethod
    def Cycle( cls, p ):
        return cls( p, [ ( i+1 ) % p for i in range( p ) ] )

    def Alpha( self, b, power=1 ):
        b = np.asarray( b )
        for _ in range( power ):
            out = np.empty_like( b )
            out[ self.permutation ] = b
            b = out
        return b

    def UnitaryMatrix( self ):
        '''u e_i = e_{s(i)}, so that u diag(b) u* = diag(alpha(b))'''
        u = np.zeros( ( self.p, self.p ) )
        u[ self.permutation, np.arange( self.p ) ] = 1
        return u

    def Inner( self, x, y ):
        return np.conj( x )*y

    def __repr__( self ):
        return 'AutomorphismCorrespondence(p=%d, %s)' % ( self.p, ( self.permutation+1 ).tolist() )


def module_power_action( corr, k, a, xs ):
    '''a.(x_1 x ... x x_k) identified in B: alpha^k(a) alpha^{k-1}(x_1) ... x_k'''
    if k < 1 or len( xs ) != k: raise ConfigurationError( 'need k >= 1 factors, got k=%d and %d factors' % ( k, len( xs ) ) )
    return corr.Alpha( a, k ) * identify( corr, xs )


def identify( corr, xs ):
    '''X^(k) -> B, x_1 x ... x x_k -> alpha^{k-1}(x_1) ... alpha(x_{k-1}) x_k'''
    k = len( xs )
    out = np.ones( corr.p, dtype=complex )
    for j, x in enumerate( xs ):
        out = out * corr.Alpha( x, k-1-j )
    return out


def tensor_inner( corr, xs, ys ):
    '''<x_1 x ... , y_1 x ...> = <x_2 x ..., phi(<x_1,y_1>) y_2 x ...>, recursively'''
    if len( xs ) == 1: return corr.Inner( xs[0], ys[0] )
    b = corr.Inner( xs[0], ys[0] )
    return tensor_inner( corr, xs[1:], [ corr.Alpha( b )*ys[1] ] + list( ys[2:] ) )


def _random_elements( rng, p, k ):
    return [ rng.standard_normal( p ) + 1j*rng.standard_normal( p ) for _ in range( k ) ]


def check_tensor_iso( corr, k, trials=100, seed=20200417, tol=1e-10 ):
    '''
    Compare the recursive inner product on X^(k) with the B-valued inner
    product of the identified elements, check the balanced relation
    xb x y = x x phi(b)y and the left action on random simple tensors.

    Returns
    -------
    reports       inner product, balanced relation and left action RelationReports
    '''
    if k < 1 or trials < 1: raise ConfigurationError( 'need k >= 1 and trials >= 1' )
    inner = balanced = action = 0.0
    for t in range( trials ):
        rng = Substream( seed, t )
        xs, ys = _random_elements( rng, corr.p, k ), _random_elements( rng, corr.p, k )
        a, b = _random_elements( rng, corr.p, 2 )
        lhs = tensor_inner( corr, xs, ys )
        rhs = corr.Inner( identify( corr, xs ), identify( corr, ys ) )
        inner = max( inner, MaxResidual( lhs, rhs ) )
        if k > 1:
            j = int( rng.integers( k-1 ) )
            left, right = list( xs ), list( xs )
            left[j] = xs[j]*b
            right[j+1] = corr.Alpha( b )*xs[j+1]
            balanced = max( balanced, MaxResidual( identify( corr, left ), identify( corr, right ) ) )
        acted = [ corr.Alpha( a )*xs[0] ] + list( xs[1:] )
        action = max( action, MaxResidual( identify( corr, acted ), module_power_action( corr, k, a, xs ) ) )
    return [ RelationReport( 'tensor inner product k=%d' % k, inner, tol ),
             RelationReport( 'balanced relation k=%d' % k, balanced, tol ),
             RelationReport( 'left action k=%d' % k, action, tol ) ]


def pv_generator_check( corr, K, tol=1e-12 ):
    '''
    W = u x T on C^p x l^2 truncated at K, T the (K+1) x K shift section:
    W*W = 1, WW* = 1 - 1xP_0 and the covariance W(bx1)W* = (alpha(b)x1)WW*,
    also for W^2, over the indicator functions b.
    '''
    if K < 2: raise ConfigurationError( 'truncation K must be at least 2, got %d' % K )
    p = corr.p
    u = corr.UnitaryMatrix()
    T1 = toeplitz_section( Z, K+1, K )
    T2 = toeplitz_section( Z, K+2, K+1 )
    W = np.kron( u, T1 )
    W2 = np.kron( u, T2 ) @ W
    vacuum = np.zeros( K+1 )
    vacuum[0] = 1

    covariance = covariance2 = unitary = 0.0
    for i in range( p ):
        b = np.eye( p )[i]
        unitary = max( unitary, MaxResidual( u @ np.diag( b ) @ u.T, np.diag( corr.Alpha( b ) ) ) )
        lhs = W @ np.kron( np.diag( b ), np.eye( K ) ) @ W.conj().T
        rhs = np.kron( np.diag( corr.Alpha( b ) ), np.eye( K+1 ) ) @ W @ W.conj().T
        covariance = max( covariance, MaxResidual( lhs, rhs ) )
        lhs = W2 @ np.kron( np.diag( b ), np.eye( K ) ) @ W2.conj().T
        rhs = np.kron( np.diag( corr.Alpha( b, 2 ) ), np.eye( K+2 ) ) @ W2 @ W2.conj().T
        covariance2 = max( covariance2, MaxResidual( lhs, rhs ) )

    reports = [ RelationReport( 'W*W = 1', MaxResidual( W.conj().T @ W, np.eye( p*K ) ), tol ),
                RelationReport( 'WW* = 1 - 1xP_0', MaxResidual( W @ W.conj().T, np.eye( p*( K+1 ) ) - np.kron( np.eye( p ), np.diag( vacuum ) ) ), tol ),
                RelationReport( 'u b u* = alpha(b)', unitary, tol ),
                RelationReport( 'W(bx1)W* = (alpha(b)x1)WW*', covariance, tol ),
                RelationReport( 'W^2(bx1)W^2* = (alpha^2(b)x1)W^2W^2*', covariance2, tol ) ]
    logger.debug( 'covariant shift relations for %r at K = %d: %s', corr, K,
                  ', '.join( '%.1e' % r.max_residual for r in reports ) )
    return reports
