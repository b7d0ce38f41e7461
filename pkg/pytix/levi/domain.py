# =============================================
# Module: levi
# File: domain.py
# Package: PyTIX
# Description: Polynomial defining functions
#              rho(z, zbar) of domains in C^n
# =============================================

import json
import logging
import numpy as np
from ..misc.errors import ConfigurationError

logger = logging.getLogger( __name__ )


class DomainSpec( object ):
    '''
    DomainSpec( terms )
    ===================

    Omega = { rho < 0 } with rho = sum_t c_t z^{a_t} zbar^{b_t}.
    rho must be real: every term (a, b, c) has its mirror (b, a, conj(c)).

    Arguments
    ---------
    terms         iterable of (hol_multi_index, antihol_multi_index, coefficient)
    '''

    def __init__( self, terms ):
        merged = {}
        n = None
        for hol, antihol, c in terms:
            hol, antihol = tuple( int( a ) for a in hol ), tuple( int( b ) for b in antihol )
            if n is None: n = len( hol )
            if len( hol ) != n or len( antihol ) != n:
                raise ConfigurationError( 'multi-indices of different lengths in the defining function' )
            if min( hol+antihol ) < 0: raise ConfigurationError( 'negative exponent in %s %s' % ( hol, antihol ) )
            merged[ ( hol, antihol ) ] = merged.get( ( hol, antihol ), 0j ) + complex( c )
        merged = { key: c for key, c in merged.items() if c != 0 }
        if not merged: raise ConfigurationError( 'empty defining function' )

        scale = max( abs( c ) for c in merged.values() )
        for ( hol, antihol ), c in merged.items():
            mirror = merged.get( ( antihol, hol ), 0j )
            if abs( mirror - np.conj( c ) ) > 1e-12*scale:
                raise ConfigurationError( 'defining function is not real: term %s %s has coefficient %s but its mirror has %s' \
                                          % ( hol, antihol, c, mirror ) )
        if all( sum( hol+antihol ) == 0 for hol, antihol in merged ):
            raise ConfigurationError( 'defining function is constant' )

        keys = sorted( merged )
        self.n = n
        self.hol = np.array( [ k[0] for k in keys ], dtype=int )
        self.antihol = np.array( [ k[1] for k in keys ], dtype=int )
        self.coeffs = np.array( [ merged[k] for k in keys ], dtype=complex )

    def Terms( self, z, hol=None, antihol=None, coeffs=None ):
        '''Values of the individual monomials c z^a zbar^b at z'''
        hol = self.hol if hol is None else hol
        antihol = self.antihol if antihol is None else antihol
        coeffs = self.coeffs if coeffs is None else coeffs
        z = np.asarray( z, dtype=complex )
        return coeffs * np.prod( z**hol * np.conj( z )**antihol, axis=1 )

    def __call__( self, z ):
        '''rho(z) (real)'''
        return float( self.Terms( z ).sum().real )

    def ToList( self ):
        return [ { 'hol_multi_index': h.tolist(), 'antihol_multi_index': a.tolist(),
                   're': float( c.real ), 'im': float( c.imag ) }
                 for h, a, c in zip( self.hol, self.antihol, self.coeffs ) ]

    @classmethod
    def FromList( cls, data ):
        try:
            terms = [ ( t['hol_multi_index'], t['antihol_multi_index'],
                        complex( float( t.get( 're', 0.0 ) ), float( t.get( 'im', 0.0 ) ) ) ) for t in data ]
        except ( KeyError, TypeError, AttributeError, ValueError ) as e:
            raise ConfigurationError( 'malformed domain description: %s' % e )
        return cls( terms )

    def __repr__( self ):
        return 'DomainSpec(n=%d, %d terms)' % ( self.n, self.coeffs.size )


def defining_function( domain, z ):
    return domain( z )


def _unit( n, i ):
    e = [ 0 ]*n
    e[i] = 1
    return tuple( e )


def unit_ball( n=2 ):
    '''|z_1|^2 + ... + |z_n|^2 - 1'''
    terms = [ ( _unit( n, i ), _unit( n, i ), 1.0 ) for i in range( n ) ]
    return DomainSpec( terms + [ ( ( 0, )*n, ( 0, )*n, -1.0 ) ] )


def egg_domain( p=2 ):
    '''|z_1|^2 + |z_2|^{2p} - 1'''
    return DomainSpec( [ ( ( 1, 0 ), ( 1, 0 ), 1.0 ), ( ( 0, p ), ( 0, p ), 1.0 ), ( ( 0, 0 ), ( 0, 0 ), -1.0 ) ] )


def hyperboloid():
    '''|z_1|^2 - |z_2|^2 - 1'''
    return DomainSpec( [ ( ( 1, 0 ), ( 1, 0 ), 1.0 ), ( ( 0, 1 ), ( 0, 1 ), -1.0 ), ( ( 0, 0 ), ( 0, 0 ), -1.0 ) ] )


PRESETS = { 'ball': unit_ball, 'egg': egg_domain, 'hyperboloid': hyperboloid }


def load_domain( fname ):
    try:
        with open( fname ) as f: data = json.load( f )
    except ( IOError, ValueError ) as e:
        raise ConfigurationError( 'cannot read domain file %s: %s' % ( fname, e ) )
    domain = DomainSpec.FromList( data )
    logger.debug( 'loaded %r from %s', domain, fname )
    return domain


def save_domain( fname, domain ):
    with open( fname, 'w' ) as f: json.dump( domain.ToList(), f, indent=2 )
    return None
