# =============================================
# Module: ssh
# File: edge.py
# Package: PyTIX
# Description: Dirichlet edge Hamiltonian and the
#              chiral signature of midgap states
# =============================================

import logging
from collections import namedtuple
import numpy as np
from .bulk import SIGMA_PLUS, SIGMA_MINUS, SIGMA2, chiral_operator, diagonalize, spectral_gap
from ..symbols.laurent import Z
from ..toeplitz.truncation import toeplitz_section
from ..misc.errors import ConfigurationError, ResolutionError

logger = logging.getLogger( __name__ )

DELTA_MARGIN = 1e-3
BOUNDARY_TOL = 1e-6

EdgeTrace = namedtuple( 'EdgeTrace', [ 'value', 'delta', 'midgap' ] )


def edge_hamiltonian( params ):
    '''
    H = s+ x 1_n x T + s- x 1_n x T* + m s2 x 1_n x 1 with T the L x L
    nilpotent shift (the unilateral shift cut at the last cell)
    '''
    L, n = params.L, params.n
    T = toeplitz_section( Z, L, L )
    return np.kron( SIGMA_PLUS, np.kron( np.eye( n ), T ) ) \
         + np.kron( SIGMA_MINUS, np.kron( np.eye( n ), T.conj().T ) ) \
         + params.m*np.kron( SIGMA2, np.eye( n*L ) )


def edge_spectrum( params ):
    return diagonalize( edge_hamiltonian( params ), source='edge' )


def _half_space( params ):
    # cells next to the boundary whose signature is counted: the left end, or
    # the right end when momenta are Fourier transformed with the opposite sign
    cells = np.arange( params.L )
    half = cells < params.L // 2 if params.fourier_sign == 1 else cells >= params.L - params.L // 2
    return np.tile( half, 2*params.n ).astype( float )


def edge_trace( params, gap=None ):
    '''
    tr( J P_delta chi ) with P_delta the spectral projection on |E| <= delta
    and chi the half chain at the counted boundary

    Returns
    -------
    EdgeTrace     (value before rounding, delta used, number of midgap states)
    '''
    if params.L < 4: raise ConfigurationError( 'edge chain needs L >= 4, got %d' % params.L )
    if gap is None: gap = spectral_gap( params )
    delta = params.Delta( gap )
    if not 0 < delta < gap - DELTA_MARGIN:
        raise ConfigurationError( 'delta = %g is not inside the bulk gap %g (margin %.0e)' % ( delta, gap, DELTA_MARGIN ) )
    spec = edge_spectrum( params )
    energy = np.abs( spec.eigenvalues )
    if np.any( np.abs( energy - delta ) < BOUNDARY_TOL ):
        raise ResolutionError( 'an edge eigenvalue sits on the window boundary delta = %g: perturb delta' % delta )
    V = spec.eigenvectors[:, energy <= delta]
    weights = np.diag( chiral_operator( params.n, params.L ) ).real * _half_space( params )
    value = float( ( weights[:, None]*np.abs( V )**2 ).sum() )
    return EdgeTrace( value, float( delta ), int( V.shape[1] ) )


def edge_invariant( params, gap=None ):
    '''Signed count N+ - N- of midgap states at the boundary'''
    trace = edge_trace( params, gap )
    k = int( np.rint( trace.value ) )
    if abs( trace.value - k ) > 1e-8:
        raise ResolutionError( 'edge signature %.3e is not an integer at L = %d: increase L' % ( trace.value, params.L ) )
    logger.debug( 'edge invariant at m = %g, L = %d, delta = %g: %d (%d midgap states)',
                  params.m, params.L, trace.delta, k, trace.midgap )
    return k
