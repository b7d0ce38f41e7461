# ==================================================
# Module: toeplitz
# File: index.py
# Package: PyTIX
# Description: Fredholm index of Toeplitz operators
# ==================================================

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional
import numpy as np
from .truncation import build_truncation, numerical_kernel_dim, toeplitz_section
from ..symbols.laurent import CircleGrid, invert_symbol, ZERO_TOL
from ..symbols.winding import winding_argument_principle, winding_logderivative, min_modulus
from ..misc.errors import ConfigurationError, NonInvertibleSymbolError, NumericalQualityError, \
     ResolutionError, StabilityError, TheoremViolationError
from ..misc.misc import RoundInteger

logger = logging.getLogger( __name__ )


@dataclass(frozen=True)
class IndexReport:
    symbol: str
    index_svd: int
    kernel_dim: int
    cokernel_dim: int
    N: int
    tol: float
    sv_gap: float
    index_fedosov: Optional[int] = None
    winding_ap: Optional[int] = None
    winding_logd: Optional[int] = None
    fedosov_window: Optional[int] = None

    def ToDict( self ):
        return { 'index_svd': self.index_svd, 'index_fedosov': self.index_fedosov,
                 'winding_ap': self.winding_ap, 'winding_logd': self.winding_logd,
                 'kernel_dim': self.kernel_dim, 'cokernel_dim': self.cokernel_dim,
                 'N': self.N, 'tol': self.tol, 'sv_gap': self.sv_gap,
                 'symbol': self.symbol, 'fedosov_window': self.fedosov_window }


def _check_invertible( symbol, grid, zero_tol ):
    fmin = min_modulus( symbol, grid )
    if fmin <= zero_tol:
        raise NonInvertibleSymbolError( 'symbol %s is not invertible: min |f| = %.3e <= %.1e' \
                                        % ( symbol.Label(), fmin, zero_tol ) )


def _kernel_pair( symbol, N, tol ):
    ker, gap_ker = numerical_kernel_dim( build_truncation( symbol, N ).matrix, tol )
    coker, gap_coker = numerical_kernel_dim( build_truncation( symbol.Conjugate(), N ).matrix, tol )
    return ker, coker, min( gap_ker, gap_coker )


def fredholm_index_svd( symbol, N=128, tol=1e-8, gap_ratio=1e3, grid=None, zero_tol=ZERO_TOL ):
    '''
    Index from numerical kernels of the sections of T_f and of T_{f*}

    Arguments
    ---------
    symbol        invertible LaurentSymbol
    N             truncation size (N >= 2k+2); the result is recomputed at 2N
    tol           singular value kernel tolerance
    gap_ratio     minimum accepted singular value gap

    Returns
    -------
    report        IndexReport with the SVD fields filled in
    '''
    k = symbol.bandwidth
    if N < 2*k + 2:
        raise ConfigurationError( 'truncation size %d below 2k+2 = %d' % ( N, 2*k+2 ) )
    if grid is None: grid = CircleGrid( max( 4096, 4*k+4 ) )
    _check_invertible( symbol, grid, zero_tol )

    ker, coker, gap = _kernel_pair( symbol, N, tol )
    if gap < gap_ratio:
        raise ResolutionError( 'singular value gap %.2e below %.0e at N = %d: use a larger N' % ( gap, gap_ratio, N ) )
    ker2, coker2, gap2 = _kernel_pair( symbol, 2*N, tol )
    if ( ker, coker ) != ( ker2, coker2 ):
        raise StabilityError( 'kernel/cokernel (%d,%d) at N = %d became (%d,%d) at N = %d' \
                              % ( ker, coker, N, ker2, coker2, 2*N ) )
    logger.debug( 'svd index of %s at N = %d: ker %d coker %d gap %.2e', symbol.Label(), N, ker, coker, gap )
    return IndexReport( symbol.Label(), ker-coker, ker, coker, N, tol, gap )


def _defect_trace( f, g, M ):
    # Tr( 1 - T_f T_g ) over the M x M window, with the inner sum padded by the bandwidth of g
    inner = M + g.bandwidth
    product = toeplitz_section( f, M, inner ) @ toeplitz_section( g, inner, M )
    return M - np.trace( product )


def fredholm_index_fedosov( symbol, N=128, inv_bandwidth=64, grid=None, zero_tol=ZERO_TOL, return_window=False ):
    '''
    Index as Tr(1 - T_g T_f) - Tr(1 - T_f T_g) with g a truncated Laurent
    expansion of 1/f. The window is at least 8(k + inv_bandwidth) wide so the
    defects, which decay geometrically off the corner, are fully captured.
    '''
    k = symbol.bandwidth
    if grid is None: grid = CircleGrid( max( 4096, 4*inv_bandwidth, 4*k+4 ) )
    _check_invertible( symbol, grid, zero_tol )
    g, residual = invert_symbol( symbol, inv_bandwidth, grid, zero_tol )
    if residual > 1e-8:
        raise ResolutionError( 'inverse symbol residual %.2e with %d modes: increase inv_bandwidth' \
                               % ( residual, inv_bandwidth ) )
    M = max( N, 8*( k + inv_bandwidth ) )
    trace = _defect_trace( g, symbol, M ) - _defect_trace( symbol, g, M )
    if abs( trace.imag ) > 1e-3:
        raise NumericalQualityError( 'defect trace has imaginary part %.2e' % trace.imag )
    index = RoundInteger( trace.real, 1e-3, 'defect trace difference' )
    logger.debug( 'defect trace index of %s on a %d window: %.3e', symbol.Label(), M, trace.real )
    if return_window: return index, M
    return index


def verify_index_theorem( symbol, config=None ):
    '''
    Index by singular values and by defect traces, winding by phase
    accumulation and by the log-derivative integral; all four must satisfy
    index = -winding.

    Arguments
    ---------
    symbol        invertible LaurentSymbol
    config        RawConfigParser (pytix.config.default_config() if None)

    Returns
    -------
    report        complete IndexReport
    '''
    if config is None:
        from ..config import default_config
        config = default_config()
    N = config.getint( 'Index', 'N' )
    N_max = config.getint( 'Index', 'N_max' )
    tol = config.getfloat( 'Index', 'tol' )
    gap_ratio = config.getfloat( 'Index', 'gap_ratio' )
    inv_bandwidth = config.getint( 'Index', 'inv_bandwidth' )
    inv_bandwidth_max = config.getint( 'Index', 'inv_bandwidth_max' )
    if inv_bandwidth_max < inv_bandwidth:
        raise ConfigurationError( 'inv_bandwidth_max %d is below inv_bandwidth %d' % ( inv_bandwidth_max, inv_bandwidth ) )
    zero_tol = config.getfloat( 'Symbols', 'zero_tol' )
    grid = CircleGrid( max( config.getint( 'Symbols', 'grid_size' ), 4*inv_bandwidth_max, 4*symbol.bandwidth+4 ) )

    N = max( N, 2*symbol.bandwidth+2 )
    while True:
        try:
            report = fredholm_index_svd( symbol, N, tol, gap_ratio, grid, zero_tol )
            break
        except ( ResolutionError, StabilityError ) as e:
            if 4*N > N_max: raise
            logger.info( '%s; retrying with N = %d', e, 2*N )
            N *= 2

    while True:
        try:
            fedosov, window = fredholm_index_fedosov( symbol, N, inv_bandwidth, grid, zero_tol, return_window=True )
            break
        except ResolutionError as e:
            if 2*inv_bandwidth > inv_bandwidth_max: raise
            logger.info( '%s; retrying with %d modes', e, 2*inv_bandwidth )
            inv_bandwidth *= 2
    w_ap = winding_argument_principle( symbol, grid, zero_tol )
    w_logd = winding_logderivative( symbol, grid, zero_tol )
    report = replace( report, index_fedosov=fedosov, winding_ap=w_ap, winding_logd=w_logd, fedosov_window=window )

    if not ( report.index_svd == fedosov == -w_ap == -w_logd ):
        raise TheoremViolationError( 'index and winding disagree for %s: svd %d, defect trace %d, winding %d / %d' \
                                     % ( symbol.Label(), report.index_svd, fedosov, w_ap, w_logd ), report )
    logger.info( 'index of T_f for %s: %d (N = %d)', symbol.Label(), fedosov, N )
    return report


def verify_batch( symbols, config=None, workers=1 ):
    '''verify_index_theorem over many symbols; reports come back in input order'''
    with ThreadPoolExecutor( max_workers=max( 1, workers ) ) as pool:
        return list( pool.map( lambda s: verify_index_theorem( s, config ), symbols ) )
