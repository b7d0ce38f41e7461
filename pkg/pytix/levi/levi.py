# ===============================================
# Module: levi
# File: levi.py
# Package: PyTIX
# Description: Levi form and strong pseudoconvexity
#              on sampled boundary points
# ===============================================

import logging
import warnings
from dataclasses import dataclass, field
import numpy as np
from scipy import linalg, optimize
from ..misc.errors import ConfigurationError, CriticalPointError, OffBoundaryError, \
     UnboundedDirectionError, NumericalQualityError, ResolutionError
from ..misc.misc import Substream

logger = logging.getLogger( __name__ )

STRONG = 'strongly-pseudoconvex-on-samples'
DEGENERATE = 'degenerate'
INDEFINITE = 'indefinite'

BOUNDARY_TOL = 1e-8
GRADIENT_TOL = 1e-8
ROOT_TOL = 1e-10


def wirtinger_gradient( domain, z ):
    '''(d rho/d z_1, ..., d rho/d z_n) by differentiating the monomials'''
    z = np.asarray( z, dtype=complex )
    grad = np.zeros( domain.n, dtype=complex )
    for i in range( domain.n ):
        mask = domain.hol[:, i] > 0
        if not mask.any(): continue
        hol = domain.hol[mask].copy()
        hol[:, i] -= 1
        grad[i] = domain.Terms( z, hol, domain.antihol[mask], domain.coeffs[mask]*domain.hol[mask, i] ).sum()
    return grad


def levi_form( domain, z ):
    '''L_ij = d^2 rho / d z_i d zbar_j at z (Hermitian)'''
    z = np.asarray( z, dtype=complex )
    L = np.zeros( ( domain.n, domain.n ), dtype=complex )
    for i in range( domain.n ):
        for j in range( domain.n ):
            mask = ( domain.hol[:, i] > 0 ) & ( domain.antihol[:, j] > 0 )
            if not mask.any(): continue
            hol, antihol = domain.hol[mask].copy(), domain.antihol[mask].copy()
            hol[:, i] -= 1
            antihol[:, j] -= 1
            coeffs = domain.coeffs[mask]*domain.hol[mask, i]*domain.antihol[mask, j]
            L[i, j] = domain.Terms( z, hol, antihol, coeffs ).sum()
    asym = np.abs( L - L.conj().T ).max()
    if asym > 1e-12*max( 1.0, np.abs( L ).max() ):
        raise NumericalQualityError( 'Levi form is not Hermitian (%.2e)' % asym )
    return L


def complex_tangent_basis( domain, z, boundary_tol=BOUNDARY_TOL ):
    '''
    Orthonormal basis of { u : sum_i d rho/d z_i (z) u_i = 0 }

    Arguments
    ---------
    domain        DomainSpec
    z             boundary point, |rho(z)| <= boundary_tol

    Returns
    -------
    B             (n, n-1) array with orthonormal columns
    '''
    rho = domain( z )
    if abs( rho ) > boundary_tol:
        raise OffBoundaryError( 'point %s is off the boundary: rho = %.3e' % ( np.round( z, 6 ), rho ) )
    g = wirtinger_gradient( domain, z )
    if np.linalg.norm( g ) <= GRADIENT_TOL:
        raise CriticalPointError( 'gradient of rho vanishes at %s' % np.round( z, 6 ) )
    return linalg.null_space( g[None, :] )


def restricted_levi_eigenvalues( domain, z, boundary_tol=BOUNDARY_TOL ):
    B = complex_tangent_basis( domain, z, boundary_tol )
    if B.shape[1] == 0: return np.zeros( 0 )
    R = B.T @ levi_form( domain, z ) @ B.conj()
    return linalg.eigvalsh( 0.5*( R + R.conj().T ) )


@dataclass(frozen=True)
class LeviReport:
    sample_count: int
    min_eigenvalue: float
    worst_point: np.ndarray
    verdict: str
    tol: float
    skipped: list = field( default_factory=list )

    def ToDict( self ):
        worst = None if self.worst_point is None else [ [ float( c.real ), float( c.imag ) ] for c in self.worst_point ]
        return { 'sample_count': self.sample_count, 'min_eigenvalue': self.min_eigenvalue,
                 'worst_point': worst, 'verdict': self.verdict, 'tol': self.tol,
                 'skipped': [ { 'index': i, 'direction': [ [ float( c.real ), float( c.imag ) ] for c in d ] }
                              for i, d in self.skipped ] }


def verdict_for( min_eigenvalue, tol ):
    if min_eigenvalue > tol: return STRONG
    if min_eigenvalue < -tol: return INDEFINITE
    return DEGENERATE


def strong_pseudoconvexity_check( domain, samples, tol=1e-6, boundary_tol=BOUNDARY_TOL, skipped=() ):
    '''
    Smallest eigenvalue of the Levi form on the complex tangent space over
    the samples, and the verdict it implies. For n = 1 the tangent space is
    trivial and every sample passes.
    '''
    samples = np.atleast_2d( np.asarray( samples, dtype=complex ) )
    if samples.shape[0] == 0: raise ConfigurationError( 'no boundary samples to check' )
    worst, worst_point = np.inf, None
    for z in samples:
        eig = restricted_levi_eigenvalues( domain, z, boundary_tol )
        if eig.size and eig[0] < worst:
            worst, worst_point = float( eig[0] ), z
    report = LeviReport( samples.shape[0], worst, worst_point, verdict_for( worst, tol ), tol, list( skipped ) )
    logger.info( 'Levi form over %d samples: min eigenvalue %.3e, %s', samples.shape[0], worst, report.verdict )
    return report


def _ray_root( domain, direction, t_max ):
    # rho(0) < 0; double t until rho changes sign, then bisect and polish
    rho = lambda t: domain( t*direction )
    lo, hi = 0.0, min( 0.5, t_max )
    while rho( hi ) < 0:
        if hi >= t_max:
            raise UnboundedDirectionError( 'rho stays negative along %s up to t = %g' % ( np.round( direction, 6 ), t_max ) )
        lo, hi = hi, min( 2*hi, t_max )
    for _ in range( 20 ):
        mid = 0.5*( lo + hi )
        value = rho( mid )
        if value == 0: return mid
        if value < 0: lo = mid
        else: hi = mid
    if rho( hi ) == 0: return hi
    return optimize.brentq( rho, lo, hi, xtol=1e-15, rtol=4*np.finfo( float ).eps, maxiter=200 )


def _direction( n, index, seed ):
    if index < n: return np.eye( n, dtype=complex )[index]
    rng = Substream( seed, index )
    d = rng.standard_normal( n ) + 1j*rng.standard_normal( n )
    return d / np.linalg.norm( d )


def sample_boundary( domain, count, seed=20200417, t_max=1e3 ):
    '''
    Boundary points along rays from the origin: first the coordinate axes,
    then seeded random complex directions (item i draws from its own stream).

    Returns
    -------
    points        (m, n) complex array, m <= count
    skipped       list of (index, direction) for rays that never leave the domain
    '''
    if count < 1: raise ConfigurationError( 'sample count must be positive' )
    if not domain( np.zeros( domain.n ) ) < 0:
        raise ConfigurationError( 'the origin must be interior (rho(0) < 0) to sample along rays' )
    points, skipped = [], []
    for i in range( count ):
        d = _direction( domain.n, i, seed )
        try:
            t = _ray_root( domain, d, t_max )
        except UnboundedDirectionError as e:
            warnings.warn( 'sample %d skipped: %s' % ( i, e ) )
            skipped.append( ( i, d ) )
            continue
        z = t*d
        if abs( domain( z ) ) > ROOT_TOL:
            raise ResolutionError( 'boundary root along direction %d has rho = %.2e' % ( i, domain( z ) ) )
        points.append( z )
    logger.debug( '%d boundary samples, %d directions skipped', len( points ), len( skipped ) )
    return np.array( points, dtype=complex ).reshape( -1, domain.n ), skipped
