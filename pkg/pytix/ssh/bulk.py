# ================================================
# Module: ssh
# File: bulk.py
# Package: PyTIX
# Description: SSH Bloch Hamiltonians, Fermi unitary
#              and the bulk Chern number
# ================================================

import logging
from dataclasses import dataclass
from typing import Optional
import numpy as np
from scipy import linalg
from scipy import fft as sfft
from ..misc.errors import ConfigurationError, GaplessError, NumericalQualityError, ResolutionError
from ..misc.misc import PhaseWinding, RoundInteger, MaxResidual

logger = logging.getLogger( __name__ )

SIGMA1 = np.array( [ [ 0, 1 ], [ 1, 0 ] ], dtype=complex )
SIGMA2 = np.array( [ [ 0, -1j ], [ 1j, 0 ] ], dtype=complex )
SIGMA3 = np.array( [ [ 1, 0 ], [ 0, -1 ] ], dtype=complex )
SIGMA_PLUS = 0.5*( SIGMA1 + 1j*SIGMA2 )
SIGMA_MINUS = 0.5*( SIGMA1 - 1j*SIGMA2 )

GAP_TOL = 1e-6


@dataclass(frozen=True)
class SSHParams:
    '''
    Parameters of the SSH chain with fiber dimension n.
    delta (the edge window) defaults to delta_fraction times the bulk gap.
    '''
    m: float
    n: int = 1
    L: int = 40
    delta: Optional[float] = None
    delta_fraction: float = 0.5
    Nk: int = 256
    fourier_sign: int = 1
    quadrature_tol: float = 1e-6

    def __post_init__( self ):
        if self.n < 1: raise ConfigurationError( 'fiber dimension must be positive, got %r' % self.n )
        if self.L < 1: raise ConfigurationError( 'lattice length must be positive, got %r' % self.L )
        if self.Nk < 16: raise ConfigurationError( 'momentum grid needs at least 16 points, got %r' % self.Nk )
        if self.fourier_sign not in ( 1, -1 ): raise ConfigurationError( 'fourier_sign must be +1 or -1' )
        if self.delta is not None and self.delta <= 0: raise ConfigurationError( 'delta must be positive' )
        if not 0 < self.delta_fraction < 1: raise ConfigurationError( 'delta_fraction must lie in (0,1)' )
        if self.quadrature_tol <= 0: raise ConfigurationError( 'quadrature_tol must be positive' )

    @property
    def momenta( self ):
        return 2*np.pi*np.arange( self.Nk ) / self.Nk

    def Delta( self, gap ):
        return self.delta if self.delta is not None else self.delta_fraction*gap

    @classmethod
    def FromConfig( cls, cf, m, **overrides ):
        kw = dict( n=cf.getint( 'SSH', 'n' ), L=cf.getint( 'SSH', 'L' ), Nk=cf.getint( 'SSH', 'Nk' ),
                   delta_fraction=cf.getfloat( 'SSH', 'delta_fraction' ),
                   fourier_sign=cf.getint( 'SSH', 'fourier_sign' ),
                   quadrature_tol=cf.getfloat( 'SSH', 'quadrature_tol' ) )
        if cf.has_option( 'SSH', 'delta' ): kw['delta'] = cf.getfloat( 'SSH', 'delta' )
        kw.update( overrides )
        return cls( m, **kw )


@dataclass(frozen=True)
class BlochMatrix:
    '''H(theta), chiral basis: the n sigma_3 = +1 components first'''
    theta: float
    matrix: np.ndarray

    @property
    def n( self ):
        return self.matrix.shape[0] // 2


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    source: str


def chiral_operator( n, L=1 ):
    '''J = sigma_3 x 1_{nL}'''
    return np.kron( SIGMA3, np.eye( n*L ) )


def diagonalize( H, source='bulk' ):
    '''
    Hermitian eigendecomposition with quality checks

    Returns
    -------
    SpectralData  eigenvalues ascending, unitary eigenvector columns
    '''
    H = np.asarray( H )
    w, V = linalg.eigh( H )
    unitarity = MaxResidual( V.conj().T @ V, np.eye( H.shape[0] ) )
    residual = MaxResidual( H @ V, V*w )
    scale = max( np.abs( w ).max(), 1.0 )
    if unitarity > 1e-10 or residual > 1e-9*scale:
        raise NumericalQualityError( 'eigendecomposition of the %s Hamiltonian is inaccurate (%.1e, %.1e)' \
                                     % ( source, unitarity, residual ) )
    return SpectralData( w, V, source )


def bloch_hamiltonian( params, theta ):
    '''H(theta) = [[0, q 1_n], [q* 1_n, 0]] with q = exp(i s theta) - i m'''
    q = np.exp( 1j*params.fourier_sign*theta ) - 1j*params.m
    block = np.array( [ [ 0, q ], [ np.conj( q ), 0 ] ] )
    return BlochMatrix( float( theta ), np.kron( block, np.eye( params.n ) ) )


def periodic_hamiltonian( params, L ):
    '''
    SSH Hamiltonian on a ring of L cells (U the cyclic shift). Its spectrum is
    the union of the Bloch spectra at theta = 2 pi j / L.
    '''
    U = np.roll( np.eye( L ), 1, axis=0 )
    return np.kron( SIGMA_PLUS, np.kron( np.eye( params.n ), U ) ) \
         + np.kron( SIGMA_MINUS, np.kron( np.eye( params.n ), U.T ) ) \
         + params.m*np.kron( SIGMA2, np.eye( params.n*L ) )


def spectral_gap( params ):
    '''
    Smallest |eigenvalue| of H(theta) over the momentum grid

    Returns
    -------
    gap           equals |1-|m|| when the grid contains theta = pi/2 and 3 pi/2
    '''
    if abs( abs( params.m ) - 1 ) < GAP_TOL:
        raise GaplessError( 'm = %g is a phase transition point: the gap closes at |m| = 1' % params.m )
    gap = min( np.abs( linalg.eigvalsh( bloch_hamiltonian( params, t ).matrix ) ).min() for t in params.momenta )
    if gap < GAP_TOL:
        raise GaplessError( 'spectral gap %.2e at m = %g' % ( gap, params.m ) )
    exact = abs( 1 - abs( params.m ) )
    if abs( gap - exact ) > 1e-8:
        raise ResolutionError( 'momentum grid of %d points misses the gap minimum: %.10f vs %.10f (use Nk divisible by 4)' \
                               % ( params.Nk, gap, exact ) )
    return float( gap )


def flat_band( H ):
    '''Q = sgn(H) = 1 - 2 P_F from the eigendecomposition'''
    if isinstance( H, BlochMatrix ): H = H.matrix
    spec = diagonalize( H )
    if np.abs( spec.eigenvalues ).min() < GAP_TOL:
        raise GaplessError( 'eigenvalue %.2e too close to zero for a flat band' % np.abs( spec.eigenvalues ).min() )
    V = spec.eigenvectors
    return ( V*np.sign( spec.eigenvalues ) ) @ V.conj().T


def fermi_projection( Q ):
    '''P_F = (1 - Q)/2'''
    return 0.5*( np.eye( Q.shape[0] ) - Q )


def fermi_unitary( Q, tol=1e-10 ):
    '''Lower left n x n block of the chiral flat band Q = [[0, U_F*], [U_F, 0]]'''
    n = Q.shape[0] // 2
    diagonal = max( MaxResidual( Q[:n, :n] ), MaxResidual( Q[n:, n:] ) )
    if diagonal > tol:
        raise ConfigurationError( 'flat band is not chiral: diagonal blocks of size %.2e' % diagonal )
    U = Q[n:, :n]
    defect = MaxResidual( U.conj().T @ U, np.eye( n ) )
    if defect > tol:
        raise NumericalQualityError( 'Fermi unitary block is not unitary (%.2e)' % defect )
    return U


def _theta_derivative( U, h, derivative ):
    # U has shape (Nk, n, n), periodic in the first axis
    if derivative == 'spectral':
        Nk = U.shape[0]
        k = sfft.fftfreq( Nk, 1.0/Nk )
        if Nk % 2 == 0: k[Nk//2] = 0
        return sfft.ifft( 1j*k[:, None, None]*sfft.fft( U, axis=0 ), axis=0 )
    if derivative == 'centered':
        return ( np.roll( U, -1, axis=0 ) - np.roll( U, 1, axis=0 ) ) / ( 2*h )
    raise ConfigurationError( 'unknown derivative "%s" (spectral or centered)' % derivative )


def chern_number( params, derivative='spectral' ):
    '''
    First Chern number of the Fermi unitary

    Arguments
    ---------
    params        gapped SSHParams
    derivative    'spectral' (FFT in theta) or 'centered' (second order differences)

    Returns
    -------
    chern_det          minus the phase winding of det U_F along the momentum grid
    chern_quadrature   (i/2pi) int tr( U_F* dU_F/dtheta ) by the trapezoid rule
    '''
    spectral_gap( params )
    U = np.array( [ fermi_unitary( flat_band( bloch_hamiltonian( params, t ) ) ) for t in params.momenta ] )
    chern_det = -RoundInteger( PhaseWinding( np.linalg.det( U ) ), 1e-9, 'phase winding of det U_F' )
    h = 2*np.pi / params.Nk
    dU = _theta_derivative( U, h, derivative )
    density = np.einsum( 'kji,kji->k', U.conj(), dU )
    chern_quadrature = float( np.real( 1j/( 2*np.pi ) * h * density.sum() ) )
    logger.debug( 'Chern number at m = %g: %d (quadrature %.12f, %s)', params.m, chern_det, chern_quadrature, derivative )
    return chern_det, chern_quadrature
