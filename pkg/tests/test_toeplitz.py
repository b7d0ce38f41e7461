import numpy as np
import pytest

from pytix.misc.errors import (ConfigurationError, NonInvertibleSymbolError, NumericalQualityError, ResolutionError,
                               StabilityError, TheoremViolationError)
from pytix.symbols import LaurentSymbol, Z, ZBAR, constant, monomial
from pytix.toeplitz import (build_truncation, commutator_defect, fredholm_index_fedosov, fredholm_index_svd,
                            numerical_kernel_dim, semicommutator_defect, shift_relations, verify_batch,
                            verify_index_theorem)
from pytix.toeplitz import index as index_module
from pytix.toeplitz import truncation as truncation_module

from conftest import random_symbol


def test_shift_section():
    T = build_truncation( Z, 3 ).matrix
    assert T.shape == ( 4, 3 )
    np.testing.assert_array_equal( T, np.eye( 4, 3, k=-1 ) )


def test_constant_section_is_square():
    np.testing.assert_array_equal( build_truncation( constant( 1 ), 3 ).matrix, np.eye( 3 ) )


def test_banded_section():
    T = build_truncation( Z + 2*ZBAR, 4 ).matrix
    np.testing.assert_array_equal( T, np.eye( 5, 4, k=-1 ) + 2*np.eye( 5, 4, k=1 ) )


def test_section_is_constant_along_diagonals( rng ):
    f = random_symbol( rng, 1 )
    A = build_truncation( f, 12 ).matrix
    for i in range( A.shape[0] ):
        for j in range( A.shape[1] ):
            assert A[i, j] == f.Coefficient( i-j )


def test_section_too_small():
    with pytest.raises( ConfigurationError ):
        build_truncation( monomial( 3 ), 3 )


def test_numerical_kernel_dim_known_values():
    assert numerical_kernel_dim( np.eye( 3 ), 1e-8 ) == ( 0, np.inf )
    assert numerical_kernel_dim( build_truncation( Z, 3 ).matrix, 1e-8 )[0] == 0
    count, gap = numerical_kernel_dim( np.diag( [ 1.0, 1e-7, 1e-9 ] ), 1e-8 )
    assert count == 1 and gap == pytest.approx( 100 )


def test_failed_svd_is_a_numerical_quality_error( monkeypatch ):
    def fail( matrix ):
        raise truncation_module.linalg.LinAlgError( 'SVD did not converge' )
    monkeypatch.setattr( truncation_module.linalg, 'svdvals', fail )
    with pytest.raises( NumericalQualityError ):
        numerical_kernel_dim( np.eye( 3 ), 1e-8 )


def test_geometric_vector_spans_the_cokernel():
    A = build_truncation( ( Z - 0.5 ).Conjugate(), 64 ).matrix
    count, gap = numerical_kernel_dim( A, 1e-8 )
    assert count == 1 and gap >= 1e3
    x = 0.5**np.arange( 64 )
    assert np.linalg.norm( A @ x ) <= 1e-9


@pytest.mark.parametrize( 'symbol, N, index, ker, coker', [
    ( Z, 64, -1, 0, 1 ), ( constant( 3 ), 64, 0, 0, 0 ), ( ZBAR*ZBAR + 0.1, 128, 2, 2, 0 ) ] )
def test_fredholm_index_svd( symbol, N, index, ker, coker ):
    report = fredholm_index_svd( symbol, N )
    assert ( report.index_svd, report.kernel_dim, report.cokernel_dim ) == ( index, ker, coker )
    assert report.index_svd == report.kernel_dim - report.cokernel_dim


def test_fredholm_index_svd_detects_instability():
    # the cokernel vector (0.9^j) is resolved at 2N but not at N
    with pytest.raises( StabilityError ):
        fredholm_index_svd( Z - 0.9, 64, tol=1e-5 )


def test_fredholm_index_svd_rejects_noninvertible_symbols():
    with pytest.raises( NonInvertibleSymbolError ):
        fredholm_index_svd( Z - 1, 64 )


@pytest.mark.parametrize( 'symbol, index', [ ( Z, -1 ), ( constant( 2 ), 0 ), ( ( Z - 0.5 )*( Z - 0.5 ), -2 ) ] )
def test_fredholm_index_fedosov( symbol, index ):
    assert fredholm_index_fedosov( symbol, 128, 64 ) == index


@pytest.mark.parametrize( 'symbol, index', [ ( Z, -1 ), ( ZBAR*ZBAR*ZBAR, 3 ), ( Z - 2, 0 ) ] )
def test_verify_index_theorem_known_values( symbol, index, cfg ):
    report = verify_index_theorem( symbol, cfg )
    assert report.index_svd == report.index_fedosov == index
    assert report.winding_ap == report.winding_logd == -index


def test_index_battery( battery_case, cfg ):
    symbol, winding = battery_case
    report = verify_index_theorem( symbol, cfg )
    assert report.index_svd == report.index_fedosov == -report.winding_ap == -report.winding_logd == -winding
    assert report.N == 128
    assert report.sv_gap >= 1e3
    assert list( report.ToDict() )[:9] == [ 'index_svd', 'index_fedosov', 'winding_ap', 'winding_logd',
                                            'kernel_dim', 'cokernel_dim', 'N', 'tol', 'sv_gap' ]


def test_index_is_additive_and_odd( rng, cfg ):
    for _ in range( 5 ):
        f = random_symbol( rng, int( rng.integers( -2, 3 ) ), spread=1 )
        g = random_symbol( rng, int( rng.integers( -2, 3 ) ), spread=1 )
        i_f = verify_index_theorem( f, cfg ).index_svd
        i_g = verify_index_theorem( g, cfg ).index_svd
        assert verify_index_theorem( f*g, cfg ).index_svd == i_f + i_g
        assert verify_index_theorem( f.Conjugate(), cfg ).index_svd == -i_f


def test_no_zeros_in_the_disk_means_invertible( cfg ):
    report = verify_index_theorem( 3 + Z + 0.5*Z*Z, cfg )
    assert report.kernel_dim == report.cokernel_dim == 0


def test_corrupted_truncation_is_a_theorem_violation( cfg, monkeypatch ):
    monkeypatch.setattr( index_module, 'build_truncation',
                         lambda symbol, N: build_truncation( constant( 1 ), N ) )
    with pytest.raises( TheoremViolationError ) as info:
        verify_index_theorem( Z, cfg )
    assert info.value.report.index_svd == 0
    assert info.value.report.index_fedosov == -1


def test_verify_batch_keeps_order( cfg ):
    symbols = [ Z, ZBAR, Z*Z, constant( 3 ) ]
    reports = verify_batch( symbols, cfg, workers=3 )
    assert [ r.index_svd for r in reports ] == [ -1, 1, -2, 0 ]


def test_semicommutator_is_a_corner():
    d = semicommutator_defect( Z, ZBAR, 16 )
    assert ( d.rank, d.corner ) == ( 1, ( 1, 1 ) )
    assert semicommutator_defect( ZBAR, Z, 16 ).rank == 0
    d = semicommutator_defect( Z*Z + 1, ZBAR*ZBAR*ZBAR, 16 )
    assert d.rank == 2
    assert d.corner == ( 2, 3 )


def test_commutator_of_the_shift():
    d = commutator_defect( Z, ZBAR, 16 )
    assert d.rank == 1 and d.frobenius == pytest.approx( 1.0 )


def test_shift_relations():
    assert all( r.passed for r in shift_relations( 10 ) )


def test_slowly_decaying_inverse_grows_the_bandwidth( cfg ):
    # 1/(z-0.9) needs about 200 modes to reach the inverse residual bound
    report = verify_index_theorem( Z - 0.9, cfg )
    assert report.index_svd == report.index_fedosov == -1
    assert report.winding_ap == report.winding_logd == 1
    assert report.fedosov_window >= 8*( 1 + 128 )


def test_inverse_bandwidth_is_bounded( cfg ):
    cfg.set( 'Index', 'inv_bandwidth_max', '128' )
    with pytest.raises( ResolutionError ):
        verify_index_theorem( Z - 0.9, cfg )
    cfg.set( 'Index', 'inv_bandwidth_max', '32' )
    with pytest.raises( ConfigurationError ):
        verify_index_theorem( Z - 0.9, cfg )
