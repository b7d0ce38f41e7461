import numpy as np
import pytest
from scipy import stats

from pytix.misc.errors import ConfigurationError, CriticalPointError, OffBoundaryError
from pytix.levi import (DEGENERATE, INDEFINITE, STRONG, DomainSpec, complex_tangent_basis, defining_function,
                        egg_domain, hyperboloid, levi_form, load_domain, restricted_levi_eigenvalues, sample_boundary,
                        save_domain, strong_pseudoconvexity_check, unit_ball, wirtinger_gradient)


def test_defining_function_values():
    ball = unit_ball()
    assert defining_function( ball, [ 0, 0 ] ) == -1
    assert defining_function( ball, [ 0.6, 0.8j ] ) == pytest.approx( 0 )
    assert egg_domain()( [ 0, 2 ] ) == 15


def test_domain_must_be_real():
    with pytest.raises( ConfigurationError ):
        DomainSpec( [ ( ( 1, 0 ), ( 0, 0 ), 1.0 ), ( ( 0, 0 ), ( 0, 0 ), -1.0 ) ] )
    with pytest.raises( ConfigurationError ):
        DomainSpec( [ ( ( 1, 0 ), ( 0, 1 ), 1j ), ( ( 0, 1 ), ( 1, 0 ), 1j ), ( ( 0, 0 ), ( 0, 0 ), -1.0 ) ] )
    DomainSpec( [ ( ( 1, 0 ), ( 0, 1 ), 1j ), ( ( 0, 1 ), ( 1, 0 ), -1j ), ( ( 0, 0 ), ( 0, 0 ), -1.0 ) ] )


def test_domain_file_roundtrip( tmp_path ):
    fname = str( tmp_path / 'egg.json' )
    save_domain( fname, egg_domain( 3 ) )
    domain = load_domain( fname )
    assert domain.n == 2
    assert domain( [ 0, 1 ] ) == pytest.approx( 0 )
    ( tmp_path / 'bad.json' ).write_text( '[{"hol_multi_index": [1]}]' )
    with pytest.raises( ConfigurationError ):
        load_domain( str( tmp_path / 'bad.json' ) )


def test_wirtinger_gradient():
    np.testing.assert_allclose( wirtinger_gradient( unit_ball(), [ 1, 0 ] ), [ 1, 0 ] )
    np.testing.assert_allclose( wirtinger_gradient( unit_ball(), [ 0.6j, 0.8 ] ), [ -0.6j, 0.8 ] )
    np.testing.assert_allclose( wirtinger_gradient( egg_domain(), [ 0, 1j ] ), [ 0, -2j ] )


def test_levi_form():
    np.testing.assert_allclose( levi_form( unit_ball( 3 ), [ 1, 0, 0 ] ), np.eye( 3 ) )
    np.testing.assert_allclose( levi_form( egg_domain(), [ 0, 1 ] ), np.diag( [ 1, 4 ] ) )
    np.testing.assert_allclose( levi_form( hyperboloid(), [ 1, 0 ] ), np.diag( [ 1, -1 ] ) )


def test_levi_form_is_hermitian_for_real_polynomials( rng ):
    terms = [ ( ( 0, 0 ), ( 0, 0 ), -1.0 ) ]
    for _ in range( 6 ):
        hol, antihol = tuple( rng.integers( 0, 3, 2 ) ), tuple( rng.integers( 0, 3, 2 ) )
        c = rng.standard_normal() + 1j*rng.standard_normal()
        if hol == antihol: c = c.real
        terms += [ ( hol, antihol, c ), ( antihol, hol, np.conj( c ) ) ]
    domain = DomainSpec( terms )
    z = rng.standard_normal( 2 ) + 1j*rng.standard_normal( 2 )
    L = levi_form( domain, z )
    np.testing.assert_allclose( L, L.conj().T, atol=1e-10 )
    assert isinstance( domain( z ), float )


def test_complex_tangent_basis():
    B = complex_tangent_basis( unit_ball(), [ 1, 0 ] )
    assert B.shape == ( 2, 1 )
    assert abs( B[0, 0] ) < 1e-14 and abs( B[1, 0] ) == pytest.approx( 1 )
    z = np.array( [ 0.6, 0.8j ] )
    B = complex_tangent_basis( unit_ball(), z )
    assert abs( wirtinger_gradient( unit_ball(), z ) @ B[:, 0] ) < 1e-14


def test_tangent_basis_off_the_boundary():
    with pytest.raises( OffBoundaryError ):
        complex_tangent_basis( unit_ball(), [ 0.5, 0 ] )


def test_critical_point():
    # rho = (|z|^2 - 1)^2 vanishes to second order on the circle
    domain = DomainSpec( [ ( ( 2, ), ( 2, ), 1.0 ), ( ( 1, ), ( 1, ), -2.0 ), ( ( 0, ), ( 0, ), 1.0 ) ] )
    with pytest.raises( CriticalPointError ):
        complex_tangent_basis( domain, [ 1.0 ] )


def test_restricted_eigenvalues():
    np.testing.assert_allclose( restricted_levi_eigenvalues( egg_domain(), [ 0, 1 ] ), [ 1 ] )
    np.testing.assert_allclose( restricted_levi_eigenvalues( egg_domain(), [ 1, 0 ] ), [ 0 ], atol=1e-14 )
    np.testing.assert_allclose( restricted_levi_eigenvalues( hyperboloid(), [ 1, 0 ] ), [ -1 ] )


def test_ball_is_invariant_under_unitaries():
    z = np.array( [ 0.6, 0.8j ] )
    U = stats.unitary_group.rvs( 2, random_state=3 )
    np.testing.assert_allclose( restricted_levi_eigenvalues( unit_ball(), U @ z ),
                                restricted_levi_eigenvalues( unit_ball(), z ), atol=1e-10 )


def test_boundary_samples():
    points, skipped = sample_boundary( egg_domain(), 32, seed=11 )
    assert points.shape == ( 32, 2 ) and skipped == []
    assert max( abs( egg_domain()( z ) ) for z in points ) <= 1e-10
    np.testing.assert_allclose( points[0], [ 1, 0 ], atol=1e-12 )
    np.testing.assert_allclose( points[1], [ 0, 1 ], atol=1e-12 )
    again, _ = sample_boundary( egg_domain(), 32, seed=11 )
    np.testing.assert_array_equal( points, again )


def test_sampling_needs_an_interior_origin():
    shifted = DomainSpec( [ ( ( 1, ), ( 1, ), 1.0 ), ( ( 0, ), ( 0, ), 1.0 ) ] )
    with pytest.raises( ConfigurationError ):
        sample_boundary( shifted, 4 )


def test_ball_is_strongly_pseudoconvex():
    ball = unit_ball()
    points, skipped = sample_boundary( ball, 64 )
    report = strong_pseudoconvexity_check( ball, points )
    assert report.verdict == STRONG
    assert report.min_eigenvalue == pytest.approx( 1, abs=1e-10 )
    assert report.sample_count == 64


def test_egg_is_degenerate_on_the_first_axis():
    egg = egg_domain()
    points, _ = sample_boundary( egg, 64 )
    report = strong_pseudoconvexity_check( egg, points )
    assert report.verdict == DEGENERATE
    assert abs( report.worst_point[1] ) < 1e-3


def test_hyperboloid_is_indefinite():
    domain = hyperboloid()
    with pytest.warns( UserWarning ):
        points, skipped = sample_boundary( domain, 16, t_max=100 )
    assert 1 in [ i for i, _ in skipped ]
    report = strong_pseudoconvexity_check( domain, points, skipped=skipped )
    assert report.verdict == INDEFINITE
    assert report.min_eigenvalue == pytest.approx( -1 ) or report.min_eigenvalue < -1e-6
    assert report.ToDict()['skipped'][0]['index'] == skipped[0][0]


def test_one_variable_is_vacuously_strong():
    disc = unit_ball( 1 )
    points, _ = sample_boundary( disc, 4 )
    report = strong_pseudoconvexity_check( disc, points )
    assert report.verdict == STRONG
    assert report.min_eigenvalue == np.inf
    assert report.worst_point is None
