import numpy as np
import pytest

from pytix.misc.errors import ConfigurationError, GridTooCoarseError, NonInvertibleSymbolError
from pytix.symbols import (CircleGrid, LaurentSymbol, Z, ZBAR, constant, monomial, derivative, evaluate,
                           invert_symbol, load_symbol, min_modulus, parse_coeffs, save_symbol,
                           winding_argument_principle, winding_logderivative, winding_number)

from conftest import BATTERY, random_symbol


def _close( f, g, tol=1e-12 ):
    modes = set( f.modes.tolist() ) | set( g.modes.tolist() )
    return all( abs( f.Coefficient( m ) - g.Coefficient( m ) ) <= tol for m in modes )


def test_symbol_drops_zero_coefficients():
    f = LaurentSymbol( { -3: 0, 0: 1, 2: 0.5 } )
    assert f.modes.tolist() == [ 0, 2 ]
    assert f.bandwidth == 2


def test_symbol_needs_a_nonzero_coefficient():
    with pytest.raises( ConfigurationError ):
        LaurentSymbol( { 0: 0 } )
    with pytest.raises( ConfigurationError ):
        LaurentSymbol( { 0.5: 1 } )


def test_evaluate_known_values():
    grid = CircleGrid( 8 )
    assert evaluate( Z, grid )[0] == 1
    assert abs( evaluate( Z + ZBAR, grid )[2] ) < 1e-15   # theta = pi/2
    assert evaluate( Z*Z - 3, CircleGrid( 16 ) )[0] == pytest.approx( -2 )


def test_evaluate_enforces_the_sampling_floor():
    with pytest.raises( ConfigurationError ):
        evaluate( monomial( 8 ), CircleGrid( 16 ) )


def test_min_modulus_known_values( grid ):
    assert min_modulus( Z, grid ) == pytest.approx( 1.0 )
    assert min_modulus( Z - 1, grid ) == pytest.approx( 0.0, abs=1e-15 )
    assert min_modulus( Z - 0.5, grid ) == pytest.approx( 0.5, abs=1e-12 )


@pytest.mark.parametrize( 'symbol, expected', [
    ( Z, 1 ), ( constant( 5 ), 0 ), ( monomial( -2 ) + 0.1, -2 ), ( Z - 0.3, 1 ), ( Z - 2, 0 ), ( Z - 0.3j, 1 ) ] )
def test_winding_argument_principle( symbol, expected, grid ):
    assert winding_argument_principle( symbol, grid ) == expected


@pytest.mark.parametrize( 'symbol, expected', [ ( Z, 1 ), ( Z*Z*Z, 3 ), ( ( Z - 0.5 )*( Z - 3 ), 1 ) ] )
def test_winding_logderivative( symbol, expected, grid ):
    assert winding_logderivative( symbol, grid ) == expected
    assert winding_argument_principle( symbol, grid ) == expected


def test_battery_windings_agree( battery_case, grid ):
    symbol, expected = battery_case
    assert winding_number( symbol, grid ) == ( expected, expected )


def test_zero_on_the_circle_is_rejected( grid ):
    with pytest.raises( NonInvertibleSymbolError ):
        winding_argument_principle( Z + ZBAR, grid )
    with pytest.raises( NonInvertibleSymbolError ):
        winding_logderivative( Z - 1, grid )


def test_coarse_grid_trips_the_phase_guard():
    with pytest.raises( GridTooCoarseError ):
        winding_argument_principle( monomial( 8 ), CircleGrid( 16 ) )


def test_winding_is_additive_and_odd_under_conjugation( rng, grid ):
    for _ in range( 20 ):
        df, dg = rng.integers( -3, 4, size=2 )
        f, g = random_symbol( rng, int( df ) ), random_symbol( rng, int( dg ) )
        wf = winding_argument_principle( f, grid )
        assert wf == df
        assert winding_argument_principle( f*g, grid ) == wf + winding_argument_principle( g, grid )
        assert winding_argument_principle( f.Conjugate(), grid ) == -wf


def test_winding_is_stable_under_refinement( rng ):
    f = random_symbol( rng, 2 )
    assert winding_argument_principle( f, CircleGrid( 1024 ) ) == winding_argument_principle( f, CircleGrid( 8192 ) )


def test_derivative_known_values():
    assert derivative( Z*Z ) == LaurentSymbol( { 1: 2 } )
    assert derivative( constant( 7 ) ).IsZero
    dz = derivative( ZBAR )
    assert dz.modes.tolist() == [ -2 ] and dz.Coefficient( -2 ) == -1


def test_derivative_product_rule( rng ):
    for _ in range( 10 ):
        f, g = random_symbol( rng, int( rng.integers( -2, 3 ) ) ), random_symbol( rng, int( rng.integers( -2, 3 ) ) )
        assert _close( derivative( f*g ), derivative( f )*g + f*derivative( g ) )


def test_invert_symbol_known_values( grid ):
    g, residual = invert_symbol( Z, 4, grid )
    assert g.modes.tolist() == [ -1 ]
    assert g.Coefficient( -1 ) == pytest.approx( 1 )
    assert residual < 1e-14

    g, residual = invert_symbol( constant( 2 ), 4, grid )
    assert g.modes.tolist() == [ 0 ] and g.Coefficient( 0 ) == pytest.approx( 0.5 )
    assert residual < 1e-14

    g, residual = invert_symbol( 1 - 0.5*Z, 64, grid )
    m = np.arange( 30 )
    np.testing.assert_allclose( g.Coefficients( m ), 0.5**m, atol=1e-12 )
    assert residual <= 1e-8


def test_invert_symbol_rejects_a_coarse_grid():
    with pytest.raises( ConfigurationError ):
        invert_symbol( Z - 3, 64, CircleGrid( 128 ) )


def test_symbol_algebra():
    f = 1 - 0.5*Z
    assert f == LaurentSymbol( { 0: 1, 1: -0.5 } )
    assert ( Z*ZBAR ) == constant( 1 )
    assert ( Z - Z ).IsZero
    assert f.Conjugate() == LaurentSymbol( { 0: 1, -1: -0.5 } )
    theta = np.linspace( 0, 2*np.pi, 7 )
    np.testing.assert_allclose( ( f*f )( theta ), f( theta )**2, atol=1e-14 )


def test_parse_coeffs():
    assert parse_coeffs( '0:1,1:-0.5' ) == 1 - 0.5*Z
    assert parse_coeffs( '-2:1' ) == ZBAR*ZBAR
    assert parse_coeffs( '1:0.5-2j' ).Coefficient( 1 ) == 0.5-2j
    for bad in ( 'x', '1:', '1.5:2', '1:abc' ):
        with pytest.raises( ConfigurationError ):
            parse_coeffs( bad )


def test_symbol_files( tmp_path ):
    f = ( Z - 0.5j )*ZBAR
    fname = str( tmp_path / 'f.json' )
    save_symbol( fname, f )
    assert load_symbol( fname ) == f

    bad = tmp_path / 'bad.json'
    bad.write_text( '{"coeffs": [{"mode": 1.5, "re": 1.0, "im": 0.0}]}' )
    with pytest.raises( ConfigurationError ):
        load_symbol( str( bad ) )
