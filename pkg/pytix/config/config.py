# =======================================
# Module: config
# Package: PyTIX
# Description: Local Configuration Module
# =======================================

import configparser as ConfigParser


def default_config():
    '''Set up the default configuration for PyTIX'''

    cf = ConfigParser.RawConfigParser()

    cf.add_section( 'Symbols' )
    cf.set( 'Symbols', 'grid_size', '4096' )
    cf.set( 'Symbols', 'zero_tol', '1e-8' )

    cf.add_section( 'Index' )
    cf.set( 'Index', 'N', '128' )
    cf.set( 'Index', 'N_max', '2048' )
    cf.set( 'Index', 'tol', '1e-8' )
    cf.set( 'Index', 'gap_ratio', '1e3' )
    cf.set( 'Index', 'inv_bandwidth', '64' )
    cf.set( 'Index', 'inv_bandwidth_max', '512' )

    cf.add_section( 'SSH' )
    cf.set( 'SSH', 'n', '1' )
    cf.set( 'SSH', 'Nk', '256' )
    cf.set( 'SSH', 'L', '40' )
    cf.set( 'SSH', 'delta_fraction', '0.5' )
    cf.set( 'SSH', 'fourier_sign', '1' )
    cf.set( 'SSH', 'quadrature_tol', '1e-6' )

    cf.add_section( 'Fock' )
    cf.set( 'Fock', 'n', '2' )
    cf.set( 'Fock', 'K', '4' )
    cf.set( 'Fock', 'p', '3' )
    cf.set( 'Fock', 'permutation', '2,3,1' )
    cf.set( 'Fock', 'k_max', '5' )
    cf.set( 'Fock', 'trials', '100' )
    cf.set( 'Fock', 'tol', '1e-12' )
    cf.set( 'Fock', 'iso_tol', '1e-10' )

    cf.add_section( 'Levi' )
    cf.set( 'Levi', 'samples', '64' )
    cf.set( 'Levi', 'tol', '1e-6' )
    cf.set( 'Levi', 'boundary_tol', '1e-8' )
    cf.set( 'Levi', 't_max', '1e3' )

    cf.add_section( 'Run' )
    cf.set( 'Run', 'seed', '20200417' )
    cf.set( 'Run', 'format', 'json' )

    return cf


def create_cfg_file( cf, fname='' ):
    '''Dump configuration cf on file fname'''
    with open( fname, 'w' ) as cfile: cf.write( cfile )
    return None


def get_cfg( fname ):
    '''Get Configuration (file values override the defaults)'''
    cf = default_config()
    cf.read( fname )
    return cf


def set_cfg( cf, section, name, value ):
    '''Set up a value'''
    cf.set( section, name, str( value ) )
    return None
