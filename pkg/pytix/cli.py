# ==================================================
# Module: cli
# Package: PyTIX
# Description: Command line driver for the pytix script
# ==================================================

import argparse
import logging
import os
import sys
from .config import default_config, create_cfg_file, get_cfg, set_cfg
from .misc.errors import ConfigurationError, exit_code
from .misc.misc import ParseFloatList
from .misc.reports import emit
from .symbols import CircleGrid, load_symbol, parse_coeffs, winding_number
from .toeplitz import verify_index_theorem
from .ssh import SSHParams, bulk_edge_sweep, CSV_FIELDS
from .fock import build_fock, check_toeplitz_relations, parseval_frame, check_frame_relations, \
     AutomorphismCorrespondence, check_tensor_iso, pv_generator_check
from .levi import PRESETS, load_domain, sample_boundary, strong_pseudoconvexity_check, STRONG

logger = logging.getLogger( __name__ )

# flag dest -> ( section, key ) overridden by that flag, per subcommand
OVERRIDES = {
    'winding':    { 'grid': ( 'Symbols', 'grid_size' ), 'tol': ( 'Symbols', 'zero_tol' ) },
    'index':      { 'N': ( 'Index', 'N' ), 'N_max': ( 'Index', 'N_max' ), 'tol': ( 'Index', 'tol' ),
                    'inv_bandwidth': ( 'Index', 'inv_bandwidth' ),
                    'inv_bandwidth_max': ( 'Index', 'inv_bandwidth_max' ) },
    'ssh-sweep':  { 'n': ( 'SSH', 'n' ), 'L': ( 'SSH', 'L' ), 'Nk': ( 'SSH', 'Nk' ), 'delta': ( 'SSH', 'delta' ),
                    'delta_fraction': ( 'SSH', 'delta_fraction' ), 'fourier_sign': ( 'SSH', 'fourier_sign' ),
                    'tol': ( 'SSH', 'quadrature_tol' ) },
    'fock-check': { 'n': ( 'Fock', 'n' ), 'K': ( 'Fock', 'K' ), 'p': ( 'Fock', 'p' ), 'permutation': ( 'Fock', 'permutation' ),
                    'k_max': ( 'Fock', 'k_max' ), 'trials': ( 'Fock', 'trials' ), 'tol': ( 'Fock', 'tol' ) },
    'levi':       { 'samples': ( 'Levi', 'samples' ), 'tol': ( 'Levi', 'tol' ), 't_max': ( 'Levi', 't_max' ) },
}
GLOBAL_OVERRIDES = { 'seed': ( 'Run', 'seed' ), 'format': ( 'Run', 'format' ) }


class _Parser( argparse.ArgumentParser ):
    '''Usage errors are input errors (exit 1), not argparse's exit 2'''
    def error( self, message ):
        raise ConfigurationError( '%s: %s' % ( self.prog, message ) )


def _add_symbol_source( p ):
    g = p.add_mutually_exclusive_group( required=True )
    g.add_argument( '--symbol', metavar='FILE', help='symbol JSON file' )
    g.add_argument( '--coeffs', metavar='M:C,...', help='inline coefficients, e.g. "0:1,1:-0.5"' )


def build_parser():
    common = _Parser( add_help=False )
    common.add_argument( '--format', choices=( 'json', 'csv' ), help='output format (default json)' )
    common.add_argument( '--out', metavar='PATH', help='output file (default standard output)' )
    common.add_argument( '--seed', type=int, help='random seed (default 20200417)' )
    common.add_argument( '--tol', type=float, help='tolerance of the subcommand' )
    common.add_argument( '--config', metavar='FILE', help='configuration file' )
    common.add_argument( '--dump-config', metavar='FILE', help='write the effective configuration' )
    common.add_argument( '-v', '--verbose', action='count', default=0, help='-v info, -vv debug (standard error)' )

    parser = _Parser( prog='pytix', description='PyTIX :: Python - Toeplitz IndeX laboratory' )
    sub = parser.add_subparsers( dest='command', metavar='command' )
    sub.required = True

    p = sub.add_parser( 'winding', parents=[ common ], help='winding number of a symbol, two ways' )
    _add_symbol_source( p )
    p.add_argument( '--grid', type=int, help='circle grid size' )

    p = sub.add_parser( 'index', parents=[ common ], help='index of T_f against the winding of f' )
    _add_symbol_source( p )
    p.add_argument( '--N', type=int, help='initial truncation size' )
    p.add_argument( '--N-max', dest='N_max', type=int, help='largest truncation size' )
    p.add_argument( '--inv-bandwidth', type=int, help='modes of 1/f for the defect trace' )
    p.add_argument( '--inv-bandwidth-max', type=int, help='largest number of modes of 1/f tried' )

    p = sub.add_parser( 'ssh-sweep', parents=[ common ], help='bulk and edge invariants of the SSH chain' )
    g = p.add_mutually_exclusive_group( required=True )
    g.add_argument( '--m', metavar='LIST', help='masses, e.g. "-2,-0.5,0,0.5,2"' )
    g.add_argument( '--m-range', metavar='START:STOP:STEP', help='masses on a range (stop included)' )
    p.add_argument( '--n', type=int, help='fiber dimension' )
    p.add_argument( '--L', type=int, help='edge chain length' )
    p.add_argument( '--delta', type=float, help='edge window (default delta_fraction times the gap)' )
    p.add_argument( '--delta-fraction', type=float )
    p.add_argument( '--Nk', type=int, help='momentum grid' )
    p.add_argument( '--fourier-sign', type=int, choices=( 1, -1 ) )
    p.add_argument( '--workers', type=int, default=1, help='threads for the sweep' )

    p = sub.add_parser( 'fock-check', parents=[ common ], help='Fock space and covariance relations' )
    p.add_argument( '--n', type=int )
    p.add_argument( '--K', type=int )
    p.add_argument( '--p', type=int )
    p.add_argument( '--permutation', metavar='S1,...,SP', help='1-based images, e.g. "2,3,1"' )
    p.add_argument( '--k-max', type=int )
    p.add_argument( '--trials', type=int )

    p = sub.add_parser( 'levi', parents=[ common ], help='strong pseudoconvexity on boundary samples' )
    g = p.add_mutually_exclusive_group( required=True )
    g.add_argument( '--domain', metavar='FILE', help='domain JSON file' )
    g.add_argument( '--preset', choices=sorted( PRESETS ) )
    p.add_argument( '--samples', type=int )
    p.add_argument( '--t-max', type=float )
    return parser


def _configure( args ):
    if args.config is not None:
        if not os.path.isfile( args.config ): raise ConfigurationError( 'configuration file %s not found' % args.config )
        cf = get_cfg( args.config )
    else:
        cf = default_config()
    table = dict( GLOBAL_OVERRIDES )
    table.update( OVERRIDES[ args.command ] )
    for dest, ( section, key ) in table.items():
        value = getattr( args, dest, None )
        if value is not None: set_cfg( cf, section, key, value )
    if args.dump_config is not None: create_cfg_file( cf, args.dump_config )
    return cf


def _symbol( args ):
    return load_symbol( args.symbol ) if args.symbol is not None else parse_coeffs( args.coeffs )


def cmd_winding( args, cf ):
    symbol = _symbol( args )
    grid = CircleGrid( cf.getint( 'Symbols', 'grid_size' ) )
    w_ap, w_logd = winding_number( symbol, grid, cf.getfloat( 'Symbols', 'zero_tol' ) )
    return { 'winding_ap': w_ap, 'winding_logd': w_logd }, 0, None


def cmd_index( args, cf ):
    report = verify_index_theorem( _symbol( args ), cf )
    return report.ToDict(), 0, None


def cmd_ssh_sweep( args, cf ):
    masses = ParseFloatList( args.m if args.m is not None else args.m_range )
    rows = bulk_edge_sweep( masses, SSHParams.FromConfig( cf, 0.0 ), workers=args.workers )
    code = 0
    failed = [ r for r in rows if r.status == 'error' ]
    if failed:
        code = exit_code( failed[0].error )
    elif any( r.agreement is False for r in rows ):
        code = 3
    return [ r.ToDict() for r in rows ], code, CSV_FIELDS


def cmd_fock_check( args, cf ):
    n, K = cf.getint( 'Fock', 'n' ), cf.getint( 'Fock', 'K' )
    tol, seed = cf.getfloat( 'Fock', 'tol' ), cf.getint( 'Run', 'seed' )
    iso_tol = cf.getfloat( 'Fock', 'iso_tol' )
    fock = build_fock( n, K )
    corr = AutomorphismCorrespondence.FromString( cf.get( 'Fock', 'permutation' ), cf.getint( 'Fock', 'p' ) )
    reports = check_toeplitz_relations( fock, tol )
    reports += check_frame_relations( fock, parseval_frame( n, n+1, seed ), tol )
    for k in range( 1, cf.getint( 'Fock', 'k_max' )+1 ):
        reports += check_tensor_iso( corr, k, cf.getint( 'Fock', 'trials' ), seed, iso_tol )
    reports += pv_generator_check( corr, K, tol )
    code = 0 if all( r.passed for r in reports ) else 3
    return [ r.ToDict() for r in reports ], code, ( 'check', 'max_residual', 'tolerance', 'pass' )


def cmd_levi( args, cf ):
    domain = load_domain( args.domain ) if args.domain is not None else PRESETS[ args.preset ]()
    samples, skipped = sample_boundary( domain, cf.getint( 'Levi', 'samples' ), cf.getint( 'Run', 'seed' ),
                                        cf.getfloat( 'Levi', 't_max' ) )
    report = strong_pseudoconvexity_check( domain, samples, cf.getfloat( 'Levi', 'tol' ),
                                           cf.getfloat( 'Levi', 'boundary_tol' ), skipped )
    return report.ToDict(), ( 0 if report.verdict == STRONG else 4 ), \
        ( 'sample_count', 'min_eigenvalue', 'verdict', 'tol' )


COMMANDS = { 'winding': cmd_winding, 'index': cmd_index, 'ssh-sweep': cmd_ssh_sweep,
             'fock-check': cmd_fock_check, 'levi': cmd_levi }


def _setup_logging( verbose ):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig( stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s', force=True )
    logging.captureWarnings( True )


def main( argv=None ):
    '''Run the pytix script; returns the process exit status'''
    try:
        args = build_parser().parse_args( argv )
    except ConfigurationError as e:
        sys.stderr.write( '%s\n' % e )
        return 1
    _setup_logging( args.verbose )
    try:
        cf = _configure( args )
        payload, code, fields = COMMANDS[ args.command ]( args, cf )
        emit( payload, cf.get( 'Run', 'format' ), args.out, fields )
    except ( ValueError, ArithmeticError, AssertionError, IOError ) as e:
        logger.error( '%s: %s', type( e ).__name__, e )
        report = getattr( e, 'report', None )
        if report is not None:
            emit( report.ToDict() if hasattr( report, 'ToDict' ) else report, 'json', args.out )
        return exit_code( e )
    return code


if __name__ == '__main__':
    sys.exit( main() )
