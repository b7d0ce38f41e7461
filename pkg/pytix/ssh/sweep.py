# ===============================================
# Module: ssh
# File: sweep.py
# Package: PyTIX
# Description: Bulk-edge comparison over masses
# ===============================================

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional
from .bulk import spectral_gap, chern_number
from .edge import edge_invariant
from ..misc.errors import GaplessError, ResolutionError

logger = logging.getLogger( __name__ )

CSV_FIELDS = ( 'm', 'gap', 'chern_det', 'chern_quadrature', 'edge_trace', 'L', 'delta', 'agreement' )


@dataclass(frozen=True)
class InvariantReport:
    m: float
    L: int
    gap: Optional[float] = None
    chern_det: Optional[int] = None
    chern_quadrature: Optional[float] = None
    edge_trace: Optional[int] = None
    delta: Optional[float] = None
    agreement: Optional[bool] = None
    status: str = 'ok'
    message: str = ''
    error: Optional[BaseException] = field( default=None, repr=False, compare=False )

    def ToDict( self ):
        row = { k: getattr( self, k ) for k in CSV_FIELDS }
        row.update( status=self.status, message=self.message )
        return row


def invariant_point( params ):
    '''Bulk and edge invariants at one mass; failures are kept in the row'''
    gap = None
    try:
        gap = spectral_gap( params )
        chern_det, chern_quadrature = chern_number( params )
        if abs( chern_quadrature - chern_det ) > params.quadrature_tol:
            raise ResolutionError( 'Chern quadrature %.9f misses %d by more than %.1e: increase Nk' \
                                   % ( chern_quadrature, chern_det, params.quadrature_tol ) )
        delta = params.Delta( gap )
        edge = edge_invariant( params, gap )
    except GaplessError as e:
        warnings.warn( 'm = %g: gap closes, emitting a transition row' % params.m )
        return InvariantReport( params.m, params.L, status='transition', message=str( e ) )
    except ( ValueError, ArithmeticError ) as e:
        logger.error( 'm = %g: %s', params.m, e )
        return InvariantReport( params.m, params.L, gap=gap, status='error', message=str( e ), error=e )
    return InvariantReport( params.m, params.L, gap, chern_det, chern_quadrature, edge, delta, chern_det == edge )


def bulk_edge_sweep( m_values, template, workers=1 ):
    '''
    One InvariantReport per mass, in input order

    Arguments
    ---------
    m_values      sequence of masses
    template      SSHParams supplying everything but m
    workers       thread pool size
    '''
    points = [ replace( template, m=float( m ) ) for m in m_values ]
    if not points: return []
    if workers <= 1:
        rows = [ invariant_point( p ) for p in points ]
    else:
        with ThreadPoolExecutor( max_workers=workers ) as pool:
            rows = list( pool.map( invariant_point, points ) )
    logger.info( 'bulk-edge sweep over %d masses: %d agree', len( rows ), sum( bool( r.agreement ) for r in rows ) )
    return rows
